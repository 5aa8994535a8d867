"""Game notation: abstract syntax, recursive-descent parser and printer.

Grammar (whitespace is insignificant)::

    expr    := term ("+" term)*
    term    := INT "*" "(" expr ")"          repetition k*(G)
             | INT "x" INT                   full product AxB
             | "(" expr ")"
             | "CM(" INT ")" | "CMn(" INT "," INT ")"
             | "O(" INT ")" | "Z(" INT ")" | "Sigma(" INT ")" | "SigmaR(" INT ")"
             | "complement(" expr ")"
             | "Rel(" INT "," INT ";" [INT "-" INT ("," INT "-" INT)*] ")"

``Rel(a,b; i-j, ...)`` is an explicit two-player relation with ``a`` and ``b``
choices and 0-based winning pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import NotationArityError, NotationSyntaxError


@dataclass(frozen=True)
class ChoiceMatching:
    m: int


@dataclass(frozen=True)
class MultiChoiceMatching:
    n: int
    m: int


@dataclass(frozen=True)
class Cycle:
    m: int


@dataclass(frozen=True)
class Ladder:
    """``Z(m)``: a path through 2m choices."""

    m: int


@dataclass(frozen=True)
class Sigma:
    """``Sigma(m)``: a path through 2m - 1 choices; ``reflected`` swaps the players."""

    m: int
    reflected: bool = False


@dataclass(frozen=True)
class Product:
    a: int
    b: int


@dataclass(frozen=True)
class Relation:
    a: int
    b: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Repeat:
    k: int
    expr: GameExpr


@dataclass(frozen=True)
class Sum:
    terms: tuple[GameExpr, ...]


@dataclass(frozen=True)
class Complement:
    expr: GameExpr


GameExpr = Union[  # noqa: UP007
    ChoiceMatching, MultiChoiceMatching, Cycle, Ladder, Sigma, Product, Relation, Repeat, Sum, Complement
]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<punct>\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | "punct" | "end"
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while True:
        match = _TOKEN.match(text, position)
        if match is None:
            break
        kind = match.lastgroup or "punct"
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def fail(self, message: str, token: _Token | None = None) -> NotationSyntaxError:
        token = token or self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return NotationSyntaxError(f"{message}, found {found}", position=token.position)

    def expect(self, text: str) -> _Token:
        if self.current.text != text or self.current.kind == "end":
            raise self.fail(f"expected {text!r}")
        return self.advance()

    def integer(self, minimum: int = 0) -> int:
        token = self.current
        if token.kind != "int":
            raise self.fail("expected an integer")
        self.advance()
        value = int(token.text)
        if value < minimum:
            msg = f"value {value} is below the minimum {minimum}"
            raise NotationSyntaxError(msg, position=token.position)
        return value

    def parse(self) -> GameExpr:
        expr = self.expr()
        if self.current.kind != "end":
            raise self.fail("unexpected input")
        return expr

    def expr(self) -> GameExpr:
        start = self.current
        terms = [self.term()]
        while self.current.text == "+" and self.current.kind == "punct":
            self.advance()
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        arities = {arity(t) for t in terms}
        if len(arities) > 1:
            msg = f"sum of games with different player counts {sorted(arities)} at position {start.position}"
            raise NotationArityError(msg, item=start.position)
        return Sum(tuple(terms))

    def term(self) -> GameExpr:
        token = self.current
        if token.kind == "int":
            return self.product_or_repeat()
        if token.kind == "punct" and token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if token.kind == "name":
            return self.named()
        raise self.fail("expected a game term")

    def product_or_repeat(self) -> GameExpr:
        k = self.integer(minimum=1)
        if self.current.kind == "punct" and self.current.text == "*":
            self.advance()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Repeat(k, inner)
        if self.current.kind == "name" and self.current.text == "x":
            self.advance()
            return Product(k, self.integer(minimum=1))
        raise self.fail("expected 'x' or '*' after an integer")

    def named(self) -> GameExpr:
        token = self.advance()
        name = token.text
        self.expect("(")
        result: GameExpr
        if name == "CM":
            result = ChoiceMatching(self.integer(minimum=1))
        elif name == "CMn":
            n = self.integer(minimum=2)
            self.expect(",")
            result = MultiChoiceMatching(n, self.integer(minimum=1))
        elif name == "O":
            result = Cycle(self.integer(minimum=2))
        elif name == "Z":
            result = Ladder(self.integer(minimum=1))
        elif name in {"Sigma", "SigmaR"}:
            result = Sigma(self.integer(minimum=2), reflected=name == "SigmaR")
        elif name == "complement":
            result = Complement(self.expr())
        elif name == "Rel":
            result = self.relation()
        else:
            raise self.fail("unknown game constructor", token)
        self.expect(")")
        return result

    def relation(self) -> Relation:
        a = self.integer(minimum=1)
        self.expect(",")
        b = self.integer(minimum=1)
        self.expect(";")
        edges: list[tuple[int, int]] = []
        while self.current.kind == "int":
            token = self.current
            i = self.integer()
            self.expect("-")
            j = self.integer()
            if i >= a or j >= b:
                msg = f"edge {i}-{j} outside a {a}x{b} relation"
                raise NotationSyntaxError(msg, position=token.position)
            edges.append((i, j))
            if self.current.text != ",":
                break
            self.advance()
        return Relation(a, b, tuple(edges))


def parse_notation(text: str) -> GameExpr:
    """Parse a game notation string.

    Raises:
        NotationSyntaxError: Malformed text; carries the 0-based position.
        NotationArityError: A sum mixes games with different player counts.

    """
    if not text.strip():
        msg = "empty game notation"
        raise NotationSyntaxError(msg, position=0)
    return _Parser(text).parse()


def arity(expr: GameExpr) -> int:
    """Player count of the game an expression denotes."""
    match expr:
        case MultiChoiceMatching(n=n):
            return n
        case Repeat(expr=inner) | Complement(expr=inner):
            return arity(inner)
        case Sum(terms=terms):
            return arity(terms[0])
        case _:
            return 2


def to_notation(expr: GameExpr) -> str:
    """Print an expression; ``parse_notation(to_notation(e)) == e``."""
    match expr:
        case ChoiceMatching(m=m):
            return f"CM({m})"
        case MultiChoiceMatching(n=n, m=m):
            return f"CMn({n},{m})"
        case Cycle(m=m):
            return f"O({m})"
        case Ladder(m=m):
            return f"Z({m})"
        case Sigma(m=m, reflected=reflected):
            return f"SigmaR({m})" if reflected else f"Sigma({m})"
        case Product(a=a, b=b):
            return f"{a}x{b}"
        case Relation(a=a, b=b, edges=edges):
            pairs = ", ".join(f"{i}-{j}" for i, j in edges)
            return f"Rel({a},{b}; {pairs})"
        case Repeat(k=k, expr=inner):
            return f"{k}*({to_notation(inner)})"
        case Complement(expr=inner):
            return f"complement({to_notation(inner)})"
        case Sum(terms=terms):
            return " + ".join(f"({to_notation(t)})" if isinstance(t, Sum) else to_notation(t) for t in terms)
    msg = f"not a game expression: {expr!r}"
    raise TypeError(msg)
