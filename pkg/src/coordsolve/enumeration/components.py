"""Connected components of two-player games and notation regenerated from them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..game import WlcGame


@dataclass(frozen=True)
class Component:
    """One connected piece of a game graph, with local indices renumbered from 0 per side."""

    n1: int
    n2: int
    edges: tuple[tuple[int, int], ...]

    @property
    def max_degree(self) -> int:
        first = Counter(a for a, _ in self.edges)
        second = Counter(b for _, b in self.edges)
        return max(*first.values(), *second.values())

    @property
    def notation(self) -> str:
        """Named builder for paths, cycles and full products; ``Rel`` otherwise."""
        e = len(self.edges)
        if e == self.n1 * self.n2 and not (self.n1 == self.n2 == 2):
            return f"{self.n1}x{self.n2}"
        if self.max_degree <= 2:
            if e == self.n1 + self.n2:
                return f"O({self.n1})"
            if self.n1 == self.n2:
                return f"Z({self.n1})"
            if self.n2 == self.n1 + 1:
                return f"Sigma({self.n2})"
            return f"SigmaR({self.n1})"
        pairs = ",".join(f"{a}-{b}" for a, b in self.edges)
        return f"Rel({self.n1},{self.n2}; {pairs})"


def components(game: WlcGame) -> list[Component]:
    """Components in order of their smallest player-1 choice."""
    n1 = game.sizes[0]
    parent = list(range(game.n_choices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in game.winning:
        parent[find(a)] = find(n1 + b)
    groups: dict[int, list[int]] = {}
    for c in range(game.n_choices):
        groups.setdefault(find(c), []).append(c)
    result = []
    for members in sorted(groups.values()):
        firsts = [c for c in members if c < n1]
        seconds = [c - n1 for c in members if c >= n1]
        local1 = {c: k for k, c in enumerate(firsts)}
        local2 = {c: k for k, c in enumerate(seconds)}
        edges = sorted((local1[a], local2[b]) for a, b in game.winning if a in local1)
        result.append(Component(len(firsts), len(seconds), tuple(edges)))
    return result


def _order(name: str) -> tuple[int, str]:
    # cycles, then Sigma, Z, products, relations
    for rank, prefix in enumerate(("O(", "Sigma(", "SigmaR(", "Z(")):
        if name.startswith(prefix):
            return rank, name
    return (5, name) if name.startswith("Rel(") else (4, name)


def component_notation(game: WlcGame) -> str:
    """Notation rebuilding a game isomorphic to ``game``, e.g. ``O(2) + 2*(1x2) + 1x1``."""
    counts = Counter(c.notation for c in components(game))
    terms = []
    for name in sorted(counts, key=_order):
        k = counts[name]
        if k == 1:
            terms.append(name)
        elif name == "1x1" and sum(counts.values()) == k:
            terms.append(f"CM({k})")
        else:
            terms.append(f"{k}*({name})")
    return " + ".join(terms)
