"""Individualization-refinement search over colored graphs.

Two entry points:

- ``automorphism_generators``: a generating set of the full color-preserving
  automorphism group, built level by level along the first path of the search
  tree (deepest level first). At every level each candidate vertex outside the
  known orbit is tested by searching its subtree for an image of the first leaf,
  so the orbit of the first-path vertex under the prefix stabilizer is exact.
- ``canonical_form``: the lexicographically least (trace, leaf encoding) over the
  whole search tree, with subtrees pruned by automorphism orbits, by trace
  comparison and by backjumping when a leaf repeats the best one.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .structure import Color, ColoredGraph

logger = logging.getLogger(__name__)

Cells = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]
Encoding = tuple[tuple[Color, ...], tuple[tuple[int, int], ...]]


class Orbits:
    """Union-find over vertices, merged along permutation cycles."""

    def __init__(self, n: int, permutations: Iterable[Sequence[int]] = ()):
        self.parent = list(range(n))
        for perm in permutations:
            self.add(perm)

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def add(self, perm: Sequence[int]) -> None:
        for v, w in enumerate(perm):
            self.union(v, w)

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def blocks(self, vertices: Iterable[int] | None = None) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for v in vertices if vertices is not None else range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def initial_cells(graph: ColoredGraph) -> Cells:
    by_color: dict[Color, list[int]] = {}
    for v, color in enumerate(graph.colors):
        by_color.setdefault(color, []).append(v)
    return tuple(tuple(by_color[c]) for c in sorted(by_color))


def refine(graph: ColoredGraph, cells: Cells) -> Cells:
    """Split cells by neighbor-cell signatures until the partition is equitable."""
    while True:
        cell_of = {v: i for i, cell in enumerate(cells) for v in cell}
        refined: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple(sorted(cell_of[u] for u in graph.adjacency[v]))
                groups.setdefault(signature, []).append(v)
            refined.extend(tuple(groups[key]) for key in sorted(groups))
        if len(refined) == len(cells):
            return cells
        cells = tuple(refined)


def individualize(graph: ColoredGraph, cells: Cells, target: int, vertex: int) -> Cells:
    rest = tuple(v for v in cells[target] if v != vertex)
    return refine(graph, (*cells[:target], (vertex,), rest, *cells[target + 1 :]))


def target_cell(cells: Cells) -> int | None:
    """Index of the first smallest non-singleton cell, or None for a discrete partition."""
    best: int | None = None
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = index
    return best


def invariant(graph: ColoredGraph, cells: Cells) -> tuple:
    """Quotient of an equitable partition: size, color and neighbor counts per cell."""
    cell_of = {v: i for i, cell in enumerate(cells) for v in cell}
    return tuple(
        (
            len(cell),
            graph.colors[cell[0]],
            tuple(sorted(Counter(cell_of[u] for u in graph.adjacency[cell[0]]).items())),
        )
        for cell in cells
    )


def leaf_encoding(graph: ColoredGraph, cells: Cells) -> Encoding:
    position = {cell[0]: i for i, cell in enumerate(cells)}
    colors = tuple(graph.colors[cell[0]] for cell in cells)
    edges = tuple(sorted((min(position[a], position[b]), max(position[a], position[b])) for a, b in graph.edges))
    return colors, edges


def leaf_permutation(source: Cells, image: Cells) -> Permutation:
    """Map the vertex at each position of ``source`` to the vertex at that position of ``image``."""
    perm = [0] * len(source)
    for a, b in zip(source, image, strict=True):
        perm[a[0]] = b[0]
    return tuple(perm)


def _first_path(graph: ColoredGraph) -> list[Cells]:
    cells = refine(graph, initial_cells(graph))
    path = [cells]
    while (target := target_cell(cells)) is not None:
        cells = individualize(graph, cells, target, cells[target][0])
        path.append(cells)
    return path


def _find_image(
    graph: ColoredGraph,
    cells: Cells,
    depth: int,
    traces: Sequence[tuple],
    first_leaf: Cells,
    first_encoding: Encoding,
) -> Permutation | None:
    if depth >= len(traces) or invariant(graph, cells) != traces[depth]:
        return None
    target = target_cell(cells)
    if target is None:
        if leaf_encoding(graph, cells) == first_encoding:
            return leaf_permutation(first_leaf, cells)
        return None
    for w in cells[target]:
        found = _find_image(graph, individualize(graph, cells, target, w), depth + 1, traces, first_leaf, first_encoding)
        if found is not None:
            return found
    return None


@lru_cache(maxsize=4096)
def automorphism_generators(graph: ColoredGraph) -> tuple[Permutation, ...]:
    """Generators of the color-preserving automorphism group of ``graph``."""
    path = _first_path(graph)
    traces = [invariant(graph, cells) for cells in path]
    first_leaf = path[-1]
    first_encoding = leaf_encoding(graph, first_leaf)

    generators: list[Permutation] = []
    for level in range(len(path) - 2, -1, -1):
        cells = path[level]
        target = target_cell(cells)
        assert target is not None
        cell = cells[target]
        orbits = Orbits(graph.n, generators)
        for w in cell[1:]:
            if orbits.same(cell[0], w):
                continue
            child = individualize(graph, cells, target, w)
            found = _find_image(graph, child, level + 1, traces, first_leaf, first_encoding)
            if found is not None:
                generators.append(found)
                orbits.add(found)
    logger.debug("graph with %d vertices: %d generators, depth %d", graph.n, len(generators), len(path) - 1)
    return tuple(generators)


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical encoding of a graph and the canonical position of every vertex."""

    encoding: Encoding
    positions: tuple[int, ...]


@dataclass
class _Best:
    key: tuple
    cells: Cells
    prefix: tuple[int, ...]


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    length = 0
    for x, y in zip(a, b, strict=False):
        if x != y:
            break
        length += 1
    return length


@lru_cache(maxsize=65536)
def canonical_form(graph: ColoredGraph) -> CanonicalForm:
    """Least leaf of the search tree under (trace, encoding) order.

    Isomorphic graphs get equal encodings; non-isomorphic graphs never do, since an
    encoding spells out the relabeled graph.
    """
    generators = list(automorphism_generators(graph))
    best: _Best | None = None

    def explore(cells: Cells, prefix: tuple[int, ...], trace: tuple) -> int | None:
        nonlocal best
        depth = len(prefix)
        trace = (*trace, invariant(graph, cells))
        if best is not None and trace > best.key[0][: depth + 1]:
            return None
        target = target_cell(cells)
        if target is None:
            key = (trace, leaf_encoding(graph, cells))
            if best is None or key < best.key:
                best = _Best(key, cells, prefix)
                return None
            if key == best.key:
                generators.append(leaf_permutation(best.cells, cells))
                return _common_prefix(prefix, best.prefix)
            return None

        explored: list[int] = []
        known = -1
        orbits = Orbits(graph.n)
        for w in cells[target]:
            if known != len(generators):
                known = len(generators)
                orbits = Orbits(graph.n, (g for g in generators if all(g[p] == p for p in prefix)))
            if any(orbits.same(w, e) for e in explored):
                continue
            explored.append(w)
            jump = explore(individualize(graph, cells, target, w), (*prefix, w), trace)
            if jump is not None and jump < depth:
                return jump
        return None

    explore(refine(graph, initial_cells(graph)), (), ())
    assert best is not None
    positions = [0] * graph.n
    for index, cell in enumerate(best.cells):
        positions[cell[0]] = index
    return CanonicalForm(encoding=best.key[1], positions=tuple(positions))
