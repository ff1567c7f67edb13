"""Exhaustive generation of non-isomorphic graphs by orderly vertex addition.

A graph on ``k + 1`` vertices is produced from its parent on ``k`` vertices
by attaching a new vertex ``k`` to a subset of the parent's vertices, and is
kept only if the resulting labelling is canonical (see :mod:`.canon`). The
new vertex is then the canonically-last vertex and deleting it gives back
the parent, so every isomorphism class appears exactly once without a
global table of seen graphs.

Hereditary filters prune prefixes: triangle-freeness directly, and minimum
degree through the feasibility bound ``deg(v) + (n - k) >= target`` (each
vertex still to come adds at most one edge to ``v``).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, TypeVar

import numpy as np

from . import _kernels
from .canon import code_of, columns, is_canonical
from .graph import CapacityError, Graph, diameter

ENUMERATION_CAP = 12
ORACLE_CAP = 7

T = TypeVar("T")


@dataclass(frozen=True)
class GenFilter:
    triangle_free: bool = False
    min_degree_target: Optional[int] = None
    connected_only: bool = False

    def validate(self, n: int) -> None:
        if self.min_degree_target is not None and not 0 <= self.min_degree_target <= n - 1:
            raise ValueError(f"minimum degree target {self.min_degree_target} is outside [0, {n - 1}]")


NO_FILTER = GenFilter()


@dataclass(frozen=True)
class WorkUnit:
    """A canonical prefix graph; its subtree is enumerated by one worker."""

    prefix: Graph

    @property
    def depth(self) -> int:
        return self.prefix.n


def sort_key(g: Graph) -> int:
    """Bitstring of ``g`` under its own labelling; the canonical code for generated graphs."""
    return code_of(columns(g))


def _child_subsets(parent: Graph, n: int, filt: GenFilter) -> Iterator[int]:
    k = parent.n
    adj = parent.adj
    need = 0
    if filt.min_degree_target:
        need = filt.min_degree_target - (n - k - 1)
    forced = 0
    if need > 0:
        for v in range(k):
            d = adj[v].bit_count()
            if d + 1 < need:
                return
            if d < need:
                forced |= 1 << v
    if filt.triangle_free:
        for v in range(k):
            if forced >> v & 1 and adj[v] & forced:
                return
    optional = [v for v in range(k) if not forced >> v & 1]
    base_size = forced.bit_count()

    def walk(i: int, chosen: int, size: int) -> Iterator[int]:
        if size + len(optional) - i < need:
            return
        if i == len(optional):
            yield chosen
            return
        yield from walk(i + 1, chosen, size)
        v = optional[i]
        if filt.triangle_free and adj[v] & chosen:
            return
        yield from walk(i + 1, chosen | 1 << v, size + 1)

    yield from walk(0, forced, base_size)


def _attach(parent: Graph, subset: int) -> Graph:
    k = parent.n
    new_bit = 1 << k
    adj = tuple(row | new_bit if subset >> v & 1 else row for v, row in enumerate(parent.adj))
    return Graph(k + 1, adj + (subset,))


def children_reference(parent: Graph, n: int, filt: GenFilter) -> Iterator[Graph]:
    """Pure-Python twin of :func:`children`, used to cross-check the compiled kernel."""
    for subset in _child_subsets(parent, n, filt):
        child = _attach(parent, subset)
        if is_canonical(child):
            yield child


def children(parent: Graph, n: int, filt: GenFilter) -> Iterator[Graph]:
    """Canonical one-vertex extensions of a canonical ``parent`` that pass the prefix filters."""
    target = -1 if filt.min_degree_target is None else filt.min_degree_target
    adj = np.array(parent.adj, dtype=np.int64)
    for subset in _kernels.accepted_subsets(adj, parent.n, n, filt.triangle_free, target):
        yield _attach(parent, int(subset))


def _grow(g: Graph, n: int, filt: GenFilter) -> Iterator[Graph]:
    if g.n == n:
        if not filt.connected_only or diameter(g) is not None:
            yield g
        return
    for child in children(g, n, filt):
        yield from _grow(child, n, filt)


def _root() -> Graph:
    return Graph(1, (0,))


def _check(n: int, filt: GenFilter) -> None:
    if not 1 <= n <= ENUMERATION_CAP:
        raise CapacityError(f"enumeration is capped at 1 <= n <= {ENUMERATION_CAP}, got n={n}")
    filt.validate(n)


def split_work(n: int, filt: GenFilter = NO_FILTER, depth: int = 1) -> list[WorkUnit]:
    """All canonical prefixes on ``depth`` vertices whose subtrees partition the output."""
    _check(n, filt)
    if not 1 <= depth <= n:
        raise ValueError(f"split depth must lie in [1, {n}], got {depth}")
    level = [_root()]
    for _ in range(depth - 1):
        level = [c for g in level for c in children(g, n, filt)]
    level.sort(key=sort_key)
    return [WorkUnit(g) for g in level]


def enumerate_unit(unit: WorkUnit, n: int, filt: GenFilter = NO_FILTER) -> Iterator[Graph]:
    """Graphs on ``n`` vertices in the subtree below ``unit`` (unsorted)."""
    return _grow(unit.prefix, n, filt)


def auto_split(n: int, filt: GenFilter, jobs: int) -> list[WorkUnit]:
    """Shallowest split giving several units per worker."""
    depth = 1
    units = split_work(n, filt, depth)
    while len(units) < 8 * jobs and depth < n - 1:
        depth += 1
        units = split_work(n, filt, depth)
    return units


def _unit_graphs(args: tuple[WorkUnit, int, GenFilter]) -> list[Graph]:
    unit, n, filt = args
    return list(enumerate_unit(unit, n, filt))


def map_units(
    func: Callable[[tuple[WorkUnit, int, GenFilter]], T],
    n: int,
    filt: GenFilter,
    jobs: int = 1,
) -> list[T]:
    """Apply ``func`` to every work unit, in unit order, using ``jobs`` processes."""
    _check(n, filt)
    if jobs < 1:
        raise ValueError(f"worker count must be at least 1, got {jobs}")
    if jobs == 1:
        return [func((WorkUnit(_root()), n, filt))]
    units = auto_split(n, filt, jobs)
    tasks = [(u, n, filt) for u in units]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, tasks, chunksize=1))


def enumerate_all(n: int, filt: GenFilter = NO_FILTER, jobs: int = 1) -> list[Graph]:
    """One canonically labelled representative per isomorphism class, sorted by code."""
    parts = map_units(_unit_graphs, n, filt, jobs)
    return sorted(itertools.chain.from_iterable(parts), key=sort_key)


# --- independent oracle -------------------------------------------------

def _pair_index(n: int) -> dict[tuple[int, int], int]:
    # bit position (most significant first) of x(i, j) in the column-order string
    index = {}
    pos = 0
    for j in range(1, n):
        for i in range(j):
            index[(i, j)] = pos
            pos += 1
    return index


def enumerate_labeled_oracle(n: int) -> list[int]:
    """Canonical codes of all isomorphism classes, by brute force over labelled graphs.

    Every labelled graph on ``n`` vertices is visited; an unvisited one has
    its whole orbit under all ``n!`` permutations marked, and the orbit's
    *maximum* code (same convention as :mod:`.canon`) is recorded.
    """
    if not 1 <= n <= ORACLE_CAP:
        raise CapacityError(f"labelled oracle is capped at n={ORACLE_CAP}, got n={n}")
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return [0]
    index = _pair_index(n)
    pairs = sorted(index, key=index.get)
    perms = list(itertools.permutations(range(n)))
    # image[p, b] = bit position that bit b moves to under permutation p
    image = np.empty((len(perms), nbits), dtype=np.int64)
    for p, perm in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            a, c = perm[i], perm[j]
            image[p, b] = index[(min(a, c), max(a, c))]
    weights = np.int64(1) << (nbits - 1 - image)
    seen = np.zeros(1 << nbits, dtype=bool)
    bit_values = 1 << (nbits - 1 - np.arange(nbits))
    codes = []
    for code in range(1 << nbits):
        if seen[code]:
            continue
        present = (code & bit_values) != 0
        orbit = (weights * present).sum(axis=1)
        seen[orbit] = True
        codes.append(int(orbit.max()))
    return sorted(codes)


def brute_canonical_code(g: Graph) -> int:
    """Maximum code over all ``n!`` relabellings; oracle-grade, n <= 8."""
    if g.n > 8:
        raise CapacityError("brute-force canonical code is capped at n=8")
    best = 0
    for perm in itertools.permutations(range(g.n)):
        best = max(best, sort_key(g.relabel(perm)))
    return best

