"""Simple undirected graphs stored as one adjacency bitset per vertex."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given data."""


class CapacityError(ValueError):
    """Raised when an input exceeds the size an exact algorithm is allowed to handle."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer bitset of the neighbours of ``v``.
    Build instances through :func:`graph_new` or :meth:`from_adjacency`,
    which validate the symmetry and loop-freeness invariants.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = tuple(adj)
        n = len(adj)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour index >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        return cls(n, adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        new = [0] * self.n
        for v, row in enumerate(self.adj):
            mask = 0
            for u in bits(row):
                mask |= 1 << perm[u]
            new[perm[v]] = mask
        return Graph(self.n, tuple(new))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in the order ``vertices`` is given."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        new = []
        for v in vs:
            mask = 0
            for u in bits(self.adj[v]):
                if u in index:
                    mask |= 1 << index[u]
            new.append(mask)
        return Graph(len(vs), tuple(new))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_new(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated edges collapse to one."""
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n!r} outside [1, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class GraphStats:
    """Exact scalar invariants. ``diam`` is ``None`` for a disconnected graph."""

    n: int
    m: int
    delta: int
    Delta: int
    diam: Optional[int]
    regular_r: Optional[int]

    @property
    def connected(self) -> bool:
        return self.diam is not None


def eccentricity(g: Graph, source: int) -> Optional[int]:
    """BFS eccentricity of ``source``; ``None`` if some vertex is unreachable."""
    seen = 1 << source
    frontier = seen
    dist = 0
    full = (1 << g.n) - 1
    while seen != full:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return None
        seen |= nxt
        frontier = nxt
        dist += 1
    return dist


def diameter(g: Graph) -> Optional[int]:
    """Largest BFS distance over all vertex pairs, or ``None`` when disconnected."""
    best = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return GraphStats(
        n=g.n,
        m=sum(degs) // 2,
        delta=lo,
        Delta=hi,
        diam=diameter(g),
        regular_r=lo if lo == hi else None,
    )
