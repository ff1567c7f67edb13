"""Structural predicates used as theorem hypotheses and conclusions."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graph import CapacityError, Graph, bits, diameter  # noqa: F401  (diameter re-exported)

HAM_PATH_CAP = 20


@dataclass(frozen=True)
class TriangleWitness:
    u: int
    v: int
    w: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)


@dataclass(frozen=True)
class BipartitenessCertificate:
    """Either a two-colouring (``side`` bitset, set bit = side 1) or an odd closed walk.

    ``odd_cycle`` lists the cycle's vertices once each; the closing edge runs
    from the last vertex back to the first.
    """

    side: Optional[int] = None
    odd_cycle: Optional[tuple[int, ...]] = None

    @property
    def bipartite(self) -> bool:
        return self.side is not None

    def validate(self, g: Graph) -> bool:
        if self.side is not None:
            if self.odd_cycle is not None:
                return False
            for u, v in g.edges():
                if (self.side >> u & 1) == (self.side >> v & 1):
                    return False
            return True
        cyc = self.odd_cycle
        if not cyc or len(cyc) % 2 == 0 or len(set(cyc)) != len(cyc):
            return False
        return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def find_triangle(g: Graph) -> Optional[TriangleWitness]:
    """Lexicographically least triangle ``u < v < w``, or ``None``."""
    adj = g.adj
    for u in range(g.n):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            common = higher & adj[v] >> (v + 1) << (v + 1)
            if common:
                return TriangleWitness(u, v, (common & -common).bit_length() - 1)
    return None


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        for v in bits(row >> (u + 1) << (u + 1)):
            if row & adj[v]:
                return False
    return True


def is_bipartite(g: Graph) -> BipartitenessCertificate:
    """Two-colour by BFS; on conflict return the odd cycle through the BFS tree."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = [root]
        for v in queue:
            for u in bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    parent[u] = v
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return BipartitenessCertificate(odd_cycle=_tree_cycle(parent, v, u))
    side = 0
    for v, c in enumerate(colour):
        if c:
            side |= 1 << v
    return BipartitenessCertificate(side=side)


def _tree_cycle(parent: list[int], a: int, b: int) -> tuple[int, ...]:
    # a and b share a colour and are adjacent; join their tree paths at the LCA
    path_a = [a]
    while parent[path_a[-1]] != -1:
        path_a.append(parent[path_a[-1]])
    index = {v: i for i, v in enumerate(path_a)}
    path_b = [b]
    while path_b[-1] not in index:
        path_b.append(parent[path_b[-1]])
    lca = path_b[-1]
    up = path_a[: index[lca] + 1]
    down = path_b[:-1]
    return tuple(up + down[::-1])


def has_hamiltonian_path(g: Graph, cap: int = HAM_PATH_CAP) -> bool:
    """Exact test by DP over (visited set, endpoint) states.

    States are explored depth-first and memoised as dead ends, so dense
    graphs usually finish after a single descent.
    """
    n = g.n
    if n > cap:
        raise CapacityError(f"hamiltonian path search is capped at n={cap}, got n={n}")
    if n <= 2:
        return n == 1 or g.has_edge(0, 1)
    full = (1 << n) - 1
    adj = g.adj
    dead: set[tuple[int, int]] = set()
    # endpoint bitsets per visited set would cost 2^n memory up front; a set of dead states is sparse
    stack: list[tuple[int, int, int]] = []
    for start in range(n):
        stack.append((1 << start, start, adj[start] & ~(1 << start)))
        while stack:
            mask, v, todo = stack[-1]
            if mask == full:
                return True
            if not todo:
                dead.add((mask, v))
                stack.pop()
                continue
            low = todo & -todo
            stack[-1] = (mask, v, todo ^ low)
            u = low.bit_length() - 1
            nmask = mask | low
            if (nmask, u) in dead:
                continue
            stack.append((nmask, u, adj[u] & ~nmask))
    return False


def degree_multiplicities(g: Graph) -> Counter:
    return Counter(g.degrees())


def has_three_equal_degrees(g: Graph) -> bool:
    """True iff some degree value is shared by at least three vertices."""
    return any(count >= 3 for count in degree_multiplicities(g).values())
