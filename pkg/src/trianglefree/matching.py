"""Maximum matching in general graphs.

:func:`maximum_matching` is Edmonds' blossom algorithm. The subset DP in
:func:`maximum_matching_oracle` and the exhaustive augmenting path search in
:func:`find_augmenting_path_bruteforce` are independent checks of it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import CapacityError, Graph, bits

ORACLE_CAP = 16
BRUTE_PATH_CAP = 10


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self, n: int) -> list[int]:
        out = [-1] * n
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_valid(self, g: Graph) -> bool:
        seen = 0
        for u, v in self.edges:
            if not g.has_edge(u, v) or (seen >> u | seen >> v) & 1:
                return False
            seen |= 1 << u | 1 << v
        return True


def maximum_matching(g: Graph) -> Matching:
    """Maximum cardinality matching.

    Free vertices are rooted in ascending order and neighbours scanned in
    bitset order, so the result is a deterministic function of ``g``.
    """
    n = g.n
    adj = g.adj
    match = [-1] * n
    for root in range(n):
        if match[root] == -1 and adj[root]:
            end, parent = _search(adj, match, root)
            while end != -1:
                prev = parent[end]
                nxt = match[prev]
                match[end] = prev
                match[prev] = end
                end = nxt
    return Matching(tuple((v, match[v]) for v in range(n) if match[v] > v))


def _search(adj: tuple[int, ...], match: list[int], root: int) -> tuple[int, list[int]]:
    """BFS for an augmenting path from ``root`` with blossom contraction."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in bits(adj[v]):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                b = lca(v, to)
                blossom = [False] * n
                mark(v, b, to, blossom)
                mark(to, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def has_perfect_matching(g: Graph, verify: bool = False) -> bool:
    """True iff a matching covers every vertex.

    Odd ``n`` answers ``False`` from parity alone unless ``verify`` is set,
    in which case the blossom search still runs and must agree.
    """
    if g.n % 2 and not verify:
        return False
    result = 2 * maximum_matching(g).size == g.n
    if g.n % 2 and result:
        raise AssertionError("perfect matching reported on an odd number of vertices")
    return result


def maximum_matching_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Maximum matching size by memoised DP over vertex subsets."""
    if g.n > cap:
        raise CapacityError(f"subset-DP matching oracle is capped at n={cap}, got n={g.n}")
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        value = best(rest)
        bound = mask.bit_count() // 2
        for u in bits(adj[v] & rest):
            if value == bound:
                break
            value = max(value, 1 + best(rest & ~(1 << u)))
        memo[mask] = value
        return value

    return best((1 << g.n) - 1)


def find_augmenting_path_bruteforce(
    g: Graph, matching: Matching, cap: int = BRUTE_PATH_CAP
) -> Optional[list[int]]:
    """Exhaustively search simple alternating paths joining two free vertices."""
    if g.n > cap:
        raise CapacityError(f"brute-force augmenting path search is capped at n={cap}, got n={g.n}")
    mate = matching.mate(g.n)

    def extend(path: list[int], used: int) -> Optional[list[int]]:
        v = path[-1]
        for w in bits(g.adj[v] & ~used):
            if w == mate[v]:
                continue
            if mate[w] == -1:
                return path + [w]
            x = mate[w]
            if used >> x & 1:
                continue
            found = extend(path + [w, x], used | 1 << w | 1 << x)
            if found:
                return found
        return None

    for s in range(g.n):
        if mate[s] == -1:
            found = extend([s], 1 << s)
            if found:
                return found
    return None
