"""Canonical labelling by lexicographically extreme adjacency strings.

A labelled graph is read as its upper-triangle bitstring in column order,
``x(0,1), x(0,2), x(1,2), x(0,3), ...`` (the graph6 payload order). Column
``j`` is packed as a ``j``-bit integer with ``x(0,j)`` most significant, so
comparing the column sequences compares the bitstrings.

The canonical form is the *largest* such string over all relabellings.
Every prefix of a canonical string is itself canonical for the induced
subgraph on the first labels, which is what orderly generation relies on.

Both searches prune with twin classes: two vertices with the same
neighbourhood (ignoring each other) can be swapped by an automorphism, so
only the lowest unused member of a class is branched on.
"""
from __future__ import annotations

from .graph import Graph


def twin_masks(adj: tuple[int, ...]) -> list[int]:
    """For each vertex, the bitset of its twin class (including itself)."""
    n = len(adj)
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v, row in enumerate(adj):
        open_groups[row] = open_groups.get(row, 0) | 1 << v
        key = row | 1 << v
        closed_groups[key] = closed_groups.get(key, 0) | 1 << v
    out = []
    for v, row in enumerate(adj):
        group = open_groups[row]
        if group == 1 << v:
            group = closed_groups[row | 1 << v]
        out.append(group)
    return out


def columns(g: Graph) -> list[int]:
    """Column integers of ``g`` under its current labelling."""
    return [_reverse_low(g.adj[j], j) for j in range(g.n)]


def _reverse_low(row: int, j: int) -> int:
    # bit i of row (i < j) becomes bit j-1-i
    out = 0
    for i in range(j):
        out = out << 1 | (row >> i & 1)
    return out


def code_of(cols: list[int]) -> int:
    """Concatenate column integers into one bitstring integer."""
    code = 0
    for j, c in enumerate(cols):
        code = code << j | c
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)``: the maximal code and a vertex order achieving it.

    ``order[i]`` is the vertex that receives label ``i``.
    """
    n = g.n
    adj = g.adj
    twins = twin_masks(adj)
    best: list[int] = []
    best_order: list[int] = []
    order: list[int] = []

    def dfs(j: int, used: int, colval: list[int]) -> None:
        nonlocal best, best_order
        if j == n:
            best_order = order[:]
            return
        top = -1
        cands = []
        for u in range(n):
            if used >> u & 1:
                continue
            if twins[u] & ~used & ((1 << u) - 1):
                continue
            c = colval[u]
            if c > top:
                top = c
                cands = [u]
            elif c == top:
                cands.append(u)
        if len(best) > j:
            if top < best[j]:
                return
            if top > best[j]:
                del best[j:]
                best.append(top)
        else:
            best.append(top)
        for u in cands:
            order.append(u)
            mark = adj[u]
            nxt = [c << 1 | (mark >> v & 1) for v, c in enumerate(colval)]
            dfs(j + 1, used | 1 << u, nxt)
            order.pop()

    dfs(0, 0, [0] * n)
    return code_of(best), best_order


def canonical_form(g: Graph) -> Graph:
    """The canonically labelled copy of ``g``."""
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for label, v in enumerate(order):
        perm[v] = label
    return g.relabel(perm)


def canonical_code(g: Graph) -> int:
    return canonical_labeling(g)[0]


def is_canonical(g: Graph) -> bool:
    """True iff no relabelling of ``g`` yields a larger string than its own."""
    n = g.n
    adj = g.adj
    # label i is stored at bit n-1-i so that integer order is column order
    own = [0] * n
    for j in range(n):
        row = adj[j] & ((1 << j) - 1)
        while row:
            low = row & -row
            own[j] |= 1 << (n - low.bit_length())
            row ^= low
    last = n - 1
    for j in range(1, last):
        # move the last vertex to position j, keeping the identity before it
        head = 0
        row = adj[last] & ((1 << j) - 1)
        while row:
            low = row & -row
            head |= 1 << (n - low.bit_length())
            row ^= low
        if head > own[j]:
            return False
        if head < own[j]:
            break
    twins = twin_masks(adj)
    lab = [0] * n

    def larger_exists(j: int, unused: int) -> bool:
        target = own[j]
        rest = unused
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            if twins[u] & unused & (low - 1):
                continue
            c = lab[u]
            if c > target:
                return True
            if c == target and j + 1 < n:
                bit = 1 << (last - j)
                nbrs = adj[u]
                row = nbrs
                while row:
                    w = row & -row
                    lab[w.bit_length() - 1] |= bit
                    row ^= w
                found = larger_exists(j + 1, unused ^ low)
                row = nbrs
                while row:
                    w = row & -row
                    lab[w.bit_length() - 1] ^= bit
                    row ^= w
                if found:
                    return True
        return False

    return not larger_exists(0, (1 << n) - 1)
