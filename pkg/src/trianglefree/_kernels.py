"""Compiled inner loops for orderly generation.

Mirrors :func:`trianglefree.canon.is_canonical` on int64 adjacency arrays;
the pure-Python version is kept as the reference implementation.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def twin_masks(adj, n):
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        group = np.int64(0)
        for u in range(n):
            if adj[u] == adj[v]:
                group |= np.int64(1) << u
        if group == (np.int64(1) << v):
            closed_v = adj[v] | (np.int64(1) << v)
            for u in range(n):
                if adj[u] | (np.int64(1) << u) == closed_v:
                    group |= np.int64(1) << u
        out[v] = group
    return out


@njit(cache=True)
def is_canonical(adj, n):
    one = np.int64(1)
    own = np.zeros(n, dtype=np.int64)
    for j in range(n):
        for i in range(j):
            if (adj[j] >> i) & 1:
                own[j] |= one << (n - 1 - i)
    last = n - 1
    # cheap pass: the last vertex moved to position j after the identity prefix
    for j in range(1, last):
        head = np.int64(0)
        for i in range(j):
            if (adj[last] >> i) & 1:
                head |= one << (n - 1 - i)
        if head > own[j]:
            return False
        if head < own[j]:
            break
    twins = twin_masks(adj, n)
    lab = np.zeros(n, dtype=np.int64)
    unused = np.zeros(n + 1, dtype=np.int64)
    nxt = np.zeros(n + 1, dtype=np.int64)
    placed = np.zeros(n + 1, dtype=np.int64)
    unused[0] = (one << n) - 1
    nxt[0] = 0
    j = 0
    while j >= 0:
        u = nxt[j]
        if u == n:
            j -= 1
            if j >= 0:
                w = placed[j]
                bit = one << (last - j)
                row = adj[w]
                for x in range(n):
                    if (row >> x) & 1:
                        lab[x] ^= bit
            continue
        nxt[j] = u + 1
        free = unused[j]
        if not (free >> u) & 1:
            continue
        if twins[u] & free & ((one << u) - 1):
            continue
        c = lab[u]
        target = own[j]
        if c > target:
            return False
        if c == target and j + 1 < n:
            placed[j] = u
            bit = one << (last - j)
            row = adj[u]
            for x in range(n):
                if (row >> x) & 1:
                    lab[x] |= bit
            unused[j + 1] = free ^ (one << u)
            nxt[j + 1] = 0
            j += 1
    return True


@njit(cache=True)
def accepted_subsets(adj, k, n, triangle_free, min_degree):
    """Neighbour sets of a new vertex ``k`` giving canonical, filter-feasible children.

    A negative ``min_degree`` disables the degree prune.
    """
    one = np.int64(1)
    need = 0
    if min_degree > 0:
        need = min_degree - (n - k - 1)
    forced = np.int64(0)
    for v in range(k):
        d = 0
        row = adj[v]
        while row:
            row &= row - 1
            d += 1
        if d + 1 < need:
            return np.zeros(0, dtype=np.int64)
        if d < need:
            forced |= one << v
    optional = np.zeros(k, dtype=np.int64)
    n_opt = 0
    for v in range(k):
        if not (forced >> v) & 1:
            optional[n_opt] = v
            n_opt += 1
    out = np.zeros(one << n_opt, dtype=np.int64)
    count = 0
    child = np.zeros(k + 1, dtype=np.int64)
    for sub in range(one << n_opt):
        s = forced
        size = 0
        for i in range(n_opt):
            if (sub >> i) & 1:
                s |= one << optional[i]
        t = s
        while t:
            t &= t - 1
            size += 1
        if size < need:
            continue
        if triangle_free:
            ok = True
            for v in range(k):
                if (s >> v) & 1 and adj[v] & s:
                    ok = False
                    break
            if not ok:
                continue
        for v in range(k):
            child[v] = adj[v] | (one << k) if (s >> v) & 1 else adj[v]
        child[k] = s
        if is_canonical(child, k + 1):
            out[count] = s
            count += 1
    return out[:count]
