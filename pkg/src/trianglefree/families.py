"""Named graph families: constructors, exact recognizers, and a small isomorphism test."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import MAX_VERTICES, CapacityError, Graph, GraphError, bits, diameter
from .properties import is_bipartite

ISOMORPHISM_CAP = 10


@dataclass(frozen=True)
class FamilyTag:
    """Family membership of a graph, e.g. ``FamilyTag("CompleteBipartite", (2, 3))``."""

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "None":
            return "None"
        return f"{self.kind}({','.join(map(str, self.params))})"


NO_FAMILY = FamilyTag("None")


def _check_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    _check_size(n)
    return Graph(n, tuple(1 << ((v - 1) % n) | 1 << ((v + 1) % n) for v in range(n)))


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least one vertex, got {n}")
    _check_size(n)
    full = (1 << n) - 1
    return Graph(n, tuple((1 << (v - 1) | 1 << (v + 1)) & full if v else (2 & full) for v in range(n)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part A = ``0..a-1`` and part B = ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError(f"part sizes must be positive, got ({a}, {b})")
    _check_size(a + b)
    part_a = (1 << a) - 1
    part_b = ((1 << b) - 1) << a
    return Graph(a + b, (part_b,) * a + (part_a,) * b)


def make_c5_blowup(k: int) -> Graph:
    """Replace each 5-cycle vertex by an independent set of ``k`` vertices.

    Class ``i`` holds vertices ``i*k .. i*k+k-1`` and is fully joined to
    classes ``i-1`` and ``i+1`` (mod 5).
    """
    if k < 1:
        raise GraphError(f"blowup multiplicity must be positive, got {k}")
    _check_size(5 * k)
    block = (1 << k) - 1
    classes = [block << (i * k) for i in range(5)]
    adj = []
    for i in range(5):
        row = classes[(i - 1) % 5] | classes[(i + 1) % 5]
        adj.extend([row] * k)
    return Graph(5 * k, tuple(adj))


def recognize_cycle(g: Graph) -> Optional[int]:
    """Length ``n`` if ``g`` is a connected 2-regular graph on n >= 3 vertices."""
    if g.n < 3 or any(d != 2 for d in g.degrees()):
        return None
    return g.n if diameter(g) is not None else None


def recognize_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is connected K_{a,b}."""
    if g.n < 2 or diameter(g) is None:
        return None
    cert = is_bipartite(g)
    if not cert.bipartite:
        return None
    b = cert.side.bit_count()
    a = g.n - b
    if a * b != g.m:
        return None
    return (min(a, b), max(a, b))


def recognize_path(g: Graph) -> Optional[int]:
    if g.n == 1:
        return 1
    degs = sorted(g.degrees())
    if degs[:2] != [1, 1] or any(d != 2 for d in degs[2:]) or g.m != g.n - 1:
        return None
    return g.n if diameter(g) is not None else None


def recognize_c5_blowup(g: Graph) -> Optional[int]:
    """Multiplicity ``k`` if ``g`` is the C5 blowup with independent classes of size k."""
    if g.n % 5:
        return None
    classes: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        classes[row] = classes.get(row, 0) | 1 << v
    if len(classes) != 5:
        return None
    k = g.n // 5
    members = list(classes.values())
    if any(c.bit_count() != k for c in members):
        return None
    index = {c: i for i, c in enumerate(members)}
    quotient = []
    for c in members:
        nbrs = g.adj[(c & -c).bit_length() - 1]
        row = covered = 0
        for i, other in enumerate(members):
            if nbrs & other:
                row |= 1 << i
                covered |= other
        if row & (1 << index[c]) or covered != nbrs:
            return None
        quotient.append(row)
    q = Graph(5, tuple(quotient))
    return k if recognize_cycle(q) == 5 else None


def recognize_family(g: Graph) -> FamilyTag:
    """First matching tag in the order cycle, complete bipartite, path, C5 blowup."""
    length = recognize_cycle(g)
    if length is not None:
        return FamilyTag("Cycle", (length,))
    parts = recognize_complete_bipartite(g)
    if parts is not None:
        return FamilyTag("CompleteBipartite", parts)
    length = recognize_path(g)
    if length is not None:
        return FamilyTag("Path", (length,))
    k = recognize_c5_blowup(g)
    if k is not None:
        return FamilyTag("C5Blowup", (k,))
    return NO_FAMILY


def isomorphic_small(g1: Graph, g2: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Backtracking isomorphism test; candidates restricted to equal degrees."""
    if g1.n > cap or g2.n > cap:
        raise CapacityError(f"isomorphism oracle is capped at n={cap}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return False
    n = g1.n
    image = [-1] * n

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or d2[w] != d1[v]:
                continue
            if all(g1.has_edge(v, u) == g2.has_edge(w, image[u]) for u in range(v)):
                image[v] = w
                if place(v + 1, used | 1 << w):
                    return True
        image[v] = -1
        return False

    return place(0, 0)
