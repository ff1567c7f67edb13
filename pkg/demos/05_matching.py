# Compare the blossom matcher with the subset DP oracle on random graphs.
import random

from trianglefree.graph import Graph
from trianglefree.matching import maximum_matching, maximum_matching_oracle

rng = random.Random(7)
sizes = {}
for _ in range(2000):
    n = rng.randint(2, 14)
    p = rng.random()
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    g = Graph(n, tuple(adj))
    mm = maximum_matching(g)
    assert mm.is_valid(g) and mm.size == maximum_matching_oracle(g)
    sizes[mm.size] = sizes.get(mm.size, 0) + 1
print("matching size histogram:", dict(sorted(sizes.items())))
