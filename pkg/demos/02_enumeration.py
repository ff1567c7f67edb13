# Count isomorphism classes with the orderly generator and compare with the
# brute-force labelled oracle.
import time

from trianglefree.enumeration import GenFilter, enumerate_all, enumerate_labeled_oracle

print(" n  classes  oracle  triangle-free")
for n in range(1, 8):
    classes = enumerate_all(n)
    tf = enumerate_all(n, GenFilter(triangle_free=True))
    print(f"{n:2d} {len(classes):8d} {len(enumerate_labeled_oracle(n)):7d} {len(tf):14d}")

# filters prune during generation, so restricted scans reach further
start = time.perf_counter()
dense = enumerate_all(10, GenFilter(min_degree_target=5))
print(f"n=10 with delta >= 5: {len(dense)} classes in {time.perf_counter() - start:.1f}s")

start = time.perf_counter()
tf11 = enumerate_all(11, GenFilter(triangle_free=True, min_degree_target=5), jobs=2)
print(f"n=11 triangle-free with delta >= 5: {len(tf11)} classes in {time.perf_counter() - start:.2f}s")
