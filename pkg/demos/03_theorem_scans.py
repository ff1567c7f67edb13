# Scan each theorem exhaustively over small orders and print the summaries.
from trianglefree.theorems import scan

for theorem, ns in [("mantel", range(1, 9)), ("aes", range(1, 10)), ("efs", range(1, 10)),
                    ("main", range(3, 10)), ("proof-steps", range(1, 10)), ("ore", range(1, 9))]:
    reports, summary = scan(theorem, ns)
    print(f"{theorem:12s} scanned={summary.graphs_scanned:7d} "
          f"hypothesis={summary.hypothesis_satisfied:6d} violations={len(summary.violations)}")

# the main theorem survivors by order
reports, _ = scan("main", range(3, 10))
for r in reports:
    print(r.n_min, [label for _, label in r.witnesses])
