# The diameter bound as printed fails on small cycles; list the offenders.
from trianglefree import graph6
from trianglefree.families import recognize_family
from trianglefree.theorems import scan

_, summary = scan("eppt", range(5, 9))
print(f"{len(summary.violations)} violations among {summary.graphs_scanned} graphs")
for v in summary.violations[:12]:
    g = graph6.decode(v.graph6)
    d = v.details
    print(f"{v.graph6:10s} {str(recognize_family(g)):24s} diam={d['diam']} bound={d['bound']}")
