# Build a few small graphs, inspect their invariants and classify them.
from trianglefree import graph6
from trianglefree.families import make_c5_blowup, make_complete_bipartite, make_cycle, recognize_family
from trianglefree.graph import stats
from trianglefree.properties import find_triangle, has_hamiltonian_path, is_bipartite
from trianglefree.theorems import main_classify

graphs = {
    "C5": make_cycle(5),
    "C6": make_cycle(6),
    "K23": make_complete_bipartite(2, 3),
    "K33": make_complete_bipartite(3, 3),
    "blowup(2)": make_c5_blowup(2),
}

for name, g in graphs.items():
    st = stats(g)
    print(f"{name:10s} {graph6.encode(g):12s} n={st.n} m={st.m} delta={st.delta} "
          f"Delta={st.Delta} diam={st.diam} family={recognize_family(g)}")
    print(f"{'':10s} triangle={find_triangle(g)} bipartite={is_bipartite(g).bipartite} "
          f"hampath={has_hamiltonian_path(g)}")
    c = main_classify(g)
    print(f"{'':10s} classify -> {c.kind} {c.reason or ''}")

# graph6 lines round trip through the decoder, header included
print(graph6.decode(">>graph6<<Dhc") == make_cycle(5))
