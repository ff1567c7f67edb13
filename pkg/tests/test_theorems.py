import pytest
from hypothesis import given

from trianglefree import graph6
from trianglefree.enumeration import GenFilter
from trianglefree.families import (
    make_c5_blowup,
    make_complete_bipartite,
    make_cycle,
    make_path,
    recognize_complete_bipartite,
    recognize_cycle,
)
from trianglefree.graph import graph_new
from trianglefree.theorems import (
    THEOREMS,
    TheoremReport,
    Violation,
    aes_check,
    ceil_div,
    check_graph,
    efs_check,
    eppt_bound,
    eppt_check,
    main_classify,
    mantel_check,
    ore_path_check,
    proof_step_checks,
    scan,
    scan_n,
)

from conftest import graphs, random_relabel

K3 = graph_new(3, [(0, 1), (1, 2), (0, 2)])
C5, C6, C7 = make_cycle(5), make_cycle(6), make_cycle(7)
K23, K33, K45 = make_complete_bipartite(2, 3), make_complete_bipartite(3, 3), make_complete_bipartite(4, 5)


def test_ceil_div():
    assert [ceil_div(x, 4) for x in range(9)] == [0, 1, 1, 1, 1, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        ceil_div(1, 0)


def test_mantel_examples():
    v = mantel_check(make_complete_bipartite(2, 2))
    assert v.hypothesis and v.holds and v.details["bound_holds"] and v.details["extremal"]
    v = mantel_check(C5)
    assert v.holds and v.details["bound_holds"] and not v.details["extremal"] and v.details["bound"] == 6
    v = mantel_check(graph_new(4, []))
    assert v.holds and not v.details["extremal"]
    assert not mantel_check(K3).hypothesis


def test_aes_examples():
    assert not aes_check(C5).hypothesis
    v = aes_check(K33)
    assert v.hypothesis and v.holds
    assert not aes_check(make_c5_blowup(2)).hypothesis


def test_efs_examples():
    v = efs_check(make_path(3))
    assert v.hypothesis and v.holds
    assert not efs_check(C5).hypothesis
    assert not efs_check(K3).hypothesis


@pytest.mark.parametrize("g, diam, bound", [(C5, 2, 1), (C6, 3, 1), (K33, 2, 1)])
def test_eppt_printed_formula_is_violated(g, diam, bound):
    v = eppt_check(g)
    assert v.hypothesis and v.violation
    assert (v.details["diam"], v.details["bound"]) == (diam, bound)


def test_eppt_bound_arithmetic():
    assert eppt_bound(5, 2) == 1
    assert eppt_bound(6, 3) == 1
    assert eppt_bound(20, 2) == 5  # ceil(17/4)
    assert not eppt_check(make_path(5)).hypothesis


def test_ore_examples():
    assert ore_path_check(C5).hypothesis and ore_path_check(C5).holds
    assert ore_path_check(K23).holds
    assert not ore_path_check(make_complete_bipartite(1, 3)).hypothesis


def test_main_classify_examples():
    assert main_classify(C5).kind == "ConcludedC5"
    cls = main_classify(K23)
    assert cls.kind == "ConcludedBalancedBipartite" and cls.parts == (2, 3)
    cls = main_classify(C7)
    assert (cls.kind, cls.reason, cls.witness["degree"]) == ("HypothesisFail", "a", 2)
    # C6 has 2*delta = 4 < 5, so (a) is reported before its perfect matching
    assert main_classify(C6).reason == "a"
    cls = main_classify(K33)
    assert (cls.kind, cls.reason) == ("HypothesisFail", "b")
    assert len(cls.witness["matching"]) == 3
    cls = main_classify(graph_new(3, [(0, 1), (1, 2), (0, 2)]))
    assert (cls.reason, cls.witness["triangle"]) == ("c", [0, 1, 2])
    assert main_classify(graph_new(2, [(0, 1)])).reason == "n < 3"


def test_main_classify_reports_first_failure_in_order():
    # K4 fails (b) before (c): it has a perfect matching and triangles
    k4 = graph_new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert main_classify(k4).reason == "b"
    # K5 has odd order, so (c) is the first failure
    k5 = graph_new(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert main_classify(k5).reason == "c"


def test_proof_steps_examples():
    rep = proof_step_checks(C5)
    assert rep.applicable and rep.passed
    assert rep.steps["max_degree_bound"] and rep.steps["lower_case_c5"] and rep.steps["lower_case_regular_even"]
    assert rep.steps["upper_case_bipartite"] is None
    rep = proof_step_checks(K23)
    assert rep.steps["max_degree_bound"] and rep.steps["upper_case_bipartite"]
    rep = proof_step_checks(K45)
    assert rep.steps["upper_case_bipartite"] and recognize_complete_bipartite(K45) == (4, 5)
    assert not proof_step_checks(C7).applicable


@given(graphs(max_n=9))
def test_classification_branches_are_exclusive(g):
    cls = main_classify(g)
    assert cls.kind in ("HypothesisFail", "ConcludedC5", "ConcludedBalancedBipartite", "Counterexample")
    if cls.kind == "ConcludedC5":
        assert recognize_cycle(g) == 5
    if cls.kind == "ConcludedBalancedBipartite":
        assert recognize_complete_bipartite(g) == ((g.n - 1) // 2, (g.n + 1) // 2)
    if cls.kind == "Counterexample":
        pytest.fail(f"counterexample to the main theorem: {graph6.encode(g)}")


@given(graphs(max_n=9))
def test_verdicts_invariant_under_relabelling(g):
    import random

    h = random_relabel(random.Random(g.m), g)
    for theorem in THEOREMS:
        a, b = check_graph(theorem, g), check_graph(theorem, h)
        assert a[0] == b[0]
        assert (a[1] is None) == (b[1] is None)
    assert main_classify(g).kind == main_classify(h).kind
    assert main_classify(g).reason == main_classify(h).reason


def test_scan_examples():
    rep = scan_n("main", 5)
    assert rep.hypothesis_satisfied == 2 and rep.counterexamples == []
    rep = scan_n("main", 7)
    assert rep.hypothesis_satisfied == 1 and rep.counterexamples == []
    assert recognize_complete_bipartite(graph6.decode(rep.witnesses[0][0])) == (3, 4)
    rep = scan_n("eppt", 5)
    assert any(recognize_cycle(graph6.decode(s)) == 5 for s in rep.counterexamples)


def test_even_orders_never_satisfy_hypotheses():
    reports, _ = scan("main", [4, 6, 8, 10])
    assert all(r.hypothesis_satisfied == 0 for r in reports)


def test_report_merge_is_order_independent():
    a = TheoremReport("eppt", 5, 5, 3, 2, [Violation("Ds[", {})], [], 0.0)
    b = TheoremReport("eppt", 6, 6, 4, 1, [Violation("Dq", {})], [("x", "y")], 0.0)
    ab, ba = a.merge(b), b.merge(a)
    assert ab.as_dict() == ba.as_dict()
    assert (ab.graphs_scanned, ab.hypothesis_satisfied, ab.n_min, ab.n_max) == (7, 3, 5, 6)
    with pytest.raises(ValueError):
        a.merge(TheoremReport("main", 5, 5))


def test_filter_overrides_only_restrict():
    rep = scan_n("eppt", 6, overrides=GenFilter(connected_only=True))
    base = scan_n("eppt", 6)
    assert rep.graphs_scanned < base.graphs_scanned
    assert rep.counterexamples == base.counterexamples


def test_unknown_theorem():
    with pytest.raises(ValueError):
        scan_n("fermat", 5)


def test_scan_workers_identical():
    single = scan_n("aes", 8, jobs=1).as_dict()
    assert scan_n("aes", 8, jobs=2).as_dict() == single
