"""Executable checkers for the triangle-free graph theorems and exhaustive scan drivers.

Every bound is evaluated in integer arithmetic: ``m <= floor(n^2/4)`` as
``4m <= n^2``, ``delta > 2n/5`` as ``5*delta > 2n``, and ceilings as
``(x + y - 1) // y``.
"""
from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from . import graph6
from .enumeration import GenFilter, WorkUnit, enumerate_unit, map_units
from .families import FamilyTag, recognize_complete_bipartite, recognize_cycle, recognize_family
from .graph import Graph, stats
from .matching import maximum_matching
from .properties import (
    find_triangle,
    has_hamiltonian_path,
    has_three_equal_degrees,
    is_bipartite,
    is_triangle_free,
)

THEOREMS = ("mantel", "aes", "efs", "eppt", "ore", "main", "proof-steps")


def ceil_div(x: int, y: int) -> int:
    if x < 0 or y <= 0:
        raise ValueError(f"ceil_div needs x >= 0 and y > 0, got ({x}, {y})")
    return (x + y - 1) // y


@dataclass(frozen=True)
class Verdict:
    """Outcome of one theorem checker on one graph."""

    hypothesis: bool
    holds: bool
    details: dict = field(default_factory=dict, compare=False)

    @property
    def violation(self) -> bool:
        return self.hypothesis and not self.holds


def mantel_check(g: Graph) -> Verdict:
    """Edge bound for triangle-free graphs, with the extremal case checked for uniqueness.

    ``details["extremal"]`` marks ``m == floor(n^2/4)``; such a graph must be
    the balanced complete bipartite graph.
    """
    n, m = g.n, g.m
    bound = n * n // 4
    details: dict[str, Any] = {"m": m, "bound": bound}
    if not is_triangle_free(g):
        return Verdict(False, True, details)
    bound_holds = 4 * m <= n * n
    extremal = m == bound
    details["bound_holds"] = bound_holds
    details["extremal"] = extremal
    holds = bound_holds
    if extremal and n >= 2:
        parts = recognize_complete_bipartite(g)
        details["parts"] = parts
        holds = holds and parts == (n // 2, n - n // 2)
    return Verdict(True, holds, details)


def aes_check(g: Graph) -> Verdict:
    """Triangle-free with ``5*delta > 2n`` must be bipartite."""
    delta = min(g.degrees())
    hypothesis = 5 * delta > 2 * g.n and is_triangle_free(g)
    bipartite = is_bipartite(g).bipartite
    return Verdict(hypothesis, bipartite, {"delta": delta, "bipartite": bipartite})


def efs_check(g: Graph) -> Verdict:
    """Triangle-free with no degree shared by three vertices must be bipartite."""
    hypothesis = is_triangle_free(g) and not has_three_equal_degrees(g)
    bipartite = is_bipartite(g).bipartite
    return Verdict(hypothesis, bipartite, {"degrees": sorted(g.degrees()), "bipartite": bipartite})


def eppt_bound(n: int, delta: int) -> int:
    """``ceil((n - delta - 1) / (2 delta))`` exactly as printed, for ``delta >= 1``."""
    return ceil_div(n - delta - 1, 2 * delta)


def eppt_check(g: Graph) -> Verdict:
    """Diameter against the printed bound; a falsification probe, violations are expected."""
    st = stats(g)
    details: dict[str, Any] = {"delta": st.delta, "diam": st.diam}
    hypothesis = g.n >= 3 and st.delta >= 2 and st.connected and is_triangle_free(g)
    if not hypothesis:
        return Verdict(False, True, details)
    bound = eppt_bound(g.n, st.delta)
    details["bound"] = bound
    return Verdict(True, st.diam <= bound, details)


def ore_path_check(g: Graph) -> Verdict:
    """``2*delta >= n - 1`` must give a Hamiltonian path."""
    delta = min(g.degrees())
    hypothesis = 2 * delta >= g.n - 1
    if not hypothesis:
        return Verdict(False, True, {"delta": delta})
    path = has_hamiltonian_path(g)
    return Verdict(True, path, {"delta": delta, "hamiltonian_path": path})


@dataclass(frozen=True)
class Classification:
    """Verdict of the main theorem on one graph.

    ``kind`` is one of ``HypothesisFail``, ``ConcludedC5``,
    ``ConcludedBalancedBipartite`` or ``Counterexample``. For failures,
    ``reason`` is ``"n < 3"``, ``"a"``, ``"b"`` or ``"c"`` and ``witness``
    holds a minimum-degree vertex, a perfect matching, or a triangle.
    """

    kind: str
    reason: Optional[str] = None
    witness: Any = None
    parts: Optional[tuple[int, int]] = None

    def as_dict(self) -> dict:
        out: dict[str, Any] = {"verdict": self.kind}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.parts is not None:
            out["parts"] = list(self.parts)
        return out


def main_classify(g: Graph) -> Classification:
    n = g.n
    if n < 3:
        return Classification("HypothesisFail", "n < 3")
    degs = g.degrees()
    delta = min(degs)
    if 2 * delta < n - 1:
        v = degs.index(delta)
        return Classification("HypothesisFail", "a", {"vertex": v, "degree": delta})
    mm = maximum_matching(g)
    if 2 * mm.size == n:
        if n % 2:
            raise AssertionError("perfect matching found on an odd number of vertices")
        return Classification("HypothesisFail", "b", {"matching": [list(e) for e in mm.edges]})
    tri = find_triangle(g)
    if tri is not None:
        return Classification("HypothesisFail", "c", {"triangle": list(tri.as_tuple())})
    if recognize_cycle(g) == 5:
        return Classification("ConcludedC5")
    parts = recognize_complete_bipartite(g)
    if parts == ((n - 1) // 2, (n + 1) // 2) and n % 2:
        return Classification("ConcludedBalancedBipartite", parts=parts)
    return Classification("Counterexample")


def hypotheses_hold(g: Graph) -> bool:
    return main_classify(g).kind != "HypothesisFail"


@dataclass(frozen=True)
class StepReport:
    """Per-graph results of the main proof's intermediate claims.

    Each entry of ``steps`` is ``True``/``False``, or ``None`` when the
    claim's case does not arise for this graph.
    """

    applicable: bool
    steps: dict

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.steps.values())


PROOF_STEPS = ("odd_order", "hamiltonian_path", "max_degree_bound", "cases_exhaustive",
               "upper_case_bipartite", "lower_case_regular_even", "lower_case_c5")


def proof_step_checks(g: Graph) -> StepReport:
    if not hypotheses_hold(g):
        return StepReport(False, {name: None for name in PROOF_STEPS})
    n = g.n
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    steps: dict[str, Optional[bool]] = {
        "odd_order": n % 2 == 1,
        "hamiltonian_path": has_hamiltonian_path(g),
        "max_degree_bound": 2 * Delta <= n + 1,
        "cases_exhaustive": 2 * Delta in (n - 1, n + 1),
        "upper_case_bipartite": None,
        "lower_case_regular_even": None,
        "lower_case_c5": None,
    }
    if 2 * Delta == n + 1:
        steps["upper_case_bipartite"] = recognize_complete_bipartite(g) == ((n - 1) // 2, (n + 1) // 2)
    if 2 * Delta == n - 1:
        r = Delta
        steps["lower_case_regular_even"] = delta == Delta and r % 2 == 0
        steps["lower_case_c5"] = r == 2 and recognize_cycle(g) == 5
    return StepReport(True, steps)


# --- scans -----------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    graph6: str
    details: dict = field(compare=False)


@dataclass
class TheoremReport:
    """Aggregate of a scan over every generated graph for one theorem.

    ``witnesses`` lists notable graphs as ``(graph6, label)``: hypothesis-
    passing graphs with their family for ``main``/``proof-steps``, and the
    extremal graphs for ``mantel``.
    """

    theorem: str
    n_min: int
    n_max: int
    graphs_scanned: int = 0
    hypothesis_satisfied: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def counterexamples(self) -> list[str]:
        return [v.graph6 for v in self.violations]

    def merge(self, other: TheoremReport) -> TheoremReport:
        if other.theorem != self.theorem:
            raise ValueError("cannot merge reports of different theorems")
        return TheoremReport(
            theorem=self.theorem,
            n_min=min(self.n_min, other.n_min),
            n_max=max(self.n_max, other.n_max),
            graphs_scanned=self.graphs_scanned + other.graphs_scanned,
            hypothesis_satisfied=self.hypothesis_satisfied + other.hypothesis_satisfied,
            violations=sorted(self.violations + other.violations, key=lambda v: (len(v.graph6), v.graph6)),
            witnesses=sorted(self.witnesses + other.witnesses),
            elapsed=self.elapsed + other.elapsed,
        )

    def check_invariants(self) -> None:
        if not len(self.violations) <= self.hypothesis_satisfied <= self.graphs_scanned:
            raise AssertionError(f"inconsistent counts in {self.theorem} report")

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "graphs_scanned": self.graphs_scanned,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "violations": [dict(graph6=v.graph6, **v.details) for v in self.violations],
            "witnesses": [list(w) for w in self.witnesses],
        }


def scan_filter(theorem: str, n: int) -> GenFilter:
    """Hypotheses that can soundly be pushed into generation."""
    half = n // 2  # ceil((n - 1) / 2)
    if theorem in ("main", "proof-steps"):
        return GenFilter(triangle_free=True, min_degree_target=half)
    if theorem == "ore":
        return GenFilter(min_degree_target=half)
    if theorem in ("mantel", "aes", "efs", "eppt"):
        return GenFilter(triangle_free=True)
    raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")


def _combine(base: GenFilter, extra: Optional[GenFilter]) -> GenFilter:
    if extra is None:
        return base
    targets = [t for t in (base.min_degree_target, extra.min_degree_target) if t is not None]
    return GenFilter(
        triangle_free=base.triangle_free or extra.triangle_free,
        min_degree_target=max(targets) if targets else None,
        connected_only=base.connected_only or extra.connected_only,
    )


def _json_safe(details: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in details.items()}


def check_graph(theorem: str, g: Graph) -> tuple[bool, Optional[dict], Optional[tuple[str, str]]]:
    """Run one checker; returns ``(hypothesis, violation details or None, witness or None)``."""
    if theorem in ("main", "proof-steps"):
        cls = main_classify(g)
        if cls.kind == "HypothesisFail":
            return False, None, None
        label = str(recognize_family(g))
        witness = (graph6.encode(g), label)
        if theorem == "main":
            bad = cls.as_dict() if cls.kind == "Counterexample" else None
            return True, bad, witness
        report = proof_step_checks(g)
        failed = {k: v for k, v in report.steps.items() if v is False}
        return True, ({"failed_steps": sorted(failed)} if failed else None), witness
    checker = {
        "mantel": mantel_check,
        "aes": aes_check,
        "efs": efs_check,
        "eppt": eppt_check,
        "ore": ore_path_check,
    }[theorem]
    verdict = checker(g)
    witness = None
    if theorem == "mantel" and verdict.details.get("extremal"):
        parts = verdict.details.get("parts")
        label = str(FamilyTag("CompleteBipartite", parts)) if parts else str(recognize_family(g))
        witness = (graph6.encode(g), label)
    bad = _json_safe(verdict.details) if verdict.violation else None
    return verdict.hypothesis, bad, witness


def _scan_unit(theorem: str, task: tuple[WorkUnit, int, GenFilter]) -> TheoremReport:
    unit, n, filt = task
    report = TheoremReport(theorem, n, n)
    for g in enumerate_unit(unit, n, filt):
        report.graphs_scanned += 1
        hyp, bad, witness = check_graph(theorem, g)
        if hyp:
            report.hypothesis_satisfied += 1
        if bad is not None:
            report.violations.append(Violation(graph6.encode(g), bad))
        if witness is not None:
            report.witnesses.append(witness)
    return report


def scan_n(theorem: str, n: int, jobs: int = 1, overrides: Optional[GenFilter] = None) -> TheoremReport:
    """Exhaustive scan of one theorem over all generated graphs on ``n`` vertices."""
    filt = _combine(scan_filter(theorem, n), overrides)
    start = time.perf_counter()
    parts = map_units(functools.partial(_scan_unit, theorem), n, filt, jobs)
    report = functools.reduce(TheoremReport.merge, parts, TheoremReport(theorem, n, n))
    if theorem == "mantel" and len(report.witnesses) != 1:
        # the extremal graph must be unique up to isomorphism
        extra = [Violation(g6, {"reason": "extremal class not unique", "extremal_classes": len(report.witnesses)})
                 for g6, _ in report.witnesses]
        report.violations = sorted(report.violations + extra, key=lambda v: (len(v.graph6), v.graph6))
    report.elapsed = time.perf_counter() - start
    report.check_invariants()
    return report


def scan(
    theorem: str,
    n_values: Iterable[int],
    jobs: int = 1,
    overrides: Optional[GenFilter] = None,
) -> tuple[list[TheoremReport], TheoremReport]:
    """Per-``n`` reports and their merged summary."""
    reports = [scan_n(theorem, n, jobs, overrides) for n in n_values]
    if not reports:
        raise ValueError("empty n range")
    summary = functools.reduce(TheoremReport.merge, reports[1:], reports[0])
    return reports, summary
