"""End-to-end approximation run and its report.

Steps: solve the relaxation exactly; read the narrow-cut chain off a
Gomory-Hu tree; build the layered spanning tree J; fix its wrong-degree
vertices with a minimum T-join F; walk J + F as an Eulerian s-t trail; shortcut
the trail into a Hamiltonian path of the metric completion.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from . import oracle
from .graph import Graph, components, eulerian_trail, metric_completion, odd_vertices, shortcut
from .narrow_cuts import cut_value, narrow_cut_chain
from .separation import solve_relaxation
from .tjoin import blossom_matching, min_tjoin
from .tree_builder import build_tree, union_connectivity, wrong_degree_set

APPROX_FACTOR = Fraction(3, 2)


class PipelineError(RuntimeError):
    """A stage failed; ``stage`` names it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class InvariantViolation(PipelineError):
    """A proved guarantee or an oracle cross-check did not hold."""


def frac_str(q: Fraction | None) -> str | None:
    return None if q is None else f"{q.numerator}/{q.denominator}"


def frac_parse(text: str | None) -> Fraction | None:
    return None if text is None else Fraction(text)


@dataclass
class SolutionReport:
    id: str
    n: int
    m: int
    s: int
    t: int
    lp_value: Fraction
    k: int
    narrow_cuts: list[list[int]]
    tree_size: int
    tree_edges: list[int]
    wrong_degree: list[int]
    join_size: int
    join_edges: list[int]
    trail: list[int]
    path: list[int]
    cost: int
    opt: int | None = None
    ratio_lp: Fraction | None = None
    ratio_opt: Fraction | None = None
    checks: dict[str, str] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict, compare=False)

    _FRACTIONS = ("lp_value", "ratio_lp", "ratio_opt")

    def to_dict(self, *, include_timings: bool = False) -> dict[str, Any]:
        out = asdict(self)
        for key in self._FRACTIONS:
            q = getattr(self, key)
            out[key] = frac_str(q)
            out[f"{key}_decimal"] = None if q is None else float(q)
        if not include_timings:
            del out["timings"]
        return out

    def to_json(self, *, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings=include_timings), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SolutionReport":
        data = dict(data)
        for key in cls._FRACTIONS:
            data[key] = frac_parse(data.get(key))
            data.pop(f"{key}_decimal", None)
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "SolutionReport":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "n": self.n,
            "m": self.m,
            "lp_value": frac_str(self.lp_value),
            "k": self.k,
            "tree_size": self.tree_size,
            "join_size": self.join_size,
            "cost": self.cost,
            "opt": "" if self.opt is None else self.opt,
            "ratio_lp": frac_str(self.ratio_lp),
            "ratio_opt": "" if self.ratio_opt is None else frac_str(self.ratio_opt),
        }


CSV_COLUMNS = ["id", "n", "m", "lp_value", "k", "tree_size", "join_size", "cost", "opt", "ratio_lp", "ratio_opt"]


def _require(ok: bool, stage: str, message: str) -> None:
    if not ok:
        raise InvariantViolation(stage, message)


def run_pipeline(g: Graph, *, verify: bool = False, instance_id: str = "instance") -> SolutionReport:
    """Run every step on ``g``; with ``verify``, cross-check against the oracles."""
    timings: dict[str, float] = {}
    stage = "setup"

    @contextmanager
    def timed(name: str):
        nonlocal stage
        stage = name
        t0 = time.perf_counter()
        yield
        timings[name] = time.perf_counter() - t0

    try:
        with timed("relaxation"):
            relax = solve_relaxation(g)
            x, lp_value = relax.x, relax.value
        with timed("narrow_cuts"):
            _, chain = narrow_cut_chain(g, x)
        with timed("tree"):
            tree = build_tree(g, x, chain)
            T = wrong_degree_set(g, tree.edges)
        with timed("tjoin"):
            dist = metric_completion(g)
            F = min_tjoin(g, T, dist)
        with timed("trail"):
            mult = [0] * g.m
            for i in tree.edges:
                mult[i] += 1
            for i in F:
                mult[i] += 1
            trail = eulerian_trail(g, mult)
        with timed("shortcut"):
            path, cost = shortcut(trail, dist, g.t)
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(stage, f"{type(exc).__name__}: {exc}") from exc

    J, nJ, nF = tree.edges, len(tree.edges), len(F)
    stage = "invariants"
    _require(nJ == g.n - 1, stage, f"|J| = {nJ}, expected n-1 = {g.n - 1}")
    _require(nJ <= lp_value, stage, f"|J| = {nJ} exceeds lp_value = {lp_value}")
    _require(nF <= lp_value / 2, stage, f"|F| = {nF} exceeds lp_value/2 = {lp_value / 2}")
    _require(len(T) % 2 == 0, stage, f"|T| = {len(T)} is odd")
    for S in chain.cuts:
        crossing = sum(1 for i in J if (g.edges[i][0] in S) != (g.edges[i][1] in S))
        _require(crossing == 1, stage, f"J crosses narrow cut {sorted(S)} {crossing} times")
    bad = union_connectivity(g, x, chain)
    _require(not bad, stage, f"level unions disconnected in the support graph: {bad}")
    used = [g.edges[i] for i, k in enumerate(mult) if k]
    _require(
        odd_vertices(g.n, used, [k for k in mult if k]) == {g.s, g.t}
        and len(components(g.n, used)) == 1,
        stage,
        "J + F is not a connected spanning multigraph with odd set {s, t}",
    )
    _require(
        sorted(trail.edges) == sorted(i for i, k in enumerate(mult) for _ in range(k)),
        stage,
        "trail does not use every edge exactly per multiplicity",
    )
    _require(
        sorted(path) == list(range(g.n)) and path[0] == g.s and path[-1] == g.t,
        stage,
        "shortcut output is not a Hamiltonian s-t path",
    )
    _require(cost <= nJ + nF, stage, f"cost {cost} exceeds |J| + |F| = {nJ + nF}")

    report = SolutionReport(
        id=instance_id,
        n=g.n,
        m=g.m,
        s=g.s,
        t=g.t,
        lp_value=lp_value,
        k=chain.k,
        narrow_cuts=[sorted(S) for S in chain.cuts],
        tree_size=nJ,
        tree_edges=list(J),
        wrong_degree=sorted(T),
        join_size=nF,
        join_edges=list(F),
        trail=list(trail.vertices),
        path=path,
        cost=cost,
        ratio_lp=Fraction(cost) / lp_value,
        timings=timings,
    )
    if verify:
        t0 = time.perf_counter()
        report.checks = verify_report(g, report, x, dist)
        timings["verify"] = time.perf_counter() - t0
    return report


def verify_report(g: Graph, report: SolutionReport, x, dist) -> dict[str, str]:
    """Oracle cross-checks within budget; fills ``opt`` and ``ratio_opt``.

    Returns ``{check: "passed" | "skipped"}``; a failed check raises.
    """
    stage = "verify"
    checks: dict[str, str] = {}
    T, J, F = report.wrong_degree, report.tree_edges, report.join_edges

    def run(name: str, within_budget: bool, fn) -> None:
        if not within_budget:
            checks[name] = "skipped"
            return
        fn()
        checks[name] = "passed"

    def check_opt():
        opt = oracle.held_karp_opt(g).cost
        report.opt = opt
        report.ratio_opt = Fraction(report.cost, opt)
        _require(report.lp_value <= opt, stage, f"lp_value {report.lp_value} > OPT {opt}")
        _require(report.cost <= APPROX_FACTOR * opt, stage, f"cost {report.cost} > 3/2 * OPT {opt}")

    def check_lp():
        _, value = oracle.enumerate_lp(g)
        _require(value == report.lp_value, stage, f"enumerated LP {value} != cutting-plane LP {report.lp_value}")
        viol = oracle.relaxation_violations(g, x)
        _require(viol == 0, stage, f"x* violates {viol} relaxation rows")

    def check_cuts():
        brute = {frozenset(S) for S in oracle.brute_narrow_cuts(g, x)}
        found = {frozenset(S) for S in report.narrow_cuts}
        _require(brute == found, stage, f"narrow cuts differ from enumeration: {sorted(map(sorted, brute ^ found))}")
        for S in found:
            _require(cut_value(g, x, S) < 2, stage, f"cut {sorted(S)} is not narrow")

    def check_parity():
        bad = oracle.odd_st_cuts_with_odd_crossing(g, T, J)
        _require(not bad, stage, f"T-odd s-t cuts with odd J-crossing: {[sorted(S) for S in bad]}")

    def check_tjoin():
        best = oracle.brute_tjoin(g, T)
        _require(best == len(F), stage, f"|F| = {len(F)} but minimum T-join has {best} edges")

    def check_matching():
        w = blossom_matching(T, dist).weight
        best = oracle.brute_matching(T, dist)
        _require(w == best, stage, f"blossom weight {w} != enumerated {best}")

    def check_tjoin_lp():
        value = oracle.tjoin_lp_value(g, T)
        _require(value == len(F), stage, f"T-join LP optimum {value} != |F| = {len(F)}")

    run("opt", g.n <= oracle.HELD_KARP_MAX_N, check_opt)
    run("lp_enumeration", g.n <= oracle.ENUMERATE_LP_MAX_N, check_lp)
    run("narrow_cuts", g.n <= oracle.NARROW_CUT_MAX_N, check_cuts)
    run("parity", g.n <= oracle.ENUMERATE_LP_MAX_N, check_parity)
    run("tjoin", g.m <= oracle.TJOIN_MAX_EDGES, check_tjoin)
    run("matching", len(T) <= oracle.MATCHING_MAX_POINTS, check_matching)
    run("tjoin_lp", g.n <= oracle.ENUMERATE_LP_MAX_N, check_tjoin_lp)
    return checks
