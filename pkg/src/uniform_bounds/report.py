"""Aggregation of every applicable method into one verdict per query."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_form as cf
from . import lp as lp_mod
from . import shadow as shadow_mod
from .closed_form import BoundVerdict, Method
from .exact import fraction_to_pair

METHOD_CHOICES = ("singleton", "scott", "defect", "corollary", "dual", "lp", "shadow", "all")

_FAMILY = {
    Method.SINGLETON: "structural guard",
    Method.SCOTT: "closed-form threshold",
    Method.DEFECT1: "closed-form threshold",
    Method.DEFECT2: "closed-form threshold",
    Method.COROLLARY_L: "closed-form threshold",
    Method.TWO_SUPPORT: "dual certificate",
    Method.SHADOW_PROP1: "shadow refinement",
    Method.LP: "exact linear program",
}


@dataclass(frozen=True)
class ReportEntry:
    method: Method
    nonexistent: bool
    reason: str | None
    trace: dict
    certificate: dict | None  # serialized, self-contained

    def to_json_dict(self) -> dict:
        return {
            "method": self.method.value,
            "family": _FAMILY[self.method],
            "verdict": "nonexistent" if self.nonexistent else "inconclusive",
            "reason": self.reason,
            "trace": self.trace,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    q: int
    entries: tuple[ReportEntry, ...] = field(default_factory=tuple)

    @property
    def best(self) -> str:
        return "nonexistent" if any(e.nonexistent for e in self.entries) else "inconclusive"

    @property
    def certificates(self) -> list[dict]:
        return [e.certificate for e in self.entries if e.certificate is not None]

    def to_json_dict(self) -> dict:
        return {
            "query": {"n": self.n, "k": self.k, "q": self.q},
            "best": self.best,
            "verdicts": [e.to_json_dict() for e in self.entries],
        }


def _entry_from_verdict(v: BoundVerdict) -> ReportEntry:
    cert = None
    if v.certificate is not None:
        cert = lp_mod.dual_to_json(v.certificate)
        if not lp_mod.verify_certificate_json(cert):
            raise AssertionError("embedded dual certificate failed re-verification")
    return ReportEntry(v.method, v.nonexistent, v.reason, dict(v.trace), cert)


def _lp_entry(n: int, k: int, q: int, lp_max_n: int, pivot_limit: int) -> ReportEntry:
    if k > n // 2:
        return ReportEntry(Method.LP, False, "not applicable: k > floor(n/2)", {}, None)
    if n > lp_max_n:
        return ReportEntry(
            Method.LP, False,
            f"undecided (budget): n={n} exceeds the LP size cap {lp_max_n}", {}, None,
        )
    program = lp_mod.build_primal(n, k, q)
    try:
        result = lp_mod.solve_feasibility(program, pivot_limit=pivot_limit)
    except lp_mod.BudgetExceeded as exc:
        return ReportEntry(Method.LP, False, str(exc), {}, None)
    if isinstance(result, lp_mod.Infeasible):
        cert = lp_mod.farkas_to_json(n, k, q, result.certificate)
        if not lp_mod.verify_certificate_json(cert):
            raise AssertionError("embedded Farkas certificate failed re-verification")
        return ReportEntry(Method.LP, True, None, {}, cert)
    point = {"feasible_point": [fraction_to_pair(v) for v in result.point]}
    return ReportEntry(Method.LP, False, "program is feasible", point, None)


def run_check(
    n: int,
    k: int,
    q: int,
    methods=("all",),
    lp_max_n: int = lp_mod.DEFAULT_LP_MAX_N,
    pivot_limit: int = lp_mod.DEFAULT_PIVOT_LIMIT,
) -> BoundReport:
    """Run the requested methods on (n, k, q) and aggregate the verdicts.

    Each method checks its own exact condition for this query; the report's
    best verdict is nonexistent as soon as any single method certifies it.
    """
    if isinstance(methods, str):
        methods = (methods,)
    chosen = set(methods)
    unknown = chosen - set(METHOD_CHOICES)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}; choose from {METHOD_CHOICES}")
    if "all" in chosen:
        chosen = set(METHOD_CHOICES) - {"all"}

    half = n // 2
    l = half - k
    entries: list[ReportEntry] = []
    if "singleton" in chosen:
        entries.append(_entry_from_verdict(cf.singleton_check(n, k)))
    if k <= half:
        if "scott" in chosen:
            if l == 0:
                entries.append(_entry_from_verdict(cf.scott_check(n, q)))
            else:
                entries.append(ReportEntry(Method.SCOTT, False, "not applicable: k < floor(n/2)", {}, None))
        if "defect" in chosen:
            if l == 1:
                entries.append(_entry_from_verdict(cf.defect1_check(n, q)))
            elif l == 2:
                entries.append(_entry_from_verdict(cf.defect2_check(n, q)))
            else:
                entries.append(
                    ReportEntry(
                        Method.DEFECT1 if l < 1 else Method.DEFECT2,
                        False, f"not applicable: defect l={l} outside {{1, 2}}", {}, None,
                    )
                )
        if "corollary" in chosen:
            entries.append(_entry_from_verdict(cf.corollary_l_check(n, q, l)))
        if "dual" in chosen:
            entries.append(_entry_from_verdict(cf.two_support_check(n, k, q)))
        if "shadow" in chosen:
            entries.append(_entry_from_verdict(shadow_mod.prop1_check(n, k, q)))
        if "lp" in chosen:
            entries.append(_lp_entry(n, k, q, lp_max_n, pivot_limit))
    return BoundReport(n, k, q, tuple(entries))


def load_report(doc: dict) -> BoundReport:
    """Re-parse a serialized report; every embedded certificate re-verifies."""
    query = doc["query"]
    entries = []
    for e in doc["verdicts"]:
        cert = e.get("certificate")
        if cert is not None and not lp_mod.verify_certificate_json(cert):
            raise ValueError(f"certificate embedded in report fails verification: {cert.get('type')}")
        entries.append(
            ReportEntry(Method(e["method"]), e["verdict"] == "nonexistent", e.get("reason"), e.get("trace", {}), cert)
        )
    return BoundReport(int(query["n"]), int(query["k"]), int(query["q"]), tuple(entries))
