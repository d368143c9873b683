"""Regeneration of the result tables with byte-stable output.

Each builder returns plain data; the renderers turn it into Markdown
mirroring the published row/column layout or into CSV for machine use.
Published reference rows (external code-table values quoted for
comparison) are embedded as literal constants and labelled as references:
they are data being compared against, not something this engine computes.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from . import closed_form as cf
from .asymptotic import RateBound, theta_bound
from ._parallel import ordered_map
from .lp import NotApplicable
from .shadow import scan_refinement, shadow_bound_value

TABLE_NAMES = (
    "defect12",
    "defect34",
    "asymptotic",
    "shadow3",
    "shadow4",
    "shadow5",
    "improve5",
    "improve4",
)

_SHADOW_ROWS = {3: (0, 2, 4, 6, 8), 4: (0, 2, 4, 6, 8, 10), 5: (0, 2, 4, 6)}
_SHADOW_MODULUS = {3: 14, 4: 17, 5: 4}

# Published comparison rows (external references, not computed here):
# prior bounds for the same n from the earlier shadow-bound tables ...
_IMPROVE5_REFERENCE = {
    180: 89, 182: 89, 185: 91, 187: 91, 224: 111, 226: 111, 228: 111,
    261: 129, 263: 129, 265: 131, 267: 131, 269: 133, 271: 133, 273: 135, 275: 135,
}
# ... and the public code-table upper bounds on the minimum distance of
# ((n,1,d))_4 quantum codes.
_IMPROVE4_REFERENCE = {
    82: 40, 83: 40, 86: 42, 87: 42, 88: 42, 91: 44, 92: 44, 96: 46, 97: 46, 100: 48,
}

IMPROVE5_NS = tuple(sorted(_IMPROVE5_REFERENCE))
IMPROVE4_NS = tuple(sorted(_IMPROVE4_REFERENCE))


# --- defect threshold tables -------------------------------------------------


def defect_table(ls: tuple[int, int], qs=(4, 5, 6, 7)) -> dict:
    """min_n per (q, l, parity) for the closed-form defect criteria."""
    cells = {}
    for q in qs:
        for l in ls:
            for parity in ("even", "odd"):
                cells[(q, l, parity)] = cf.min_n_scan(q, l, parity)
    return {"qs": tuple(qs), "ls": ls, "cells": cells}


def defect12_table() -> dict:
    return defect_table((1, 2))


def defect34_table() -> dict:
    return defect_table((3, 4))


# --- asymptotic table ---------------------------------------------------------


def asymptotic_table(qs=(4, 5, 6, 7, 8, 9), decimals: int = 3) -> list[RateBound]:
    return ordered_map(lambda q: theta_bound(q, decimals=decimals), qs)


# --- shadow improvement tables -------------------------------------------------


def shadow_table(q: int, m_max: int = 200) -> dict:
    """Minimal verified m per (l, r) cell; None renders as '--'."""
    rows = _SHADOW_ROWS[q]
    residues = tuple(range(_SHADOW_MODULUS[q]))
    results = {}
    for l in rows:
        scans = ordered_map(lambda r, _l=l: scan_refinement(q, r, _l, m_max), residues)
        for r, scan in zip(residues, scans):
            results[(l, r)] = scan.minimal_m
    return {"q": q, "m_max": m_max, "ls": rows, "residues": residues, "cells": results}


# --- comparison tables ---------------------------------------------------------


def _closed_form_certifies(n: int, k: int, q: int) -> bool:
    l = n // 2 - k
    if l < 0:
        return True  # Singleton guard
    if cf.defect_fires(n, q, l):
        return True
    try:
        return cf.two_support_check(n, k, q).nonexistent
    except NotApplicable:
        return False


def best_k_bound(n: int, q: int) -> tuple[int, tuple[str, ...]]:
    """Largest k not certified nonexistent by the closed-form family.

    Returns (k_bound, methods certifying k_bound + 1).  Scans downward from
    floor(n/2); non-existence is monotone increasing in k, so the first
    uncertified k is the bound.
    """
    k = n // 2
    while k >= 0 and _closed_form_certifies(n, k, q):
        k -= 1
    boundary = k + 1
    methods = []
    if boundary <= n // 2:
        l = n // 2 - boundary
        if l == 0 and cf.scott_check(n, q).nonexistent:
            methods.append("scott")
        if l == 1 and cf.defect1_check(n, q).nonexistent:
            methods.append("defect1")
        if l == 2 and cf.defect2_check(n, q).nonexistent:
            methods.append("defect2")
        if cf.corollary_l_check(n, q, l).nonexistent:
            methods.append("corollary_l")
        try:
            if cf.two_support_check(n, boundary, q).nonexistent:
                methods.append("two_support")
        except NotApplicable:
            pass
    return k, tuple(methods)


def improve5_table() -> dict:
    """Upper bounds on k in (C^5)^{tensor n} for the listed n, with the
    previously published bounds quoted for comparison."""
    rows = []
    for n in IMPROVE5_NS:
        bound, methods = best_k_bound(n, 5)
        rows.append(
            {"n": n, "k_bound": bound, "methods": methods, "reference": _IMPROVE5_REFERENCE[n]}
        )
    return {"rows": rows}


def improve4_table(m_max_check: int = 10) -> dict:
    """New distance bounds for ((n,1,d))_4 codes from the l=0 refinement.

    d <= S_4(n) holds whenever the refinement criterion removes the top
    value k = S_4(n); the scan verifies the criterion really fires at the
    relevant m (and onwards to m_max_check).
    """
    rows = []
    for n in IMPROVE4_NS:
        sb = shadow_bound_value(4, n)
        m, r = divmod(n, 17)
        scan = scan_refinement(4, r, 0, m_max_check)
        fired = scan.minimal_m is not None and scan.minimal_m <= m
        rows.append(
            {
                "n": n,
                "d_bound": sb.value,
                "verified": fired,
                "reference": _IMPROVE4_REFERENCE[n],
                "baseline_status": sb.status.value,
            }
        )
    return {"rows": rows, "m_max_check": m_max_check}


# --- renderers -----------------------------------------------------------------


def _md_row(cells) -> str:
    return "| " + " | ".join(str(c) for c in cells) + " |\n"


def _md_sep(width: int) -> str:
    return "|" + "|".join(["---"] * width) + "|\n"


def render_defect_markdown(data: dict, title: str) -> str:
    out = io.StringIO()
    out.write(f"# {title}\n\n")
    for q in data["qs"]:
        out.write(f"## q = {q}\n\n")
        out.write(_md_row(["l", "n even", "n odd"]))
        out.write(_md_sep(3))
        for l in data["ls"]:
            even = data["cells"][(q, l, "even")]
            odd = data["cells"][(q, l, "odd")]
            out.write(_md_row([l, f"n >= {even}", f"n >= {odd}"]))
        out.write("\n")
    return out.getvalue()


def render_defect_csv(data: dict) -> str:
    out = io.StringIO()
    out.write("q,l,parity,min_n\n")
    for q in data["qs"]:
        for l in data["ls"]:
            for parity in ("even", "odd"):
                out.write(f"{q},{l},{parity},{data['cells'][(q, l, parity)]}\n")
    return out.getvalue()


def render_asymptotic_markdown(bounds: list[RateBound]) -> str:
    out = io.StringIO()
    out.write("# Asymptotic upper bounds on k/n\n\n")
    out.write(_md_row(["q"] + [b.q for b in bounds]))
    out.write(_md_sep(len(bounds) + 1))
    out.write(_md_row(["k/n <="] + [b.theta_str() for b in bounds]))
    return out.getvalue()


def render_asymptotic_csv(bounds: list[RateBound]) -> str:
    out = io.StringIO()
    out.write("q,theta,margin_lower_bound,prec_bits\n")
    for b in bounds:
        out.write(f"{b.q},{b.theta_str()},{float(b.margin):.3e},{b.prec_bits}\n")
    return out.getvalue()


def _cell(v) -> str:
    return "--" if v is None else str(v)


def render_shadow_markdown(data: dict) -> str:
    q, m_max = data["q"], data["m_max"]
    out = io.StringIO()
    out.write(f"# Improvement on shadow bounds, local dimension q = {q} (m <= {m_max})\n\n")
    out.write(
        f"Cell (l, r): minimal m such that the refinement criterion removes\n"
        f"k = S_{q}(n) - l for every m up to {m_max}, n = {_SHADOW_MODULUS[q]}m + r;\n"
        f"'--' means no such m within the scanned range.\n\n"
    )
    out.write(_md_row(["m >="] + [f"r={r}" for r in data["residues"]]))
    out.write(_md_sep(len(data["residues"]) + 1))
    for l in data["ls"]:
        out.write(_md_row([f"l={l}"] + [_cell(data["cells"][(l, r)]) for r in data["residues"]]))
    return out.getvalue()


def render_shadow_csv(data: dict) -> str:
    out = io.StringIO()
    out.write("q,r,l,m_max,minimal_m\n")
    for l in data["ls"]:
        for r in data["residues"]:
            out.write(f"{data['q']},{r},{l},{data['m_max']},{_cell(data['cells'][(l, r)])}\n")
    return out.getvalue()


def render_improve5_markdown(data: dict) -> str:
    rows = data["rows"]
    out = io.StringIO()
    out.write("# Upper bounds on k for k-uniform states, local dimension q = 5\n\n")
    out.write(_md_row(["n"] + [r["n"] for r in rows]))
    out.write(_md_sep(len(rows) + 1))
    out.write(_md_row(["k <= (this engine)"] + [r["k_bound"] for r in rows]))
    out.write(_md_row(["k <= (previously published)"] + [r["reference"] for r in rows]))
    return out.getvalue()


def render_improve5_csv(data: dict) -> str:
    out = io.StringIO()
    out.write("n,k_bound,methods,reference\n")
    for r in data["rows"]:
        out.write(f"{r['n']},{r['k_bound']},{'+'.join(r['methods'])},{r['reference']}\n")
    return out.getvalue()


def render_improve4_markdown(data: dict) -> str:
    rows = data["rows"]
    out = io.StringIO()
    out.write("# New upper bounds on the minimum distance of ((n,1,d))_4 codes\n\n")
    out.write("Baseline k values are conjectured for q = 4; the removal of the\n")
    out.write("top value by the refinement criterion is verified unconditionally.\n\n")
    out.write(_md_row(["n"] + [r["n"] for r in rows]))
    out.write(_md_sep(len(rows) + 1))
    out.write(_md_row(["d <= (this engine)"] + [r["d_bound"] for r in rows]))
    out.write(_md_row(["d <= (public code tables)"] + [r["reference"] for r in rows]))
    out.write(_md_row(["criterion verified"] + ["yes" if r["verified"] else "NO" for r in rows]))
    return out.getvalue()


def render_improve4_csv(data: dict) -> str:
    out = io.StringIO()
    out.write("n,d_bound,verified,reference,baseline_status\n")
    for r in data["rows"]:
        out.write(
            f"{r['n']},{r['d_bound']},{str(r['verified']).lower()},{r['reference']},{r['baseline_status']}\n"
        )
    return out.getvalue()


def render_table(which: str, fmt: str = "md", m_max: int | None = None) -> str:
    """Build and render one table; output is byte-stable per (which, m_max, fmt)."""
    if which not in TABLE_NAMES:
        raise ValueError(f"unknown table {which!r}; choose from {TABLE_NAMES}")
    if fmt not in ("md", "csv"):
        raise ValueError(f"format must be 'md' or 'csv', got {fmt!r}")
    if which == "defect12":
        data = defect12_table()
        title = "Non-existence thresholds, defect 1 and 2"
        return render_defect_markdown(data, title) if fmt == "md" else render_defect_csv(data)
    if which == "defect34":
        data = defect34_table()
        title = "Non-existence thresholds, defect 3 and 4"
        return render_defect_markdown(data, title) if fmt == "md" else render_defect_csv(data)
    if which == "asymptotic":
        bounds = asymptotic_table()
        return render_asymptotic_markdown(bounds) if fmt == "md" else render_asymptotic_csv(bounds)
    if which in ("shadow3", "shadow4", "shadow5"):
        q = int(which[-1])
        data = shadow_table(q, m_max if m_max is not None else 200)
        return render_shadow_markdown(data) if fmt == "md" else render_shadow_csv(data)
    if which == "improve5":
        data = improve5_table()
        return render_improve5_markdown(data) if fmt == "md" else render_improve5_csv(data)
    data = improve4_table()
    return render_improve4_markdown(data) if fmt == "md" else render_improve4_csv(data)
