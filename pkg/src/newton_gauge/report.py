"""Report construction and rendering.

A report is a plain dict with JSON-native leaves only (strings, ints,
bools, lists, dicts), so `json.loads(json.dumps(report)) == report`
holds by construction.  Rationals are serialized exactly as lowest-term
strings "p/q" (or "p" for integers), never as floats.  The same dict
feeds both the JSON and the aligned text renderers, and validates
against the schema shipped as report.schema.json.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional

from .criteria import Analysis, Certificate, find_dominant_index
from .oracle import FactorizationWitness, SweepSummary, VerificationReport
from .valuation import Slope

__all__ = [
    "SCHEMA_VERSION",
    "fraction_str",
    "certificate_dict",
    "verification_dict",
    "analysis_report",
    "sweep_report",
    "render_analysis_text",
    "render_sweep_text",
    "load_schema",
]

SCHEMA_VERSION = 1


def fraction_str(value: Slope) -> str:
    """Exact lowest-terms string, "p/q" or "p" when the denominator is 1."""
    return str(value)


def _clause_dict(clause) -> dict:
    out = {"kind": clause.kind}
    for key in ("modulus", "total"):
        if hasattr(clause, key):
            out[key] = getattr(clause, key)
    return out


def certificate_dict(cert: Certificate) -> dict:
    params = None
    if cert.params is not None:
        p = cert.params
        params = {
            "n": p.n,
            "s": p.s,
            "c_s": p.c_s,
            "c_n": p.c_n,
            "d": p.d,
            "u": p.u,
            "modulus": p.modulus,
        }
    return {
        "theorem": cert.theorem,
        "theorem_a": cert.theorem_a,
        "theorem_b": cert.theorem_b,
        "parameters": params,
        "clauses": [_clause_dict(c) for c in cert.clauses],
        "notes": list(cert.notes),
    }


def verification_dict(
    witness: FactorizationWitness, outcome: VerificationReport
) -> dict:
    return {
        "witness": {
            "sign": witness.sign,
            "content": witness.content,
            "factors": [str(g) for g in witness.factors],
        },
        "content_valuation": outcome.content_valuation,
        "factor_degrees": list(outcome.factor_degrees),
        "bipartitions": [
            {"degrees": list(b.degrees), "satisfied": list(b.satisfied)}
            for b in outcome.bipartitions
        ],
        "no_split_clauses": list(outcome.no_split_clauses),
        "passed": outcome.passed,
    }


def analysis_report(
    analysis: Analysis, verification: Optional[dict] = None
) -> dict:
    """Full analysis report; pass a verification section to embed it."""
    table = analysis.table
    dominant = find_dominant_index(table)
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": "analysis",
        "input": {
            "polynomial": str(analysis.input.poly),
            "prime": analysis.input.prime,
        },
        "valuation_points": [[pt.index, pt.valuation] for pt in analysis.polygon.points],
        "polygon_vertices": [
            [pt.index, pt.valuation] for pt in analysis.polygon.vertices
        ],
        "slope_table": {
            "degree": table.degree,
            "leading_valuation": table.leading_valuation,
            "entries": [
                {
                    "index": e.index,
                    "valuation": e.valuation,
                    "slope": fraction_str(e.slope),
                }
                for e in table.entries
            ],
            "newton_index": fraction_str(table.newton_index),
            "index_of_max": list(table.index_of_max),
            "dominant_index": dominant,
        },
        "certificate": certificate_dict(analysis.certificate),
        "dumas_degree_pairs": [list(pair) for pair in analysis.dumas_pairs],
    }
    if verification is not None:
        report["verification"] = verification
    return report


def sweep_report(summary: SweepSummary) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "sweep",
        "corpus": summary.corpus,
        "total": summary.total,
        "certificates": dict(summary.certificates),
        "verified": summary.verified,
        "budget_errors": summary.budget_errors,
        "spot_checks": summary.spot_checks,
        "violations": [{"kind": v.kind, **v.detail} for v in summary.violations],
        "family_rows": list(summary.family_rows),
        "passed": summary.passed,
    }


def load_schema() -> dict:
    """The JSON schema every report validates against."""
    text = resources.files("newton_gauge").joinpath("report.schema.json").read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# Text rendering (same dict as the JSON output)

_CLAUSE_TEXT = {
    "Irreducible": "the polynomial is irreducible (content carries no valuation)",
    "DegreeZeroFactor": "a degree-zero factor has positive valuation"
    " (content divisible by the prime)",
}


def _clause_text(clause: dict) -> str:
    kind = clause["kind"]
    if kind in _CLAUSE_TEXT:
        return _CLAUSE_TEXT[kind]
    if kind == "FactorDegreeMultipleOf":
        return f"some factor degree is a multiple of {clause['modulus']}"
    if kind == "AlphaSplit":
        total = clause["total"]
        return (
            f"a2*deg(f1) - a1*deg(f2) is divisible by {clause['modulus']}"
            f" for some a1, a2 >= 1 with a1 + a2 = {total}"
        )
    return kind


def _points_line(points: list) -> str:
    return " ".join(f"({i},{v})" for i, v in points)


def render_analysis_text(report: dict) -> str:
    lines = []
    add = lines.append
    add(f"polynomial        {report['input']['polynomial']}")
    add(f"prime             {report['input']['prime']}")
    add(f"valuation points  {_points_line(report['valuation_points'])}")
    add(f"polygon vertices  {_points_line(report['polygon_vertices'])}")
    table = report["slope_table"]
    add("slopes")
    for entry in table["entries"]:
        add(f"  m_{entry['index']} = {entry['slope']}")
    attained = ",".join(str(i) for i in table["index_of_max"])
    add(f"newton index      {table['newton_index']} (attained at {attained})")
    cert = report["certificate"]
    add(f"certificate       {cert['theorem']}")
    if cert["parameters"] is not None:
        p = cert["parameters"]
        add(
            f"  s={p['s']} c_s={p['c_s']} c_n={p['c_n']}"
            f" d={p['d']} u={p['u']} modulus={p['modulus']}"
        )
    if cert["clauses"]:
        add("  any factorization satisfies one of:")
        for clause in cert["clauses"]:
            add(f"    - {_clause_text(clause)}")
    for note in cert["notes"]:
        add(f"  note: {note}")
    pairs = " ".join(f"({a},{b})" for a, b in report["dumas_degree_pairs"])
    add(f"degree pairs      {pairs}")
    verification = report.get("verification")
    if verification is not None:
        if "skipped" in verification:
            add(f"verification      skipped ({verification['skipped']})")
        else:
            add(f"verification      {'PASS' if verification['passed'] else 'FAIL'}")
            w = verification["witness"]
            factors = "  ".join(w["factors"])
            add(f"  witness         sign {w['sign']}, content {w['content']}")
            add(f"  factors         {factors}")
            add(f"  content v_p     {verification['content_valuation']}")
            for b in verification["bipartitions"]:
                deg = tuple(b["degrees"])
                how = ", ".join(b["satisfied"]) if b["satisfied"] else "UNSATISFIED"
                add(f"  split {deg}      {how}")
            if verification["no_split_clauses"]:
                add(f"  no proper split: {', '.join(verification['no_split_clauses'])}")
    return "\n".join(lines)


def render_sweep_text(report: dict) -> str:
    lines = []
    add = lines.append
    add(f"corpus            {json.dumps(report['corpus'], sort_keys=True)}")
    add(f"analyzed          {report['total']}")
    certs = report["certificates"]
    add("certificates      " + "  ".join(f"{k}:{v}" for k, v in certs.items()))
    add(f"verified          {report['verified']}")
    add(f"budget errors     {report['budget_errors']}")
    add(f"spot checks       {report['spot_checks']}")
    if report["family_rows"]:
        add("family rows")
        for row in report["family_rows"]:
            add("  " + json.dumps(row, sort_keys=True))
    add(f"violations        {len(report['violations'])}")
    for violation in report["violations"]:
        add("  " + json.dumps(violation, sort_keys=True))
    add(f"result            {'PASS' if report['passed'] else 'FAIL'}")
    return "\n".join(lines)
