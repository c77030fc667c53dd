"""Full analysis of a surface fan as a JSON-serialisable report.

The JSON document is the source of truth; :func:`render_text` is a
projection of it.  Supports are printed with 1-based indices into the
weight list, in the order the weights are listed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from torstab.automorphisms import is_reductive_part_torus, root_system
from torstab.deformations import def_weights_surface, euler_check, h1_total, weight_label
from torstab.fan import Fan2D
from torstab.stability import (
    Splitting,
    Verdict,
    cscK_verdict,
    extremal_verdict,
    minimal_sets,
    mu_relative,
    mu_sigma,
    nu_sigma,
    restricted_indices,
    strata,
)


def _one_based(sets) -> list[list[int]]:
    return [[i + 1 for i in I] for I in sets]


def _strata_json(ws, supports) -> list[dict[str, Any]]:
    return [
        {
            "support": [i + 1 for i in s.indices],
            "weights": [weight_label(R) for R in s.weights],
            "dimension": s.dimension,
            "description": s.description,
        }
        for s in strata(ws, supports)
    ]


HEADLINES = {
    ("cscK", True): "CSCK deformations exist",
    ("cscK", False): "no CSCK deformations",
    ("extremal", True): "extremal deformations relative to T_f exist",
    ("extremal", False): "no projective extremal deformation relative to T_f",
}


def _verdict_json(v: Verdict) -> dict[str, Any]:
    return {
        "kind": v.kind,
        "headline": HEADLINES[(v.kind, v.exists_balanced)],
        "statement": v.statement,
        "exists_balanced": v.exists_balanced,
        "hypothesis_torus_maximal": v.hypothesis_torus_maximal,
        "hypothesis_source": v.hypothesis_source,
        "sufficiency": v.sufficiency,
        "necessity": v.necessity,
        "fixed_directions": [list(f) for f in v.fixed_directions],
    }


@dataclass
class AnalysisReport:
    fan: dict[str, Any]
    weights: dict[str, Any]
    roots: dict[str, Any]
    stability: dict[str, Any]
    verdicts: list[dict[str, Any]]
    relative: Optional[dict[str, Any]] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(**json.loads(text))


def analyze(fan: Fan2D, split: Optional[Splitting] = None) -> AnalysisReport:
    fan.require_smooth()
    ws = def_weights_surface(fan)
    rs = root_system(fan)
    ec = euler_check(fan, ws, rs)
    nu = nu_sigma(ws) if len(ws) else []
    mu = mu_sigma(ws) if len(ws) else []

    fan_part = {
        "rays": [list(r) for r in fan.rays],
        "smooth": fan.smooth,
        "complete": fan.complete,
        "singular_cones": list(fan.singular_cones),
    }
    weights_part = {
        "weights": [
            {"index": k + 1, "weight": list(R), "label": weight_label(R), "dim": d}
            for k, (R, d) in enumerate(zip(ws.weights, ws.dims))
        ],
        "h1": h1_total(ws),
        "euler": {"expected": ec.expected, "actual": ec.actual, "ok": ec.ok},
    }
    roots_part = {
        "roots": [
            {"root": list(a), "label": weight_label(a), "ray": list(rho)}
            for a, rho in zip(rs.roots, rs.certificates)
        ],
        "semisimple_pairs": [weight_label(a) for a in rs.semisimple_pairs],
        "torus_maximal": is_reductive_part_torus(rs),
    }
    stability_part = {
        "nu": _one_based(nu),
        "nu_minimal": _one_based(minimal_sets(nu)),
        "mu": _one_based(mu),
        "strata": _strata_json(ws, mu),
    }
    verdicts = [_verdict_json(cscK_verdict(fan, ws))]
    relative = None
    if split is not None:
        keep = restricted_indices(ws, split)
        mur = mu_relative(ws, split) if len(ws) else []
        relative = {
            "fixed": [list(f) for f in split.fixed],
            "weights": [k + 1 for k in keep],
            "labels": [weight_label(ws.weights[k]) for k in keep],
            "mu": _one_based(mur),
            "strata": _strata_json(ws, mur),
        }
        verdicts.append(_verdict_json(extremal_verdict(fan, split, ws)))
    return AnalysisReport(fan_part, weights_part, roots_part, stability_part, verdicts, relative)


def _fmt_sets(sets) -> str:
    return "{" + ", ".join("{" + ",".join(map(str, I)) + "}" for I in sets) + "}"


def render_text(report: AnalysisReport) -> str:
    r = report
    lines = []
    rays = ", ".join(f"({a},{b})" for a, b in r.fan["rays"])
    lines.append(f"fan: {len(r.fan['rays'])} rays  {rays}")
    lines.append(f"  smooth={r.fan['smooth']} complete={r.fan['complete']}")
    lines.append("")
    lines.append("deformation weights (H^1 = sum of weight spaces):")
    if not r.weights["weights"]:
        lines.append("  none (rigid)")
    for w in r.weights["weights"]:
        lines.append(f"  [{w['index']}] {w['label']:<12} dim {w['dim']}")
    e = r.weights["euler"]
    lines.append(f"  h1 = {r.weights['h1']}  (Euler check: expected {e['expected']}, {'ok' if e['ok'] else 'MISMATCH'})")
    lines.append("")
    labels = ", ".join(x["label"] for x in r.roots["roots"]) or "none"
    lines.append(f"Demazure roots: {labels}")
    pairs = ", ".join(r.roots["semisimple_pairs"]) or "none"
    lines.append(f"  opposite pairs: {pairs}  -> torus maximal: {r.roots['torus_maximal']}")
    lines.append("")
    lines.append(f"balanced families nu: {_fmt_sets(r.stability['nu'])}")
    lines.append(f"  minimal: {_fmt_sets(r.stability['nu_minimal'])}")
    lines.append(f"polystable supports mu: {_fmt_sets(r.stability['mu'])}")
    lines.append("strata:")
    for s in r.stability["strata"]:
        lines.append(f"  S{{{','.join(map(str, s['support']))}}}  dim {s['dimension']}  {s['description']}")
    if r.relative is not None:
        rel = r.relative
        fixed = "; ".join(",".join(map(str, f)) for f in rel["fixed"]) or "trivial"
        lines.append("")
        lines.append(f"relative to T_f (fixed directions: {fixed}):")
        lines.append(f"  fixed weights: {', '.join(rel['labels']) or 'none'}")
        lines.append(f"  polystable supports: {_fmt_sets(rel['mu'])}")
    lines.append("")
    for v in r.verdicts:
        lines.append(f"verdict [{v['kind']}]: {v['headline']}")
        lines.append(f"  {v['statement']}")
        lines.append(f"  torus hypothesis ({v['hypothesis_source']}): {v['hypothesis_torus_maximal']}")
        lines.append(f"  sufficiency: {v['sufficiency']}")
        lines.append(f"  necessity: {v['necessity']}")
    return "\n".join(lines) + "\n"
