"""JSON encoding of results and reports.

Every numeric value is an exact integer.  Coefficients only occur inside
canonical polynomial strings, where rationals print as ``a/b``.  Infinite
quantities are encoded by a ``kind`` tag, never by a number.  Timing lives under a top-level ``"timing"`` key so that it can be
dropped when comparing runs byte for byte.
"""
from __future__ import annotations

import json
from importlib import resources
from typing import Any, Dict, Optional

from .catalog import SuiteReport
from .germmap import MapGerm, ReducedPreimage, Verdict, VerdictStatus, VerificationReport
from .milnor import MilnorResult
from .polyring import INF, Polynomial

SCHEMA_VERSION = "1"


def milnor_json(res: Optional[MilnorResult]) -> Optional[Dict[str, Any]]:
    if res is None:
        return None
    out: Dict[str, Any] = {"kind": res.kind.value}
    if res.is_defined:
        out["mu"] = res.mu
    return out


def multiplicity_json(mult) -> Optional[Dict[str, Any]]:
    if mult is None:
        return None
    if mult is INF:
        return {"kind": "not_finite"}
    return {"kind": "finite", "value": int(mult)}


def poly_json(p: Optional[Polynomial]) -> Optional[str]:
    return None if p is None else str(p)


def map_json(F: Optional[MapGerm]):
    return None if F is None else [str(c) for c in F]


def verdict_json(v: Verdict) -> Dict[str, Any]:
    return {"status": v.status.value, "reason": None if v.reason is None else v.reason.value}


def preimage_json(pre: ReducedPreimage) -> Dict[str, Any]:
    return {"pullback": str(pre.pullback), "h": str(pre.h), "r": pre.r, "pure": pre.pure}


def _reproduce(rep: VerificationReport) -> str:
    names = ",".join(rep.g.ring.names)
    return f'germ-lab verify --vars {names} --map "{rep.F}" "{rep.g}"'


def report_json(rep: VerificationReport) -> Dict[str, Any]:
    out = {
        "vars": list(rep.g.ring.names),
        "g": str(rep.g),
        "F": map_json(rep.F),
        "seed": rep.seed,
        "multiplicity": multiplicity_json(rep.multiplicity),
        "mu_V": milnor_json(rep.mu_V),
        "mu_W": milnor_json(rep.mu_W),
        "h": poly_json(rep.h),
        "r": rep.r,
        "pure": rep.pure,
        "inequality": verdict_json(rep.inequality_verdict),
        "corollary": verdict_json(rep.corollary_verdict),
    }
    violated = VerdictStatus.VIOLATED in (rep.inequality_verdict.status, rep.corollary_verdict.status)
    if violated and rep.F is not None:
        out["reproduce"] = _reproduce(rep)
    return out


def suite_json(report: SuiteReport) -> Dict[str, Any]:
    cfg = report.config
    cases = []
    for i, (name, rep) in enumerate(zip(report.case_names, report.cases)):
        cases.append({"index": i, "germ_name": name, **report_json(rep)})
    return {
        "config": {
            "seed": cfg.seed,
            "num_cases": cfg.num_cases,
            "n": cfg.n,
            "max_degree": cfg.effective_max_degree,
            "degree_cap": cfg.degree_cap,
            "random_germs": cfg.random_germs,
            "identity_maps": cfg.identity_maps,
        },
        "counters": report.counters,
        "success": report.success,
        "cases": cases,
    }


def envelope(command: str, inputs: Dict[str, Any], result: Any, elapsed_ms: Optional[int] = None) -> Dict[str, Any]:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "result": result}
    if elapsed_ms is not None:
        doc["timing"] = {"elapsed_ms": int(elapsed_ms)}
    return doc


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def load_schema() -> Dict[str, Any]:
    """The shipped JSON Schema for report documents."""
    text = resources.files("germlab").joinpath("schema/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
