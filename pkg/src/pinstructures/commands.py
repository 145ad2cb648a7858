"""Pure command functions behind the CLI; each returns a JSON-ready dict."""

from __future__ import annotations

from typing import Any

from . import catalog_format
from .catalog import ManifoldDescriptor
from .deciders import DEFAULT_MAX_PAIRS, SCHEMA_VERSION, DecisionReport, full_report, full_report_product
from .errors import InvariantViolation
from .expr import ManifoldExpr, Product, build, parse
from .steenrod import wu_classes


def _expr(text: str | ManifoldExpr) -> ManifoldExpr:
    return parse(text) if isinstance(text, str) else text


def decide_expression(text: str | ManifoldExpr, max_pairs: int = DEFAULT_MAX_PAIRS) -> DecisionReport:
    """Full report; a top-level product is cross-checked against the factor
    criterion for pin^c."""
    e = _expr(text)
    if isinstance(e, Product):
        return full_report_product(build(e.left), build(e.right), max_pairs)
    return full_report(build(e), max_pairs)


def classes_report(text: str | ManifoldExpr, max_degree: int | None = None) -> dict[str, Any]:
    m = build(_expr(text))
    top = m.ring.complete_through if max_degree is None else max_degree
    m.ring.require(top)
    return {
        "schema_version": SCHEMA_VERSION,
        "expression": m.name,
        "dimension": m.dim,
        "complete_through": m.ring.complete_through,
        "sw_classes": {str(i): str(m.w(i)) for i in range(top + 1)},
        "lift_l1": [str(c) for c in m.lift_l1.basis_classes()],
        "lift_l2": [str(c) for c in m.lift_l2.basis_classes()],
        "homology": [str(h) for h in m.homology],
    }


def wu_report(text: str | ManifoldExpr) -> dict[str, Any]:
    m = build(_expr(text))
    data = wu_classes(m)
    mismatches = [
        i for i, (a, b) in enumerate(zip(data.reconstructed_sw, m.sw_total)) if a != b
    ]
    if mismatches:
        raise InvariantViolation(
            f"{m.name}: Sq(v) disagrees with the stored Stiefel–Whitney class in degrees {mismatches}"
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "expression": m.name,
        "dimension": m.dim,
        "wu_classes": {str(i): str(v) for i, v in enumerate(data.wu_classes)},
        "sw_from_wu": {str(i): str(w) for i, w in enumerate(data.reconstructed_sw)},
        "agrees": True,
    }


def catalog_document(text: str | ManifoldExpr) -> dict[str, Any]:
    m: ManifoldDescriptor = build(_expr(text))
    return catalog_format.to_document(m)
