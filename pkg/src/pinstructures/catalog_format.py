"""Human-readable catalog documents.

One JSON document per descriptor: generators and relations, basis,
multiplication table where the ring is not a truncated polynomial ring,
Steenrod squares on generators, total Stiefel–Whitney class, integral
homology, lift subspaces and provenance notes.  Every class is written as
text in the ring's own monomial names, so documents can be diffed by eye.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .abelian import FgAbelianGroup
from .catalog import ManifoldDescriptor, validate
from .ring import Generator, Monomial, RingPresentation, TableRing, TruncatedPolynomialRing, Z2Subspace
from .steenrod import SqTable

FORMAT_VERSION = 1


def _ring_document(ring: RingPresentation) -> dict[str, Any]:
    gens = []
    relations = []
    for i, g in enumerate(ring.generators):
        name = ring.gen_name(i)
        gens.append({"name": name, "degree": g.degree, "nilpotence": g.nilpotence})
        if g.nilpotence is not None:
            relations.append(f"{name}^{g.nilpotence} = 0")
    doc: dict[str, Any] = {
        "kind": "truncated_polynomial" if isinstance(ring, TruncatedPolynomialRing) else "table",
        "generators": gens,
        "complete_through": ring.complete_through,
        "top_degree": ring.top_degree,
        "basis": {str(d): [ring.format_monomial(m) for m in b] for d, b in enumerate(ring.basis)},
    }
    if doc["kind"] == "table":
        products = []
        for d1 in range(1, ring.complete_through + 1):
            for d2 in range(1, ring.complete_through + 1 - d1):
                for k1, m1 in enumerate(ring.basis[d1]):
                    for k2, m2 in enumerate(ring.basis[d2]):
                        x, y = ring.basis_class(d1, k1), ring.basis_class(d2, k2)
                        z = x * y
                        if z:
                            products.append(f"{ring.format_monomial(m1)} . {ring.format_monomial(m2)} = {z}")
        doc["products"] = products
        doc["relations"] = relations + ["products not listed in 'products' vanish"]
    else:
        doc["relations"] = relations
    return doc


def to_document(m: ManifoldDescriptor) -> dict[str, Any]:
    ring = m.ring
    squares = {}
    for i, col in m.sq_table.squares.items():
        squares[ring.gen_name(i)] = [None if c is None else str(c) for c in col]
    return {
        "format_version": FORMAT_VERSION,
        "name": m.name,
        "dim": m.dim,
        "ring": _ring_document(ring),
        "sq_table": squares,
        "sw_total": [str(w) for w in m.sw_total],
        "homology": [str(h) for h in m.homology],
        "orientable": m.orientable,
        "lift_l1": [str(c) for c in m.lift_l1.basis_classes()],
        "lift_l2": [str(c) for c in m.lift_l2.basis_classes()],
        "provenance": list(m.provenance),
    }


def dumps(m: ManifoldDescriptor) -> str:
    return json.dumps(to_document(m), indent=2, ensure_ascii=False)


def _monomial(names: dict[str, int], text: str) -> Monomial:
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        mt = re.fullmatch(r"\s*(\w+?)\s*(?:\^\s*(\d+))?\s*", factor)
        if not mt or mt.group(1) not in names:
            raise ValueError(f"unknown generator in {text!r}")
        exps[names[mt.group(1)]] += int(mt.group(2) or 1)
    return tuple(exps)


def _ring_from_document(doc: dict[str, Any]) -> RingPresentation:
    gens = [Generator(g["name"], g["degree"], g.get("nilpotence")) for g in doc["generators"]]
    names = {g.name: i for i, g in enumerate(gens)}
    D, top = doc["complete_through"], doc.get("top_degree")
    basis = [[_monomial(names, t) for t in doc["basis"][str(d)]] for d in range(D + 1)]
    if doc["kind"] == "truncated_polynomial":
        ring = TruncatedPolynomialRing(gens, D, top)
        if [list(b) for b in ring.basis] != basis:
            raise ValueError("listed basis does not match the truncated polynomial ring")
        return ring
    if doc["kind"] != "table":
        raise ValueError(f"unknown ring kind {doc['kind']!r}")
    products = {}
    for line in doc.get("products", []):
        lhs, rhs = line.split("=")
        left, right = lhs.split(".")
        result = [] if rhs.strip() == "0" else [_monomial(names, t) for t in rhs.split("+")]
        products[(_monomial(names, left), _monomial(names, right))] = result
    return TableRing(gens, basis, products, D, top)


def from_document(doc: dict[str, Any]) -> ManifoldDescriptor:
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported catalog format version {doc.get('format_version')!r}")
    ring = _ring_from_document(doc["ring"])
    squares = {}
    for i in range(len(ring.generators)):
        col = doc["sq_table"][ring.gen_name(i)]
        g = ring.generators[i]
        squares[i] = [None if c is None else ring.parse_class(c, g.degree + j) for j, c in enumerate(col)]
    sw = tuple(ring.parse_class(t, d) for d, t in enumerate(doc["sw_total"]))
    top = ring.basis_class(ring.top_degree, 0) if ring.is_complete else None
    m = ManifoldDescriptor(
        name=doc["name"],
        dim=doc["dim"],
        ring=ring,
        homology=tuple(FgAbelianGroup.parse(h) for h in doc["homology"]),
        orientable=doc["orientable"],
        sw_total=sw,
        lift_l1=Z2Subspace.span(ring, 1, [ring.parse_class(t, 1) for t in doc["lift_l1"]]),
        lift_l2=Z2Subspace.span(ring, 2, [ring.parse_class(t, 2) for t in doc["lift_l2"]]),
        sq_table=SqTable(ring, squares),
        top_class=top,
        provenance=tuple(doc.get("provenance", ())),
    )
    validate(m)
    return m


def loads(text: str) -> ManifoldDescriptor:
    return from_document(json.loads(text))
