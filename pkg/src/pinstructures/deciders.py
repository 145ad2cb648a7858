"""Existence of orientation, spin, pin±, pin^c and Lipschitz structures.

Each decider evaluates a characteristic class of the tangent bundle.  For
products, the pin^c answer is computed twice: from the assembled product
descriptor and from the factors alone (the product criterion), and the two
must agree.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from . import gf2
from .catalog import (
    BundleDescriptor,
    ManifoldDescriptor,
    line_bundle,
    product,
    whitney_sum,
)
from .errors import InvariantViolation, SearchSpaceExceeded, UnsupportedDegree
from .ring import Z2Class

SCHEMA_VERSION = 1
DEFAULT_MAX_PAIRS = 1 << 24
LIPSCHITZ_SCOPE = "decomposable and complexifiable rank-2 bundles l(α) ⊕ l(β), α, β in H^1(M; Z/2)"

YES = "yes"
NO_WITNESS = "no_witness_found"
NOT_APPLICABLE = "not_applicable"


def _require_degree_two(m: ManifoldDescriptor) -> None:
    if not m.ring.known(2):
        raise UnsupportedDegree(2, m.ring.complete_through, f"ring of {m.name}")


def decide_orientable(m: ManifoldDescriptor) -> bool:
    return m.w1.is_zero()


def decide_spin(m: ManifoldDescriptor) -> bool:
    _require_degree_two(m)
    return m.w1.is_zero() and m.w2.is_zero()


def decide_pin_plus(m: ManifoldDescriptor) -> bool:
    _require_degree_two(m)
    return m.w2.is_zero()


def pin_minus_class(m: ManifoldDescriptor) -> Z2Class:
    _require_degree_two(m)
    return m.w2 + m.w1 * m.w1


def decide_pin_minus(m: ManifoldDescriptor) -> bool:
    return pin_minus_class(m).is_zero()


@dataclass(frozen=True)
class PinCVerdict:
    exists: bool
    obstruction: Z2Class
    # rows of L2 summing to w2 when it lifts
    certificate: tuple[Z2Class, ...] | None
    # w2 reduced modulo L2 when it does not
    residue: Z2Class | None

    def __bool__(self):
        return self.exists


def decide_pin_c(m: ManifoldDescriptor) -> PinCVerdict:
    _require_degree_two(m)
    w2 = m.w2
    used = m.lift_l2.certificate(w2)
    if used is not None:
        rows = m.lift_l2.basis_classes()
        return PinCVerdict(True, w2, tuple(rows[i] for i in used), None)
    return PinCVerdict(False, w2, None, m.lift_l2.residue(w2))


@dataclass(frozen=True)
class FastPathVerdict:
    exists: bool
    case: str

    def __bool__(self):
        return self.exists


def pin_c_fast_path(m1: ManifoldDescriptor, m2: ManifoldDescriptor) -> FastPathVerdict:
    """pin^c on M1 x M2 from the factors: both pin^c, and either a factor is
    orientable or w1 of each factor has an integral lift."""
    if not decide_pin_c(m1):
        return FastPathVerdict(False, "fails: first factor has no pin^c structure")
    if not decide_pin_c(m2):
        return FastPathVerdict(False, "fails: second factor has no pin^c structure")
    if m1.orientable:
        return FastPathVerdict(True, "first factor orientable")
    if m2.orientable:
        return FastPathVerdict(True, "second factor orientable")
    lifts1 = m1.lift_l1.contains(m1.w1)
    lifts2 = m2.lift_l1.contains(m2.w1)
    if lifts1 and lifts2:
        return FastPathVerdict(True, "w1 of both factors has an integral lift")
    which = "first" if not lifts1 else "second"
    return FastPathVerdict(
        False, f"fails: neither factor orientable and w1 of the {which} factor has no integral lift"
    )


@dataclass(frozen=True)
class LipschitzWitness:
    bundle: BundleDescriptor
    alpha: Z2Class
    beta: Z2Class
    # w2(TM) + w2(E), which lies in L2
    lifted_class: Z2Class
    certificate: tuple[Z2Class, ...]


@dataclass(frozen=True)
class LipschitzVerdict:
    status: str
    witness: LipschitzWitness | None = None
    search_scope: str | None = None
    note: str = ""


def _lipschitz_witness(m: ManifoldDescriptor, alpha: Z2Class, beta: Z2Class) -> LipschitzWitness:
    bundle = whitney_sum(line_bundle(alpha), line_bundle(beta))
    lifted = m.w2 + bundle.w2
    used = m.lift_l2.certificate(lifted)
    if used is None:
        raise InvariantViolation(f"{m.name}: witness {bundle} does not satisfy the lift condition")
    rows = m.lift_l2.basis_classes()
    return LipschitzWitness(bundle, alpha, beta, lifted, tuple(rows[i] for i in used))


def decide_lipschitz(m: ManifoldDescriptor, max_pairs: int = DEFAULT_MAX_PAIRS) -> LipschitzVerdict:
    """Search rank-2 bundles E = l(α) ⊕ l(β) with w2(TM) + αβ in L2.

    Pairs are ordered by the integer value of their coordinate vectors and
    the lexicographically smallest witness (α <= β) is returned.  Exhausting
    the family is not a proof of non-existence.
    """
    if m.dim % 2 == 0:
        return LipschitzVerdict(
            NOT_APPLICABLE,
            note="Lipschitz structures are defined on odd-dimensional manifolds; "
                 "in even dimensions pin^c is the relevant notion",
        )
    _require_degree_two(m)
    ring = m.ring
    zero1 = ring.zero(1)
    if decide_pin_c(m):
        return LipschitzVerdict(YES, _lipschitz_witness(m, zero1, zero1), LIPSCHITZ_SCOPE,
                                note="pin^c structure exists; E is trivial")
    h = ring.dim(1)
    n_classes = 1 << h
    pairs = n_classes * (n_classes + 1) // 2
    if pairs > max_pairs:
        raise SearchSpaceExceeded(
            f"{m.name}: {pairs} candidate pairs exceed the cap of {max_pairs}"
        )
    rows = m.lift_l2.rows
    target = gf2.reduce(m.w2.bits, rows)[0]
    basis = [ring.basis_class(1, i) for i in range(h)]
    prod = [[gf2.reduce((basis[i] * basis[j]).bits, rows)[0] for j in range(h)] for i in range(h)]
    for a in range(n_classes):
        # residues of α·e_j modulo L2; β works iff its image hits the target
        images = [0] * h
        for i in gf2.bits(a):
            for j in range(h):
                images[j] ^= prod[i][j]
        if not gf2.in_span(target, images):
            continue
        for b in range(a, n_classes):
            acc = 0
            for j in gf2.bits(b):
                acc ^= images[j]
            if acc == target:
                return LipschitzVerdict(
                    YES,
                    _lipschitz_witness(m, Z2Class(ring, 1, a), Z2Class(ring, 1, b)),
                    LIPSCHITZ_SCOPE,
                )
        raise InvariantViolation(f"{m.name}: solvable α = {a} produced no β")
    return LipschitzVerdict(
        NO_WITNESS,
        search_scope=LIPSCHITZ_SCOPE,
        note=f"all {pairs} unordered pairs searched; other rank-2 bundles are not covered",
    )


# ---------------------------------------------------------------- reports


@dataclass
class DecisionReport:
    expression: str
    dimension: int
    orientable: bool
    spin: bool
    pin_plus: bool
    pin_minus: bool
    pin_c: bool
    lipschitz: dict[str, Any]
    obstructions: dict[str, Any]
    trace: list[str] = field(default_factory=list)
    product_criterion: dict[str, Any] | None = None
    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> dict[str, Any]:
        d = asdict(self)
        if d["product_criterion"] is None:
            del d["product_criterion"]
        return d

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> DecisionReport:
        return cls(**d)


def _lipschitz_json(v: LipschitzVerdict) -> dict[str, Any]:
    out: dict[str, Any] = {"status": v.status}
    if v.witness is not None:
        w = v.witness
        out["witness"] = {
            "bundle": str(w.bundle),
            "alpha": str(w.alpha),
            "beta": str(w.beta),
            "w1": str(w.bundle.w1),
            "w2": str(w.bundle.w2),
            "lifted_class": str(w.lifted_class),
            "certificate": [str(c) for c in w.certificate],
        }
    if v.search_scope is not None:
        out["search_scope"] = v.search_scope
    if v.note:
        out["note"] = v.note
    return out


def _verdict_line(label: str, cls: Z2Class, holds: bool, yes: str, no: str) -> str:
    rel = "=" if cls.is_zero() else "≠"
    return f"{label} = {cls} {rel} 0: {yes if holds else no}"


def full_report(m: ManifoldDescriptor, max_pairs: int = DEFAULT_MAX_PAIRS) -> DecisionReport:
    _require_degree_two(m)
    w1, w2 = m.w1, m.w2
    pm = pin_minus_class(m)
    orientable = decide_orientable(m)
    spin = decide_spin(m)
    pin_plus = decide_pin_plus(m)
    pin_minus = decide_pin_minus(m)
    pc = decide_pin_c(m)
    lip = decide_lipschitz(m, max_pairs)
    trace = [
        f"{m.name}: dimension {m.dim}, H^1(Z/2) of dimension {m.ring.dim(1)}, "
        f"H^2(Z/2) of dimension {m.ring.dim(2)}",
        _verdict_line("w1", w1, orientable, "orientable", "not orientable"),
        _verdict_line("w2", w2, pin_plus, "pin+ structure exists", "no pin+ structure"),
        _verdict_line("w2 + w1^2", pm, pin_minus, "pin- structure exists", "no pin- structure"),
        f"spin: {'w1 = w2 = 0' if spin else 'w1 or w2 nonzero'}",
        f"integral lifts in degree 2: L2 = {m.lift_l2}",
    ]
    if pc:
        trace.append(
            f"w2 = {w2} is the reduction of an integral class "
            f"(sum of L2 basis rows: {', '.join(map(str, pc.certificate)) or 'none'}): pin^c structure exists"
        )
    else:
        trace.append(f"w2 ≡ {pc.residue} modulo L2, not a reduction of an integral class: no pin^c structure")
    if lip.status == YES:
        w = lip.witness
        trace.append(
            f"Lipschitz witness E = {w.bundle}: w2(TM) + w2(E) = {w.lifted_class} lies in L2"
        )
    elif lip.status == NO_WITNESS:
        trace.append(f"no Lipschitz witness among {lip.search_scope}")
    else:
        trace.append(f"Lipschitz: not applicable ({lip.note})")
    obstructions = {
        "w1": str(w1),
        "w2": str(w2),
        "w2_plus_w1_squared": str(pm),
        "lift_l2": [str(c) for c in m.lift_l2.basis_classes()],
        "pin_c_certificate": [str(c) for c in pc.certificate] if pc else None,
        "pin_c_residue": None if pc else str(pc.residue),
    }
    return DecisionReport(
        expression=m.name,
        dimension=m.dim,
        orientable=orientable,
        spin=spin,
        pin_plus=pin_plus,
        pin_minus=pin_minus,
        pin_c=pc.exists,
        lipschitz=_lipschitz_json(lip),
        obstructions=obstructions,
        trace=trace,
    )


def full_report_product(m1: ManifoldDescriptor, m2: ManifoldDescriptor,
                        max_pairs: int = DEFAULT_MAX_PAIRS) -> DecisionReport:
    """Report on M1 x M2, cross-checking pin^c against the factor criterion."""
    p = product(m1, m2)
    report = full_report(p, max_pairs)
    fast = pin_c_fast_path(m1, m2)
    if fast.exists != report.pin_c:
        raise InvariantViolation(
            f"{p.name}: product criterion says pin^c={fast.exists} ({fast.case}) "
            f"but the assembled descriptor says pin^c={report.pin_c}"
        )
    report.product_criterion = {"pin_c": fast.exists, "case": fast.case}
    report.trace.append(f"product criterion on ({m1.name}, {m2.name}): {fast.case}; agrees")
    return report

