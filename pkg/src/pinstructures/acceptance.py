"""The acceptance suite, shared by ``pinstructures verify`` and the tests.

Each check returns a :class:`CriterionResult`; exceptions inside a check
count as failures and are reported in the detail line.
"""

from __future__ import annotations

import itertools
import random
import time
import traceback
from dataclasses import dataclass
from typing import Callable

from . import abelian, gf2, smith
from .abelian import FgAbelianGroup
from .catalog import (
    ManifoldDescriptor,
    klein,
    mk,
    product,
    rp,
    sphere,
    torus,
)
from .commands import decide_expression
from .deciders import (
    YES,
    decide_lipschitz,
    decide_orientable,
    decide_pin_c,
    decide_pin_minus,
    decide_pin_plus,
    decide_spin,
    pin_c_fast_path,
)
from .ring import Z2Class, Z2Subspace
from .steenrod import sw_from_wu


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.title}: {self.detail} ({self.seconds:.2f}s)"


class _Failed(Exception):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise _Failed(message)


# ---------------------------------------------------------------- corpora


def primitive_corpus() -> list[ManifoldDescriptor]:
    return (
        [sphere(n) for n in range(1, 5)]
        + [rp(n) for n in range(2, 6)]
        + [torus(n) for n in range(2, 4)]
        + [mk(5), mk(6)]
    )


def pair_corpus(max_dim: int = 10) -> list[tuple[ManifoldDescriptor, ManifoldDescriptor]]:
    """Ordered pairs of primitives, then nested products as either factor,
    up to total dimension ``max_dim``."""
    prims = primitive_corpus()
    pairs = [(a, b) for a in prims for b in prims]
    nested = []
    for a, b in pairs:
        ab = None
        for c in prims:
            if a.dim + b.dim + c.dim > max_dim:
                continue
            ab = ab or product(a, b)
            nested.append((ab, c))
            nested.append((c, ab))
    return pairs + nested


def wu_corpus(max_dim: int = 5) -> list[ManifoldDescriptor]:
    prims = (
        [sphere(n) for n in range(1, max_dim + 1)]
        + [rp(n) for n in range(1, max_dim + 1)]
        + [torus(n) for n in range(1, max_dim + 1)]
        + [klein()]
    )
    out = list(prims)
    frontier = list(prims)
    while frontier:
        nxt = []
        for a in frontier:
            for b in prims:
                if a.dim + b.dim <= max_dim:
                    nxt.append(product(a, b))
        out += nxt
        frontier = nxt
    return out


# ---------------------------------------------------------------- criteria


def _even_projective_products() -> str:
    for k, l in itertools.product((1, 2, 3), repeat=2):
        expr = f"RP({2 * k})*RP({2 * l})"
        report = decide_expression(expr)
        _expect(report.pin_c is False, f"{expr}: pin_c = {report.pin_c}")
        m = product(rp(2 * k), rp(2 * l))
        ring = m.ring
        residue = ring.parse_class(report.obstructions["pin_c_residue"], 2)
        a1a2 = ring.gen("a1") * ring.gen("a2")
        _expect(bool(residue) and m.lift_l2.contains(residue + a1a2),
                f"{expr}: residue {residue} is not a1*a2 modulo L2")
    return "9/9 products have no pin^c structure, residue a1*a2 modulo L2"


def _mk_squares() -> str:
    for k in (5, 6, 7):
        expr = f"M({k})*M({k})"
        report = decide_expression(expr)
        _expect(report.pin_c, f"{expr}: pin_c = false")
        _expect(not report.pin_plus and not report.pin_minus,
                f"{expr}: pin+ = {report.pin_plus}, pin- = {report.pin_minus}")
        h = product(mk(k), mk(k)).homology
        _expect(all(g.is_free() for g in h[:3]), f"{expr}: H_0..H_2 = {list(map(str, h[:3]))} not free")
    return "M(k)*M(k), k = 5, 6, 7: pin^c, neither pin+ nor pin-, H_0..H_2 free"


def _rp2_rp2_circle() -> str:
    expr = "RP(2)*RP(2)*S(1)"
    report = decide_expression(expr)
    _expect(report.pin_c is False, f"{expr}: pin_c = true")
    _expect(report.lipschitz["status"] == YES, f"{expr}: lipschitz = {report.lipschitz['status']}")
    n = product(product(rp(2), rp(2)), sphere(1))
    w = decide_lipschitz(n).witness
    _expect(n.w2 + w.bundle.w2 == n.w1 * n.w1,
            f"{expr}: w2(TN) + w2(E) = {n.w2 + w.bundle.w2}, w1^2 = {n.w1 * n.w1}")
    return f"{expr}: no pin^c, witness {report.lipschitz['witness']['bundle']}, w2(TN) + w2(E) = w1(TN)^2"


def _projective_times_three_manifold() -> str:
    count = 0
    for k, l in itertools.product((1, 3), repeat=2):
        for tail in ("S(3)", "T(3)", "S(1)*S(1)*S(1)"):
            expr = f"RP({2 * k})*RP({2 * l})*{tail}"
            report = decide_expression(expr)
            _expect(report.pin_c is False, f"{expr}: pin_c = true")
            _expect(report.lipschitz["status"] == YES, f"{expr}: lipschitz = {report.lipschitz['status']}")
            count += 1
    return f"{count}/12 products: no pin^c, Lipschitz witness found"


def _fast_path_suite() -> str:
    pairs = pair_corpus()
    for a, b in pairs:
        fast = pin_c_fast_path(a, b)
        slow = decide_pin_c(product(a, b))
        _expect(fast.exists == slow.exists,
                f"{a.name} x {b.name}: factor criterion {fast.exists} ({fast.case}), assembled {slow.exists}")
    return f"{len(pairs)}/{len(pairs)} pairs agree"


def _wu_suite() -> str:
    corpus = wu_corpus()
    three = 0
    for m in corpus:
        got = sw_from_wu(m)
        _expect(got == m.sw_total, f"{m.name}: Sq(v) = {list(map(str, got))}, stored {list(map(str, m.sw_total))}")
        if m.dim == 3:
            three += 1
            _expect(decide_pin_minus(m), f"{m.name}: w2 + w1^2 = {m.w2 + m.w1 * m.w1}")
    return f"{len(corpus)} descriptors agree in all degrees; {three} three-dimensional ones are pin-"


def _lattice_check(m: ManifoldDescriptor) -> None:
    spin, pp, pm = decide_spin(m), decide_pin_plus(m), decide_pin_minus(m)
    pc = decide_pin_c(m).exists
    _expect(not spin or (pp and pm), f"{m.name}: spin but not pin+/pin-")
    _expect(not (pp or pm) or pc, f"{m.name}: pin+/pin- but not pin^c")
    _expect(spin == (decide_orientable(m) and pp), f"{m.name}: spin differs from orientable and pin+")
    if m.dim % 2 == 1 and pc:
        _expect(decide_lipschitz(m).status == YES, f"{m.name}: pin^c but no Lipschitz witness")
    _expect(m.lift_l2.contains(m.w1 * m.w1), f"{m.name}: w1^2 not in L2")


def _lattice_suite() -> str:
    seen = {}
    for a, b in pair_corpus():
        for m in (a, b, product(a, b)):
            seen[id(m)] = m
    for m in seen.values():
        _lattice_check(m)
    return f"{len(seen)} descriptors satisfy every implication"


def random_group(rng: random.Random) -> FgAbelianGroup:
    orders = [rng.randint(2, 16) for _ in range(rng.randint(0, 3))]
    return FgAbelianGroup.from_orders([0] * rng.randint(0, 3) + orders)


def _oracle_suite(n_groups: int = 200, seed: int = 20240611) -> str:
    rng = random.Random(seed)
    groups = [random_group(rng) for _ in range(n_groups)]
    rings = [abelian.Z, abelian.Z2, abelian.zmod(4), abelian.zmod(3)]
    checks = 0
    for i, a in enumerate(groups):
        b = groups[(i * 7 + 3) % n_groups]
        _expect(abelian.tensor(a, b) == smith.tensor_oracle(a, b), f"{a} ⊗ {b}")
        _expect(abelian.tor(a, b) == smith.tor_oracle(a, b), f"Tor({a}, {b})")
        for r in rings:
            _expect(abelian.hom_to(a, r) == smith.hom_oracle(a, r), f"Hom({a}, {r})")
            _expect(abelian.ext_to(a, r) == smith.ext_oracle(a, r), f"Ext({a}, {r})")
        checks += 2 + 2 * len(rings)
    # membership against enumeration of every element of the span
    subspaces = 0
    descriptors = [rp(5), torus(4), klein(), product(rp(2), rp(3)), product(torus(2), rp(4)),
                   product(product(rp(2), rp(2)), sphere(1)), product(mk(5), rp(3))]
    for m in descriptors:
        for s in (m.lift_l1, m.lift_l2):
            ambient = m.ring.dim(s.degree)
            if ambient > 12:
                continue
            _expect(_membership_agrees(s, ambient), f"{m.name}: membership in {s}")
            subspaces += 1
    for _ in range(60):
        ambient = rng.randint(1, 12)
        vecs = [rng.getrandbits(ambient) for _ in range(rng.randint(0, ambient))]
        span = _enumerate_span(vecs)
        for v in range(1 << ambient):
            _expect(gf2.in_span(v, vecs) == (v in span), f"span of {vecs}, vector {v}")
        subspaces += 1
    return f"{checks} functor values match Smith normal form over {n_groups} groups; {subspaces} subspaces enumerated"


def _enumerate_span(vecs) -> set[int]:
    span = {0}
    for v in vecs:
        span |= {x ^ v for x in span}
    return span


def _membership_agrees(s: Z2Subspace, ambient: int) -> bool:
    span = _enumerate_span(s.rows)
    return all(s.contains(Z2Class(s.ring, s.degree, v)) == (v in span) for v in range(1 << ambient))


CRITERIA: list[tuple[int, str, Callable[[], str]]] = [
    (1, "RP(2k) x RP(2l) admits no pin^c structure", _even_projective_products),
    (2, "M(k) x M(k) is pin^c but not pin+ or pin-", _mk_squares),
    (3, "RP(2) x RP(2) x S(1) has a Lipschitz witness", _rp2_rp2_circle),
    (4, "RP(2k) x RP(2l) x M3 has a Lipschitz witness", _projective_times_three_manifold),
    (5, "product criterion matches the assembled product", _fast_path_suite),
    (6, "Wu classes reproduce the Stiefel–Whitney classes", _wu_suite),
    (7, "implication lattice", _lattice_suite),
    (8, "oracle equivalence", _oracle_suite),
]


def run_criterion(number: int) -> CriterionResult:
    _, title, check = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        detail, passed = check(), True
    except _Failed as exc:
        detail, passed = str(exc), False
    except Exception as exc:  # noqa: BLE001 - any crash is a failed criterion
        detail, passed = f"{type(exc).__name__}: {exc}", False
        traceback.print_exc()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
