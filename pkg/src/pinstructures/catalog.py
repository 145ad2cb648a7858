"""Descriptors of closed manifolds: primitives and Cartesian products.

A descriptor bundles the mod-2 cohomology ring, low-degree integral
homology, the total Stiefel–Whitney class, and the images L1, L2 of the
reduction maps H^k(M; Z) -> H^k(M; Z/2) for k = 1, 2.  Products propagate
all of it factorwise; no integral ring is ever computed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb

from .abelian import (
    INTEGERS,
    TRIVIAL,
    FgAbelianGroup,
    Z,
    Z2,
    cohomology_via_uct,
    cyclic,
    free,
    product_homology,
    tensor,
)
from .errors import CorruptRingData, MisuseError, UnsupportedDegree, UnsupportedParameter
from .ring import (
    Generator,
    RingPresentation,
    TableRing,
    TruncatedPolynomialRing,
    Z2Class,
    Z2Subspace,
    kunneth_tensor,
    subspace_tensor,
    tensor_class,
)
from .steenrod import SqTable, product_sq_table, sq

MIN_MK_DIM = 5


@dataclass(frozen=True, eq=False)
class ManifoldDescriptor:
    name: str
    dim: int
    ring: RingPresentation
    # H_0, H_1, ... as far as known; a list of length dim + 1 is complete
    homology: tuple[FgAbelianGroup, ...]
    orientable: bool
    # w_0 .. w_D with D = ring.complete_through
    sw_total: tuple[Z2Class, ...]
    lift_l1: Z2Subspace
    lift_l2: Z2Subspace
    sq_table: SqTable
    top_class: Z2Class | None = None
    provenance: tuple[str, ...] = ()
    factors: tuple[ManifoldDescriptor, ManifoldDescriptor] | None = None

    def __repr__(self):
        return f"<ManifoldDescriptor {self.name}>"

    @property
    def is_complete(self) -> bool:
        return self.top_class is not None

    @property
    def is_product(self) -> bool:
        return self.factors is not None

    def w(self, i: int) -> Z2Class:
        if i < len(self.sw_total):
            return self.sw_total[i]
        self.ring.require(i)
        return self.ring.zero(i)

    @property
    def w1(self) -> Z2Class:
        return self.w(1)

    @property
    def w2(self) -> Z2Class:
        return self.w(2)

    def homology_at(self, n: int) -> FgAbelianGroup:
        if n < 0:
            return TRIVIAL
        if n < len(self.homology):
            return self.homology[n]
        if len(self.homology) == self.dim + 1:
            return TRIVIAL
        raise UnsupportedDegree(n, len(self.homology) - 1, f"integral homology of {self.name}")

    @property
    def homology_degree(self) -> int | None:
        """Highest degree with known homology; None means all degrees."""
        return None if len(self.homology) == self.dim + 1 else len(self.homology) - 1


# ---------------------------------------------------------------- primitives


def _sw_from_coefficients(ring: RingPresentation, a: Z2Class, coeffs) -> tuple[Z2Class, ...]:
    out = []
    for i in range(ring.complete_through + 1):
        out.append(a ** i if coeffs(i) % 2 else ring.zero(i))
    return tuple(out)


def _trivial_sw(ring: RingPresentation) -> tuple[Z2Class, ...]:
    return (ring.one(),) + tuple(ring.zero(i) for i in range(1, ring.complete_through + 1))


def _top(ring: RingPresentation) -> Z2Class:
    return ring.basis_class(ring.top_degree, 0)


@functools.lru_cache(maxsize=None)
def rp(n: int) -> ManifoldDescriptor:
    """Real projective space RP_n."""
    if n < 1:
        raise UnsupportedParameter("RP(n) requires n >= 1")
    ring = TruncatedPolynomialRing([Generator("a", 1, n + 1)], n, n)
    a = ring.gen("a")
    homology = [INTEGERS]
    for i in range(1, n):
        homology.append(cyclic(2) if i % 2 else TRIVIAL)
    homology.append(INTEGERS if n % 2 else TRIVIAL)
    l1 = Z2Subspace.full(ring, 1) if n == 1 else Z2Subspace(ring, 1)
    l2 = Z2Subspace.span(ring, 2, [a * a]) if n >= 2 else Z2Subspace(ring, 2)
    return _checked(ManifoldDescriptor(
        name=f"RP({n})",
        dim=n,
        ring=ring,
        homology=tuple(homology),
        orientable=n % 2 == 1,
        sw_total=_sw_from_coefficients(ring, a, lambda i: comb(n + 1, i)),
        lift_l1=l1,
        lift_l2=l2,
        sq_table=SqTable.standard(ring),
        top_class=_top(ring),
        provenance=(
            "ring Z/2[a]/(a^(n+1)), total Stiefel-Whitney class (1+a)^(n+1)",
            "integral homology from the cellular chain complex with boundaries alternating 0, 2",
            "H^1(RP_n; Z) = 0 for n >= 2, so nothing in degree 1 lifts",
            "a^2 = Sq^1(a) is the reduction of the Bockstein of a, and H^2(RP_n; Z) = Z/2 for n >= 2",
        ),
    ))


@functools.lru_cache(maxsize=None)
def sphere(n: int) -> ManifoldDescriptor:
    if n < 1:
        raise UnsupportedParameter("S(n) requires n >= 1")
    ring = TruncatedPolynomialRing([Generator("s", n, 2)], n, n)
    homology = [INTEGERS] + [TRIVIAL] * (n - 1) + [INTEGERS]
    return _checked(ManifoldDescriptor(
        name=f"S({n})",
        dim=n,
        ring=ring,
        homology=tuple(homology),
        orientable=True,
        sw_total=_trivial_sw(ring),
        lift_l1=Z2Subspace.full(ring, 1),
        lift_l2=Z2Subspace.full(ring, 2),
        sq_table=SqTable.standard(ring),
        top_class=_top(ring),
        provenance=(
            "ring Z/2[s]/(s^2) with deg s = n; stably parallelizable, so w = 1",
            "free integral homology, so every mod-2 class lifts",
        ),
    ))


@functools.lru_cache(maxsize=None)
def torus(n: int) -> ManifoldDescriptor:
    if n < 1:
        raise UnsupportedParameter("T(n) requires n >= 1")
    ring = TruncatedPolynomialRing([Generator(f"t{i + 1}", 1, 2) for i in range(n)], n, n)
    return _checked(ManifoldDescriptor(
        name=f"T({n})",
        dim=n,
        ring=ring,
        homology=tuple(free(comb(n, i)) for i in range(n + 1)),
        orientable=True,
        sw_total=_trivial_sw(ring),
        lift_l1=Z2Subspace.full(ring, 1),
        lift_l2=Z2Subspace.full(ring, 2),
        sq_table=SqTable.standard(ring),
        top_class=_top(ring),
        provenance=(
            "exterior algebra on n degree-1 generators; parallelizable, so w = 1",
            "H_i = Z^C(n,i) is free, so every mod-2 class lifts",
        ),
    ))


@functools.lru_cache(maxsize=None)
def mk(k: int) -> ManifoldDescriptor:
    """The non-orientable k-manifold (B x S_{k-2}) ∪ (S_1 x D_{k-1}), B the
    Möbius band, stored only through degree 2."""
    if k < MIN_MK_DIM:
        raise UnsupportedParameter(
            f"M(k) requires k >= {MIN_MK_DIM}: its homology H_0 = Z, H_1 = Z, H_2 = 0 "
            f"is only established in that range"
        )
    ring = TruncatedPolynomialRing([Generator("x", 1, 2)], 2, None)
    x = ring.gen("x")
    return _checked(ManifoldDescriptor(
        name=f"M({k})",
        dim=k,
        ring=ring,
        homology=(INTEGERS, INTEGERS, TRIVIAL),
        orientable=False,
        sw_total=(ring.one(), x, ring.zero(2)),
        lift_l1=Z2Subspace.full(ring, 1),
        lift_l2=Z2Subspace(ring, 2),
        sq_table=SqTable.standard(ring),
        top_class=None,
        provenance=(
            "H_0 = Z, H_1 = Z, H_2 = 0 for k >= 5",
            "H^1(Z/2) = span{x}, H^2(Z/2) = 0, so x^2 = 0 and w_2 = 0",
            "non-orientable and x is the only nonzero degree-1 class, so w_1 = x",
            "H^1(M; Z) = Z reduces onto H^1(M; Z/2)",
            "higher cohomology is not recorded; Wu-class computations are unavailable",
        ),
    ))


@functools.lru_cache(maxsize=None)
def klein() -> ManifoldDescriptor:
    """The Klein bottle, as RP_2 # RP_2: u, v come from the two summands."""
    u, v = (1, 0), (0, 1)
    top = (2, 0)
    ring = TableRing(
        [Generator("u", 1, 3), Generator("v", 1, 3)],
        [[(0, 0)], [u, v], [top]],
        {(u, u): [top], (v, v): [top], (u, v): [], (v, u): []},
        2, 2,
    )
    w1 = ring.gen("u") + ring.gen("v")
    return _checked(ManifoldDescriptor(
        name="K",
        dim=2,
        ring=ring,
        homology=(INTEGERS, FgAbelianGroup(1, (2,)), TRIVIAL),
        orientable=False,
        sw_total=(ring.one(), w1, ring.zero(2)),
        lift_l1=Z2Subspace.span(ring, 1, [w1]),
        lift_l2=Z2Subspace.full(ring, 2),
        sq_table=SqTable.standard(ring),
        top_class=_top(ring),
        provenance=(
            "connected-sum ring of two RP_2: u^2 = v^2 = top, uv = 0",
            "cellular chain complex: one 0-cell, 1-cells a, b, one 2-cell with boundary 2b",
            "w_1 = u + v (sum of the summands' w_1), w_2 = 0 (Euler characteristic 0)",
            "reduction image in degree 1 is one-dimensional and lies in ker Sq^1 = span{u + v}",
        ),
    ))


# ---------------------------------------------------------------- products


def _operand_name(m: ManifoldDescriptor) -> str:
    return f"({m.name})" if m.is_product else m.name


def _product_homology(m1: ManifoldDescriptor, m2: ManifoldDescriptor) -> tuple[FgAbelianGroup, ...]:
    limits = [m.homology_degree for m in (m1, m2) if m.homology_degree is not None]
    top = min(limits) if limits else m1.dim + m2.dim
    f1 = [m1.homology_at(i) for i in range(top + 1)]
    f2 = [m2.homology_at(i) for i in range(top + 1)]
    return tuple(product_homology(f1, f2, n) for n in range(top + 1))


@functools.lru_cache(maxsize=None)
def product(m1: ManifoldDescriptor, m2: ManifoldDescriptor) -> ManifoldDescriptor:
    """M1 x M2 via Künneth, the Whitney product formula, and factorwise lifts.

    The degree-2 lift space is L2(M1)⊗1 ⊕ L1(M1)⊗L1(M2) ⊕ 1⊗L2(M2): an
    integral degree-2 class on the product splits into integral pieces of
    those bidegrees because H^0 and H^1 with Z coefficients are free.
    """
    ring = kunneth_tensor(m1.ring, m2.ring)
    r1, r2 = m1.ring, m2.ring
    sw = []
    for n in range(ring.complete_through + 1):
        w = ring.zero(n)
        for i in range(n + 1):
            w = w + tensor_class(ring, m1.w(i), m2.w(n - i))
        sw.append(w)
    unit1, unit2 = Z2Subspace.full(r1, 0), Z2Subspace.full(r2, 0)
    l1 = subspace_tensor(ring, m1.lift_l1, unit2) + subspace_tensor(ring, unit1, m2.lift_l1)
    l2 = (
        subspace_tensor(ring, m1.lift_l2, unit2)
        + subspace_tensor(ring, m1.lift_l1, m2.lift_l1)
        + subspace_tensor(ring, unit1, m2.lift_l2)
    )
    top = None
    if ring.is_complete:
        top = tensor_class(ring, m1.top_class, m2.top_class)
    return _checked(ManifoldDescriptor(
        name=f"{m1.name} * {_operand_name(m2)}",
        dim=m1.dim + m2.dim,
        ring=ring,
        homology=_product_homology(m1, m2),
        orientable=m1.orientable and m2.orientable,
        sw_total=tuple(sw),
        lift_l1=l1,
        lift_l2=l2,
        sq_table=product_sq_table(ring, m1.sq_table, m2.sq_table),
        top_class=top,
        provenance=("Künneth product of the factor descriptors",),
        factors=(m1, m2),
    ))


def product_of(*ms: ManifoldDescriptor) -> ManifoldDescriptor:
    """Left-associated product of one or more descriptors."""
    return functools.reduce(product, ms)


# ---------------------------------------------------------------- validation


def lift_dimension(m: ManifoldDescriptor, n: int) -> int:
    """dim of the image of H^n(M; Z) in H^n(M; Z/2), from homology alone.

    Reduction embeds H^n(M; Z) ⊗ Z/2 into H^n(M; Z/2).
    """
    integral = cohomology_via_uct(m.homology_at(n), m.homology_at(n - 1), Z)
    return tensor(integral, cyclic(2)).dim_mod2()


def check_descriptor(m: ManifoldDescriptor) -> list[str]:
    """Every structural invariant a descriptor must satisfy; returns the
    list of violations."""
    problems = []
    ring = m.ring
    if m.homology_at(0) != INTEGERS:
        problems.append("H_0 must be Z (closed and connected)")
    if len(m.sw_total) != ring.complete_through + 1:
        problems.append("total SW class must cover every stored degree")
    elif m.sw_total[0] != ring.one():
        problems.append("w_0 must be 1")
    for i, w in enumerate(m.sw_total):
        if w.ring is not ring or w.degree != i:
            problems.append(f"w_{i} is not a degree-{i} class of the ring")
    if m.orientable != m.w1.is_zero():
        problems.append(f"orientable={m.orientable} but w_1 = {m.w1}")
    hmax = ring.complete_through if m.homology_degree is None else min(ring.complete_through, m.homology_degree)
    for n in range(hmax + 1):
        expected = cohomology_via_uct(m.homology_at(n), m.homology_at(n - 1), Z2).dim_mod2()
        if ring.dim(n) != expected:
            problems.append(f"dim H^{n}(Z/2) = {ring.dim(n)} but the coefficient theorem gives {expected}")
    for n, lift in ((1, m.lift_l1), (2, m.lift_l2)):
        if lift.ring is not ring or lift.degree != n:
            problems.append(f"L{n} is not a degree-{n} subspace of the ring")
            continue
        try:
            expected = lift_dimension(m, n)
        except UnsupportedDegree:
            continue
        if lift.dim != expected:
            problems.append(f"dim L{n} = {lift.dim} but H^{n}(M; Z) ⊗ Z/2 has dimension {expected}")
    if m.lift_l1.dim != m.homology_at(1).free_rank:
        problems.append("L1 must have dimension equal to the free rank of H_1")
    if not m.lift_l2.contains(m.w1 * m.w1):
        problems.append(f"w_1^2 = {m.w1 * m.w1} is not in L2")
    for n, lift in ((1, m.lift_l1), (2, m.lift_l2)):
        if not ring.known(n + 1):
            continue
        for c in lift.basis_classes():
            if sq(ring, m.sq_table, 1, c):
                problems.append(f"L{n} contains {c} with Sq^1 != 0; it cannot be a reduction")
    if ring.is_complete != (m.top_class is not None):
        problems.append("a top class is present exactly when the ring is complete")
    if m.top_class is not None:
        if ring.top_degree != m.dim or m.top_class != ring.basis_class(m.dim, 0):
            problems.append("top class must generate H^dim")
    return problems


def validate(m: ManifoldDescriptor) -> None:
    problems = check_descriptor(m)
    if problems:
        raise CorruptRingData(f"{m.name}: " + "; ".join(problems))


def _checked(m: ManifoldDescriptor) -> ManifoldDescriptor:
    validate(m)
    return m


# ---------------------------------------------------------------- bundles


@dataclass(frozen=True)
class BundleDescriptor:
    rank: int
    w1: Z2Class
    w2: Z2Class
    description: str

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.w1.ring is not self.w2.ring or self.w1.degree != 1 or self.w2.degree != 2:
            raise MisuseError("w1, w2 must be degree 1 and 2 classes of one ring")

    @property
    def ring(self) -> RingPresentation:
        return self.w1.ring

    def __str__(self):
        return self.description


def line_bundle(alpha: Z2Class) -> BundleDescriptor:
    if alpha.degree != 1:
        raise MisuseError("a line bundle is classified by a degree-1 class")
    return BundleDescriptor(1, alpha, alpha.ring.zero(2), f"l({alpha})")


def trivial_bundle(ring: RingPresentation, k: int) -> BundleDescriptor:
    return BundleDescriptor(k, ring.zero(1), ring.zero(2), f"θ^{k}")


def tangent_bundle(m: ManifoldDescriptor) -> BundleDescriptor:
    return BundleDescriptor(m.dim, m.w1, m.w2, f"T{_operand_name(m)}")


def whitney_sum(b1: BundleDescriptor, b2: BundleDescriptor) -> BundleDescriptor:
    if b1.ring is not b2.ring:
        raise MisuseError("bundles live over different manifolds")
    return BundleDescriptor(
        b1.rank + b2.rank,
        b1.w1 + b2.w1,
        b1.w2 + b1.w1 * b2.w1 + b2.w2,
        f"{b1.description} ⊕ {b2.description}",
    )
