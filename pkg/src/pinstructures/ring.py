"""Graded-commutative GF(2) cohomology rings with monomial bases.

A ring stores, for every degree through ``complete_through``, an ordered
basis of monomials (exponent tuples over the generators).  Classes are
coordinate bitsets in that basis.  Rings of closed manifolds whose whole
cohomology is stored also carry ``top_degree``; every degree above it is
known to vanish.  Any other degree above ``complete_through`` is unknown
and asking for it raises :class:`UnsupportedDegree`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from . import gf2
from .errors import MisuseError, UnsupportedDegree

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    # smallest e with g**e == 0, None if not reached inside the stored range
    nilpotence: int | None = None
    # position of the primitive factor this generator came from
    origin: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name} must have positive degree")
        if self.nilpotence is not None and self.nilpotence < 2:
            raise ValueError(f"generator {self.name}: nilpotence exponent must be >= 2")


class RingPresentation:
    """Base class; subclasses supply the product of two basis monomials."""

    kind = "abstract"

    def __init__(
        self,
        generators: Sequence[Generator],
        basis: Sequence[Sequence[Monomial]],
        complete_through: int,
        top_degree: int | None = None,
        n_factors: int = 1,
    ):
        self.generators = tuple(generators)
        self.complete_through = complete_through
        self.top_degree = top_degree
        self.n_factors = n_factors
        if len(basis) != complete_through + 1:
            raise ValueError("need one basis list per degree 0..complete_through")
        self.basis = tuple(tuple(b) for b in basis)
        if self.basis[0] != ((0,) * len(self.generators),):
            raise ValueError("degree-0 basis must be exactly {1}")
        self._index = [{m: k for k, m in enumerate(b)} for b in self.basis]
        for d, b in enumerate(self.basis):
            if len(self._index[d]) != len(b):
                raise ValueError(f"repeated monomial in degree {d}")
            for m in b:
                if self.monomial_degree(m) != d:
                    raise ValueError(f"monomial {m} does not have degree {d}")
        if top_degree is not None:
            if top_degree != complete_through:
                raise ValueError("a complete ring stores every degree through its top")
            if len(self.basis[top_degree]) != 1:
                raise ValueError("top degree must be one-dimensional")
        self._mul_cache: dict[tuple[int, int, int, int], int] = {}

    def __repr__(self):
        return (
            f"<{type(self).__name__} {', '.join(self.gen_name(i) for i in range(len(self.generators)))}"
            f" through {self.complete_through}>"
        )

    # degree bookkeeping

    @property
    def is_complete(self) -> bool:
        return self.top_degree is not None

    def known(self, degree: int) -> bool:
        if degree < 0:
            return True
        if degree <= self.complete_through:
            return True
        return self.top_degree is not None and degree > self.top_degree

    def require(self, degree: int) -> None:
        if not self.known(degree):
            raise UnsupportedDegree(degree, self.complete_through)

    def basis_in(self, degree: int) -> tuple[Monomial, ...]:
        self.require(degree)
        if 0 <= degree <= self.complete_through:
            return self.basis[degree]
        return ()

    def dim(self, degree: int) -> int:
        return len(self.basis_in(degree))

    def index(self, degree: int, monomial: Monomial) -> int:
        try:
            return self._index[degree][monomial]
        except (IndexError, KeyError):
            raise MisuseError(
                f"{self.format_monomial(monomial)} is not a basis monomial in degree {degree}"
            ) from None

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(m, self.generators))

    # elements

    def zero(self, degree: int) -> Z2Class:
        return Z2Class(self, degree, 0)

    def one(self) -> Z2Class:
        return Z2Class(self, 0, 1)

    def element(self, degree: int, monomials: Iterable[Monomial]) -> Z2Class:
        b = 0
        for m in monomials:
            b ^= 1 << self.index(degree, m)
        return Z2Class(self, degree, b)

    def basis_class(self, degree: int, k: int) -> Z2Class:
        return Z2Class(self, degree, 1 << k)

    def gen(self, name: str) -> Z2Class:
        for i, g in enumerate(self.generators):
            if self.gen_name(i) == name:
                return self.monomial_class(self.unit_monomial(i))
        raise KeyError(name)

    def unit_monomial(self, i: int) -> Monomial:
        return tuple(int(j == i) for j in range(len(self.generators)))

    def monomial_class(self, m: Monomial) -> Z2Class:
        """The class of an arbitrary monomial, multiplying out if it is not
        itself a basis element."""
        d = self.monomial_degree(m)
        self.require(d)
        if d <= self.complete_through and m in self._index[d]:
            return Z2Class(self, d, 1 << self._index[d][m])
        if d > self.complete_through:
            return self.zero(d)
        first = next(i for i, e in enumerate(m) if e)
        g = self.unit_monomial(first)
        rest = tuple(e - (i == first) for i, e in enumerate(m))
        return self.monomial_class(g) * self.monomial_class(rest)

    # multiplication

    def mul_basis(self, d1: int, k1: int, d2: int, k2: int) -> int:
        d = d1 + d2
        self.require(d)
        if d > self.complete_through:
            return 0
        key = (d1, k1, d2, k2)
        try:
            return self._mul_cache[key]
        except KeyError:
            pass
        out = self._mul_basis(d1, k1, d2, k2)
        self._mul_cache[key] = out
        return out

    def _mul_basis(self, d1: int, k1: int, d2: int, k2: int) -> int:
        raise NotImplementedError

    def cup(self, x: Z2Class, y: Z2Class) -> Z2Class:
        if x.ring is not self or y.ring is not self:
            raise MisuseError("cup product of classes from a different ring")
        d = x.degree + y.degree
        self.require(d)
        out = 0
        for i in gf2.bits(x.bits):
            for j in gf2.bits(y.bits):
                out ^= self.mul_basis(x.degree, i, y.degree, j)
        return Z2Class(self, d, out)

    # names and text

    def gen_name(self, i: int) -> str:
        g = self.generators[i]
        if self.n_factors == 1:
            return g.name
        sep = "_" if g.name[-1].isdigit() else ""
        return f"{g.name}{sep}{g.origin + 1}"

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.gen_name(i))
            elif e > 1:
                parts.append(f"{self.gen_name(i)}^{e}")
        return "*".join(parts) if parts else "1"

    def format_class(self, x: Z2Class) -> str:
        if not x.bits:
            return "0"
        b = self.basis_in(x.degree)
        return " + ".join(self.format_monomial(b[k]) for k in gf2.bits(x.bits))

    def parse_monomial(self, text: str) -> Monomial:
        names = {self.gen_name(i): i for i in range(len(self.generators))}
        exps = [0] * len(self.generators)
        text = text.strip()
        if text == "1":
            return tuple(exps)
        for factor in text.split("*"):
            m = re.fullmatch(r"\s*([A-Za-z][\w]*)\s*(?:\^\s*(\d+))?\s*", factor)
            if not m or m.group(1) not in names:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            exps[names[m.group(1)]] += int(m.group(2) or 1)
        return tuple(exps)

    def parse_class(self, text: str, degree: int) -> Z2Class:
        """Inverse of :meth:`format_class`; terms multiply out if needed."""
        text = text.strip()
        out = self.zero(degree)
        if text == "0":
            return out
        for term in text.split("+"):
            m = self.parse_monomial(term)
            if self.monomial_degree(m) != degree:
                raise ValueError(f"term {term.strip()!r} does not have degree {degree}")
            out = out + self.monomial_class(m)
        return out


class TruncatedPolynomialRing(RingPresentation):
    """Z/2[g_1, ..., g_r] / (g_i^{e_i}); exterior algebras have all e_i = 2."""

    kind = "truncated_polynomial"

    def __init__(self, generators: Sequence[Generator], complete_through: int,
                 top_degree: int | None = None):
        generators = tuple(generators)
        basis: list[list[Monomial]] = [[] for _ in range(complete_through + 1)]
        ranges = []
        for g in generators:
            cap = complete_through // g.degree
            if g.nilpotence is not None:
                cap = min(cap, g.nilpotence - 1)
            ranges.append(range(cap + 1))
        for m in itertools.product(*ranges):
            d = sum(e * g.degree for e, g in zip(m, generators))
            if d <= complete_through:
                basis[d].append(m)
        for b in basis:
            # lexicographic with the first generator's exponent leading
            b.sort(reverse=True)
        super().__init__(generators, basis, complete_through, top_degree)

    def _mul_basis(self, d1, k1, d2, k2):
        m = tuple(a + b for a, b in zip(self.basis[d1][k1], self.basis[d2][k2]))
        for e, g in zip(m, self.generators):
            if g.nilpotence is not None and e >= g.nilpotence:
                return 0
        return 1 << self._index[d1 + d2][m]


class TableRing(RingPresentation):
    """A ring given by an explicit multiplication table on basis monomials.

    ``products`` maps ``(m1, m2)`` to the list of basis monomials in the
    product; pairs that are absent multiply to zero.
    """

    kind = "table"

    def __init__(self, generators, basis, products: Mapping[tuple[Monomial, Monomial], Sequence[Monomial]],
                 complete_through: int, top_degree: int | None = None):
        super().__init__(generators, basis, complete_through, top_degree)
        self._table: dict[tuple[int, int, int, int], int] = {}
        for (m1, m2), result in products.items():
            d1, d2 = self.monomial_degree(m1), self.monomial_degree(m2)
            key = (d1, self.index(d1, m1), d2, self.index(d2, m2))
            self._table[key] = self.element(d1 + d2, result).bits
        for d, b in enumerate(self.basis):
            for k in range(len(b)):
                self._table[(0, 0, d, k)] = 1 << k
                self._table[(d, k, 0, 0)] = 1 << k

    def _mul_basis(self, d1, k1, d2, k2):
        return self._table.get((d1, k1, d2, k2), 0)

    def products(self) -> dict[tuple[Monomial, Monomial], list[Monomial]]:
        out = {}
        for (d1, k1, d2, k2), b in self._table.items():
            if d1 == 0 or d2 == 0 or not b:
                continue
            out[(self.basis[d1][k1], self.basis[d2][k2])] = [
                self.basis[d1 + d2][k] for k in gf2.bits(b)
            ]
        return out


class ProductRing(RingPresentation):
    """H^*(M1) ⊗ H^*(M2), remembering the bidegree of every basis monomial."""

    kind = "product"

    def __init__(self, left: RingPresentation, right: RingPresentation, complete_through: int,
                 top_degree: int | None):
        self.factors = (left, right)
        self.split = len(left.generators)
        gens = list(left.generators) + [
            replace(g, origin=g.origin + left.n_factors) for g in right.generators
        ]
        basis = []
        self.pairs: list[list[tuple[int, int, int, int]]] = []
        self.pair_index: list[dict[tuple[int, int, int, int], int]] = []
        for n in range(complete_through + 1):
            b, pairs = [], []
            for i in range(n, -1, -1):
                j = n - i
                for k1, m1 in enumerate(left.basis_in(i)):
                    for k2, m2 in enumerate(right.basis_in(j)):
                        b.append(m1 + m2)
                        pairs.append((i, k1, j, k2))
            basis.append(b)
            self.pairs.append(pairs)
            self.pair_index.append({p: k for k, p in enumerate(pairs)})
        super().__init__(gens, basis, complete_through, top_degree,
                         n_factors=left.n_factors + right.n_factors)

    def bidegree(self, degree: int, k: int) -> tuple[int, int]:
        i, _, j, _ = self.pairs[degree][k]
        return i, j

    def _mul_basis(self, d1, k1, d2, k2):
        i, a1, j, a2 = self.pairs[d1][k1]
        i2, b1, j2, b2 = self.pairs[d2][k2]
        left, right = self.factors
        x = left.mul_basis(i, a1, i2, b1)
        if not x:
            return 0
        y = right.mul_basis(j, a2, j2, b2)
        index = self.pair_index[d1 + d2]
        out = 0
        for p in gf2.bits(x):
            for q in gf2.bits(y):
                out |= 1 << index[(i + i2, p, j + j2, q)]
        return out


def kunneth_tensor(r1: RingPresentation, r2: RingPresentation,
                   max_degree: int | None = None) -> ProductRing:
    """The Künneth tensor product, stored through ``max_degree``.

    Without ``max_degree`` the result goes as far as the factors allow:
    everything, when both factors are complete; otherwise up to the
    smallest truncation among incomplete factors.
    """
    partial = [r.complete_through for r in (r1, r2) if not r.is_complete]
    natural = min(partial) if partial else r1.top_degree + r2.top_degree
    if max_degree is None:
        max_degree = natural
    if max_degree > natural:
        raise UnsupportedDegree(max_degree, natural, "product of the factor rings")
    top = natural if not partial and max_degree == natural else None
    return ProductRing(r1, r2, max_degree, top)


@dataclass(frozen=True)
class Z2Class:
    ring: RingPresentation
    degree: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ring.dim(self.degree):
            raise ValueError(
                f"coordinates {self.bits:b} do not fit the degree-{self.degree} basis"
            )

    def _check(self, other: Z2Class) -> None:
        if not isinstance(other, Z2Class) or other.ring is not self.ring:
            raise MisuseError("classes live in different rings")
        if other.degree != self.degree:
            raise MisuseError(f"cannot add degrees {self.degree} and {other.degree}")

    def __add__(self, other: Z2Class) -> Z2Class:
        self._check(other)
        return Z2Class(self.ring, self.degree, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Z2Class) -> Z2Class:
        return self.ring.cup(self, other)

    def __pow__(self, e: int) -> Z2Class:
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return self.bits != 0

    def is_zero(self) -> bool:
        return self.bits == 0

    def monomials(self) -> list[Monomial]:
        b = self.ring.basis_in(self.degree)
        return [b[k] for k in gf2.bits(self.bits)]

    def __str__(self):
        return self.ring.format_class(self)

    def __repr__(self):
        return f"Z2Class({self}, degree={self.degree})"


def cup(r: RingPresentation, x: Z2Class, y: Z2Class) -> Z2Class:
    return r.cup(x, y)


@dataclass(frozen=True)
class Z2Subspace:
    """A subspace of one degree, stored as canonical rref rows."""

    ring: RingPresentation
    degree: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        if gf2.rref(self.rows) != self.rows:
            raise ValueError("rows must be given in reduced echelon form; use Z2Subspace.span")
        width = self.ring.dim(self.degree)
        if any(r >> width for r in self.rows):
            raise ValueError("row does not fit the basis")

    @classmethod
    def span(cls, ring: RingPresentation, degree: int, vectors: Iterable[Z2Class | int] = ()) -> Z2Subspace:
        raw = []
        for v in vectors:
            if isinstance(v, Z2Class):
                if v.ring is not ring or v.degree != degree:
                    raise MisuseError("spanning class from another ring or degree")
                v = v.bits
            raw.append(v)
        return cls(ring, degree, gf2.rref(raw))

    @classmethod
    def full(cls, ring: RingPresentation, degree: int) -> Z2Subspace:
        return cls.span(ring, degree, [1 << k for k in range(ring.dim(degree))])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_classes(self) -> list[Z2Class]:
        return [Z2Class(self.ring, self.degree, r) for r in self.rows]

    def _check(self, x) -> None:
        if x.ring is not self.ring or x.degree != self.degree:
            raise MisuseError("class and subspace live in different rings or degrees")

    def residue(self, x: Z2Class) -> Z2Class:
        """Canonical representative of x modulo the subspace."""
        self._check(x)
        return Z2Class(self.ring, self.degree, gf2.reduce(x.bits, self.rows)[0])

    def certificate(self, x: Z2Class) -> list[int] | None:
        """Indices of the rows summing to x, or None when x is outside."""
        self._check(x)
        res, used = gf2.reduce(x.bits, self.rows)
        return used if res == 0 else None

    def contains(self, x: Z2Class) -> bool:
        return self.certificate(x) is not None

    __contains__ = contains

    def __add__(self, other: Z2Subspace) -> Z2Subspace:
        self._check(other)
        return Z2Subspace.span(self.ring, self.degree, self.rows + other.rows)

    def issubset(self, other: Z2Subspace) -> bool:
        return all(other.contains(c) for c in self.basis_classes())

    def __str__(self):
        return "span{" + ", ".join(str(c) for c in self.basis_classes()) + "}"


def subspace_contains(s: Z2Subspace, x: Z2Class) -> bool:
    return s.contains(x)


def subspace_sum(s1: Z2Subspace, s2: Z2Subspace) -> Z2Subspace:
    return s1 + s2


def _require_product(prod: RingPresentation, r1=None, r2=None) -> ProductRing:
    if not isinstance(prod, ProductRing):
        raise MisuseError("ring is not a recorded Künneth product")
    if r1 is not None and prod.factors[0] is not r1:
        raise MisuseError("left operand is not from the first factor of this product")
    if r2 is not None and prod.factors[1] is not r2:
        raise MisuseError("right operand is not from the second factor of this product")
    return prod


def tensor_class(prod: RingPresentation, x: Z2Class, y: Z2Class) -> Z2Class:
    """x ⊗ y as a class of the product ring."""
    prod = _require_product(prod, x.ring, y.ring)
    d = x.degree + y.degree
    prod.require(d)
    if d > prod.complete_through:
        return prod.zero(d)
    index = prod.pair_index[d]
    out = 0
    for p in gf2.bits(x.bits):
        for q in gf2.bits(y.bits):
            out |= 1 << index[(x.degree, p, y.degree, q)]
    return Z2Class(prod, d, out)


def embed_left(prod: RingPresentation, x: Z2Class) -> Z2Class:
    return tensor_class(prod, x, _require_product(prod).factors[1].one())


def embed_right(prod: RingPresentation, y: Z2Class) -> Z2Class:
    return tensor_class(prod, _require_product(prod).factors[0].one(), y)


def subspace_tensor(prod: RingPresentation, s1: Z2Subspace, s2: Z2Subspace) -> Z2Subspace:
    """Span of pairwise tensors of basis rows; dimension is the product."""
    prod = _require_product(prod, s1.ring, s2.ring)
    d = s1.degree + s2.degree
    return Z2Subspace.span(
        prod, d,
        [tensor_class(prod, a, b) for a in s1.basis_classes() for b in s2.basis_classes()],
    )


def decompose(prod: RingPresentation, x: Z2Class) -> tuple[Z2Class, ...]:
    """Split a class of a product ring by bidegree.

    Component ``k`` of the result lies in H^(n-k) ⊗ H^k for n = deg x, so a
    degree-2 class comes back as ``(x20, x11, x02)``.  The parts sum to x.
    """
    prod = _require_product(prod)
    if x.ring is not prod:
        raise MisuseError("class is not from this product ring")
    parts = {(i, x.degree - i): 0 for i in range(x.degree, -1, -1)}
    for k in gf2.bits(x.bits):
        parts[prod.bidegree(x.degree, k)] |= 1 << k
    return tuple(Z2Class(prod, x.degree, b) for b in parts.values())
