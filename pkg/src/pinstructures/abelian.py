"""Finitely generated abelian groups and the functors of the coefficient
theorems (tensor, Tor, Hom, Ext) in primary decomposition.

>>> G = FgAbelianGroup(1, (2,))
>>> str(direct_sum(G, cyclic(2)))
'Z + Z/2 + Z/2'
>>> str(tensor(cyclic(4), cyclic(6)))
'Z/2'
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from sympy import factorint

from .errors import UnsupportedDegree


def _prime_of(q: int) -> int:
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return next(iter(f))


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank plus cyclic summands of prime-power order.

    ``torsion`` is kept sorted by (prime, order), so equality of values is
    isomorphism of groups.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for q in self.torsion:
            if q <= 1:
                raise ValueError(f"torsion order {q} must exceed 1")
            _prime_of(q)
        key = tuple(sorted(self.torsion, key=lambda q: (_prime_of(q), q)))
        object.__setattr__(self, "torsion", key)

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FgAbelianGroup:
        """Direct sum of cyclic groups Z/n; an order of 0 stands for Z.

        Orders of 1 are dropped; composite orders are split by CRT.
        """
        free = 0
        torsion = []
        for n in orders:
            if n < 0:
                raise ValueError("orders must be non-negative")
            if n == 0:
                free += 1
            elif n > 1:
                torsion.extend(p**e for p, e in factorint(n).items())
        return cls(free, tuple(torsion))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def primary_part(self, p: int) -> tuple[int, ...]:
        return tuple(q for q in self.torsion if q % p == 0)

    def two_primary(self) -> tuple[int, ...]:
        return self.primary_part(2)

    def odd_torsion(self) -> tuple[int, ...]:
        return tuple(q for q in self.torsion if q % 2)

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for q in self.torsion:
            out *= q
        return out

    def dim_mod2(self) -> int:
        """Dimension over Z/2 when the group is an elementary 2-group."""
        if self.free_rank or any(q != 2 for q in self.torsion):
            raise ValueError(f"{self} is not a Z/2 vector space")
        return len(self.torsion)

    def cyclic_orders(self) -> list[int]:
        return [0] * self.free_rank + list(self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for q, mult in Counter(self.torsion).items():
            parts.extend([f"Z/{q}"] * mult)
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> FgAbelianGroup:
        """Inverse of ``str``: ``'Z^2 + Z/4 + Z/3'``, ``'0'``."""
        text = text.strip()
        if text == "0":
            return cls()
        orders = []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                orders.append(0)
            elif part.startswith("Z^"):
                orders.extend([0] * int(part[2:]))
            elif part.startswith("Z/"):
                orders.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse group summand {part!r}")
        return cls.from_orders(orders)


TRIVIAL = FgAbelianGroup()
INTEGERS = FgAbelianGroup(1)


def free(rank: int) -> FgAbelianGroup:
    return FgAbelianGroup(rank)


def cyclic(n: int) -> FgAbelianGroup:
    """Z/n for n > 1, Z for n == 0."""
    return FgAbelianGroup.from_orders([n])


@dataclass(frozen=True)
class CoefficientRing:
    """Z (modulus 0) or Z/m."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("coefficient ring must be Z or Z/m with m > 1")

    @property
    def is_integral(self) -> bool:
        return self.modulus == 0

    def __str__(self):
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"


Z = CoefficientRing(0)
Z2 = CoefficientRing(2)


def zmod(m: int) -> CoefficientRing:
    return CoefficientRing(m)


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(
        sum(g.free_rank for g in groups),
        tuple(q for g in groups for q in g.torsion),
    )


def _cyclic_pairing(a: FgAbelianGroup, b: FgAbelianGroup) -> list[int]:
    # Z/p^e and Z/q^f pair to Z/gcd, nonzero only when p == q.
    return [gcd(x, y) for x in a.torsion for y in b.torsion]


def tensor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    orders = [0] * (a.free_rank * b.free_rank)
    orders += list(b.torsion) * a.free_rank
    orders += list(a.torsion) * b.free_rank
    orders += _cyclic_pairing(a, b)
    return FgAbelianGroup.from_orders(orders)


def tor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup.from_orders(_cyclic_pairing(a, b))


def hom_to(a: FgAbelianGroup, r: CoefficientRing) -> FgAbelianGroup:
    """Hom(a, r)."""
    if r.is_integral:
        return FgAbelianGroup(a.free_rank)
    m = r.modulus
    return FgAbelianGroup.from_orders([m] * a.free_rank + [gcd(q, m) for q in a.torsion])


def ext_to(a: FgAbelianGroup, r: CoefficientRing) -> FgAbelianGroup:
    """Ext(a, r); vanishes on the free part."""
    if r.is_integral:
        return FgAbelianGroup(0, a.torsion)
    return FgAbelianGroup.from_orders([gcd(q, r.modulus) for q in a.torsion])


def cohomology_via_uct(
    h_n: FgAbelianGroup, h_n_minus_1: FgAbelianGroup, r: CoefficientRing
) -> FgAbelianGroup:
    """H^n(X; r) from integral homology; the UCT sequence splits."""
    return direct_sum(ext_to(h_n_minus_1, r), hom_to(h_n, r))


def product_homology(
    factor1: Sequence[FgAbelianGroup], factor2: Sequence[FgAbelianGroup], n: int
) -> FgAbelianGroup:
    """H_n(X x Y; Z) by the integral Künneth formula.

    ``factor1[i]`` is H_i of the first factor.  Both lists must reach
    degree ``n``.
    """
    have = min(len(factor1), len(factor2)) - 1
    if n > have:
        raise UnsupportedDegree(n, have, "factor homology")
    if n < 0:
        return TRIVIAL
    parts = [tensor(factor1[i], factor2[n - i]) for i in range(n + 1)]
    parts += [tor(factor1[i], factor2[n - 1 - i]) for i in range(n)]
    return direct_sum(*parts)
