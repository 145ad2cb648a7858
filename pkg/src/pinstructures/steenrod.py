"""Steenrod squares on catalog rings and Wu classes.

Squares are stored on generators only and pushed to every monomial with
the Cartan formula.  Wu classes are solved degree by degree from the
cup-product pairing against the fundamental class, then squared back up
into Stiefel–Whitney classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import gf2
from .errors import CorruptRingData, MisuseError, UnsupportedDegree
from .ring import RingPresentation, Z2Class, embed_left, embed_right


class SqTable:
    """``squares[i][j]`` is Sq^j of generator ``i`` for 0 <= j <= deg.

    An entry may be None when its degree lies outside the ring's stored
    range; using it raises :class:`UnsupportedDegree`.
    """

    def __init__(self, ring: RingPresentation, squares: Mapping[int, Sequence[Z2Class | None]]):
        self.ring = ring
        self.squares = {i: tuple(v) for i, v in squares.items()}
        self._cache: dict[tuple[int, int, int], int] = {}
        for i, g in enumerate(ring.generators):
            if i not in self.squares:
                raise ValueError(f"no squares given for generator {ring.gen_name(i)}")
            col = self.squares[i]
            if len(col) != g.degree + 1:
                raise ValueError(f"{ring.gen_name(i)} needs Sq^0..Sq^{g.degree}")
            for j, c in enumerate(col):
                if c is None:
                    if ring.known(g.degree + j):
                        raise ValueError(f"Sq^{j}({ring.gen_name(i)}) missing inside the stored range")
                    continue
                if c.ring is not ring or c.degree != g.degree + j:
                    raise ValueError(f"Sq^{j}({ring.gen_name(i)}) has the wrong ring or degree")
            if not ring.known(g.degree):
                continue
            gen = ring.monomial_class(ring.unit_monomial(i))
            if col[0] != gen:
                raise ValueError(f"Sq^0 must fix {ring.gen_name(i)}")
            if col[-1] is not None and col[-1] != gen * gen:
                raise ValueError(f"Sq^{g.degree}({ring.gen_name(i)}) must be its square")

    @classmethod
    def standard(cls, ring: RingPresentation, overrides: Mapping[int, Mapping[int, Z2Class]] | None = None) -> SqTable:
        """Sq^0 = id, Sq^deg = squaring, intermediate squares zero unless
        overridden."""
        overrides = overrides or {}
        squares = {}
        for i, g in enumerate(ring.generators):
            gen = ring.monomial_class(ring.unit_monomial(i)) if ring.known(g.degree) else None
            col: list[Z2Class | None] = []
            for j in range(g.degree + 1):
                d = g.degree + j
                if not ring.known(d):
                    col.append(None)
                elif j in overrides.get(i, {}):
                    col.append(overrides[i][j])
                elif j == 0:
                    col.append(gen)
                elif j == g.degree:
                    col.append(gen * gen)
                else:
                    col.append(ring.zero(d))
            squares[i] = col
        return cls(ring, squares)

    def of_generator(self, i: int, j: int) -> Z2Class:
        g = self.ring.generators[i]
        d = g.degree + j
        self.ring.require(d)
        if j > g.degree:
            return self.ring.zero(d)
        c = self.squares[i][j]
        if c is None:
            raise UnsupportedDegree(d, self.ring.complete_through)
        return c


def product_sq_table(prod: RingPresentation, t1: SqTable, t2: SqTable) -> SqTable:
    left, right = prod.factors
    if t1.ring is not left or t2.ring is not right:
        raise MisuseError("square tables do not belong to the product's factors")
    squares = {}
    for i, col in t1.squares.items():
        squares[i] = [embed_left(prod, c) if c is not None and prod.known(c.degree) else None for c in col]
    shift = len(left.generators)
    for i, col in t2.squares.items():
        squares[i + shift] = [embed_right(prod, c) if c is not None and prod.known(c.degree) else None for c in col]
    return SqTable(prod, squares)


def _sq_monomial(table: SqTable, i: int, degree: int, k: int) -> int:
    key = (i, degree, k)
    if key in table._cache:
        return table._cache[key]
    ring = table.ring
    m = ring.basis_in(degree)[k]
    if degree == 0:
        out = 1 if i == 0 else 0
    else:
        first = next(g for g, e in enumerate(m) if e)
        rest = tuple(e - (g == first) for g, e in enumerate(m))
        rest_cls = ring.monomial_class(rest)
        out = 0
        for j in range(min(i, ring.generators[first].degree) + 1):
            left = table.of_generator(first, j)
            if not left:
                continue
            right = sq(ring, table, i - j, rest_cls)
            out ^= (left * right).bits
    table._cache[key] = out
    return out


def sq(r: RingPresentation, table: SqTable, i: int, x: Z2Class) -> Z2Class:
    """Sq^i(x) via the Cartan formula on each basis monomial."""
    if table.ring is not r or x.ring is not r:
        raise MisuseError("square table, ring and class must match")
    d = x.degree + i
    r.require(d)
    if i < 0:
        raise ValueError("negative square")
    if i > x.degree or d > r.complete_through:
        return r.zero(d)
    if i == 0:
        return x
    out = 0
    for k in gf2.bits(x.bits):
        out ^= _sq_monomial(table, i, x.degree, k)
    return Z2Class(r, d, out)


def total_sq(r: RingPresentation, table: SqTable, x: Z2Class, max_degree: int) -> list[Z2Class]:
    """Homogeneous parts of Sq(x) = sum_i Sq^i(x), indexed by degree."""
    out = [r.zero(d) for d in range(max_degree + 1)]
    for i in range(max_degree - x.degree + 1):
        out[x.degree + i] = sq(r, table, i, x)
    return out


@dataclass(frozen=True)
class WuData:
    wu_classes: tuple[Z2Class, ...]
    reconstructed_sw: tuple[Z2Class, ...]


def _evaluate(x: Z2Class) -> int:
    # the top degree is one-dimensional
    return x.bits & 1


def wu_classes(m) -> WuData:
    """Solve v_i ∪ w = Sq^i(w) against the fundamental class of ``m``."""
    ring = m.ring
    n = m.dim
    if m.top_class is None or not ring.is_complete:
        raise UnsupportedDegree(n, ring.complete_through, f"truncated ring of {m.name}")
    table = m.sq_table
    vs = []
    for i in range(n + 1):
        p, q = ring.dim(i), ring.dim(n - i)
        if p != q:
            raise CorruptRingData(
                f"{m.name}: dim H^{i} = {p} but dim H^{n - i} = {q}; no Poincaré duality"
            )
        eqs = []
        for l in range(q):
            w = ring.basis_class(n - i, l)
            mask = 0
            for k in range(p):
                if _evaluate(ring.basis_class(i, k) * w):
                    mask |= 1 << k
            eqs.append((mask, _evaluate(sq(ring, table, i, w))))
        v = gf2.solve(eqs, p) if p else 0
        if v is None:
            raise CorruptRingData(f"{m.name}: cup pairing H^{i} x H^{n - i} is singular")
        vs.append(Z2Class(ring, i, v))
    for i in range(n + 1):
        if 2 * i > n and vs[i]:
            raise CorruptRingData(f"{m.name}: Wu class v_{i} nonzero above half the dimension")
    sw = []
    for k in range(n + 1):
        w = ring.zero(k)
        for j in range(k + 1):
            w = w + sq(ring, table, k - j, vs[j])
        sw.append(w)
    return WuData(tuple(vs), tuple(sw))


def sw_from_wu(m) -> tuple[Z2Class, ...]:
    """Total Stiefel–Whitney class w = Sq(v), degree by degree."""
    return wu_classes(m).reconstructed_sw
