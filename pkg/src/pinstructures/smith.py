"""Smith-normal-form oracle for the abelian-group functors.

Everything here goes through explicit integer matrices and is deliberately
independent of the closed-form gcd rules in :mod:`pinstructures.abelian`.
Chain-complex differentials use the column convention: the matrix of
``d: C_n -> C_{n-1}`` has shape ``(rank C_{n-1}, rank C_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from .abelian import CoefficientRing, FgAbelianGroup


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        e = [0] * (rows * cols)
        for i, x in enumerate(diag):
            e[i * cols + i] = x
        return cls(rows, cols, tuple(e))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def scaled(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def kron(self, other: IntMatrix) -> IntMatrix:
        r, c = self.rows * other.rows, self.cols * other.cols
        e = [0] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        e[(i * other.rows + k) * c + j * other.cols + l] = a * other[k, l]
        return IntMatrix(r, c, tuple(e))

    def matmul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        e = []
        for i in range(self.rows):
            for j in range(other.cols):
                e.append(sum(self[i, k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(e))

    def is_zero(self) -> bool:
        return not any(self.entries)


def vstack(*ms: IntMatrix) -> IntMatrix:
    cols = {m.cols for m in ms}
    if len(cols) != 1:
        raise ValueError("column counts differ")
    return IntMatrix(sum(m.rows for m in ms), cols.pop(), tuple(x for m in ms for x in m.entries))


def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a block matrix; every block row must agree in height."""
    rows = []
    for brow in grid:
        h = brow[0].rows
        for i in range(h):
            rows.append([x for m in brow for x in m.row(i)])
    cols = sum(m.cols for m in grid[0]) if grid else 0
    return IntMatrix.from_rows(rows, cols)


def _invariant_factors(m: IntMatrix) -> list[int]:
    if m.rows == 0 or m.cols == 0:
        return []
    M = Matrix(m.rows, m.cols, list(m.entries))
    return [int(abs(d)) for d in invariant_factors(M, domain=ZZ) if d != 0]


def matrix_rank(m: IntMatrix) -> int:
    return len(_invariant_factors(m))


def snf_oracle(m: IntMatrix) -> FgAbelianGroup:
    """Cokernel of ``m`` read as a presentation: rows are relations among
    ``m.cols`` generators."""
    d = _invariant_factors(m)
    return FgAbelianGroup.from_orders([0] * (m.cols - len(d)) + d)


def chain_homology(differentials: Sequence[IntMatrix], n: int) -> FgAbelianGroup:
    """H_n of a free chain complex.

    ``differentials[k]`` is the matrix of ``d_{k+1}: C_{k+1} -> C_k``;
    ranks of the chain groups are read off the shapes.
    """
    ranks = chain_ranks(differentials)
    if n < 0 or n >= len(ranks):
        return FgAbelianGroup()
    out_rank = matrix_rank(differentials[n - 1]) if n >= 1 else 0
    inc = differentials[n] if n < len(differentials) else None
    inc_factors = _invariant_factors(inc) if inc is not None else []
    free = ranks[n] - out_rank - len(inc_factors)
    return FgAbelianGroup.from_orders([0] * free + [d for d in inc_factors if d > 1])


def chain_ranks(differentials: Sequence[IntMatrix]) -> list[int]:
    if not differentials:
        raise ValueError("need at least one differential to read chain ranks")
    ranks = [differentials[0].rows]
    for k, d in enumerate(differentials):
        if d.rows != ranks[k]:
            raise ValueError(f"d_{k + 1} has {d.rows} rows, expected {ranks[k]}")
        ranks.append(d.cols)
    return ranks


def check_complex(differentials: Sequence[IntMatrix]) -> None:
    for k in range(len(differentials) - 1):
        if not differentials[k].matmul(differentials[k + 1]).is_zero():
            raise ValueError(f"d_{k + 1} d_{k + 2} != 0")


def tensor_complex(c: Sequence[IntMatrix], d: Sequence[IntMatrix]) -> list[IntMatrix]:
    """Total complex of C ⊗ D with the Koszul sign ``(-1)^p`` on ``1 ⊗ d``."""
    rc, rd = chain_ranks(c), chain_ranks(d)
    top = len(rc) + len(rd) - 2

    def summands(n):
        return [(p, n - p) for p in range(len(rc)) if 0 <= n - p < len(rd)]

    out = []
    for n in range(1, top + 1):
        src, dst = summands(n), summands(n - 1)
        grid = []
        for (p2, q2) in dst:
            brow = []
            for (p, q) in src:
                h, w = rc[p2] * rd[q2], rc[p] * rd[q]
                if p2 == p - 1 and q2 == q:
                    brow.append(c[p - 1].kron(IntMatrix.identity(rd[q])))
                elif p2 == p and q2 == q - 1:
                    brow.append(IntMatrix.identity(rc[p]).kron(d[q - 1]).scaled((-1) ** p))
                else:
                    brow.append(IntMatrix.zeros(h, w))
            grid.append(brow)
        out.append(block(grid))
    return out


def resolution(g: FgAbelianGroup) -> list[IntMatrix]:
    """Length-one free resolution 0 -> Z^t -> Z^(r+t) -> g as a chain complex."""
    t = len(g.torsion)
    n = g.free_rank + t
    d = IntMatrix.zeros(n, t)
    e = list(d.entries)
    for k, q in enumerate(g.torsion):
        e[(g.free_rank + k) * t + k] = q
    return [IntMatrix(n, t, tuple(e))]


def presentation(g: FgAbelianGroup) -> IntMatrix:
    """Relation-rows presentation matrix whose cokernel is ``g``."""
    return resolution(g)[0].transpose()


def _ring_group(r: CoefficientRing) -> FgAbelianGroup:
    return FgAbelianGroup.from_orders([r.modulus])


def tensor_oracle(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return chain_homology(tensor_complex(resolution(a), resolution(b)), 0)


def tor_oracle(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return chain_homology(tensor_complex(resolution(a), resolution(b)), 1)


def _dual_complex(g: FgAbelianGroup) -> list[IntMatrix]:
    # Hom(F_*, Z) of the resolution, reindexed as a chain complex Y_1 -> Y_0.
    return [resolution(g)[0].transpose()]


def hom_oracle(a: FgAbelianGroup, r: CoefficientRing) -> FgAbelianGroup:
    return chain_homology(tensor_complex(_dual_complex(a), resolution(_ring_group(r))), 1)


def ext_oracle(a: FgAbelianGroup, r: CoefficientRing) -> FgAbelianGroup:
    return chain_homology(tensor_complex(_dual_complex(a), resolution(_ring_group(r))), 0)
