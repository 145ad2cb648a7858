"""GF(2) linear algebra on int bitsets.

A vector is a Python int; bit ``k`` is the coordinate on basis element ``k``.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def pivot(v: int) -> int:
    return v.bit_length() - 1


def bits(v: int) -> list[int]:
    """Indices of the set bits of ``v``, ascending."""
    out = []
    k = 0
    while v:
        if v & 1:
            out.append(k)
        v >>= 1
        k += 1
    return out


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form, rows ordered by decreasing pivot.

    Two families span the same space iff their rref tuples are equal.
    """
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if v >> pivot(r) & 1:
                v ^= r
        if not v:
            continue
        p = pivot(v)
        rows = [r ^ v if r >> p & 1 else r for r in rows]
        rows.append(v)
    rows.sort(reverse=True)
    return tuple(rows)


def reduce(v: int, rows: Sequence[int]) -> tuple[int, list[int]]:
    """Reduce ``v`` against rref rows.

    Returns the canonical residue and the indices of the rows that were
    subtracted; when the residue is zero those indices express ``v`` in the
    row basis.
    """
    used = []
    for i, r in enumerate(rows):
        if v >> pivot(r) & 1:
            v ^= r
            used.append(i)
    return v, used


def rank(vectors: Iterable[int]) -> int:
    return len(rref(vectors))


def in_span(v: int, vectors: Iterable[int]) -> bool:
    return reduce(v, rref(vectors))[0] == 0


def solve(equations: Sequence[tuple[int, int]], nvars: int) -> int | None:
    """Unique solution of a linear system, or None if it is not unique.

    Each equation is ``(mask, rhs)`` meaning ``parity(x & mask) == rhs``.
    An inconsistent system also returns None.
    """
    aug = rref((mask << 1) | (rhs & 1) for mask, rhs in equations)
    pivots = {pivot(r) for r in aug}
    if 0 in pivots:
        return None
    if len(pivots) != nvars:
        return None
    x = 0
    for r in aug:
        if r & 1:
            x |= 1 << (pivot(r) - 1)
    return x


def parity(v: int) -> int:
    return bin(v).count("1") & 1
