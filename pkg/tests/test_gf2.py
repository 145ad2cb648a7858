import itertools

from hypothesis import given
from hypothesis import strategies as st

from pinstructures import gf2

vectors = st.lists(st.integers(0, (1 << 10) - 1), max_size=8)


def span_of(vs):
    out = {0}
    for v in vs:
        out |= {x ^ v for x in out}
    return out


def test_bits_and_pivot():
    assert gf2.bits(0b10110) == [1, 2, 4]
    assert gf2.pivot(0b10110) == 4
    assert gf2.parity(0b111) == 1


def test_rref_small():
    assert gf2.rref([0b11, 0b01, 0b10]) == (0b10, 0b01)
    assert gf2.rref([0, 0]) == ()


@given(vectors)
def test_rref_is_canonical(vs):
    rows = gf2.rref(vs)
    assert rows == gf2.rref(list(reversed(vs)))
    assert rows == gf2.rref(rows)
    pivots = [gf2.pivot(r) for r in rows]
    assert pivots == sorted(pivots, reverse=True)
    # each pivot column is clear in every other row
    for r, p in zip(rows, pivots):
        assert all(not (o >> p) & 1 for o in rows if o != r)


@given(vectors)
def test_rank_matches_span_size(vs):
    assert 1 << gf2.rank(vs) == len(span_of(vs))


@given(vectors, st.integers(0, (1 << 10) - 1))
def test_membership_against_enumeration(vs, v):
    assert gf2.in_span(v, vs) == (v in span_of(vs))


@given(vectors, st.integers(0, (1 << 10) - 1))
def test_reduce_certificate(vs, v):
    rows = gf2.rref(vs)
    residue, used = gf2.reduce(v, rows)
    acc = residue
    for i in used:
        acc ^= rows[i]
    assert acc == v
    assert (residue == 0) == gf2.in_span(v, vs)


def test_solve_unique_and_degenerate():
    # x0 + x1 = 1, x1 = 1
    assert gf2.solve([(0b11, 1), (0b10, 1)], 2) == 0b10
    assert gf2.solve([(0b11, 1)], 2) is None
    assert gf2.solve([(0b01, 1), (0b01, 0), (0b10, 0)], 2) is None


def test_solve_exhaustive_small():
    for a, b, c, d in itertools.product(range(4), repeat=4):
        eqs = [(a, c & 1), (b, d & 1)]
        sols = [x for x in range(4) if all(gf2.parity(m & x) == r for m, r in eqs)]
        expected = sols[0] if len(sols) == 1 else None
        assert gf2.solve(eqs, 2) == expected
