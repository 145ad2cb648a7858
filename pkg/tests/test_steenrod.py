from math import comb
from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinstructures.catalog import klein, mk, product, rp, sphere, torus
from pinstructures.errors import CorruptRingData, UnsupportedDegree
from pinstructures.ring import Generator, TableRing, Z2Class
from pinstructures.steenrod import SqTable, sq, sw_from_wu, total_sq, wu_classes

MANIFOLDS = [rp(5), torus(3), klein(), product(rp(2), rp(3)), product(rp(4), sphere(2)),
             product(klein(), torus(2))]


@pytest.mark.parametrize("n", [3, 6, 8])
def test_squares_on_projective_space(n):
    m = rp(n)
    a = m.ring.gen("a")
    for k in range(n + 1):
        for i in range(n - k + 1):
            expected = a ** (k + i) if comb(k, i) % 2 else m.ring.zero(k + i)
            assert sq(m.ring, m.sq_table, i, a ** k) == expected


@st.composite
def class_in(draw):
    m = draw(st.sampled_from(MANIFOLDS))
    d = draw(st.integers(0, m.dim))
    bits = draw(st.integers(0, (1 << m.ring.dim(d)) - 1))
    return m, Z2Class(m.ring, d, bits)


@given(class_in())
def test_unstable(data):
    m, x = data
    r, t = m.ring, m.sq_table
    if x.degree * 2 <= m.dim:
        assert sq(r, t, x.degree, x) == x * x
    assert sq(r, t, 0, x) == x
    if x.degree + x.degree + 1 <= m.dim:
        assert sq(r, t, x.degree + 1, x).is_zero()


@given(class_in(), class_in())
def test_cartan(d1, d2):
    m, x = d1
    m2, y = d2
    if m2 is not m or x.degree + y.degree > m.dim:
        return
    r, t = m.ring, m.sq_table
    for i in range(m.dim - x.degree - y.degree + 1):
        rhs = r.zero(x.degree + y.degree + i)
        for j in range(i + 1):
            rhs = rhs + sq(r, t, j, x) * sq(r, t, i - j, y)
        assert sq(r, t, i, x * y) == rhs


@given(class_in())
def test_adem_low(data):
    m, x = data
    r, t = m.ring, m.sq_table
    if x.degree + 2 <= m.dim:
        assert sq(r, t, 1, sq(r, t, 1, x)).is_zero()
    if x.degree + 3 <= m.dim:
        assert sq(r, t, 1, sq(r, t, 2, x)) == sq(r, t, 3, x)


def test_total_square():
    m = rp(4)
    a = m.ring.gen("a")
    parts = total_sq(m.ring, m.sq_table, a, 4)
    assert [str(p) for p in parts] == ["0", "a", "a^2", "0", "0"]


def test_wu_classes_examples():
    v = wu_classes(rp(4)).wu_classes
    assert [str(c) for c in v] == ["1", "a", "a^2", "0", "0"]
    assert [str(c) for c in wu_classes(rp(2)).wu_classes] == ["1", "a", "0"]
    assert all(c.is_zero() for c in wu_classes(torus(3)).wu_classes[1:])
    assert str(wu_classes(klein()).wu_classes[1]) == "u + v"


@pytest.mark.parametrize("m", MANIFOLDS + [rp(n) for n in range(1, 9)], ids=lambda m: m.name)
def test_wu_reconstructs_stored_classes(m):
    assert sw_from_wu(m) == m.sw_total


def test_three_manifolds_are_pin_minus():
    for m in [rp(3), torus(3), sphere(3), product(klein(), sphere(1)), product(rp(2), sphere(1))]:
        w = sw_from_wu(m)
        assert (w[2] + w[1] * w[1]).is_zero(), m.name


def test_truncated_descriptor_refused():
    with pytest.raises(UnsupportedDegree):
        wu_classes(mk(5))


def _fake(ring, dim):
    top = ring.basis_class(dim, 0)
    return SimpleNamespace(name="fake", dim=dim, ring=ring, top_class=top, sq_table=SqTable.standard(ring))


def test_singular_pairing_detected():
    u, v, top = (1, 0), (0, 1), (2, 0)
    ring = TableRing([Generator("u", 1, 3), Generator("v", 1, 2)], [[(0, 0)], [u, v], [top]],
                     {(u, u): [top]}, 2, 2)
    with pytest.raises(CorruptRingData, match="singular"):
        wu_classes(_fake(ring, 2))


def test_missing_duality_detected():
    u, top = (1, 0), (0, 1)
    ring = TableRing([Generator("u", 1, 2), Generator("s", 3, 2)], [[(0, 0)], [u], [], [top]], {}, 3, 3)
    with pytest.raises(CorruptRingData, match="duality"):
        wu_classes(_fake(ring, 3))


def test_sq_table_validation():
    r = rp(3).ring
    a = r.gen("a")
    with pytest.raises(ValueError):
        SqTable(r, {0: [a * a, a * a]})
    with pytest.raises(ValueError):
        SqTable(r, {0: [a, r.zero(2)]})
