import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinstructures.abelian import Z2, cohomology_via_uct
from pinstructures.catalog import klein, mk, product, rp, sphere, torus
from pinstructures.errors import MisuseError, UnsupportedDegree
from pinstructures.ring import (
    Generator,
    TruncatedPolynomialRing,
    Z2Class,
    Z2Subspace,
    decompose,
    kunneth_tensor,
    subspace_tensor,
    tensor_class,
)

RINGS = [rp(2).ring, rp(3).ring, torus(2).ring, sphere(2).ring, klein().ring, mk(5).ring]


def classes(ring, degree):
    n = ring.dim(degree)
    return st.integers(0, (1 << n) - 1).map(lambda b: Z2Class(ring, degree, b))


@st.composite
def ring_triples(draw):
    ring = draw(st.sampled_from(RINGS))
    degs = [draw(st.integers(0, ring.complete_through)) for _ in range(3)]
    return ring, [draw(classes(ring, d)) for d in degs]


def test_rp_ring_basis():
    r = rp(4).ring
    assert [r.dim(d) for d in range(5)] == [1] * 5
    a = r.gen("a")
    assert str(a ** 4) == "a^4"
    assert (a ** 2) * (a ** 2) == a ** 4
    assert r.top_degree == 4


def test_truncation_is_enforced():
    r = mk(5).ring
    assert r.known(2) and not r.known(3)
    with pytest.raises(UnsupportedDegree):
        r.require(3)
    x = r.gen("x")
    with pytest.raises(UnsupportedDegree):
        x * (x * x)


def test_mixed_rings_rejected():
    with pytest.raises(MisuseError):
        rp(2).ring.gen("a") + rp(3).ring.gen("a")


@given(ring_triples())
def test_graded_commutative_and_associative(data):
    ring, (x, y, z) = data
    if x.degree + y.degree + z.degree > ring.complete_through:
        return
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + Z2Class(ring, y.degree, 0)) == x * y
    if y.degree == z.degree:
        assert x * (y + z) == x * y + x * z


def test_klein_products():
    r = klein().ring
    u, v = r.gen("u"), r.gen("v")
    assert u * u == v * v != r.zero(2)
    assert (u * v).is_zero()
    assert ((u + v) * (u + v)).is_zero()


def test_format_and_parse_roundtrip():
    p = kunneth_tensor(rp(2).ring, torus(3).ring)
    for d in range(p.complete_through + 1):
        for b in range(min(1 << p.dim(d), 64)):
            x = Z2Class(p, d, b)
            assert p.parse_class(str(x), d) == x
    assert p.gen_name(0) == "a1"
    assert p.gen_name(1) == "t1_2"


def _brute_dims(factor_gens, top):
    # monomials in the union of generators with each exponent under its cap
    dims = [0] * (top + 1)
    caps = [range(g.nilpotence) for g in factor_gens]
    for m in itertools.product(*caps):
        d = sum(e * g.degree for e, g in zip(m, factor_gens))
        if d <= top:
            dims[d] += 1
    return dims


@pytest.mark.parametrize("m1, m2", [
    (rp(2), rp(2)), (rp(3), torus(2)), (sphere(2), rp(4)), (torus(3), sphere(1)),
])
def test_kunneth_dimensions(m1, m2):
    p = kunneth_tensor(m1.ring, m2.ring)
    top = m1.dim + m2.dim
    assert p.top_degree == top
    dims = [p.dim(d) for d in range(top + 1)]
    assert dims == _brute_dims(list(m1.ring.generators) + list(m2.ring.generators), top)
    # and with the UCT applied to Künneth homology of the product
    m = product(m1, m2)
    for n in range(top + 1):
        assert cohomology_via_uct(m.homology_at(n), m.homology_at(n - 1), Z2).dim_mod2() == dims[n]


def test_product_of_truncated_factor():
    p = kunneth_tensor(mk(5).ring, rp(3).ring)
    assert p.complete_through == 2 and p.top_degree is None
    with pytest.raises(UnsupportedDegree):
        kunneth_tensor(mk(5).ring, rp(3).ring, max_degree=3)


def test_tensor_classes_multiply_factorwise():
    r1, r2 = rp(3).ring, torus(2).ring
    p = kunneth_tensor(r1, r2)
    a = r1.gen("a")
    t1, t2 = r2.gen("t1"), r2.gen("t2")
    lhs = tensor_class(p, a, t1) * tensor_class(p, a, t2)
    # sign-free over Z/2
    assert lhs == tensor_class(p, a * a, t1 * t2)
    with pytest.raises(MisuseError):
        tensor_class(p, t1, a)


def test_decompose_is_a_bijection():
    p = kunneth_tensor(rp(2).ring, rp(3).ring)
    for d in range(4):
        for b in range(1 << p.dim(d)):
            x = Z2Class(p, d, b)
            parts = decompose(p, x)
            assert len(parts) == d + 1
            total = p.zero(d)
            for k, part in enumerate(parts):
                for bit in range(p.dim(d)):
                    if (part.bits >> bit) & 1:
                        assert p.bidegree(d, bit) == (d - k, k)
                total = total + part
            assert total == x


def test_subspace_basics():
    r = torus(3).ring
    full = Z2Subspace.full(r, 1)
    s = Z2Subspace.span(r, 1, [r.gen("t1") + r.gen("t2"), r.gen("t2")])
    assert s.dim == 2
    assert r.gen("t1") in s
    assert r.gen("t3") not in s
    assert s.issubset(full) and not full.issubset(s)
    assert (s + Z2Subspace.span(r, 1, [r.gen("t3")])).dim == 3
    c = s.certificate(r.gen("t1"))
    rows = s.basis_classes()
    acc = r.zero(1)
    for i in c:
        acc = acc + rows[i]
    assert acc == r.gen("t1")
    assert s.certificate(r.gen("t3")) is None
    assert s.residue(r.gen("t3")) == r.gen("t3")


@given(st.integers(0, 3), st.integers(0, 3))
def test_subspace_tensor_dimension(k1, k2):
    r1, r2 = torus(3).ring, torus(3).ring
    p = kunneth_tensor(r1, r2)
    s1 = Z2Subspace.span(r1, 1, [r1.basis_class(1, i) for i in range(k1)])
    s2 = Z2Subspace.span(r2, 1, [r2.basis_class(1, i) for i in range(k2)])
    assert subspace_tensor(p, s1, s2).dim == k1 * k2


def test_truncated_ring_rejects_bad_generators():
    with pytest.raises(ValueError):
        Generator("a", 0)
    r = TruncatedPolynomialRing([Generator("e", 1, 2), Generator("f", 1, 2)], 2, 2)
    assert r.dim(2) == 1
