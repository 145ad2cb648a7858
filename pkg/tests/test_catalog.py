import dataclasses

import pytest

from pinstructures import smith
from pinstructures.abelian import FgAbelianGroup
from pinstructures.catalog import (
    ManifoldDescriptor,
    check_descriptor,
    klein,
    lift_dimension,
    line_bundle,
    mk,
    product,
    product_of,
    rp,
    sphere,
    tangent_bundle,
    torus,
    trivial_bundle,
    validate,
    whitney_sum,
)
from pinstructures.errors import CorruptRingData, MisuseError, UnsupportedParameter
from pinstructures.ring import Z2Subspace
from pinstructures.smith import IntMatrix
from pinstructures.steenrod import sq, sw_from_wu

G = FgAbelianGroup.parse


def cells(name):
    """Cellular chain complexes, independent of the catalog's homology."""
    if name == "K":
        # one 0-cell, 1-cells a and b, the 2-cell attached along a b a^-1 b
        return [IntMatrix.zeros(1, 2), IntMatrix.from_rows([[0], [2]])]
    kind, n = name
    if kind == "RP":
        return [IntMatrix.from_rows([[1 + (-1) ** k]]) for k in range(1, n + 1)]
    if kind == "S":
        if n == 1:
            return [IntMatrix.zeros(1, 1)]
        return [IntMatrix.zeros(1, 0)] + [IntMatrix.zeros(0, 0)] * (n - 2) + [IntMatrix.zeros(0, 1)]
    if kind == "T":
        c = [IntMatrix.zeros(1, 1)]
        for _ in range(n - 1):
            c = smith.tensor_complex(c, [IntMatrix.zeros(1, 1)])
        return c


def cellular_homology(c, top):
    smith.check_complex(c)
    return [smith.chain_homology(c, n) for n in range(top + 1)]


CASES = [
    (rp(2), ("RP", 2)), (rp(5), ("RP", 5)), (torus(3), ("T", 3)), (sphere(1), ("S", 1)),
    (klein(), "K"),
]


@pytest.mark.parametrize("m, key", CASES, ids=lambda x: getattr(x, "name", str(x)))
def test_homology_matches_cells(m, key):
    assert list(m.homology) == cellular_homology(cells(key), m.dim)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sphere_homology(n):
    assert list(sphere(n).homology) == cellular_homology(cells(("S", n)), n)
    assert [str(h) for h in sphere(n).homology] == ["Z"] + ["0"] * (n - 1) + ["Z"]


@pytest.mark.parametrize("m1, k1, m2, k2", [
    (rp(2), ("RP", 2), rp(3), ("RP", 3)),
    (klein(), "K", rp(2), ("RP", 2)),
    (torus(2), ("T", 2), klein(), "K"),
])
def test_product_homology_matches_tensor_complex(m1, k1, m2, k2):
    p = product(m1, m2)
    expected = cellular_homology(smith.tensor_complex(cells(k1), cells(k2)), p.dim)
    assert list(p.homology) == expected


def test_examples():
    m = rp(2)
    assert str(m.w1) == "a" and str(m.w2) == "a^2"
    assert str(m.lift_l2) == "span{a^2}"
    assert m.lift_l1.dim == 0
    assert not m.orientable
    assert str(rp(3).w1) == "0" and rp(3).orientable
    t = torus(3)
    assert t.lift_l1.dim == 3 and t.lift_l2.dim == 3
    assert all(w.is_zero() for w in t.sw_total[1:])
    m5 = mk(5)
    assert str(m5.w1) == "x" and m5.w2.is_zero()
    assert [str(h) for h in m5.homology] == ["Z", "Z", "0"]


def test_mk_parameter_rule():
    with pytest.raises(UnsupportedParameter, match="k >= 5"):
        mk(3)
    with pytest.raises(UnsupportedParameter):
        rp(0)


def test_klein_oracle():
    k = klein()
    assert list(k.homology) == cellular_homology(cells("K"), 2)
    assert sw_from_wu(k) == k.sw_total
    # w_2 evaluates to the Euler characteristic mod 2, and chi(K) = 0
    assert k.w2.is_zero()
    for c in k.lift_l1.basis_classes():
        assert sq(k.ring, k.sq_table, 1, c).is_zero()
    assert k.lift_l1.dim == 1 and k.lift_l2.dim == 1


def _euler(m):
    return sum((-1) ** i * m.ring.dim(i) for i in range(m.dim + 1))


@pytest.mark.parametrize("m", [rp(2), rp(3), rp(4), torus(2), sphere(2), klein(),
                               product(rp(2), rp(2)), product(rp(2), sphere(2)),
                               product_of(rp(2), rp(2), rp(2))], ids=lambda m: m.name)
def test_top_class_is_euler_characteristic(m):
    assert (m.w(m.dim).bits & 1) == _euler(m) % 2


def test_product_lifts():
    p = product(rp(2), rp(2))
    assert str(p.w1) == "a1 + a2"
    assert p.lift_l1.dim == 0
    assert p.lift_l2.dim == 2
    assert p.lift_l2.dim == lift_dimension(p, 2)
    q = product(mk(5), mk(5))
    assert q.lift_l1.dim == 2 and q.lift_l2.dim == 1
    assert q.ring.complete_through == 2
    assert all(h.is_free() for h in q.homology[:3])


def test_product_names():
    assert product_of(rp(2), rp(2), sphere(1)).name == "RP(2) * RP(2) * S(1)"
    assert product(rp(2), product(rp(2), sphere(1))).name == "RP(2) * (RP(2) * S(1))"


def test_products_are_cached():
    assert product(rp(2), rp(3)) is product(rp(2), rp(3))


@pytest.mark.parametrize("m1, m2", [(rp(2), rp(4)), (klein(), torus(2)), (mk(5), rp(3)), (rp(2), mk(6))])
def test_product_symmetry(m1, m2):
    a, b = product(m1, m2), product(m2, m1)
    assert a.lift_l1.dim == b.lift_l1.dim and a.lift_l2.dim == b.lift_l2.dim
    for i in range(a.ring.complete_through + 1):
        assert a.w(i).is_zero() == b.w(i).is_zero()
    assert a.homology == b.homology


def test_associativity_of_homology():
    x = product(product(rp(2), rp(3)), klein())
    y = product(rp(2), product(rp(3), klein()))
    assert x.homology == y.homology
    assert x.lift_l2.dim == y.lift_l2.dim


def test_validation_catches_bad_lifts():
    m = rp(2)
    bad = dataclasses.replace(m, lift_l1=Z2Subspace.full(m.ring, 1))
    problems = check_descriptor(bad)
    assert any("L1" in p for p in problems)
    with pytest.raises(CorruptRingData):
        validate(bad)
    bad2 = dataclasses.replace(m, orientable=True)
    assert any("orientable" in p for p in check_descriptor(bad2))


def test_every_catalog_entry_is_clean():
    for m in [rp(n) for n in range(1, 8)] + [torus(n) for n in range(1, 5)] + [sphere(n) for n in range(1, 5)] \
            + [mk(5), mk(9), klein()]:
        assert check_descriptor(m) == [], m.name
        assert isinstance(m, ManifoldDescriptor)


def test_whitney_sum():
    r = rp(3).ring
    a = r.gen("a")
    e = whitney_sum(line_bundle(a), line_bundle(a))
    assert e.rank == 2 and e.w1.is_zero() and e.w2 == a * a
    assert str(e) == "l(a) ⊕ l(a)"
    t = whitney_sum(tangent_bundle(rp(3)), trivial_bundle(r, 1))
    assert t.w1.is_zero() and t.w2.is_zero()
    with pytest.raises(MisuseError):
        whitney_sum(line_bundle(a), trivial_bundle(rp(2).ring, 1))


@pytest.mark.parametrize("k", [1, 3])
def test_stably_trivial_tangent_bundle(k):
    # (1 + a)^(2k+2) = 1 in H^*(RP_{2k+1}; Z/2)
    m = rp(2 * k + 1)
    assert all(w.is_zero() for w in m.sw_total[1:])


def test_rp5_is_not_stably_trivial():
    assert str(rp(5).sw_total[4]) == "a^4"
