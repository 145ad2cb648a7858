from hypothesis import strategies as st

from pinstructures.abelian import CoefficientRing, FgAbelianGroup

orders = st.integers(min_value=2, max_value=16)


@st.composite
def groups(draw, max_rank=3, max_torsion=3):
    free_rank = draw(st.integers(0, max_rank))
    torsion = draw(st.lists(orders, max_size=max_torsion))
    return FgAbelianGroup.from_orders([0] * free_rank + torsion)


coefficient_rings = st.sampled_from([0, 2, 3, 4, 6, 8]).map(CoefficientRing)
