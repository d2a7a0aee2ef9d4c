from fractions import Fraction

from hypothesis import strategies as st

from vertex_algebroids.scalars import GaussianRational

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def gaussian(draw, nonzero=False):
    re, im = draw(rationals), draw(rationals)
    if nonzero and re == 0 and im == 0:
        re = Fraction(1)
    return GaussianRational(re, im)


def small_matrix(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    sparse_entry = st.one_of(st.just(GaussianRational(0)), gaussian())
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(sparse_entry, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )
