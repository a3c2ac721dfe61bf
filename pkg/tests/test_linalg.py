import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from reidpair.linalg import bareiss_rank, flint_rank, hermite_basis, modular_rank, solve_exact, sparse_rank

matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=8)
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_methods_agree(rows):
    n = len(rows[0])
    r = bareiss_rank(rows)
    assert r == flint_rank(rows, n)
    assert r == sparse_rank({j: x for j, x in enumerate(row) if x} for row in rows)
    assert modular_rank(rows, n) <= r


def test_bareiss_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert bareiss_rank(rows) == 1


def test_solve_exact():
    cols = [[1, 0, 1], [0, 1, 1]]
    assert solve_exact(cols, [2, 3, 5]) == [2, 3]
    assert solve_exact(cols, [1, 1, 0]) is None


def test_hermite_basis_spans_lattice():
    rng = random.Random(0)
    vecs = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(7)]
    basis = hermite_basis(vecs)
    assert len(basis) == bareiss_rank(vecs)
    for v in vecs:
        sol = solve_exact(basis, v)
        assert sol is not None and all(c.denominator == 1 for c in sol)
