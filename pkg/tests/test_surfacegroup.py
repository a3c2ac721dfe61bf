import pytest
from hypothesis import given, settings, strategies as st

from reidpair.errors import PreconditionError, UsageError
from reidpair.exterior import Wedge2
from reidpair.groupring import GroupRingElem, a, b, zero_vector
from reidpair.surfacegroup import (
    Word,
    commutator,
    commutator_projection,
    conjugate,
    cyclic_reduction,
    fox_derivative,
    homology_class,
    standard_boundary_word,
)

G = 4
letters = st.lists(st.tuples(st.integers(1, 2 * G), st.sampled_from((1, -1))), max_size=10)
words = letters.map(lambda ls: Word(G, ls))


def test_parse_and_reduce():
    assert Word.parse(G, "a1 b1 b1' a1'").is_identity()
    assert Word.parse(G, "a1 b1 a1' b1'") == commutator(Word.alpha(G, 1), Word.beta(G, 1))
    assert str(Word.parse(G, "a2 b3'")) == "a2 b3'"
    with pytest.raises(UsageError):
        Word.parse(G, "c1")
    with pytest.raises(UsageError):
        Word.parse(G, "a9")


def test_json_forms():
    w = Word.parse(G, "a1 b2'")
    assert Word.from_json(G, w.to_json()) == w
    assert Word.from_json(G, "a1 b2'") == w
    with pytest.raises(UsageError, match=r"\$\[1\]"):
        Word.from_json(G, [{"g": 1, "s": 1}, {"g": 99, "s": 1}])


def test_homology_examples():
    assert homology_class(commutator(Word.alpha(G, 1), Word.beta(G, 1))) == zero_vector(G)
    w = Word.parse(G, "a1 a1 b3'")
    assert homology_class(w) == tuple(2 * x - y for x, y in zip(a(G, 1), b(G, 3)))


def test_commutator_projection_examples():
    c = commutator(Word.alpha(G, 1), Word.beta(G, 1))
    assert commutator_projection(c) == Wedge2.wedge(a(G, 1), b(G, 1))
    assert commutator_projection(standard_boundary_word(G)) == Wedge2.omega(G)
    with pytest.raises(PreconditionError):
        commutator_projection(Word.alpha(G, 1))


def test_fox_examples():
    w = Word.parse(G, "a1 b2 a1'")
    assert fox_derivative(w, 4) == GroupRingElem.point(a(G, 1))
    assert fox_derivative(Word.parse(G, "a1'"), 1) == GroupRingElem.point(tuple(-x for x in a(G, 1)), -1)


@settings(max_examples=80, deadline=None)
@given(words, words)
def test_word_group_laws(w, v):
    assert (w * v).inverse() == v.inverse() * w.inverse()
    assert (conjugate(v, w) * conjugate(v, w.inverse())).is_identity()
    assert homology_class(w * v) == tuple(x + y for x, y in zip(homology_class(w), homology_class(v)))


@settings(max_examples=80, deadline=None)
@given(words)
def test_fox_fundamental_identity(w):
    g = G
    total = GroupRingElem.zero(g)
    for i in range(1, g + 1):
        for k, basis in ((2 * i - 1, a(g, i)), (2 * i, b(g, i))):
            total = total + fox_derivative(w, k) * (GroupRingElem.point(basis) - GroupRingElem.point(zero_vector(g)))
    assert total == GroupRingElem.point(homology_class(w)) - GroupRingElem.point(zero_vector(g))


@settings(max_examples=60, deadline=None)
@given(words, words, words)
def test_projection_is_conjugation_invariant(u, x, y):
    w = commutator(x, y)
    assert commutator_projection(conjugate(u, w)) == commutator_projection(w)
    assert commutator_projection(w * w) == commutator_projection(w).scale(2)


@settings(max_examples=60, deadline=None)
@given(words)
def test_cyclic_reduction(w):
    u, c = cyclic_reduction(w)
    assert u * c * u.inverse() == w
    if len(c.letters) > 1:
        (k1, s1), (k2, s2) = c.letters[0], c.letters[-1]
        assert not (k1 == k2 and s1 == -s2)
