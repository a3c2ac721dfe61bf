from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reidpair.errors import StructuralError, UsageError
from reidpair.groupring import GroupRingElem, pairing_atom, zero_vector

G = 4
vectors = st.tuples(*[st.integers(-3, 3)] * (2 * G))
elems = st.dictionaries(vectors, st.fractions(max_denominator=5), max_size=5).map(lambda d: GroupRingElem(G, d))


def P(h, c=1):
    return GroupRingElem.point(h, c)


def test_cancellation_gives_empty_map(vec):
    s = P(vec.zero) + P(vec.zero, -1)
    assert not s and s.terms == {}


def test_multiply_is_group_law(vec):
    assert P(vec.a(1)) * P(vec.b(1)) == P(vec.add(vec.a(1), vec.b(1)))


def test_scale_by_half(vec):
    got = (P(vec.a(1)) - P(vec.b(1))).scale(Fraction(1, 2))
    assert got.coeff(vec.a(1)) == Fraction(1, 2) and got.coeff(vec.b(1)) == Fraction(-1, 2)


def test_translate(vec):
    xi = P(vec.zero) - P(vec.b(2))
    assert xi.translate(vec.a(1)) == P(vec.a(1)) - P(vec.add(vec.a(1), vec.b(2)))
    assert xi.translate(vec.zero) == xi


def test_augmentation_and_hmap(vec):
    atom = pairing_atom(vec.b(3), vec.a(1), vec.add(vec.a(2), vec.b(4)))
    assert atom.augment() == 0
    assert not any(atom.hmap())
    assert (P(vec.a(1), 2) + P(vec.b(1), 3)).augment() == 5


def test_involution_examples(vec):
    xi = P(vec.a(1)) - P(vec.b(1), 2)
    assert xi.involution() == P(vec.a(1, -1)) - P(vec.b(1, -1), 2)
    assert P(vec.zero).involution() == P(vec.zero)


def test_genus_mismatch():
    with pytest.raises(StructuralError):
        GroupRingElem.point(zero_vector(4)) + GroupRingElem.point(zero_vector(5))
    with pytest.raises(StructuralError):
        GroupRingElem(4, {(0, 0): 1})


def test_json_rejects_bad_coefficient():
    with pytest.raises(UsageError, match=r"terms\[0\]\.c"):
        GroupRingElem.from_json({"genus": 4, "terms": [{"h": [0] * 8, "c": "x"}]})


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@settings(max_examples=60, deadline=None)
@given(elems, elems, vectors)
def test_involution_and_translation_laws(x, y, h):
    assert x.involution().involution() == x
    assert (x * y).involution() == x.involution() * y.involution()
    assert x.translate(h).translate(tuple(-c for c in h)) == x
    assert x.translate(h) == P(h) * x
    assert (x * y).augment() == x.augment() * y.augment()


@settings(max_examples=40, deadline=None)
@given(elems)
def test_json_roundtrip(x):
    assert GroupRingElem.from_json(x.to_json()) == x
