import random

import pytest

from reidpair.errors import PreconditionError
from reidpair.groupring import a, pairing_atom, zero_vector
from reidpair.reidemeister import (
    CROSSING_SIGN,
    LABEL_SIGN,
    CoverClass,
    calibration_battery,
    closed_form_pairing,
    cover_rewrite,
    oracle_pairing,
    pair_with_cover_class,
)
from reidpair.surfacegroup import Word, commutator

G = 4
Z = zero_vector(G)
A = lambda i: Word.alpha(G, i)
B = lambda i: Word.beta(G, i)


def test_closed_form_examples():
    want = pairing_atom(Z, a(G, 1), a(G, 2))
    assert closed_form_pairing("separating-vs-commutator", Z, a(G, 1), a(G, 2)) == want
    assert not closed_form_pairing("separating-vs-commutator", Z, Z, a(G, 2))
    assert not closed_form_pairing("separated", genus=G)


def test_oracle_reference_values():
    assert not oracle_pairing(commutator(A(1), B(1)), commutator(A(2), B(2)), Z, Z)
    got = oracle_pairing(commutator(A(1), B(1)), commutator(A(1), A(2)), Z, Z)
    assert got == pairing_atom(Z, a(G, 1), a(G, 2))


def test_oracle_rejects_nonzero_homology():
    with pytest.raises(PreconditionError):
        oracle_pairing(A(1), commutator(A(2), B(2)), Z, Z)


def test_calibration_is_unique():
    assert (CROSSING_SIGN, LABEL_SIGN) == (1, 1)
    assert len(calibration_battery(G)) >= 4


def test_skew_hermitian_spot():
    x, y = commutator(A(1), B(1)), commutator(A(1), A(2))
    assert oracle_pairing(y, x, Z, Z) == -oracle_pairing(x, y, Z, Z).involution()


def test_oracle_on_own_boundary_is_zero():
    # a separating curve pairs trivially with itself
    d = commutator(A(1), B(1))
    assert not oracle_pairing(d, d, Z, Z)


def test_rewrite_examples():
    h = (1, -1, 0, 2, 0, 0, 0, 0)
    assert cover_rewrite(CoverClass.comm(B(1), A(1), Z)) == CoverClass.comm(A(1), B(1), Z, -1)
    got = cover_rewrite(CoverClass.comm(A(1) * A(2), B(1), h))
    h2 = tuple(x + y for x, y in zip(h, a(G, 1)))
    assert got == CoverClass.comm(A(1), B(1), h) + CoverClass.comm(A(2), B(1), h2)
    got = cover_rewrite(CoverClass.comm(A(1).inverse(), B(1), h))
    assert got == CoverClass.comm(A(1), B(1), tuple(x - y for x, y in zip(h, a(G, 1))), -1)


def test_rewrite_is_idempotent_and_preserves_values():
    rng = random.Random(3)
    gens = list(range(1, 2 * G + 1))

    def word(n):
        return Word(G, [(rng.choice(gens), rng.choice((1, -1))) for _ in range(n)])

    for _ in range(25):
        cc = CoverClass.comm(word(3), word(3), tuple(rng.randint(-2, 2) for _ in range(2 * G)), rng.randint(1, 3))
        cc = cc + CoverClass.elt(commutator(word(2), word(2)), Z)
        nf = cover_rewrite(cc)
        assert nf.is_normal()
        assert cover_rewrite(nf) == nf
        ref = commutator(word(2), word(2))
        assert pair_with_cover_class(ref, Z, cc) == pair_with_cover_class(ref, Z, nf)


def test_cover_class_json_roundtrip():
    cc = CoverClass.comm(A(1) * B(3), A(2), (0, 1, 0, 0, 0, 0, 0, -1), 3) + CoverClass.elt(commutator(A(1), B(2)), Z)
    assert CoverClass.from_json(cc.to_json()) == cc


def test_elt_requires_commutator():
    with pytest.raises(PreconditionError):
        CoverClass.elt(A(1), Z)
