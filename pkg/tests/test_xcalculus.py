import pytest

from reidpair.errors import PreconditionError
from reidpair.groupring import GroupRingElem, pairing_atom
from reidpair.xcalculus import (
    SplittingWitness,
    XExpr,
    YSym,
    ZWSym,
    apply_relation,
    express_in_W3,
    in_w1,
    in_w2,
    p_lift,
    project_group_ring,
    reduce_to_W1,
    reduce_to_W2,
    theta,
    v2_symbol,
    w3_set,
    x_q,
    xsym,
    y_canonicalize,
    y_combination_image,
    y_image,
    y_relation_residual,
    zw_defining_symbol,
    zw_image,
    zw_relations_check,
)
from reidpair.errors import ConfigurationError

G = 4


def P(h, c=1):
    return GroupRingElem.point(h, c)


def test_xq_examples(vec):
    z = vec.zero
    assert x_q(xsym(z, vec.a(1), vec.a(2))) == P(z) - P(vec.a(1)) - P(vec.a(2)) + P(vec.add(vec.a(1), vec.a(2)))
    assert not x_q(xsym(vec.b(2), vec.a(1), z))
    s, t = xsym(vec.b(3), vec.a(1), vec.a(2)), xsym(vec.b(3), vec.a(2), vec.a(1))
    assert not x_q(XExpr.single(s) - XExpr.single(t))


def test_witness_validation(vec):
    with pytest.raises(PreconditionError):
        xsym(vec.zero, vec.a(1), vec.add(vec.a(1), vec.a(2)))
    with pytest.raises(PreconditionError):
        SplittingWitness([vec.a(1), vec.a(2)], [vec.b(1), vec.b(2), vec.a(3), vec.b(3), vec.a(4), vec.b(4)])
    w = SplittingWitness.from_summand(vec.add(vec.a(1), vec.a(2)), vec.b(1))
    assert w.in_x(vec.b(1)) and not w.in_y(vec.b(1))
    assert w.in_y(vec.add(vec.b(2), vec.b(1, -1)))
    assert w.in_y(vec.a(3)) and w.in_y(vec.b(4))


def test_additivity_example(vec):
    z = vec.zero
    s = xsym(z, vec.add(vec.a(1), vec.b(1)), vec.a(2))
    got = apply_relation("additivity", s, {"x1": vec.a(1)})
    want = XExpr.single(xsym(z, vec.a(1), vec.a(2))) + XExpr.single(xsym(vec.a(1), vec.b(1), vec.a(2)))
    assert got == want
    with pytest.raises(PreconditionError):
        apply_relation("additivity", s, {"x1": vec.a(2)})


def test_inverse_and_cube(vec):
    h, k = vec.b(4), vec.b(1, 2)
    s = xsym(h, vec.a(1, -1), vec.a(2))
    got = apply_relation("inverse", s, {})
    assert got == XExpr.single(xsym(vec.add(h, vec.a(1, -1)), vec.a(1), vec.a(2))).scale(-1)
    c = xsym(vec.add(h, k), vec.a(1), vec.b(2))
    assert x_q(apply_relation("cube", c, {"k": k})) == x_q(c)


def test_reduce_to_w1_examples(vec):
    z = vec.zero
    got = reduce_to_W1(xsym(vec.a(2), vec.a(1), vec.a(2)))
    want = XExpr.single(xsym(z, vec.a(1), vec.a(2, 2))) - XExpr.single(xsym(z, vec.a(1), vec.a(2)))
    assert got == want
    same = xsym(z, vec.a(1), vec.b(3))
    assert reduce_to_W1(same) == XExpr.single(same)
    with pytest.raises(PreconditionError):
        reduce_to_W1(zw_defining_symbol(ZWSym("Z", 1, 2), G))


def test_reduce_to_w1_random_box(vec):
    import random

    rng = random.Random(11)
    for _ in range(60):
        h = tuple(rng.randint(-3, 3) for _ in range(8))
        d = rng.randint(1, 4)
        x = [0] * 8
        while not any(x):
            x[2 * d - 2], x[2 * d - 1] = rng.randint(-3, 3), rng.randint(-3, 3)
        y = [rng.randint(-3, 3) if (i // 2 + 1) != d else 0 for i in range(8)]
        if not any(y):
            continue
        s = xsym(h, x, y)
        out = reduce_to_W1(s)
        assert all(in_w1(k) for k in out.keys())
        assert x_q(out) == x_q(s)


def test_p_lift_examples(vec):
    z = vec.zero
    assert p_lift(vec.add(vec.a(1), vec.b(2))) == XExpr.single(xsym(z, vec.a(1), vec.b(2)))
    got = p_lift(vec.add(vec.a(1), vec.b(2), vec.a(3)))
    want = XExpr.single(xsym(z, vec.a(1), vec.add(vec.b(2), vec.a(3)))) + XExpr.single(xsym(z, vec.b(2), vec.a(3)))
    assert got == want
    img = x_q(got)
    assert img.augment() == 0 and not any(img.hmap())
    with pytest.raises(PreconditionError):
        p_lift(vec.a(1))


def test_projection_examples(vec):
    z = vec.zero
    assert project_group_ring(1, P(vec.add(vec.a(1), vec.b(2)))) == P(vec.a(1)) + P(vec.b(2)) - P(z)
    assert project_group_ring(1, P(vec.a(1))) == P(vec.a(1))
    assert project_group_ring(2, P(vec.a(1, 2))) == P(vec.a(1), 2) - P(z)


def test_projection_is_idempotent(vec):
    xi = P(vec.add(vec.a(1, 3), vec.b(2, -2))) + P(vec.a(1, -2), 3) + P(vec.b(4, 5))
    for level in (1, 2):
        once = project_group_ring(level, xi)
        assert project_group_ring(level, once) == once


def test_v2_projects_to_y_image(vec):
    for h in (vec.zero, vec.b(1), vec.add(vec.a(1, -2), vec.b(1, 3))):
        got = project_group_ring(1, x_q(v2_symbol(h, vec.a(1), vec.a(2))))
        want = P(h) - P(vec.add(h, vec.a(1)), 2) + P(vec.add(h, vec.a(1, 2)))
        assert got == want


def test_y_canonicalize(vec):
    assert y_canonicalize(vec.add(vec.b(1), vec.a(3)), vec.a(1)) == YSym(1, vec.b(1), vec.a(1))
    with pytest.raises(PreconditionError):
        y_canonicalize(vec.zero, vec.add(vec.a(1), vec.a(2)))


def test_y_relation_residuals(vec):
    for h in (vec.zero, vec.a(2, -1), vec.add(vec.a(2, 3), vec.b(2, -2))):
        assert not y_relation_residual(2, h)


def test_reduce_to_w2_examples(vec):
    z = vec.zero
    got = reduce_to_W2(YSym(1, vec.a(1, 2), vec.b(1)))
    want = {YSym(1, z, vec.a(1)): 1, YSym(1, vec.b(1), vec.a(1)): -2, YSym(1, vec.b(1, 2), vec.a(1)): 1,
            YSym(1, z, vec.b(1)): -1, YSym(1, vec.a(1), vec.b(1)): 2}
    assert got == want
    assert reduce_to_W2(YSym(1, z, vec.b(1))) == {YSym(1, z, vec.b(1)): 1}
    s = YSym(1, vec.a(1, -1), vec.b(1))
    out = reduce_to_W2(s)
    assert all(in_w2(t) for t in out)
    assert y_combination_image(out, G) == y_image(s)


def test_zw_examples(vec):
    assert zw_image(ZWSym("Z", 1, 2), G) == theta(G, 1) - theta(G, 2)
    assert zw_image(ZWSym("W", 1, 2), G) == theta(G, 1) + theta(G, 2)
    pipeline = project_group_ring(2, x_q(xsym_zw(vec)))
    assert pipeline == theta(G, 1) - theta(G, 2)
    with pytest.raises(PreconditionError):
        ZWSym("Z", 2, 2)
    assert theta(G, 2) == pairing_atom(vec.zero, vec.a(2), vec.b(2))


def xsym_zw(vec):
    return zw_defining_symbol(ZWSym("Z", 1, 2), G)


def test_w3_expressions():
    for kind in "ZW":
        for d in range(1, G + 1):
            for e in range(1, G + 1):
                if d != e:
                    comb = express_in_W3(kind, d, e)
                    assert set(comb) <= set(w3_set(G))
                    total = sum((zw_image(s, G).scale(c) for s, c in comb.items()), GroupRingElem.zero(G))
                    assert total == zw_image(ZWSym(kind, d, e), G)


def test_zw_relations_check_genus_guard():
    rep = zw_relations_check(4)
    assert rep["failures"] == [] and rep["w3_rank"] == 4
    with pytest.raises(ConfigurationError):
        zw_relations_check(3)


def test_xexpr_json_roundtrip(vec):
    e = XExpr.single(zw_defining_symbol(ZWSym("W", 2, 3), G)).scale(3) + XExpr.single(xsym(vec.b(2), vec.a(1), vec.b(4)))
    assert XExpr.from_json(e.to_json()) == e
