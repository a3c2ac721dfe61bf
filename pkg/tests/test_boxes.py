from reidpair import boxes


def test_w1_certificate_matches_exact_elimination():
    cert = boxes.w1_pivot_certificate(4, 1)
    assert cert["rows"] == boxes.w1_count(4, 1)
    assert cert["full_rank"]
    assert boxes.w1_rank_exact(4, 1) == cert["rows"]


def test_line_claim():
    for bound in (2, 3, 6):
        assert boxes.line_claim(bound)["ok"]


def test_w2_box_small():
    n, r = boxes.w2_rank(4, 2)
    assert n == r
    assert all(x["ok"] for x in boxes.w2_line_checks(4, 2))


def test_w3_rank():
    assert boxes.w3_rank(4) == (4, 4)
    assert boxes.w3_rank(5) == (5, 5)


def test_probe_generators_are_valid_shapes():
    shapes = boxes.probe_generators(4)
    assert all(any(x) and any(y) for x, y in shapes)
