"""Smoke tests for the python module.

End-to-end checks only; the C++ test binaries carry the detailed coverage.
"""

import json

import pytest

import detideal

HANKEL_VARS = ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"]


def catalecticant(cols):
    """Stack the a-band over the b-band, each band Hankel with `cols` columns."""
    rows = []
    for stem in ("a", "b"):
        band = [f"{stem}{k}" for k in range(1, 6)]
        for i in range(6 - cols):
            rows.append(band[i : i + cols])
    return rows


def test_groebner_twisted_cubic():
    gb = detideal.groebner_basis(
        ["x", "y", "z", "w"], "gf:32003", ["x*z - y^2", "y*w - z^2", "x*w - y*z"]
    )
    assert len(gb) == 3
    assert detideal.dimension(["x", "y", "z", "w"], "gf:32003", gb) == 2


def test_membership_and_normal_form():
    vars_ = ["x", "y", "z", "w"]
    gens = ["x*z - y^2", "y*w - z^2", "x*w - y*z"]
    assert detideal.is_member("x*z - y^2", vars_, "gf:32003", gens)
    assert not detideal.is_member("x", vars_, "gf:32003", gens)
    # Under lex the leading term of x*z - y^2 is x*z, so x*z reduces to y^2.
    assert detideal.normal_form("x*z", vars_, "gf:32003", gens, order="lex") == "y^2"


def test_rational_field():
    assert detideal.dimension(["x", "y"], "q", ["x^2 - y"]) == 1
    assert detideal.height(["x", "y"], "q", ["x^2 - y"]) == 1


def test_minors_count():
    twos = detideal.minors(catalecticant(5), HANKEL_VARS, "gf:32003", 2)
    assert len(twos) == 10


def test_decomposition():
    m4 = detideal.minors(catalecticant(4), HANKEL_VARS, "gf:32003", 3)
    i2m5 = detideal.minors(catalecticant(5), HANKEL_VARS, "gf:32003", 2)
    i3m3 = detideal.minors(catalecticant(3), HANKEL_VARS, "gf:32003", 3)
    lhs = detideal.groebner_basis(HANKEL_VARS, "gf:32003", m4)
    rhs = detideal.groebner_basis(
        HANKEL_VARS, "gf:32003", detideal.intersect(HANKEL_VARS, "gf:32003", i2m5, i3m3)
    )
    assert lhs == rhs


def test_check_prime_sequence():
    pairs = [
        ((2, 1), (1, 2)),
        ((2, 2), (1, 3)),
        ((3, 1), (2, 2)),
        ((3, 2), (2, 3)),
        ((5, 1), (4, 2)),
        ((5, 2), (4, 3)),
        ((6, 1), (5, 2)),
        ((6, 2), (5, 3)),
    ]
    report = detideal.check_prime_sequence(6, 3, 3, pairs)
    assert report["all_hold"]
    assert report["predicted_dim"] == 6
    assert report["dim"] == 6
    assert report["dim_consistent"]


def test_bad_sequence_rejected():
    # Repeating an alpha violates condition (i).
    pairs = [((2, 1), (1, 2)), ((2, 1), (1, 3))]
    report = detideal.check_prime_sequence(6, 3, 3, pairs)
    assert not report["cond_i"]
    assert not report["all_hold"]


def test_verify_claims_subset():
    report = json.loads(detideal.verify_claims(["cor32", "thm36"]))
    assert [r["id"] for r in report] == ["cor32", "thm36"]
    assert all(r["status"] == "pass" for r in report)
    assert report[0]["citation"] == "Corollary 3.2"


def test_verify_claims_deterministic():
    a = detideal.verify_claims(["prop35"])
    b = detideal.verify_claims(["prop35"])
    assert a == b


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        detideal.groebner_basis(["x"], "gf:32003", ["x +"])
    with pytest.raises(Exception):
        detideal.dimension(["x"], "gf:6", ["x"])
