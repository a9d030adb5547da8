"""Lifts, parity predictors, the G decomposition, and instance reports."""

import json
import random

import pytest

from gf2parity.gf2poly import (
    BitPoly,
    count_distinct_irreducible_factors,
    parse_poly,
)
from gf2parity.intres import IntPoly, resultant_mod8
from gf2parity.swan import (
    EVEN,
    ODD,
    SupportSpec,
    build_G,
    decompose_G,
    invalid_support_elements,
    lift_01,
    parse_support_spec,
    stickelberger_parity,
    support_poly,
    support_universe,
    theorem_parity,
    validate_support,
    verify_theorem_instance,
)

import helpers


# -- lift ----------------------------------------------------------------------

def test_lift_examples():
    f = lift_01(BitPoly.from_exponents((21, 7, 0)))
    assert f.coeff(21) == 1 and f.coeff(7) == 1 and f.coeff(0) == 1
    assert f.degree == 21
    assert sum(f.coeffs) == 3
    assert lift_01(BitPoly(0)).is_zero
    assert lift_01(BitPoly.from_exponents((1,))).coeffs == (0, 1)


# -- stickelberger parity ------------------------------------------------------

def test_stickelberger_examples():
    assert stickelberger_parity(parse_poly("x^3+x+1")) == ODD
    assert stickelberger_parity(parse_poly("x^2+x+1")) == ODD
    assert stickelberger_parity(parse_poly("x^5+x^4+1")) == EVEN


def test_stickelberger_refuses_non_squarefree():
    with pytest.raises(ValueError):
        stickelberger_parity(parse_poly("x^2+1"))


def test_stickelberger_matches_count_parity():
    rng = random.Random(71)
    for _ in range(200):
        bits = helpers.random_squarefree_bits(rng, rng.randrange(2, 14))
        f = BitPoly(bits)
        t = count_distinct_irreducible_factors(f)
        want = ODD if t % 2 else EVEN
        assert stickelberger_parity(f) == want, hex(bits)


# -- support validation and the predictor --------------------------------------

def test_validate_support_examples():
    assert not validate_support(21, {7})
    assert validate_support(7, {3})
    assert validate_support(11, {1})
    with pytest.raises(ValueError):
        validate_support(8, {1})


def test_invalid_elements_named():
    assert invalid_support_elements(21, {7, 1, 17}) == [7]
    assert invalid_support_elements(13, {1, 9}) == []


def test_theorem_parity_examples():
    assert theorem_parity(7, {3}) == ODD
    assert theorem_parity(11, {1}) == EVEN
    assert theorem_parity(13, {1, 9}) == EVEN


def test_theorem_parity_refuses_invalid():
    with pytest.raises(ValueError, match="21"):
        theorem_parity(21, {7})


def test_theorem_parity_residue_rule():
    for n in range(5, 200, 2):
        want = ODD if n % 8 in (1, 7) else EVEN
        assert theorem_parity(n, set()) == want


# -- G and its decomposition ---------------------------------------------------

def oracle_build_g(n, support):
    # expand n(nF - xF') coefficient by coefficient
    coeffs = [0] * (n + 1)
    for i in (0, n, *support):
        coeffs[i] = 1
    nf = [n * c for c in coeffs]
    xfp = [i * coeffs[i] for i in range(n + 1)]
    return [n * (a - b) for a, b in zip(nf, xfp)]


def test_build_g_examples():
    g = build_G(7, lift_01(BitPoly.from_exponents((7, 3, 0))))
    assert g.coeffs == (49, 0, 0, 28)
    g11 = build_G(11, lift_01(BitPoly.from_exponents((11, 1, 0))))
    assert g11.coeffs == (121, 110)
    for n in (5, 9, 13):
        plain = build_G(n, lift_01(BitPoly.from_exponents((n, 0))))
        assert plain.coeffs == (n * n,)


def test_build_g_matches_expansion():
    rng = random.Random(73)
    for _ in range(100):
        n = rng.randrange(5, 40, 2)
        support = set(rng.sample(range(1, n), rng.randint(0, 4)))
        F = lift_01(support_poly(n, support))
        got = build_G(n, F)
        want = oracle_build_g(n, support)
        while want and want[-1] == 0:
            want.pop()
        assert list(got.coeffs) == want


def test_build_g_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        build_G(9, lift_01(BitPoly.from_exponents((7, 3, 0))))


def test_decompose_g_examples():
    n = 7
    g = build_G(n, lift_01(support_poly(n, {3})))
    g2, g4 = decompose_G(g, n)
    assert g2.is_zero
    assert g4.coeffs == (0, 0, 0, 7)

    n = 11
    g = build_G(n, lift_01(support_poly(n, {1})))
    g2, g4 = decompose_G(g, n)
    assert g4.is_zero
    assert g2.coeffs == (0, 55)

    for n in (5, 13, 21):
        g = build_G(n, lift_01(support_poly(n, set())))
        g2, g4 = decompose_G(g, n)
        assert g2.is_zero and g4.is_zero


def test_decompose_g_identity_and_bounds():
    rng = random.Random(79)
    for _ in range(100):
        n = rng.randrange(5, 40, 2)
        universe = support_universe(n)
        support = set(rng.sample(universe, min(len(universe), rng.randint(0, 4))))
        g = build_G(n, lift_01(support_poly(n, support)))
        g2, g4 = decompose_G(g, n)
        for i in range(n + 1):
            want = (4 * g4.coeff(i) + 2 * g2.coeff(i) + (1 if i == 0 else 0)) % 8
            assert g.coeff(i) % 8 == want, (n, sorted(support), i)
        if not g2.is_zero:
            assert 3 * g2.degree < n
        if not g4.is_zero:
            assert g4.degree < n


# -- the padded resultant property ----------------------------------------------

def test_padded_resultant_unit_and_natural_equal():
    rng = random.Random(83)
    for _ in range(60):
        n = rng.randrange(7, 36, 2)
        universe = support_universe(n)
        support = set(rng.sample(universe, min(len(universe), rng.randint(0, 3))))
        F = lift_01(support_poly(n, support))
        G = build_G(n, F)
        padded = IntPoly(G.coeffs, declared_degree=n - 4)
        assert int(resultant_mod8(F, padded)) == 1
        assert int(resultant_mod8(F, G)) == int(resultant_mod8(F, padded))


# -- SupportSpec and reports ----------------------------------------------------

def test_support_spec_round_trip():
    spec = parse_support_spec("n=13;S=1,9")
    assert spec.n == 13 and spec.support == frozenset((1, 9))
    assert spec.valid
    assert spec.to_text() == "n=13;S=1,9"
    assert parse_support_spec(spec.to_text()) == spec


def test_support_spec_empty_support():
    spec = parse_support_spec("n=9;S=")
    assert spec.support == frozenset()
    assert spec.valid


def test_support_spec_records_invalidity():
    spec = parse_support_spec("n=21;S=7")
    assert not spec.valid


def test_support_spec_guards():
    with pytest.raises(ValueError):
        SupportSpec(8, frozenset({1}))
    with pytest.raises(ValueError):
        SupportSpec(3, frozenset())
    with pytest.raises(ValueError):
        parse_support_spec("n=13,S=1")
    with pytest.raises(ValueError):
        parse_support_spec("S=1;n=13")


def test_verify_examples():
    rep = verify_theorem_instance(7, {3})
    assert rep.agree and int(rep.disc_mod8) == 1 and rep.predicted_parity == ODD
    rep = verify_theorem_instance(11, {1})
    assert rep.agree and int(rep.disc_mod8) == 5 and rep.predicted_parity == EVEN
    rep = verify_theorem_instance(13, {1, 9})
    assert rep.agree and rep.squarefree
    assert rep.t_distinct == 4


def test_verify_refuses_invalid_support():
    with pytest.raises(ValueError):
        verify_theorem_instance(21, {7})


def test_report_json_shape():
    rep = verify_theorem_instance(13, {1, 9})
    line = rep.to_json_line()
    data = json.loads(line)
    assert list(data) == ["spec", "poly", "squarefree", "t_distinct",
                          "t_multiplicity", "disc_mod8", "predicted_parity",
                          "observed_parity", "agree"]
    assert data["spec"] == "n=13;S=1,9"
    assert data["poly"] == "x^13+x^9+x+1"
    assert data["disc_mod8"] == 5
    assert data["agree"] is True
