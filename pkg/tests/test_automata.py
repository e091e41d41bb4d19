"""DFA engine, oracle languages, and the finite-evidence harnesses."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbase.automata import (
    AlphabetMismatch,
    BaseNotRealOdd,
    BudgetExceeded,
    Dfa,
    EmptyWord,
    complement,
    dfa_from_json,
    dfa_oracle_disagreement,
    dfa_to_json,
    equivalent,
    integers_dfa,
    integers_oracle,
    is_empty,
    minimize,
    powers_dfa,
    powers_oracle,
    product,
    residual_signatures,
    run,
    zero_pump_probe,
)
from gaussbase.gaussint import ONE, ZERO, GaussInt
from gaussbase.numeration import ForeignDigit, canonical_digit_set, encode

g = GaussInt
B = g(2, 1)
D5 = canonical_digit_set(B)


@st.composite
def dfas(draw, alphabet=D5, max_states=5):
    n = draw(st.integers(1, max_states))
    width = len(alphabet.digits)
    rows = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(width)) for _ in range(n)
    )
    accepting = frozenset(s for s in range(n) if draw(st.booleans()))
    return Dfa(alphabet, 0, rows, accepting)


# ---- construction and runs ----

def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(D5, 3, ((0,) * 5,), frozenset())
    with pytest.raises(ValueError):
        Dfa(D5, 0, ((0, 0),), frozenset())
    with pytest.raises(ValueError):
        Dfa(D5, 0, ((0, 0, 0, 0, 7),), frozenset())
    with pytest.raises(ValueError):
        Dfa(D5, 0, ((0,) * 5,), frozenset({4}))


def test_powers_dfa_runs():
    d = powers_dfa(B)
    assert run(d, (g(1),))
    assert run(d, (g(1), g(0)))
    assert run(d, (g(1), g(0), g(0)))
    assert not run(d, ())
    assert not run(d, (g(0, 1), g(0)))
    assert not run(d, (g(1), g(0, -1)))
    with pytest.raises(ForeignDigit):
        run(d, (g(7),))


def test_minimize_powers_dfa_has_three_states():
    assert minimize(powers_dfa(B)).state_count == 3


def test_integers_dfa_base3():
    d = integers_dfa(3)
    D9 = canonical_digit_set(g(3))
    for n in range(-100, 101):
        assert run(d, encode(g(n), D9))
    assert not run(d, encode(g(0, 1), D9))
    assert run(d, ())


@pytest.mark.parametrize("base", [4, 2, g(2, 1), g(-3, 0)])
def test_integers_dfa_rejects_bad_bases(base):
    with pytest.raises(BaseNotRealOdd):
        integers_dfa(base)


# ---- boolean algebra ----

@settings(max_examples=40, deadline=None)
@given(dfas(), dfas())
def test_de_morgan(d1, d2):
    lhs = complement(product(d1, d2, "and"))
    rhs = product(complement(d1), complement(d2), "or")
    assert equivalent(lhs, rhs)


@settings(max_examples=40, deadline=None)
@given(dfas())
def test_diff_with_self_is_empty(d):
    assert is_empty(product(d, d, "diff"))
    assert equivalent(d, d)


@settings(max_examples=40, deadline=None)
@given(dfas())
def test_minimize_preserves_language_and_is_idempotent(d):
    m = minimize(d)
    assert equivalent(d, m)
    assert minimize(m) == m
    assert m.state_count <= d.state_count


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        product(powers_dfa(B), powers_dfa(g(3)), "and")


# ---- oracles ----

def test_powers_oracle_membership():
    L = powers_oracle(B, D5)
    assert L.membership((g(1),))
    assert L.membership((g(1), g(0)))
    assert not L.membership(())
    assert not L.membership((g(0), g(1)))  # invalid leading zero
    assert not L.membership((g(1), g(0, -1)))
    L2 = powers_oracle(g(1, 2), D5)
    assert L2.membership(encode(g(1, 2) ** 2, D5))


def test_integers_oracle_membership():
    L = integers_oracle(D5)
    assert L.membership(encode(g(5), D5))
    assert L.membership(())
    assert not L.membership(encode(g(0, 1), D5))


# ---- residual signatures ----

def test_residuals_depth_zero_is_one_class():
    L = powers_oracle(B, D5)
    report = residual_signatures(L, 0, 2)
    assert report.class_count == 1
    assert report.representatives == ((),)


def test_residuals_control_stays_small():
    L = powers_oracle(B, D5)
    for k in (2, 4, 6):
        for e in (1, 3):
            assert residual_signatures(L, k, e).class_count <= 4


def test_residuals_grow_for_independent_pair():
    L = powers_oracle(g(1, 2), D5)
    counts = [residual_signatures(L, k, 3).class_count for k in (2, 4, 6)]
    assert counts == [8, 15, 19]  # strictly increasing evidence of non-regularity
    assert residual_signatures(L, 6, 3).class_count > residual_signatures(L, 4, 3).class_count


def test_residuals_monotone_in_depths():
    L = integers_oracle(D5)
    counts = {
        (k, e): residual_signatures(L, k, e).class_count
        for k in range(4)
        for e in range(4)
    }
    for k in range(3):
        for e in range(4):
            assert counts[(k, e)] <= counts[(k + 1, e)]
    for k in range(4):
        for e in range(3):
            assert counts[(k, e)] <= counts[(k, e + 1)]


def test_residuals_lower_bound_dfa_size():
    # powers_dfa agrees with its oracle everywhere, so class counts
    # can never exceed its 3 live states
    L = powers_oracle(B, D5)
    for k, e in ((2, 2), (4, 3), (6, 2)):
        assert residual_signatures(L, k, e).class_count <= minimize(powers_dfa(B)).state_count


def test_residuals_budget():
    with pytest.raises(BudgetExceeded):
        residual_signatures(powers_oracle(B, D5), 20, 10)


# ---- zero pumping ----

def test_pump_powers_stay_members():
    L = powers_oracle(B, D5)
    assert zero_pump_probe(L, (g(1), g(0)), 3, 6) == (True,) * 7


def test_pump_base3_powers_are_integers():
    D9 = canonical_digit_set(g(3))
    L = integers_oracle(D9)
    probe = zero_pump_probe(L, encode(g(9), D9), 2, 5)
    assert probe == (True,) * 6


def test_pump_escapes_integers_over_complex_base():
    L = integers_oracle(D5)
    probe = zero_pump_probe(L, encode(g(5), D5), 1, 8)
    assert probe[0] is True
    assert False in probe


def test_pump_argument_validation():
    L = integers_oracle(D5)
    with pytest.raises(EmptyWord):
        zero_pump_probe(L, (), 1, 3)
    with pytest.raises(ValueError):
        zero_pump_probe(L, (ZERO, g(1)), 1, 3)


# ---- disagreement search ----

def test_disagreement_none_for_matching_pairs():
    assert dfa_oracle_disagreement(powers_dfa(B), powers_oracle(B, D5), 6) is None
    D9 = canonical_digit_set(g(3))
    assert dfa_oracle_disagreement(integers_dfa(3), integers_oracle(D9), 4) is None


def test_disagreement_finds_lex_least_witness():
    word = dfa_oracle_disagreement(powers_dfa(B), powers_oracle(g(1, 2), D5), 4)
    assert word == (g(1), g(0))  # b itself is not a power of 1+2i


def test_disagreement_budget_and_alphabets():
    with pytest.raises(BudgetExceeded):
        dfa_oracle_disagreement(powers_dfa(B), powers_oracle(B, D5), 15)
    with pytest.raises(AlphabetMismatch):
        dfa_oracle_disagreement(powers_dfa(g(3)), powers_oracle(B, D5), 3)


# ---- serialization ----

def test_json_shape():
    obj = dfa_to_json(powers_dfa(B))
    assert obj["base"] == "2+1i"
    assert obj["digits"] == ["-1", "0-1i", "0", "0+1i", "1"]
    assert obj["states"] == 3
    assert obj["initial"] == 0
    assert obj["accepting"] == [1]
    assert len(obj["transitions"]) == 3


@settings(max_examples=50, deadline=None)
@given(dfas())
def test_json_roundtrip(d):
    assert dfa_from_json(dfa_to_json(d)) == d


def test_json_state_count_validated():
    obj = dfa_to_json(powers_dfa(B))
    obj["states"] = 5
    with pytest.raises(ValueError):
        dfa_from_json(obj)
