"""Exact Z[i] arithmetic: parsing, division, gcd, factorization, powers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbase.gaussint import (
    ONE,
    ZERO,
    BaseIsUnitOrZero,
    BothZero,
    DivisionByZero,
    GaussInt,
    NotDivisible,
    ZeroInput,
    canonical_associate,
    divides,
    exact_div,
    factorize,
    gauss_gcd,
    is_power_of,
)

g = GaussInt

gauss_ints = st.builds(GaussInt, st.integers(-60, 60), st.integers(-60, 60))
nonzero_gauss = gauss_ints.filter(bool)


# ---- literals ----

@pytest.mark.parametrize(
    "text,value",
    [
        ("5", g(5)),
        ("-7", g(-7)),
        ("2+1i", g(2, 1)),
        ("-1+2i", g(-1, 2)),
        ("0-1i", g(0, -1)),
        ("+3-12i", g(3, -12)),
    ],
)
def test_parse(text, value):
    assert GaussInt.parse(text) == value


@pytest.mark.parametrize("text", ["", "i", "2+i", "2 + 1i", "1.5", "2+1j", "2i"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        GaussInt.parse(text)


@given(gauss_ints)
def test_literal_roundtrip(z):
    assert GaussInt.parse(str(z)) == z


# ---- ring arithmetic ----

def test_basic_products():
    assert g(2, 1) * g(2, -1) == g(5)
    assert g(2, 1) ** 2 == g(3, 4)
    assert g(0, 1) ** 4 == ONE
    assert -g(1, -2) == g(-1, 2)
    assert g(3, 4) - 3 == g(0, 4)
    assert 1 + g(0, 1) == g(1, 1)


@given(gauss_ints, gauss_ints)
def test_norm_multiplicative(z, w):
    assert (z * w).norm() == z.norm() * w.norm()


@given(gauss_ints)
def test_norm_zero_iff_zero(z):
    assert z.norm() >= 0
    assert (z.norm() == 0) == (z == ZERO)


@given(gauss_ints, st.integers(0, 8))
def test_pow_matches_repeated_product(z, n):
    expected = ONE
    for _ in range(n):
        expected = expected * z
    assert z**n == expected


@given(gauss_ints)
def test_conj_involution(z):
    assert z.conj().conj() == z
    assert (z * z.conj()) == g(z.norm(), 0)


# ---- canonical associates ----

@given(nonzero_gauss)
def test_canonical_associate_quadrant(z):
    w = canonical_associate(z)
    assert w.re > 0 and w.im >= 0
    assert w in (z, z * g(0, 1), -z, z * g(0, -1))


def test_canonical_associate_zero():
    assert canonical_associate(ZERO) == ZERO


# ---- exact division ----

def test_exact_div_examples():
    assert g(2, 1) * g(2, -1) == g(5)  # the divisor pair multiplies back
    assert exact_div(g(5), g(2, 1)) == g(2, -1)
    assert exact_div(g(7, -9), ONE) == g(7, -9)
    assert g(2, 1) ** 2 == g(3, 4)
    assert exact_div(g(3, 4), g(2, 1)) == g(2, 1)


def test_exact_div_errors():
    with pytest.raises(NotDivisible):
        exact_div(ONE, g(2, 1))
    with pytest.raises(DivisionByZero):
        exact_div(g(5), ZERO)


@given(gauss_ints, nonzero_gauss)
def test_exact_div_inverts_product(z, w):
    assert exact_div(z * w, w) == z


# ---- gcd ----

def _brute_gcd(z, w):
    """Largest-norm common divisor by exhaustive scan (independent oracle)."""
    bound = min(n for n in (z.norm(), w.norm()) if n > 0)
    best = ONE
    r = int(bound**0.5) + 1
    for x in range(-r, r + 1):
        for y in range(-r, r + 1):
            d = g(x, y)
            if d and d.norm() <= bound and divides(d, z) and divides(d, w):
                if d.norm() > best.norm():
                    best = d
    return canonical_associate(best)


def test_gcd_examples():
    assert gauss_gcd(g(5), g(2, 1)) == g(2, 1)
    assert gauss_gcd(g(5), g(2, 1)) == _brute_gcd(g(5), g(2, 1))
    assert gauss_gcd(g(7, -3), ZERO) == canonical_associate(g(7, -3))
    assert gauss_gcd(g(2), g(1, 1)) == g(1, 1)
    assert g(0, -1) * g(1, 1) ** 2 == g(2)  # 2 = -i (1+i)^2
    with pytest.raises(BothZero):
        gauss_gcd(ZERO, ZERO)


@given(gauss_ints, gauss_ints)
def test_gcd_symmetric(z, w):
    if not z and not w:
        return
    assert gauss_gcd(z, w) == gauss_gcd(w, z)


@given(nonzero_gauss, nonzero_gauss)
def test_gcd_divides_both(z, w):
    d = gauss_gcd(z, w)
    assert divides(d, z) and divides(d, w)
    assert d.re > 0 and d.im >= 0


@settings(max_examples=30)
@given(
    st.builds(GaussInt, st.integers(-6, 6), st.integers(-6, 6)).filter(bool),
    st.builds(GaussInt, st.integers(-6, 6), st.integers(-6, 6)).filter(bool),
)
def test_gcd_matches_brute_force(z, w):
    assert gauss_gcd(z, w) == _brute_gcd(z, w)


# ---- factorization ----

def test_factorize_examples():
    f = factorize(g(3, 4))
    assert f.unit == ONE
    assert f.factors == ((g(2, 1), 2),)

    f = factorize(g(0, 1))
    assert f.unit == g(0, 1)
    assert f.factors == ()

    f = factorize(g(5))
    assert f.factors == ((g(1, 2), 1), (g(2, 1), 1))
    assert f.unit == g(0, -1)
    assert f.unit * g(1, 2) * g(2, 1) == g(5)

    with pytest.raises(ZeroInput):
        factorize(ZERO)


def _is_rational_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@settings(max_examples=150, deadline=None)
@given(st.builds(GaussInt, st.integers(-1000, 1000), st.integers(-1000, 1000)).filter(bool))
def test_factorize_roundtrip_and_primes(z):
    f = factorize(z)
    assert f.value() == z
    assert f.unit.norm() == 1
    seen = set()
    for prime, exp in f.factors:
        assert exp >= 1
        assert prime.re > 0 and prime.im >= 0
        assert prime not in seen
        seen.add(prime)
        n = prime.norm()
        # split/ramified primes have prime norm; inert ones are p with p = 3 mod 4
        if not _is_rational_prime(n):
            assert prime.im == 0 and _is_rational_prime(prime.re) and prime.re % 4 == 3
    norms = [(p.norm(), p.re, p.im) for p, _ in f.factors]
    assert norms == sorted(norms)


# ---- power membership ----

def test_is_power_of_examples():
    assert is_power_of(ONE, g(2, 1)) == 0
    assert is_power_of(g(3, 4), g(2, 1)) == 2
    assert is_power_of(g(2, 2), g(2, 1)) is None
    assert is_power_of(ZERO, g(2, 1)) is None
    with pytest.raises(BaseIsUnitOrZero):
        is_power_of(g(5), g(0, 1))
    with pytest.raises(BaseIsUnitOrZero):
        is_power_of(g(5), ZERO)


@given(
    st.builds(GaussInt, st.integers(-9, 9), st.integers(-9, 9)).filter(
        lambda z: z.norm() > 1
    ),
    st.integers(0, 10),
)
def test_is_power_of_recovers_exponent(a, n):
    assert is_power_of(a**n, a) == n


@given(
    st.builds(GaussInt, st.integers(-20, 20), st.integers(-20, 20)).filter(bool),
    st.builds(GaussInt, st.integers(-9, 9), st.integers(-9, 9)).filter(
        lambda z: z.norm() > 1
    ),
)
def test_is_power_of_sound(z, a):
    n = is_power_of(z, a)
    if n is not None:
        assert a**n == z
