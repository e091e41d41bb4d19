"""End-to-end verification suite: ten checks with frozen expectations.

Each check re-derives its expected values from independent enumeration
(lattice scans, exhaustive word enumeration, explicit re-verification of
witnesses) rather than trusting the operation under test, measures its
runtime against a fixed budget, and reports structured details.  The CLI
`verify` command and the test suite both run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .automata import (
    Dfa,
    complement,
    dfa_from_json,
    dfa_oracle_disagreement,
    dfa_to_json,
    equivalent,
    integers_dfa,
    integers_oracle,
    minimize,
    powers_dfa,
    powers_oracle,
    product,
    residual_signatures,
    zero_pump_probe,
)
from .dependence import mult_dependent, prefix_extension
from .gaussint import ONE, ZERO, GaussInt, divides
from .numeration import (
    DigitSet,
    canonical_digit_set,
    check_linked,
    decode,
    encode,
    lattice_disc,
    length_bound,
    max_length_in_disc,
    power_digit_set,
    recode,
    terminates_on_disc,
    word_length,
)

#: Bases exercised by the representation checks.
SCAN_BASES = (
    GaussInt(2, 1),
    GaussInt(-1, 2),
    GaussInt(-2, 1),
    GaussInt(3, 0),
    GaussInt(1, 3),
)

_SMALL_DIGITS = (
    GaussInt(-1, 0),
    GaussInt(0, -1),
    GaussInt(0, 0),
    GaussInt(0, 1),
    GaussInt(1, 0),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    budget_seconds: float | None
    details: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{verdict}  {self.name}  ({self.seconds:.2f}s)"
        if not self.passed and self.failures:
            line += f"  [{self.failures[0]}]"
        return line


class _Check:
    """Collects failures and details for one named check."""

    def __init__(self, name: str, budget_seconds: float | None) -> None:
        self.name = name
        self.budget = budget_seconds
        self.failures: list[str] = []
        self.details: dict = {}
        self.started = time.perf_counter()

    def expect(self, ok: bool, message: str) -> None:
        if not ok:
            self.failures.append(message)

    def finish(self) -> CheckResult:
        elapsed = time.perf_counter() - self.started
        if self.budget is not None and elapsed >= self.budget:
            self.failures.append(f"runtime {elapsed:.2f}s exceeded {self.budget:.0f}s")
        return CheckResult(
            name=self.name,
            passed=not self.failures,
            seconds=elapsed,
            budget_seconds=self.budget,
            details=self.details,
            failures=self.failures,
        )


def check_digit_sets() -> CheckResult:
    """Canonical digit sets: the three norm-5 bases, and every base of norm 5..100."""
    c = _Check("1 digit sets", budget_seconds=5.0)
    for b in (GaussInt(2, 1), GaussInt(-1, 2), GaussInt(-2, 1)):
        got = canonical_digit_set(b).digits
        c.expect(got == _SMALL_DIGITS, f"canonical digits of {b}: {got}")
    scanned = 0
    for b in lattice_disc(100):
        n = b.norm()
        if n < 5:
            continue
        D = canonical_digit_set(b)
        c.expect(len(D.digits) == n, f"|D| != norm for base {b}")
        digits = D.digits
        for i in range(len(digits)):
            for j in range(i + 1, len(digits)):
                if divides(b, digits[i] - digits[j]):
                    c.expect(False, f"congruent digits {digits[i]}, {digits[j]} mod {b}")
        scanned += 1
    c.details["bases_scanned"] = scanned
    return c.finish()


def check_uniqueness() -> CheckResult:
    """decode(encode(z)) = z on a disc per base; encode(decode(w)) = w for short words."""
    c = _Check("2 representation uniqueness", budget_seconds=None)
    per_base = {}
    for b in SCAN_BASES:
        D = canonical_digit_set(b)
        t0 = time.perf_counter()
        bad = sum(1 for z in lattice_disc(10**4) if decode(encode(z, D), D) != z)
        dt = time.perf_counter() - t0
        per_base[str(b)] = round(dt, 2)
        c.expect(bad == 0, f"{bad} roundtrip failures for base {b}")
        c.expect(dt < 10.0, f"base {b} disc took {dt:.2f}s (>= 10s)")
    D = canonical_digit_set(GaussInt(2, 1))
    words = [()]
    for length in range(1, 6):
        for lead in D.digits:
            if lead == ZERO:
                continue
            for rest in itertools.product(D.digits, repeat=length - 1):
                words.append((lead,) + rest)
    bad_words = [w for w in words if encode(decode(w, D), D) != w]
    c.expect(not bad_words, f"{len(bad_words)} word roundtrip failures")
    c.details["seconds_per_base"] = per_base
    c.details["words_checked"] = len(words)
    return c.finish()


def check_length_bound() -> CheckResult:
    """Certified word-length bound, plus the disc-shrinking recursion on maxima."""
    c = _Check("3 length bound", budget_seconds=None)
    detail = {}
    for b in SCAN_BASES:
        D = canonical_digit_set(b)
        n = b.norm()
        m3 = max_length_in_disc(9, D)
        lb = length_bound(b)
        c.expect(lb.m3 == m3, f"length_bound(m3) mismatch for {b}")
        nm3 = n**m3
        nk = [n**k for k in range(13)]
        max_at = [0] * 6  # running max word length within norm <= n^k, k = 1..5
        thresholds = [n**k for k in range(1, 6)]
        for z in lattice_disc(n**5):
            n2 = z.norm()
            ell = word_length(z, D)
            for k, thr in enumerate(thresholds, start=1):
                if n2 <= thr and ell > max_at[k]:
                    max_at[k] = ell
            if n2 <= 10**4:
                for k in range(13):
                    if n2 * nm3 <= nk[k] and ell > k:
                        c.expect(False, f"bound broken: base {b}, z={z}, k={k}")
        for k in range(1, 6):
            c.expect(
                max_at[k] <= m3 + k - 1,
                f"recursion broken for {b}: M(n^{k})={max_at[k]} > {m3 + k - 1}",
            )
        sample = GaussInt(7, -3)
        c.expect(
            lb.within_bound(sample, 12) == (sample.norm() * nm3 <= nk[12]),
            f"within_bound disagrees with raw predicate for {b}",
        )
        detail[str(b)] = {"m3": m3, "max_at_nk": max_at[1:]}
    c.details["per_base"] = detail
    return c.finish()


def check_linking() -> CheckResult:
    """Reflexive linking for the scan bases; the {0..4} digit set links to canonical."""
    c = _Check("4 digit-set linking", budget_seconds=30.0)
    for b in SCAN_BASES:
        D = canonical_digit_set(b)
        c.expect(check_linked(D, D) is not None, f"self-link failed for {b}")
    base = GaussInt(-2, 1)
    alt = DigitSet(base, tuple(GaussInt(k, 0) for k in range(5)))
    c.expect(terminates_on_disc(alt), "termination probe failed for {0..4}")
    cert = check_linked(alt, canonical_digit_set(base))
    c.expect(cert is not None, "linking {0..4} -> canonical failed")
    if cert is not None:
        c.details["envelope_size"] = len(cert.envelope)
    return c.finish()


def check_power_recoding() -> CheckResult:
    """Base b vs b^j: recoded words decode unchanged; power digit set size."""
    c = _Check("5 base-power recoding", budget_seconds=None)
    D = canonical_digit_set(GaussInt(2, 1))
    c.expect(len(power_digit_set(D, 2).digits) == 25, "|power digit set|^2 != 25")
    for j in (2, 3):
        P = power_digit_set(D, j)
        bad = sum(
            1 for z in lattice_disc(2500) if decode(recode(encode(z, D), D, j), P) != z
        )
        c.expect(bad == 0, f"{bad} recode roundtrip failures for j={j}")
    return c.finish()


def check_dependence() -> CheckResult:
    """Dependence verdicts on fixed pairs and 50 constructed dependent pairs."""
    c = _Check("6 multiplicative dependence", budget_seconds=5.0)
    v = mult_dependent(GaussInt(3, 4), GaussInt(2, 1))
    c.expect((v.dependent, v.r, v.s) == (True, 1, 2), f"(3+4i, 2+i) gave {v}")
    v = mult_dependent(GaussInt(2, 0), GaussInt(4, 0))
    c.expect((v.dependent, v.r, v.s) == (True, 2, 1), f"(2, 4) gave {v}")
    v = mult_dependent(GaussInt(2, 1), GaussInt(1, 2))
    c.expect(not v.dependent, f"(2+i, 1+2i) gave {v}")
    rng = random.Random(20260808)
    checked = 0
    while checked < 50:
        gamma = GaussInt(rng.randint(-6, 6), rng.randint(-6, 6))
        if gamma.norm() <= 1:
            continue
        p, q = rng.randint(1, 4), rng.randint(1, 4)
        a, b = gamma**p, gamma**q
        verdict = mult_dependent(a, b)
        c.expect(verdict.dependent, f"({gamma}^{p}, {gamma}^{q}) judged independent")
        if verdict.dependent:
            c.expect(
                a**verdict.r == b**verdict.s,
                f"verdict ({verdict.r},{verdict.s}) fails re-verification for ({a},{b})",
            )
        checked += 1
    c.details["random_pairs"] = checked
    return c.finish()


def check_prefix_witnesses() -> CheckResult:
    """Prefix-extension witnesses for u = 1 and u = b, re-verified from scratch."""
    c = _Check("7 prefix extension", budget_seconds=60.0)
    a, b = GaussInt(1, 2), GaussInt(2, 1)
    D = canonical_digit_set(b)
    for u, want_prefix in ((ONE, (ONE,)), (b, (ONE, ZERO))):
        w = prefix_extension(a, b, u, n_min=3, budget=256)
        c.expect(w is not None, f"no witness for u={u} within budget")
        if w is None:
            continue
        c.expect(a**w.m == u * b**w.n + w.z, f"identity fails for u={u}")
        c.expect(word_length(w.z, D) <= w.n, f"word length of z exceeds n for u={u}")
        word_am = encode(a**w.m, D)
        word_u = encode(u, D)
        c.expect(word_am[: len(word_u)] == word_u, f"prefix property fails for u={u}")
        c.expect(
            word_am[: len(want_prefix)] == want_prefix,
            f"expected leading digits {want_prefix} for u={u}",
        )
        c.details[f"u={u}"] = {"m": w.m, "n": w.n, "z": str(w.z)}
    return c.finish()


def check_residual_evidence() -> CheckResult:
    """Residual-class growth separates independent pairs from dependent controls."""
    c = _Check("8 residual evidence", budget_seconds=120.0)
    b = GaussInt(2, 1)
    D = canonical_digit_set(b)
    target = powers_oracle(GaussInt(1, 2), D)
    control = powers_oracle(b, D)
    target_counts = [residual_signatures(target, k, 3).class_count for k in (2, 4, 6)]
    control_counts = [residual_signatures(control, k, 3).class_count for k in (2, 4, 6)]
    c.expect(
        target_counts[0] < target_counts[1] < target_counts[2],
        f"independent pair counts not strictly increasing: {target_counts}",
    )
    c.expect(
        all(n <= 4 for n in control_counts),
        f"dependent control counts exceed 4: {control_counts}",
    )
    c.expect(
        dfa_oracle_disagreement(powers_dfa(b), control, 8) is None,
        "powers DFA disagrees with its own oracle within length 8",
    )
    c.details["target_counts"] = target_counts
    c.details["control_counts"] = control_counts
    return c.finish()


def check_real_base() -> CheckResult:
    """Integer words over base 3 are regular; over base 2+i zero-pumping escapes Z."""
    c = _Check("9 real-base words", budget_seconds=30.0)
    c.expect(
        dfa_oracle_disagreement(integers_dfa(3), integers_oracle(canonical_digit_set(GaussInt(3, 0))), 5)
        is None,
        "integers DFA disagrees with the oracle within length 5",
    )
    D = canonical_digit_set(GaussInt(2, 1))
    probe = zero_pump_probe(integers_oracle(D), encode(GaussInt(5, 0), D), 1, 8)
    c.expect(probe[0], "unpumped word must be a member")
    c.expect(not all(probe), f"pump probe stayed all-true: {probe}")
    c.details["pump_probe"] = list(probe)
    return c.finish()


def random_dfa(alphabet: DigitSet, rng: random.Random, max_states: int = 6) -> Dfa:
    """A random total DFA over the given alphabet (deterministic per rng state)."""
    n = rng.randint(1, max_states)
    width = len(alphabet.digits)
    rows = tuple(
        tuple(rng.randrange(n) for _ in range(width)) for _ in range(n)
    )
    accepting = frozenset(s for s in range(n) if rng.random() < 0.5)
    return Dfa(alphabet, 0, rows, accepting)


def check_dfa_engine() -> CheckResult:
    """Minimization, De Morgan duality, and JSON round-trips on random DFAs."""
    c = _Check("10 DFA engine", budget_seconds=10.0)
    D = canonical_digit_set(GaussInt(2, 1))
    rng = random.Random(1905)
    dfas = [random_dfa(D, rng) for _ in range(100)]
    for i, d in enumerate(dfas):
        m = minimize(d)
        c.expect(equivalent(d, m), f"minimize changed the language of dfa #{i}")
        c.expect(minimize(m) == m, f"minimize not idempotent on dfa #{i}")
        c.expect(dfa_from_json(dfa_to_json(d)) == d, f"JSON roundtrip broke dfa #{i}")
    for i in range(0, 100, 2):
        d1, d2 = dfas[i], dfas[i + 1]
        lhs = complement(product(d1, d2, "and"))
        rhs = product(complement(d1), complement(d2), "or")
        c.expect(equivalent(lhs, rhs), f"De Morgan fails on pair #{i}")
    return c.finish()


ALL_CHECKS = (
    check_digit_sets,
    check_uniqueness,
    check_length_bound,
    check_linking,
    check_power_recoding,
    check_dependence,
    check_prefix_witnesses,
    check_residual_evidence,
    check_real_base,
    check_dfa_engine,
)


def run_all(verbose: bool = False) -> list[CheckResult]:
    results = []
    for check in ALL_CHECKS:
        result = check()
        results.append(result)
        if verbose:
            print(result.summary_line())
    return results
