"""Digit sets and base-b representations of the Gaussian integers.

A digit set for a base b (norm(b) >= 5) is a complete residue system
containing 0; every Gaussian integer then has a unique msd-first word over
the digits.  This module builds the canonical digit set, encodes/decodes,
certifies word-length bounds, links digit sets over a shared base, and
recodes words between base b and base b^j.

All geometry is integer-exact: half-open box tests use 2*Re(d*conj(b))
against +-norm(b), and radii enter squared.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional

from .gaussint import ZERO, GaussInt, exact_div

Word = tuple[GaussInt, ...]
EMPTY_WORD: Word = ()


class BaseTooSmall(ValueError):
    """Bases must have norm >= 5."""


class InvalidDigitSet(ValueError):
    """Digit collection is not a complete residue system containing 0."""


class NonTermination(RuntimeError):
    """The greedy digit loop exceeded its iteration budget (invalid digit set)."""


class ForeignDigit(ValueError):
    """A word digit does not belong to the digit set."""


class BaseMismatch(ValueError):
    """Two digit sets over different bases cannot be linked."""


@dataclass(frozen=True)
class DigitSet:
    """A base together with a complete residue system containing 0.

    Digits are normalized to (re, im) lexicographic order; construction
    validates the residue-system invariants.
    """

    base: GaussInt
    digits: tuple[GaussInt, ...]

    def __post_init__(self) -> None:
        n = self.base.norm()
        if n < 5:
            raise BaseTooSmall(f"norm({self.base}) = {n} < 5")
        digits = tuple(sorted(self.digits, key=lambda d: (d.re, d.im)))
        object.__setattr__(self, "digits", digits)
        if ZERO not in digits:
            raise InvalidDigitSet("digit set must contain 0")
        if len(set(digits)) != len(digits):
            raise InvalidDigitSet("duplicate digits")
        if len(digits) != n:
            raise InvalidDigitSet(
                f"{len(digits)} digits for base {self.base} of norm {n}"
            )
        bc = self.base.conj()
        residues = set()
        for d in digits:
            t = d * bc
            residues.add((t.re % n, t.im % n))
        if len(residues) != n:
            raise InvalidDigitSet("digits are not pairwise incongruent mod base")

    def __iter__(self) -> Iterator[GaussInt]:
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def lattice_disc(r2: int) -> Iterator[GaussInt]:
    """All z in Z[i] with norm(z) <= r2, r2 given as a squared radius."""
    r = isqrt(r2) if r2 >= 0 else -1
    for x in range(-r, r + 1):
        xx = x * x
        for y in range(-r, r + 1):
            if xx + y * y <= r2:
                yield GaussInt(x, y)


@lru_cache(maxsize=None)
def canonical_digit_set(b: GaussInt) -> DigitSet:
    """The digits d with Re(d/b) and Im(d/b) in [-1/2, 1/2).

    Membership is decided by -N <= 2*Re(d*conj(b)) < N (and the same for
    the imaginary part) with N = norm(b); candidates are enumerated over
    the lattice disc norm(d) <= norm(b).
    """
    n = b.norm()
    if n < 5:
        raise BaseTooSmall(f"norm({b}) = {n} < 5")
    bre, bim = b.re, -b.im  # components of conj(b)
    digits = []
    r = isqrt(n)
    for x in range(-r, r + 1):
        for y in range(-r, r + 1):
            t_re = 2 * (x * bre - y * bim)
            t_im = 2 * (x * bim + y * bre)
            if -n <= t_re < n and -n <= t_im < n:
                digits.append(GaussInt(x, y))
    return DigitSet(b, tuple(digits))


def _canonical_digit(z: GaussInt, b: GaussInt, n: int) -> GaussInt:
    """The canonical-box representative of z mod b."""
    t = z * b.conj()
    q = GaussInt((2 * t.re + n) // (2 * n), (2 * t.im + n) // (2 * n))
    return z - b * q


@lru_cache(maxsize=None)
def _residue_table(D: DigitSet) -> dict[GaussInt, GaussInt]:
    """canonical residue representative -> digit of D in that class."""
    n = D.base.norm()
    return {_canonical_digit(d, D.base, n): d for d in D.digits}


@lru_cache(maxsize=None)
def _digit_members(D: DigitSet) -> frozenset[GaussInt]:
    return frozenset(D.digits)


def digit_of(z: GaussInt, D: DigitSet) -> GaussInt:
    """The unique d in D with b | (z - d)."""
    return _residue_table(D)[_canonical_digit(z, D.base, D.base.norm())]


def _ceil_log(value: int, base: int) -> int:
    """Smallest k with base^k >= value, for value >= 1."""
    k, p = 0, 1
    while p < value:
        p *= base
        k += 1
    return k


# Iteration budget before an encode is declared non-terminating.  The cap
# 4*M(3) + 2*ceil(log_N(norm(z)+1)) + 16 is a generous multiple of the
# certified length bound; M(3) itself is bootstrapped with a fixed cap.
_BOOTSTRAP_CAP = 64


def _encode_capped(z: GaussInt, D: DigitSet, cap: int) -> Word:
    b, n = D.base, D.base.norm()
    table = _residue_table(D)
    bc = b.conj()
    out: list[GaussInt] = []
    w = z
    while w:
        if len(out) >= cap:
            raise NonTermination(
                f"digit loop for {z} over base {b} exceeded {cap} iterations"
            )
        d = table[_canonical_digit(w, b, n)]
        out.append(d)
        t = (w - d) * bc
        w = GaussInt(t.re // n, t.im // n)
    out.reverse()
    return tuple(out)


@lru_cache(maxsize=None)
def _m3(D: DigitSet) -> int:
    """max word length over the disc norm(z) <= 9, bootstrapped with a fixed cap."""
    return max(len(_encode_capped(z, D, _BOOTSTRAP_CAP)) for z in lattice_disc(9))


def encode(z: GaussInt, D: DigitSet) -> Word:
    """The unique msd-first word for z over D; encode(0) is the empty word.

    Emits digit_of and replaces z by (z - d)/b until 0.  For a collection
    that is not actually a digit set the loop can cycle, so it is capped;
    exceeding the cap raises NonTermination.
    """
    cap = 4 * _m3(D) + 2 * _ceil_log(z.norm() + 1, D.base.norm()) + 16
    return _encode_capped(z, D, cap)


def decode(w: Word, D: DigitSet) -> GaussInt:
    """Horner evaluation of an msd-first word; decode of the empty word is 0."""
    members = _digit_members(D)
    b = D.base
    acc = ZERO
    for d in w:
        if d not in members:
            raise ForeignDigit(f"{d} is not a digit of base {b}")
        acc = acc * b + d
    return acc


def word_length(z: GaussInt, D: DigitSet) -> int:
    """Word length of z over D; length 0 for z = 0."""
    return len(encode(z, D))


def max_length_in_disc(r2: int, D: DigitSet) -> int:
    """Maximum word length over all z with norm(z) <= r2."""
    return max((len(encode(z, D)) for z in lattice_disc(r2)), default=0)


@dataclass(frozen=True)
class LengthBound:
    """Certified length bound for a base: m3 = max length over norm(z) <= 9.

    The predicate norm(z) * norm(b)^m3 <= norm(b)^k guarantees that the
    word of z has length at most k; the underlying real constant
    |b|^(-m3) is never materialized.
    """

    base: GaussInt
    m3: int

    def within_bound(self, z: GaussInt, k: int) -> bool:
        n = self.base.norm()
        return z.norm() * n**self.m3 <= n**k


def length_bound(b: GaussInt) -> LengthBound:
    """The certified LengthBound for the canonical digit set of b."""
    if b.norm() < 5:
        raise BaseTooSmall(f"norm({b}) = {b.norm()} < 5")
    return LengthBound(base=b, m3=max_length_in_disc(9, canonical_digit_set(b)))


def power_digit_set(D: DigitSet, j: int) -> DigitSet:
    """The digit set {d0 + b*d1 + ... + b^(j-1)*d_(j-1)} for base b^j."""
    if j < 1:
        raise ValueError("power exponent must be >= 1")
    b = D.base
    values = [ZERO]
    for p in range(j):
        bp = b**p
        values = [v + d * bp for v in values for d in D.digits]
    return DigitSet(b**j, tuple(values))


def recode(w: Word, D: DigitSet, j: int) -> Word:
    """Regroup an msd-first base-b word into a base-b^j word, j digits at a time.

    Pads with leading zeros to a multiple of j, Horner-folds each block
    into one digit of power_digit_set(D, j), and strips leading zero
    digits; the decoded value is unchanged.
    """
    if j < 1:
        raise ValueError("power exponent must be >= 1")
    members = _digit_members(D)
    for d in w:
        if d not in members:
            raise ForeignDigit(f"{d} is not a digit of base {D.base}")
    b = D.base
    pad = (-len(w)) % j
    padded = (ZERO,) * pad + tuple(w)
    out: list[GaussInt] = []
    for i in range(0, len(padded), j):
        acc = ZERO
        for d in padded[i : i + j]:
            acc = acc * b + d
        out.append(acc)
    head = 0
    while head < len(out) and out[head] == ZERO:
        head += 1
    return tuple(out[head:])


@lru_cache(maxsize=None)
def terminates_on_disc(D: DigitSet, r2: int = 400) -> bool:
    """Probe digit-set validity: does encode terminate for all norm(z) <= r2?"""
    try:
        for z in lattice_disc(r2):
            encode(z, D)
    except NonTermination:
        return False
    return True


@dataclass(frozen=True)
class LinkCertificate:
    """An envelope E (containing 0) witnessing D + E <= D' + b*E."""

    envelope: tuple[GaussInt, ...]


def _within_sum_radius(n2: int, a2: int, b2: int) -> bool:
    """n2 <= (sqrt(a2) + sqrt(b2))^2, decided in exact integer arithmetic."""
    t = n2 - a2 - b2
    return t <= 0 or t * t <= 4 * a2 * b2


def _envelope(D: DigitSet, D2: DigitSet) -> tuple[GaussInt, ...]:
    """All e with norm(e) <= (Delta + Delta')^2, Delta = max digit modulus."""
    a2 = max(d.norm() for d in D.digits)
    b2 = max(d.norm() for d in D2.digits)
    r = isqrt(a2) + isqrt(b2) + 2
    out = [
        GaussInt(x, y)
        for x in range(-r, r + 1)
        for y in range(-r, r + 1)
        if _within_sum_radius(x * x + y * y, a2, b2)
    ]
    out.sort(key=lambda e: (e.re, e.im))
    return tuple(out)


def _linking_failure(
    D: DigitSet, D2: DigitSet, envelope: tuple[GaussInt, ...]
) -> Optional[tuple[GaussInt, GaussInt]]:
    """First (d, e) with d + e not in D2 + b*E, or None if the envelope links."""
    members = frozenset(envelope)
    b = D.base
    for d in D.digits:
        for e in envelope:
            x = d + e
            d2 = digit_of(x, D2)
            e2 = exact_div(x - d2, b)
            if e2 not in members:
                return d, e
    return None


def check_linked(D: DigitSet, D2: DigitSet) -> Optional[LinkCertificate]:
    """Certify that D and D2 (same base) are linked, or return None.

    Builds the envelope E of all Gaussian integers within the summed digit
    radii and verifies d + e = d' + b*e' with d' in D2, e' in E for every
    pair, by explicit membership rather than the triangle inequality.
    """
    if D.base != D2.base:
        raise BaseMismatch(f"bases differ: {D.base} vs {D2.base}")
    for S in (D, D2):
        if not terminates_on_disc(S):
            raise NonTermination(f"digit set over {S.base} fails the termination probe")
    envelope = _envelope(D, D2)
    if _linking_failure(D, D2, envelope) is not None:
        return None
    return LinkCertificate(envelope=envelope)


def real_power_exponent(b: GaussInt) -> Optional[int]:
    """Least j in 1..8 with b^j a positive rational integer, else None.

    A Gaussian integer whose argument is a rational multiple of pi has
    argument a multiple of pi/4, so eight powers decide the question.
    """
    if b.norm() < 5:
        raise BaseTooSmall(f"norm({b}) = {b.norm()} < 5")
    w = b
    for j in range(1, 9):
        if w.im == 0 and w.re > 0:
            return j
        w = w * b
    return None


def word_to_text(w: Word) -> str:
    """Comma-separated digit literals, msd-first; empty string for the empty word."""
    return ",".join(str(d) for d in w)


def word_from_text(text: str) -> Word:
    if not text:
        return EMPTY_WORD
    return tuple(GaussInt.parse(part) for part in text.split(","))


def digit_set_to_json(D: DigitSet) -> dict:
    return {"base": str(D.base), "digits": [str(d) for d in D.digits]}


def digit_set_from_json(obj: dict) -> DigitSet:
    return DigitSet(
        base=GaussInt.parse(obj["base"]),
        digits=tuple(GaussInt.parse(d) for d in obj["digits"]),
    )
