"""Multiplicative dependence of Gaussian integers and witness searches.

a and b are multiplicatively dependent when a^r = b^s for positive r, s;
the decision compares prime exponent vectors and resolves units.  The two
searches certify approximation facts about the group {a^m * b^n}: a group
witness pins |a^m / b^n - u| below a rational bound, and a prefix witness
additionally forces the word of a^m to extend the word of u in base b.

Searches use floating-point log estimates only to nominate candidate
exponents; every returned witness is verified in exact integer arithmetic
and re-checks from its stored fields alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .gaussint import ONE, GaussInt, factorize
from .numeration import (
    BaseTooSmall,
    canonical_digit_set,
    encode,
    length_bound,
)


class UnitOrZeroInput(ValueError):
    """Dependence questions need inputs of norm > 1 (and nonzero targets)."""


class NotIndependent(ValueError):
    """Prefix extension is defined for multiplicatively independent pairs."""


@dataclass(frozen=True)
class DependenceVerdict:
    """Outcome of the dependence decision; (r, s) is the minimal positive pair."""

    dependent: bool
    r: Optional[int] = None
    s: Optional[int] = None


def mult_dependent(a: GaussInt, b: GaussInt) -> DependenceVerdict:
    """Decide whether a^r = b^s has a solution in positive integers.

    The prime exponent vectors of a and b must be positively proportional;
    the residual unit i^t is absorbed by the least multiplier t <= 4, since
    the unit group of Z[i] has order 4.  A dependent verdict is re-verified
    by direct exact powering before it is returned.
    """
    if a.norm() <= 1 or b.norm() <= 1:
        raise UnitOrZeroInput("dependence needs norms > 1")
    pa = dict(factorize(a).factors)
    pb = dict(factorize(b).factors)
    if set(pa) != set(pb):
        return DependenceVerdict(False)
    prime = min(pa, key=lambda p: (p.norm(), p.re, p.im))
    alpha, beta = pa[prime], pb[prime]
    g = math.gcd(alpha, beta)
    r0, s0 = beta // g, alpha // g
    if any(pa[p] * r0 != pb[p] * s0 for p in pa):
        return DependenceVerdict(False)
    for t in (1, 2, 3, 4):
        if a ** (t * r0) == b ** (t * s0):
            return DependenceVerdict(True, t * r0, t * s0)
    return DependenceVerdict(False)


@dataclass(frozen=True)
class GroupWitness:
    """Exponents with norm(a^m - u*b^n) * err_den <= err_num * norm(b)^n.

    The inequality certifies |a^m / b^n - u| <= sqrt(err_num / err_den);
    verify() re-checks it from the stored fields in integer arithmetic.
    """

    a: GaussInt
    b: GaussInt
    u: GaussInt
    m: int
    n: int
    err_num: int
    err_den: int

    def verify(self) -> bool:
        z = self.a**self.m - self.u * self.b**self.n
        return z.norm() * self.err_den <= self.err_num * self.b.norm() ** self.n


def _candidate_exponents(
    m: int, log_a: float, log_b: float, log_u: float, n_min: int
) -> list[int]:
    """n near (m*log|a| - log|u|) / log|b|, clamped to n >= n_min."""
    n_star = round((m * log_a - log_u) / log_b)
    return sorted({n for n in (n_star - 1, n_star, n_star + 1) if n >= n_min})


def group_witness(
    a: GaussInt,
    b: GaussInt,
    u: GaussInt,
    err_num: int,
    err_den: int,
    m_max: int = 256,
) -> Optional[GroupWitness]:
    """Search m = 1..m_max for a certified witness; None when the budget runs out.

    For each m only the few n with norm(b)^n near norm(a^m)/norm(u) can
    qualify, so those are nominated by a float prefilter and checked
    exactly.  None is a normal outcome: existence is guaranteed only in
    the limit, with no effective bound.
    """
    if a.norm() <= 1 or b.norm() <= 1 or not u:
        raise UnitOrZeroInput("witness search needs norms > 1 and a nonzero target")
    if err_num < 0 or err_den <= 0:
        raise ValueError("error bound must be a nonnegative rational")
    log_a = math.log(a.norm()) / 2
    log_b = math.log(b.norm()) / 2
    log_u = math.log(u.norm()) / 2
    nb = b.norm()
    b_pows = [ONE]
    nb_pows = [1]
    a_pow = ONE
    for m in range(1, m_max + 1):
        a_pow = a_pow * a
        for n in _candidate_exponents(m, log_a, log_b, log_u, 0):
            while n >= len(b_pows):
                b_pows.append(b_pows[-1] * b)
                nb_pows.append(nb_pows[-1] * nb)
            z = a_pow - u * b_pows[n]
            if z.norm() * err_den <= err_num * nb_pows[n]:
                return GroupWitness(a=a, b=b, u=u, m=m, n=n, err_num=err_num, err_den=err_den)
    return None


@dataclass(frozen=True)
class PrefixWitness:
    """a^m = u*b^n + z with the word of z short enough not to disturb u's digits.

    Since word_length(z) <= n, the base-b word of a^m is the word of u
    followed by n more digits; in particular it has u's word as a prefix.
    """

    a: GaussInt
    b: GaussInt
    u: GaussInt
    m: int
    n: int
    z: GaussInt

    def verify(self) -> bool:
        if self.a**self.m != self.u * self.b**self.n + self.z:
            return False
        D = canonical_digit_set(self.b)
        if len(encode(self.z, D)) > self.n:
            return False
        word_u = encode(self.u, D)
        return encode(self.a**self.m, D)[: len(word_u)] == word_u


def prefix_extension(
    a: GaussInt,
    b: GaussInt,
    u: GaussInt,
    n_min: int = 0,
    budget: int = 256,
) -> Optional[PrefixWitness]:
    """Find m, n >= n_min with a^m = u*b^n + z and word_length(z) <= n.

    The acceptance threshold is the certified length bound of base b:
    norm(a^m - u*b^n) * norm(b)^m3 <= norm(b)^n.  All three postconditions
    (exact identity, word length, explicit word-prefix comparison) are
    re-verified before a witness is returned.  None means the search
    budget (max m) was exhausted.
    """
    if not u:
        raise UnitOrZeroInput("prefix extension needs a nonzero target")
    if a.norm() < 5 or b.norm() < 5:
        raise BaseTooSmall("prefix extension needs norms >= 5")
    if mult_dependent(a, b).dependent:
        raise NotIndependent(f"{a} and {b} are multiplicatively dependent")
    D = canonical_digit_set(b)
    m3 = length_bound(b).m3
    nb = b.norm()
    log_a = math.log(a.norm()) / 2
    log_b = math.log(nb) / 2
    log_u = math.log(u.norm()) / 2
    tail = nb**m3
    b_pows = [ONE]
    nb_pows = [1]
    a_pow = ONE
    for m in range(1, budget + 1):
        a_pow = a_pow * a
        for n in _candidate_exponents(m, log_a, log_b, log_u, n_min):
            while n >= len(b_pows):
                b_pows.append(b_pows[-1] * b)
                nb_pows.append(nb_pows[-1] * nb)
            z = a_pow - u * b_pows[n]
            if z.norm() * tail <= nb_pows[n]:
                witness = PrefixWitness(a=a, b=b, u=u, m=m, n=n, z=z)
                if witness.verify():
                    return witness
    return None
