"""DFAs over digit alphabets, oracle languages, and finite-evidence harnesses.

The harnesses replace infinite arguments with exhaustive finite checks:
residual (Myhill-Nerode) signatures lower-bound the states any recognizer
needs, zero-pumping probes test closure under inserting zero blocks, and
the disagreement search falsifies a claimed DFA against a ground-truth
membership oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Literal, Optional

from .gaussint import ZERO, BaseIsUnitOrZero, GaussInt, is_power_of
from .numeration import (
    EMPTY_WORD,
    DigitSet,
    ForeignDigit,
    Word,
    canonical_digit_set,
    decode,
)

ENUMERATION_BUDGET = 10**8


class AlphabetMismatch(ValueError):
    """Binary DFA operations need a shared alphabet."""


class BaseNotRealOdd(ValueError):
    """The integer DFA exists only for real odd bases >= 3."""


class BudgetExceeded(RuntimeError):
    """Requested enumeration is larger than the word-step budget."""


class EmptyWord(ValueError):
    """Pumping needs a nonempty word."""


@lru_cache(maxsize=None)
def _digit_index(D: DigitSet) -> dict[GaussInt, int]:
    return {d: i for i, d in enumerate(D.digits)}


@dataclass(frozen=True)
class Dfa:
    """Deterministic finite automaton with a total transition table.

    transitions[state][digit_index] is the successor state; digit indices
    follow the alphabet's canonical digit order.
    """

    alphabet: DigitSet
    initial: int
    transitions: tuple[tuple[int, ...], ...]
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "transitions", tuple(tuple(row) for row in self.transitions)
        )
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        n = len(self.transitions)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        width = len(self.alphabet.digits)
        for row in self.transitions:
            if len(row) != width:
                raise ValueError("transition row width differs from alphabet size")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range")
        if not self.accepting <= set(range(n)):
            raise ValueError("accepting states out of range")

    @property
    def state_count(self) -> int:
        return len(self.transitions)


def run(dfa: Dfa, w: Word) -> bool:
    """True iff the unique run over w ends in an accepting state."""
    index = _digit_index(dfa.alphabet)
    state = dfa.initial
    for d in w:
        i = index.get(d)
        if i is None:
            raise ForeignDigit(f"{d} is not in the DFA alphabet")
        state = dfa.transitions[state][i]
    return state in dfa.accepting


ProductMode = Literal["and", "or", "diff"]


def product(d1: Dfa, d2: Dfa, mode: ProductMode) -> Dfa:
    """Product DFA for the boolean combination of two languages."""
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch("product needs a shared alphabet")
    if mode not in ("and", "or", "diff"):
        raise ValueError(f"unknown product mode {mode!r}")
    width = len(d1.alphabet.digits)
    start = (d1.initial, d2.initial)
    number = {start: 0}
    order = [start]
    rows: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(order):
        s1, s2 = order[qi]
        qi += 1
        row = []
        for i in range(width):
            t = (d1.transitions[s1][i], d2.transitions[s2][i])
            if t not in number:
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        rows.append(tuple(row))
    if mode == "and":
        keep = lambda a1, a2: a1 and a2
    elif mode == "or":
        keep = lambda a1, a2: a1 or a2
    else:
        keep = lambda a1, a2: a1 and not a2
    accepting = frozenset(
        number[pair]
        for pair in order
        if keep(pair[0] in d1.accepting, pair[1] in d2.accepting)
    )
    return Dfa(d1.alphabet, 0, tuple(rows), accepting)


def complement(d: Dfa) -> Dfa:
    return Dfa(
        d.alphabet,
        d.initial,
        d.transitions,
        frozenset(range(d.state_count)) - d.accepting,
    )


def is_empty(d: Dfa) -> bool:
    """True iff no accepting state is reachable."""
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        s = stack.pop()
        if s in d.accepting:
            return False
        for t in d.transitions[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return True


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality, via emptiness of both difference products."""
    return is_empty(product(d1, d2, "diff")) and is_empty(product(d2, d1, "diff"))


def minimize(d: Dfa) -> Dfa:
    """The minimal DFA, with states renumbered canonically by BFS.

    Unreachable states are dropped, equivalent states merged by iterated
    partition refinement, and the quotient renumbered breadth-first from
    the initial state in digit order, so equal languages over equal
    alphabets yield structurally equal automata.
    """
    # reachable part, BFS order
    order = [d.initial]
    pos = {d.initial: 0}
    qi = 0
    while qi < len(order):
        s = order[qi]
        qi += 1
        for t in d.transitions[s]:
            if t not in pos:
                pos[t] = len(order)
                order.append(t)
    rows = [tuple(pos[t] for t in d.transitions[s]) for s in order]
    acc = {pos[s] for s in order if s in d.accepting}
    n = len(order)

    # Moore refinement to the coarsest fixpoint
    block = [1 if s in acc else 0 for s in range(n)]
    while True:
        keys: dict[tuple, int] = {}
        new = []
        for s in range(n):
            key = (block[s], tuple(block[t] for t in rows[s]))
            if key not in keys:
                keys[key] = len(keys)
            new.append(keys[key])
        if new == block:
            break
        block = new

    # quotient, renumbered by BFS from the initial block
    rep: dict[int, int] = {}
    for s in range(n):
        rep.setdefault(block[s], s)
    bfs = [block[0]]
    bnum = {block[0]: 0}
    qi = 0
    while qi < len(bfs):
        blk = bfs[qi]
        qi += 1
        for t in rows[rep[blk]]:
            tb = block[t]
            if tb not in bnum:
                bnum[tb] = len(bfs)
                bfs.append(tb)
    out_rows = tuple(
        tuple(bnum[block[t]] for t in rows[rep[blk]]) for blk in bfs
    )
    out_acc = frozenset(bnum[blk] for blk in bfs if rep[blk] in acc)
    return Dfa(d.alphabet, 0, out_rows, out_acc)


def powers_dfa(b: GaussInt) -> Dfa:
    """Accepts exactly the words `1` followed by zeros, i.e. the powers of b."""
    D = canonical_digit_set(b)
    index = _digit_index(D)
    width = len(D.digits)
    row_start = [2] * width
    row_start[index[GaussInt(1, 0)]] = 1
    row_live = [2] * width
    row_live[index[ZERO]] = 1
    dead = (2,) * width
    return Dfa(D, 0, (tuple(row_start), tuple(row_live), dead), frozenset({1}))


def integers_dfa(b: GaussInt | int) -> Dfa:
    """Accepts exactly the valid words with real digits only, for a real odd base.

    Over such a base those are precisely the representations of Z
    (including the empty word for 0).
    """
    if isinstance(b, int):
        b = GaussInt(b, 0)
    if b.im != 0 or b.re < 3 or b.re % 2 == 0:
        raise BaseNotRealOdd(f"{b} is not a real odd integer >= 3")
    D = canonical_digit_set(b)
    width = len(D.digits)
    row_start, row_live = [2] * width, [2] * width
    for i, d in enumerate(D.digits):
        if d.im == 0:
            if d != ZERO:
                row_start[i] = 1
            row_live[i] = 1
    dead = (2,) * width
    return Dfa(D, 0, (tuple(row_start), tuple(row_live), dead), frozenset({0, 1}))


@dataclass(frozen=True)
class LanguageOracle:
    """Ground-truth membership for a set of Gaussian integers, as a word language.

    Words with a zero leading digit are invalid and never members; the
    empty word is a member exactly when the set contains 0.  Other words
    are decided by value_test on their decoded value.
    """

    alphabet: DigitSet
    value_test: Callable[[GaussInt], bool]

    def membership(self, w: Word) -> bool:
        if w and w[0] == ZERO:
            return False
        return self.value_test(decode(w, self.alphabet))


def powers_oracle(a: GaussInt, D: DigitSet) -> LanguageOracle:
    """Oracle for {a^n : n >= 0} written over D."""
    if a.norm() <= 1:
        raise BaseIsUnitOrZero(f"norm({a}) <= 1 cannot generate powers")
    return LanguageOracle(D, lambda v: is_power_of(v, a) is not None)


def integers_oracle(D: DigitSet) -> LanguageOracle:
    """Oracle for Z inside Z[i], written over D."""
    return LanguageOracle(D, lambda v: v.im == 0)


@dataclass(frozen=True)
class ResidualReport:
    """Distinct extension-behaviors among bounded prefixes.

    class_count distinct signatures were observed over prefixes of length
    <= prefix_depth, where the signature of u is the membership vector of
    u.v over all extensions v of length <= extension_depth.  class_count
    lower-bounds the state count of any DFA that agrees with the language
    on all words of length <= prefix_depth + extension_depth.
    """

    prefix_depth: int
    extension_depth: int
    class_count: int
    representatives: tuple[Word, ...] = field(repr=False)


def _word_from_index(digits: tuple[GaussInt, ...], length: int, index: int) -> Word:
    out = []
    m = len(digits)
    for _ in range(length):
        index, r = divmod(index, m)
        out.append(digits[r])
    out.reverse()
    return tuple(out)


def residual_signatures(L: LanguageOracle, k: int, e: int) -> ResidualReport:
    """Group all words of length <= k by their behavior under extensions of length <= e."""
    if k < 0 or e < 0:
        raise ValueError("depths must be nonnegative")
    digits = L.alphabet.digits
    m = len(digits)
    if m ** (k + e) > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{m}^({k}+{e}) words exceed the enumeration budget")
    b = L.alphabet.base
    bre, bim = b.re, b.im
    z0 = _digit_index(L.alphabet)[ZERO]
    vt = L.value_test
    empty_member = vt(ZERO)

    # suffixes by length: (value_re, value_im, leading digit index or None)
    suffix_levels: list[list[tuple[int, int, Optional[int]]]] = [[(0, 0, None)]]
    for _ in range(e):
        nxt = []
        for vre, vim, first in suffix_levels[-1]:
            wre = vre * bre - vim * bim
            wim = vre * bim + vim * bre
            for i, d in enumerate(digits):
                nxt.append((wre + d.re, wim + d.im, first if first is not None else i))
        suffix_levels.append(nxt)
    pow_re, pow_im = [1], [0]
    for _ in range(e):
        pr, pi = pow_re[-1], pow_im[-1]
        pow_re.append(pr * bre - pi * bim)
        pow_im.append(pr * bim + pi * bre)

    first_seen: dict[tuple[bool, ...], tuple[int, int]] = {}
    level: list[tuple[int, int, Optional[int]]] = [(0, 0, None)]
    for length in range(k + 1):
        for idx, (ure, uim, ufirst) in enumerate(level):
            sig: list[bool] = []
            for lv in range(e + 1):
                sre = ure * pow_re[lv] - uim * pow_im[lv]
                sim = ure * pow_im[lv] + uim * pow_re[lv]
                for vre, vim, vfirst in suffix_levels[lv]:
                    lead = ufirst if ufirst is not None else vfirst
                    if lead is None:
                        sig.append(empty_member)
                    elif lead == z0:
                        sig.append(False)
                    else:
                        sig.append(vt(GaussInt(sre + vre, sim + vim)))
            key = tuple(sig)
            if key not in first_seen:
                first_seen[key] = (length, idx)
        if length < k:
            nxt = []
            for ure, uim, ufirst in level:
                wre = ure * bre - uim * bim
                wim = ure * bim + uim * bre
                for i, d in enumerate(digits):
                    nxt.append(
                        (wre + d.re, wim + d.im, ufirst if ufirst is not None else i)
                    )
            level = nxt

    reps = tuple(
        _word_from_index(digits, length, idx) for length, idx in first_seen.values()
    )
    return ResidualReport(
        prefix_depth=k,
        extension_depth=e,
        class_count=len(first_seen),
        representatives=reps,
    )


def zero_pump_probe(
    L: LanguageOracle, w: Word, k: int, reps: int
) -> tuple[bool, ...]:
    """Membership after inserting j*k zeros behind the leading digit, j = 0..reps."""
    if not w:
        raise EmptyWord("pumping needs a nonempty word")
    if w[0] == ZERO:
        raise ValueError("pumping needs a nonzero leading digit")
    if k < 1:
        raise ValueError("pump block size must be >= 1")
    head, tail = w[:1], w[1:]
    return tuple(
        L.membership(head + (ZERO,) * (j * k) + tail) for j in range(reps + 1)
    )


def dfa_oracle_disagreement(d: Dfa, L: LanguageOracle, max_len: int) -> Optional[Word]:
    """Shortest (then lexicographically least) word where DFA and oracle differ.

    Exhausts all words up to max_len; None means perfect agreement on
    that range.
    """
    if d.alphabet != L.alphabet:
        raise AlphabetMismatch("DFA and oracle alphabets differ")
    digits = d.alphabet.digits
    m = len(digits)
    if m**max_len > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{m}^{max_len} words exceed the enumeration budget")
    vt = L.value_test
    if vt(ZERO) != (d.initial in d.accepting):
        return EMPTY_WORD
    b = d.alphabet.base
    bre, bim = b.re, b.im
    z0 = _digit_index(d.alphabet)[ZERO]
    trans = d.transitions
    acc = d.accepting

    states = [d.initial]
    vals_re = [0]
    vals_im = [0]
    firsts: list[Optional[int]] = [None]
    for length in range(1, max_len + 1):
        n_states: list[int] = []
        n_re: list[int] = []
        n_im: list[int] = []
        n_firsts: list[Optional[int]] = []
        idx = 0
        for j in range(len(states)):
            st = states[j]
            vre, vim, first = vals_re[j], vals_im[j], firsts[j]
            wre = vre * bre - vim * bim
            wim = vre * bim + vim * bre
            row = trans[st]
            for i, dg in enumerate(digits):
                lead = first if first is not None else i
                nst = row[i]
                nre, nim = wre + dg.re, wim + dg.im
                member = lead != z0 and vt(GaussInt(nre, nim))
                if member != (nst in acc):
                    return _word_from_index(digits, length, idx)
                n_states.append(nst)
                n_re.append(nre)
                n_im.append(nim)
                n_firsts.append(lead)
                idx += 1
        states, vals_re, vals_im, firsts = n_states, n_re, n_im, n_firsts
    return None


def dfa_to_json(d: Dfa) -> dict:
    return {
        "base": str(d.alphabet.base),
        "digits": [str(x) for x in d.alphabet.digits],
        "states": d.state_count,
        "initial": d.initial,
        "accepting": sorted(d.accepting),
        "transitions": [list(row) for row in d.transitions],
    }


def dfa_from_json(obj: dict) -> Dfa:
    alphabet = DigitSet(
        base=GaussInt.parse(obj["base"]),
        digits=tuple(GaussInt.parse(t) for t in obj["digits"]),
    )
    d = Dfa(
        alphabet=alphabet,
        initial=int(obj["initial"]),
        transitions=tuple(tuple(int(t) for t in row) for row in obj["transitions"]),
        accepting=frozenset(int(s) for s in obj["accepting"]),
    )
    if d.state_count != int(obj["states"]):
        raise ValueError("state count field disagrees with the transition table")
    return d
