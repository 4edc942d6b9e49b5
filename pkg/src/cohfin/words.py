"""Eventually periodic infinite bit sequences and their prefix sets.

A word is prefix . period^omega in a canonical form (primitive period,
minimal prefix), so two words denote the same sequence exactly when their
canonical forms are equal.  The prefix set of a word meets the prefix set of
a different word in finitely many elements (the common prefixes plus the
empty word), which is what the separation witness exploits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .reports import LawReport

INFINITE = math.inf


class WordError(ValueError):
    pass


def _check_bits(s: str, what: str) -> None:
    if any(ch not in "01" for ch in s):
        raise WordError(f"{what} must consist of bits, got {s!r}")


def _primitive_root(period: str) -> str:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    prefix: str
    period: str

    def __post_init__(self):
        # constructed via canonicalize(); verify rather than normalize here
        _check_bits(self.prefix, "prefix")
        _check_bits(self.period, "period")
        if not self.period:
            raise WordError("period must be nonempty")
        if _primitive_root(self.period) != self.period:
            raise WordError("period not primitive; use canonicalize()")
        if self.prefix and self.prefix[-1] == self.period[-1]:
            raise WordError("prefix not minimal; use canonicalize()")

    def bit_at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def expand(self, n: int) -> str:
        return "".join(self.bit_at(i) for i in range(n))

    def to_json_dict(self) -> dict:
        return {"prefix": self.prefix, "period": self.period}


def canonicalize(prefix: str, period: str) -> EventuallyPeriodicWord:
    """Canonical form: the period is primitive and the prefix is rolled back
    as far as possible (rotating the period), so equal sequences get equal
    forms."""
    _check_bits(prefix, "prefix")
    _check_bits(period, "period")
    if not period:
        raise WordError("period must be nonempty")
    period = _primitive_root(period)
    while prefix and prefix[-1] == period[-1]:
        period = period[-1] + period[:-1]
        prefix = prefix[:-1]
    return EventuallyPeriodicWord(prefix, period)


def word_from_json(d: dict) -> EventuallyPeriodicWord:
    return canonicalize(d["prefix"], d["period"])


def common_prefix_len(x: EventuallyPeriodicWord,
                      y: EventuallyPeriodicWord) -> Union[int, float]:
    """Length of the longest common prefix; INFINITE iff x == y.

    Agreement up to len(x.prefix) + len(y.prefix) + lcm of the period
    lengths forces equality of the sequences, so the comparison window is
    finite.
    """
    if x == y:
        return INFINITE
    window = len(x.prefix) + len(y.prefix) + math.lcm(len(x.period),
                                                      len(y.period))
    for i in range(window):
        if x.bit_at(i) != y.bit_at(i):
            return i
    raise AssertionError("distinct canonical words agree on the full window")


def intersection_size(x: EventuallyPeriodicWord,
                      y: EventuallyPeriodicWord) -> Union[int, float]:
    """Size of the intersection of the two prefix sets; the empty word is a
    common element, so this is common_prefix_len + 1 (INFINITE iff x == y)."""
    cpl = common_prefix_len(x, y)
    return INFINITE if cpl == INFINITE else cpl + 1


@dataclass(frozen=True)
class PrefixSet:
    """Finite truncation of the prefix set of a word: all prefixes of length
    0..depth (depth + 1 elements)."""

    word: EventuallyPeriodicWord
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise WordError("depth must be >= 0")

    def elements(self) -> list[str]:
        full = self.word.expand(self.depth)
        return [full[:i] for i in range(self.depth + 1)]


def down_set(x: EventuallyPeriodicWord, depth: int) -> PrefixSet:
    return PrefixSet(x, depth)


def _word_key(w: EventuallyPeriodicWord) -> tuple:
    return (len(w.prefix) + len(w.period), w.prefix, w.period)


def separation_witness(
    xs: Iterable[EventuallyPeriodicWord],
    xs_prime: Iterable[EventuallyPeriodicWord],
) -> LawReport:
    """Evidence that two distinct word sets induce distinct prefix-set duals.

    Picks a word x in the symmetric difference and verifies that its prefix
    set meets every prefix set of the *other* side finitely (so x passes that
    side's dual-membership test) but meets its own infinitely (so it fails
    its own side's test).  Raises when the sets are equal.
    """
    left = frozenset(xs)
    right = frozenset(xs_prime)
    if left == right:
        raise WordError("no witness exists: the word sets are equal")
    if left - right:
        witness = min(left - right, key=_word_key)
        side = "first"
        other = right
    else:
        witness = min(right - left, key=_word_key)
        side = "second"
        other = left
    evidence = []
    for y in sorted(other, key=_word_key):
        size = intersection_size(witness, y)
        assert size != INFINITE
        evidence.append({"other": y.to_json_dict(),
                         "intersection_size": size})
    assert intersection_size(witness, witness) == INFINITE
    return LawReport(
        law="prefix-set-separation",
        params={
            "first_set": [w.to_json_dict() for w in sorted(left, key=_word_key)],
            "second_set": [w.to_json_dict() for w in sorted(right, key=_word_key)],
        },
        passed=True,
        witness={
            "word": witness.to_json_dict(),
            "from_side": side,
            "finite_intersections_with_other_side": evidence,
            "self_intersection": "infinite",
            "conclusion": "the two prefix-set duals differ",
        },
    )
