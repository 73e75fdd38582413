"""Prefixes of a quasiperiodic omega-word of maximal subword complexity.

Concatenating every word of ``P_q^*`` in a fixed order gives an infinite
word whose set of factors is all of ``infix(Q_q)``.  The order used here is
length-lexicographic, with letters ranked by first occurrence in ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .errors import InvalidWordError, InvariantViolation
from .quasiperiod import compute_P
from .words import Alphabet

ENUMERATION_ORDER = "length-lex"
SATURATION_CAP = 1 << 20


def enumerate_star(q: str) -> Iterator[str]:
    """Every word of ``P_q^*`` exactly once, shortest first, then lexicographic."""
    gens = compute_P(q)
    rank = {ch: i for i, ch in enumerate(Alphabet.infer(q).symbols)}
    longest = len(q)
    window = {0: {""}}
    yield ""
    n = 0
    while True:
        n += 1
        bucket = set()
        for g in gens:
            prev = window.get(n - len(g))
            if prev:
                bucket.update(w + g for w in prev)
        window[n] = bucket
        window.pop(n - longest - 1, None)
        yield from sorted(bucket, key=lambda w: [rank[c] for c in w])


@dataclass(frozen=True)
class OmegaPrefix:
    q: str
    prefix: str
    enumeration_order: str = ENUMERATION_ORDER

    def __len__(self):
        return len(self.prefix)

    def summary(self, n: int = None) -> dict:
        d = {"q": self.q, "length": len(self.prefix), "enumeration_order": self.enumeration_order,
             "head": self.prefix[:60]}
        if n is not None:
            d["n"] = n
            d["subword_count"] = subword_complexity(self.prefix, n)
        return d


def build_prefix(q: str, min_len: int) -> OmegaPrefix:
    """Concatenate the nonempty words of ``P_q^*`` in order until ``min_len`` is reached."""
    if min_len < len(q):
        raise InvalidWordError(f"min_len must be >= |q| = {len(q)}")
    parts = []
    total = 0
    for v in islice(enumerate_star(q), 1, None):
        parts.append(v)
        total += len(v)
        if total >= min_len:
            break
    return OmegaPrefix(q, "".join(parts))


def subword_complexity(w: str, n: int) -> int:
    """Number of distinct length-``n`` factors of ``w``."""
    if not 0 <= n <= len(w):
        raise InvalidWordError(f"n must be in [0, {len(w)}]")
    return len({w[i:i + n] for i in range(len(w) - n + 1)})


@dataclass(frozen=True)
class Saturation:
    q: str
    n: int
    prefix_len_needed: int
    saturated: bool
    subword_count: int
    target: int

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "prefix_len_needed": self.prefix_len_needed,
            "saturated": self.saturated,
            "subword_count": self.subword_count,
            "target": self.target,
        }


def check_saturation(q: str, n: int, cap: int = SATURATION_CAP) -> Saturation:
    """Shortest prefix of the constructed word containing every factor of ``Q_q`` of length ``n``.

    The prefix length doubles until the factor count matches the automaton
    count of ``infix(Q_q)``; ``saturated`` is False if ``cap`` is hit first.
    """
    from .counting import count_table

    if n < 0:
        raise InvalidWordError("n must be >= 0")
    target = count_table(q, n).infix_counts[n]
    length = max(2 * len(q), n, 1)
    while True:
        w = build_prefix(q, min(length, cap)).prefix
        seen = set()
        for i in range(len(w) - n + 1):
            seen.add(w[i:i + n])
            if len(seen) == target:
                return Saturation(q, n, i + n, True, target, target)
        if len(seen) > target:
            raise InvariantViolation(f"prefix has {len(seen)} factors of length {n}, more than {target}")
        if length >= cap:
            return Saturation(q, n, len(w), False, len(seen), target)
        length *= 2
