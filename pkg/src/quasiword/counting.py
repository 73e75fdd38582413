"""Exact per-length counts for the star, prefix and infix languages of a quasiperiod.

Three independent routes compute ``|P_q^* & X^n|``:

* the linear recurrence ``a_n = sum(a_{n-|v|})`` over the star root, valid
  because the star root is a code;
* explicit enumeration of the word sets (``star_counts_bruteforce``);
* path counting on the minimal DFA of the flower automaton.

A disagreement between the first two would mean some word factors twice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

from . import automata as A
from .errors import BudgetExceeded, InvalidWordError, InvariantViolation
from .quasiperiod import analyze, compute_P
from .words import Alphabet

DEFAULT_BUDGET = 10**6


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("QUASIWORD_BUDGET")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidWordError(f"QUASIWORD_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InvalidWordError("QUASIWORD_BUDGET must be positive")
    return value


def star_counts_recurrence(star_root: Sequence[str], max_n: int) -> list:
    lengths = [len(v) for v in star_root]
    a = [1] + [0] * max_n
    for n in range(1, max_n + 1):
        a[n] = sum(a[n - l] for l in lengths if l <= n)
    return a


def enumerate_star(generators: Sequence[str], max_n: int, budget: Optional[int] = None) -> list:
    """Explicit sets ``generators^* & X^n`` for ``n = 0..max_n``."""
    if budget is None:
        budget = budget_from_env()
    by_len = [set() for _ in range(max_n + 1)]
    by_len[0].add("")
    total = 1
    gens = [g for g in set(generators) if g]
    for n in range(1, max_n + 1):
        bucket = by_len[n]
        for g in gens:
            if len(g) <= n:
                for w in by_len[n - len(g)]:
                    bucket.add(w + g)
        total += len(bucket)
        if total > budget:
            raise BudgetExceeded(f"enumeration exceeds budget of {budget} words at length {n}")
    return by_len


def star_counts_bruteforce(star_root: Sequence[str], max_n: int, budget: Optional[int] = None) -> list:
    return [len(s) for s in enumerate_star(star_root, max_n, budget)]


def _alphabet_for(words: Sequence[str]) -> tuple:
    return Alphabet.infer(*words).symbols


def build_star_automaton(star_root: Sequence[str], alphabet: Optional[Sequence[str]] = None) -> A.FiniteAutomaton:
    if alphabet is None:
        alphabet = _alphabet_for(star_root)
    return A.flower_automaton(list(star_root), alphabet)


def star_dfa(star_root: Sequence[str]) -> A.FiniteAutomaton:
    return A.minimize(A.determinize(build_star_automaton(star_root)))


def prefix_counts_setwise(q: str, max_n: int, budget: Optional[int] = None) -> list:
    """``|P_q^* . pref(q) & X^n|`` by explicit sets."""
    stars = enumerate_star(compute_P(q), max_n, budget)
    pq = [q[:i] for i in range(len(q) + 1)]
    out = []
    for n in range(max_n + 1):
        words = set()
        for p in pq:
            if len(p) <= n:
                words.update(w + p for w in stars[n - len(p)])
        out.append(len(words))
    return out


def enumerate_Qq(q: str, max_len: int, budget: Optional[int] = None) -> list:
    """Words of ``Q_q = P_q^* . q + {e}`` up to ``max_len``, grouped by length."""
    out = [set() for _ in range(max_len + 1)]
    out[0].add("")
    if max_len >= len(q):
        stars = enumerate_star(compute_P(q), max_len - len(q), budget)
        for n, words in enumerate(stars):
            out[n + len(q)].update(w + q for w in words)
    return out


def infix_window_set(q: str, n: int, budget: Optional[int] = None) -> set:
    """All length-``n`` windows of words in ``Q_q`` of length ``<= n + 2|q|``.

    Any length-``n`` infix of ``P_q^*`` sits inside a word of ``Q_q`` at most
    ``2|q|`` longer, so this is exactly ``infix(Q_q) & X^n``.
    """
    words = set()
    for bucket in enumerate_Qq(q, n + 2 * len(q), budget):
        for w in bucket:
            for i in range(len(w) - n + 1):
                words.add(w[i:i + n])
    return words


def infix_counts_window(q: str, max_n: int, budget: Optional[int] = None) -> list:
    return [len(infix_window_set(q, n, budget)) for n in range(max_n + 1)]


@dataclass(frozen=True)
class CountTable:
    """Counts for ``n = 0..max_n + state_bound`` so the sandwich check can look ahead.

    ``state_bound`` is the state count of the flower automaton of the star
    root.  ``dfa_states`` (size of the minimal DFA of the same language) is
    informational: the infix sandwich can fail with that smaller constant.
    """

    q: str
    max_n: int
    star_counts: tuple
    pref_counts: tuple
    infix_counts: tuple
    state_bound: int
    dfa_states: int = 0

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "max_n": self.max_n,
            "star_counts": list(self.star_counts),
            "pref_counts": list(self.pref_counts),
            "infix_counts": list(self.infix_counts),
            "state_bound": self.state_bound,
            "dfa_states": self.dfa_states,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CountTable":
        return cls(
            q=d["q"], max_n=d["max_n"],
            star_counts=tuple(d["star_counts"]),
            pref_counts=tuple(d["pref_counts"]),
            infix_counts=tuple(d["infix_counts"]),
            state_bound=d["state_bound"],
            dfa_states=d.get("dfa_states", 0),
        )

    def rows(self):
        """``(n, star, pref, infix)`` for ``n <= max_n``."""
        for n in range(self.max_n + 1):
            yield n, self.star_counts[n], self.pref_counts[n], self.infix_counts[n]


def count_table(q: str, max_n: int) -> CountTable:
    """Build all three count columns from automata over the star root of ``q``.

    Every flower state reads ``pref(s . C^*)`` for some suffix ``s`` of a
    codeword, and prefix counts of ``C^*`` never decrease with ``n``, so the
    flower state count bounds ``infix / pref``.
    """
    if max_n < 0:
        raise InvalidWordError("max_n must be >= 0")
    analysis = analyze(q)
    nfa = build_star_automaton(analysis.star_root)
    dfa = A.minimize(A.determinize(nfa))
    k = nfa.n_states
    horizon = max_n + k
    star = A.count_words(dfa, horizon)
    recurrence = star_counts_recurrence(analysis.star_root, horizon)
    if star != recurrence:
        raise InvariantViolation(f"automaton and recurrence star counts differ for {q!r}")
    pref = A.count_words(A.prefix_automaton(nfa), horizon)
    infix = A.count_words(A.infix_automaton(nfa), horizon)
    return CountTable(q, max_n, tuple(star), tuple(pref), tuple(infix), k, dfa.n_states)


def check_lemma_L(table: CountTable) -> bool:
    """Check both count sandwiches for every ``n <= max_n`` with ``k = state_bound``.

    ``star <= pref <= star[n] + .. + star[n+k]`` and ``pref <= infix <= k * pref``.
    """
    return not lemma_L_failures(table)


def lemma_L_failures(table: CountTable) -> list:
    k = table.state_bound
    s, p, f = table.star_counts, table.pref_counts, table.infix_counts
    if len(s) < table.max_n + k + 1:
        raise InvalidWordError("count table too short for the look-ahead sum")
    bad = []
    for n in range(table.max_n + 1):
        if not s[n] <= p[n] <= sum(s[n:n + k + 1]):
            bad.append((n, "pref"))
        if not p[n] <= f[n] <= k * p[n]:
            bad.append((n, "infix"))
    return bad
