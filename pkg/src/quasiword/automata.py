"""Finite automata over small alphabets, just enough for exact word counting.

States are integers ``0..n-1``.  Transitions map ``(state, symbol)`` to a
frozenset of successors; a missing key means no move.  Counting distinct
words needs a deterministic automaton, so the closures below return
minimized DFAs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidWordError


@dataclass(frozen=True)
class FiniteAutomaton:
    n_states: int
    alphabet: tuple
    transitions: dict
    initial: frozenset
    accepting: frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        trans = {key: frozenset(v) for key, v in self.transitions.items() if v}
        object.__setattr__(self, "transitions", trans)
        states = range(self.n_states)
        for (s, a), succ in trans.items():
            if s not in states or a not in self.alphabet or any(t not in states for t in succ):
                raise InvalidWordError(f"bad transition {(s, a)} -> {sorted(succ)}")
        if not (self.initial <= set(states) and self.accepting <= set(states)):
            raise InvalidWordError("initial/accepting states out of range")

    @property
    def states(self) -> range:
        return range(self.n_states)

    @property
    def deterministic(self) -> bool:
        return len(self.initial) == 1 and all(len(v) == 1 for v in self.transitions.values())

    def successors(self, s: int, a: str) -> frozenset:
        return self.transitions.get((s, a), frozenset())

    def accepts(self, word: str) -> bool:
        current = set(self.initial)
        for a in word:
            current = {t for s in current for t in self.successors(s, a)}
            if not current:
                return False
        return bool(current & self.accepting)

    def __repr__(self):
        kind = "DFA" if self.deterministic else "NFA"
        return f"<{kind} states={self.n_states} alphabet={''.join(self.alphabet)}>"


def flower_automaton(code: Sequence[str], alphabet: Sequence[str]) -> FiniteAutomaton:
    """NFA for ``code*``: a shared root plus one spine state per inner codeword position."""
    if not code or any(not c for c in code):
        raise InvalidWordError("flower automaton needs nonempty codewords")
    trans = {}
    n = 1
    for c in code:
        prev = 0
        for i, a in enumerate(c):
            if i == len(c) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            trans.setdefault((prev, a), set()).add(nxt)
            prev = nxt
    return FiniteAutomaton(n, alphabet, trans, {0}, {0})


def _reachable(a: FiniteAutomaton, start) -> set:
    seen = set(start)
    stack = list(start)
    while stack:
        s = stack.pop()
        for x in a.alphabet:
            for t in a.successors(s, x):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return seen


def _coreachable(a: FiniteAutomaton) -> set:
    back = {}
    for (s, _), succ in a.transitions.items():
        for t in succ:
            back.setdefault(t, set()).add(s)
    seen = set(a.accepting)
    stack = list(a.accepting)
    while stack:
        t = stack.pop()
        for s in back.get(t, ()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def _restrict(a: FiniteAutomaton, keep, initial=None, accepting=None) -> FiniteAutomaton:
    order = sorted(keep)
    index = {s: i for i, s in enumerate(order)}
    trans = {}
    for (s, x), succ in a.transitions.items():
        if s in index:
            kept = {index[t] for t in succ if t in index}
            if kept:
                trans[(index[s], x)] = kept
    init = a.initial if initial is None else initial
    acc = a.accepting if accepting is None else accepting
    return FiniteAutomaton(
        len(order), a.alphabet, trans,
        {index[s] for s in init if s in index},
        {index[s] for s in acc if s in index},
    )


def trim(a: FiniteAutomaton) -> FiniteAutomaton:
    """Keep only states that are both reachable and co-reachable."""
    return _restrict(a, _reachable(a, a.initial) & _coreachable(a))


def determinize(a: FiniteAutomaton) -> FiniteAutomaton:
    """Subset construction; the empty subset (dead state) is omitted."""
    start = frozenset(a.initial)
    index = {start: 0}
    queue = deque([start])
    trans = {}
    while queue:
        subset = queue.popleft()
        for x in a.alphabet:
            nxt = frozenset(t for s in subset for t in a.successors(s, x))
            if not nxt:
                continue
            if nxt not in index:
                index[nxt] = len(index)
                queue.append(nxt)
            trans[(index[subset], x)] = {index[nxt]}
    accepting = {i for subset, i in index.items() if subset & a.accepting}
    return FiniteAutomaton(len(index), a.alphabet, trans, {0}, accepting)


def minimize(a: FiniteAutomaton) -> FiniteAutomaton:
    """Moore partition refinement on a DFA, returning a trimmed minimal DFA."""
    if not a.deterministic:
        raise InvalidWordError("minimize expects a deterministic automaton")
    a = trim(a)
    if a.n_states == 0:
        return a
    dead = a.n_states

    def delta(s, x):
        if s == dead:
            return dead
        succ = a.successors(s, x)
        return next(iter(succ)) if succ else dead

    states = list(range(a.n_states + 1))
    block = {s: int(s in a.accepting) for s in states}
    while True:
        sig = {s: (block[s],) + tuple(block[delta(s, x)] for x in a.alphabet) for s in states}
        ids = {}
        new_block = {s: ids.setdefault(sig[s], len(ids)) for s in states}
        if len(ids) == len(set(block.values())):
            break
        block = new_block
    dead_block = block[dead]
    init_block = block[next(iter(a.initial))]
    # renumber with the initial block first, then BFS order for stable output
    order = {init_block: 0}
    queue = deque([init_block])
    rep = {}
    for s in states:
        rep.setdefault(block[s], s)
    trans = {}
    while queue:
        b = queue.popleft()
        for x in a.alphabet:
            t = block[delta(rep[b], x)]
            if t == dead_block:
                continue
            if t not in order:
                order[t] = len(order)
                queue.append(t)
            trans[(order[b], x)] = {order[t]}
    accepting = {order[block[s]] for s in a.accepting if block[s] in order}
    return trim(FiniteAutomaton(len(order), a.alphabet, trans, {0}, accepting))


def prefix_automaton(a: FiniteAutomaton) -> FiniteAutomaton:
    """Minimal DFA for the prefixes of ``L(a)``."""
    t = trim(a)
    closed = _restrict(t, set(t.states), accepting=set(t.states))
    return minimize(determinize(closed))


def infix_automaton(a: FiniteAutomaton) -> FiniteAutomaton:
    """Minimal DFA for the infixes of ``L(a)``."""
    t = trim(a)
    every = set(t.states)
    closed = _restrict(t, every, initial=every, accepting=every)
    return minimize(determinize(closed))


def count_words(a: FiniteAutomaton, max_n: int) -> list:
    """``|L(a) & X^n|`` for ``n = 0..max_n`` by path counting on a DFA."""
    if not a.deterministic:
        raise InvalidWordError("count_words needs a deterministic automaton")
    if max_n < 0:
        raise InvalidWordError("max_n must be >= 0")
    ways = {next(iter(a.initial)): 1}
    out = []
    for n in range(max_n + 1):
        out.append(sum(c for s, c in ways.items() if s in a.accepting))
        if n == max_n:
            break
        nxt = {}
        for s, c in ways.items():
            for x in a.alphabet:
                for t in a.successors(s, x):
                    nxt[t] = nxt.get(t, 0) + c
        ways = nxt
    return out
