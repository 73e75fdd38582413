"""The generator language P_q of a quasiperiod and its code properties.

For a quasiperiod ``q`` the generators are the nonempty prefixes ``v`` of
``q`` with ``q`` a proper prefix of ``v + q``; equivalently the prefixes whose
length is a period of ``q``.  Their star root (the generators that are not a
concatenation of two or more generators) is a suffix code with bounded delay
of decipherability, which is what makes exact counting possible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import words as W
from .errors import BudgetExceeded, InvalidWordError, InvariantViolation, NotACodeError


@lru_cache(maxsize=4096)
def _compute_P(q: str) -> tuple:
    return tuple(q[:p] for p in W.periods(q))


def compute_P(q: str) -> list:
    """Generators of ``q``, ascending by length.  ``q`` itself is always last."""
    if not q:
        raise InvalidWordError("q must be nonempty")
    return list(_compute_P(q))


def P_by_definition(q: str) -> list:
    """Literal predicate: ``e < v <= q < v.q`` (prefix order)."""
    out = []
    for i in range(1, len(q) + 1):
        v = q[:i]
        vq = v + q
        if W.is_prefix(v, q) and W.is_proper_prefix(q, vq):
            out.append(v)
    return out


def P_by_power(q: str) -> list:
    """Prefixes ``v`` with ``|v| <= |q|`` such that ``q`` is a prefix of some power of ``v``."""
    out = []
    for i in range(1, len(q) + 1):
        v = q[:i]
        if W.is_prefix(q, v * (len(q) // len(v) + 1)):
            out.append(v)
    return out


def compute_star_root(p_set: Sequence[str]) -> list:
    """Drop the proper powers of the shortest generator.

    Only powers of ``q0`` can be products of other generators, so this is
    the whole star root.  ``star_root_bruteforce`` computes it from the
    definition.
    """
    if not p_set:
        raise InvalidWordError("generator set must be nonempty")
    q0 = p_set[0]
    out = [q0]
    for v in p_set[1:]:
        n, rem = divmod(len(v), len(q0))
        if rem or q0 * n != v:
            out.append(v)
    return out


def star_root_bruteforce(p_set: Sequence[str]) -> list:
    """``P \\ (P^2 . P^*)``: generators with no factorization into >= 2 generators."""
    gens = list(p_set)
    out = []
    for v in gens:
        # most[i]: max number of factors (capped at 2) in a factorization of v[:i]
        most = [-1] * (len(v) + 1)
        most[0] = 0
        for i in range(len(v)):
            if most[i] < 0:
                continue
            for g in gens:
                if v.startswith(g, i):
                    j = i + len(g)
                    most[j] = max(most[j], min(most[i] + 1, 2))
        if most[-1] < 2:
            out.append(v)
    return out


def is_suffix_code(c: Sequence[str]) -> bool:
    """No word of ``c`` is a proper suffix of another."""
    for u in c:
        for v in c:
            if len(u) < len(v) and v.endswith(u):
                return False
    return True


def is_prefix_code(c: Sequence[str]) -> bool:
    for u in c:
        for v in c:
            if len(u) < len(v) and v.startswith(u):
                return False
    return True


def _cover(r: str, code: Sequence[str]):
    """Ways to cover the nonempty word ``r`` by codewords.

    Yields ``(overhang, used)`` where ``r + overhang == "".join(used)`` and
    only the last codeword reaches past (or exactly to) the end of ``r``.
    """
    for c in code:
        if len(c) >= len(r):
            if c.startswith(r):
                yield c[len(r):], (c,)
        elif r.startswith(c):
            for s, used in _cover(r[len(c):], code):
                yield s, (c,) + used


def _initial_states(code: Sequence[str]):
    """Dangling suffixes after a first codeword ``w`` against a different ``w2``.

    Yields ``(overhang, w, w2, right_words)``: the right-hand side
    ``"".join(right_words)`` starts with ``w2`` and equals ``w + overhang``.
    """
    for w in code:
        for w2 in code:
            if w == w2:
                continue
            if w2.startswith(w):
                yield w2[len(w):], w, w2, (w2,)
            elif w.startswith(w2):
                for s, used in _cover(w[len(w2):], code):
                    yield s, w, w2, (w2,) + used


def _step(s: str, code: Sequence[str]):
    """Extend the left side by one codeword ``v`` against overhang ``s``."""
    for v in code:
        if s.startswith(v):
            yield s[len(v):], v, ()
        elif v.startswith(s):
            for s2, used in _cover(v[len(s):], code):
                yield s2, v, used


def is_code(c: Sequence[str]) -> bool:
    """Unique decipherability by exhaustive dangling-suffix search.

    The left side is a factorization starting with ``w``, the right side
    one starting with ``w2 != w``; an overhang of ``""`` means both sides
    spell the same word.  The overhangs are suffixes of codewords, so the
    search is finite.
    """
    return find_dangling_ambiguity(c) is None


def find_dangling_ambiguity(c: Sequence[str]) -> Optional[tuple]:
    """Two distinct factorizations ``(left, right)`` of one word, or ``None``."""
    code = _validate_code_words(c)
    parent = {}
    queue = deque()
    for s, w, w2, right in _initial_states(code):
        if s not in parent:
            parent[s] = (None, (w,), right, w2)
            queue.append(s)
    while queue:
        s = queue.popleft()
        if s == "":
            return _unwind_ambiguity(parent, s)
        for s2, v, used in _step(s, code):
            if s2 not in parent:
                parent[s2] = (s, (v,), used, None)
                queue.append(s2)
    return None


def _unwind_ambiguity(parent, s):
    left, right = [], []
    while s is not None:
        prev, lw, rw, _ = parent[s]
        left[:0] = lw
        right[:0] = rw
        s = prev
    return tuple(left), tuple(right)


def _validate_code_words(c: Sequence[str]) -> list:
    code = list(c)
    if not code:
        raise InvalidWordError("code must be nonempty")
    if any(not w for w in code):
        raise InvalidWordError("codewords must be nonempty")
    if len(set(code)) != len(code):
        raise InvalidWordError(f"duplicate codewords in {code!r}")
    return code


def find_ambiguity(c: Sequence[str], max_len: int, budget: int = 10**6) -> Optional[tuple]:
    """Brute-force search for a word of length ``<= max_len`` with two factorizations.

    Independent of the dangling-suffix search: it materializes every
    factorization up to ``max_len`` and compares the words they spell.
    Raises ``BudgetExceeded`` if more than ``budget`` factorizations arise.
    """
    code = _validate_code_words(c)
    seen = {"": ()}
    frontier = [((), "")]
    count = 0
    while frontier:
        nxt = []
        for fact, word in frontier:
            for v in code:
                w2 = word + v
                if len(w2) > max_len:
                    continue
                f2 = fact + (v,)
                count += 1
                if count > budget:
                    raise BudgetExceeded(f"more than {budget} factorizations up to length {max_len}")
                if w2 in seen:
                    return seen[w2], f2
                seen[w2] = f2
                nxt.append((f2, w2))
        frontier = nxt
    return None


def _delay_layers(code: Sequence[str], bound: int):
    """Overhang layers ``S_0 .. S_bound`` with parent links for witnesses."""
    layers = []
    layer = {}
    for s, w, w2, right in _initial_states(code):
        layer.setdefault(s, (None, (w,), right))
    layers.append(layer)
    for _ in range(bound):
        if not layer:
            break
        nxt = {}
        for s in layer:
            for s2, v, used in _step(s, code):
                nxt.setdefault(s2, (s, (v,), used))
        layers.append(nxt)
        layer = nxt
    return layers


def decipherability_delay(c: Sequence[str], bound: int) -> Optional[int]:
    """Minimal delay of decipherability of the code ``c``, searched up to ``bound``.

    Delay ``m`` holds iff no ``w != w2`` and ``v1..vm`` in ``c`` make
    ``w v1..vm`` a prefix of a word in ``w2 c^*``.  Returns ``None`` if the
    delay exceeds ``bound``; raises ``NotACodeError`` if ``c`` is not
    uniquely decipherable.
    """
    if bound < 0:
        raise InvalidWordError("bound must be >= 0")
    code = _validate_code_words(c)
    amb = find_dangling_ambiguity(code)
    if amb is not None:
        raise NotACodeError(f"{code!r} is not a code: {''.join(amb[0])!r} factors twice", amb)
    for m, layer in enumerate(_delay_layers(code, bound)):
        if not layer:
            return m
    return None


def delay_witness(c: Sequence[str], m: int) -> Optional[dict]:
    """A counterexample to delay ``m``, or ``None`` if delay ``m`` holds.

    Returns ``{"left": [w, v1, .., vm], "right": [w2, u1, ..]}`` with
    ``"".join(left)`` a prefix of ``"".join(right)`` and ``w != w2``.
    """
    code = _validate_code_words(c)
    layers = _delay_layers(code, m)
    if len(layers) <= m or not layers[m]:
        return None
    s = min(layers[m], key=lambda x: (len(x), x))
    left, right = [], []
    for depth in range(m, -1, -1):
        prev, lw, rw = layers[depth][s]
        left[:0] = lw
        right[:0] = rw
        s = prev
    return {"left": left, "right": right}


@dataclass(frozen=True)
class QuasiperiodAnalysis:
    q: str
    q0: str
    k: int
    q_bar: str
    p_set: tuple
    star_root: tuple
    is_suffix_code: bool
    delay: int
    divides: bool
    witness: Optional[dict] = field(default=None, compare=False)

    def check_invariants(self) -> None:
        """Raise ``InvariantViolation`` if any structural guarantee fails."""
        problems = []
        if self.p_set[0] != self.q0:
            problems.append("q0 is not the shortest generator")
        if self.q not in self.p_set:
            problems.append("q missing from generators")
        if any(not self.q.startswith(v) for v in self.p_set):
            problems.append("generator is not a prefix of q")
        if self.q0 * self.k + self.q_bar != self.q or not W.is_proper_prefix(self.q_bar, self.q0):
            problems.append("q != q0^k . q_bar with q_bar a proper prefix of q0")
        if not set(self.star_root) <= set(self.p_set) or self.q0 not in self.star_root:
            problems.append("star root is not a subset of the generators containing q0")
        if not self.is_suffix_code:
            problems.append("star root is not a suffix code")
        if self.delay > self.k + 1:
            problems.append(f"delay {self.delay} exceeds k+1 = {self.k + 1}")
        if list(self.star_root) == [self.q0] and not self.divides:
            problems.append("star root is {q0} but |q0| does not divide |q|")
        if not W.is_primitive(self.q0):
            problems.append("q0 is not primitive")
        if problems:
            raise InvariantViolation(f"analysis of {self.q!r}: " + "; ".join(problems))

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "q0": self.q0,
            "k": self.k,
            "q_bar": self.q_bar,
            "p_set": list(self.p_set),
            "star_root": list(self.star_root),
            "is_suffix_code": self.is_suffix_code,
            "delay": self.delay,
            "divides": self.divides,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuasiperiodAnalysis":
        return cls(
            q=d["q"], q0=d["q0"], k=d["k"], q_bar=d["q_bar"],
            p_set=tuple(d["p_set"]), star_root=tuple(d["star_root"]),
            is_suffix_code=d["is_suffix_code"], delay=d["delay"],
            divides=d["divides"], witness=d.get("witness"),
        )


@lru_cache(maxsize=4096)
def analyze(q: str) -> QuasiperiodAnalysis:
    """Everything derived from the quasiperiod ``q``.

    The delay is searched up to ``k + 1``, which always suffices.  When the
    delay is positive, ``witness`` holds a counterexample to delay
    ``delay - 1``.
    """
    p_set = compute_P(q)
    q0 = p_set[0]
    k = len(q) // len(q0)
    q_bar = q[k * len(q0):]
    root = compute_star_root(p_set)
    delay = decipherability_delay(root, k + 1)
    if delay is None:
        raise InvariantViolation(f"delay of star root of {q!r} exceeds k+1 = {k + 1}")
    witness = delay_witness(root, delay - 1) if delay > 0 else None
    return QuasiperiodAnalysis(
        q=q,
        q0=q0,
        k=k,
        q_bar=q_bar,
        p_set=tuple(p_set),
        star_root=tuple(root),
        is_suffix_code=is_suffix_code(root),
        delay=delay,
        divides=len(q) % len(q0) == 0,
        witness=witness,
    )


def membership_Qq(w: str, q: str) -> bool:
    """``w`` in ``P_q^* . q`` or ``w`` empty, by factorization over the generators."""
    if not q:
        raise InvalidWordError("q must be nonempty")
    if not w:
        return True
    if not w.endswith(q):
        return False
    return W.in_star(w[: len(w) - len(q)], compute_P(q))
