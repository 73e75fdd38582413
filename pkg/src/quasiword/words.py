"""Word arithmetic: prefixes, periods, primitivity and quasiperiodicity.

Words are plain Python strings, one character per symbol.  An
:class:`Alphabet` is only needed where the symbol set matters (automata,
enumeration, surveys); everything else works on the letters present.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidWordError

EMPTY = ""

# pool used to pad an inferred alphabet up to two symbols
_DEFAULT_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of at least two distinct single-character symbols."""

    symbols: tuple

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if any(not isinstance(s, str) or len(s) != 1 for s in symbols):
            raise InvalidWordError("alphabet symbols must be single characters")
        if len(set(symbols)) != len(symbols):
            raise InvalidWordError(f"duplicate symbols in alphabet {symbols!r}")
        if len(symbols) < 2:
            raise InvalidWordError("an alphabet needs at least two symbols")

    @classmethod
    def of_size(cls, r: int) -> "Alphabet":
        if not 2 <= r <= len(_DEFAULT_LETTERS):
            raise InvalidWordError(f"alphabet size must be in [2, 26], got {r}")
        return cls(tuple(_DEFAULT_LETTERS[:r]))

    @classmethod
    def infer(cls, *words: str) -> "Alphabet":
        """Letters of ``words`` in first-occurrence order, padded to size 2."""
        seen = []
        for w in words:
            for ch in w:
                if ch not in seen:
                    seen.append(ch)
        for ch in _DEFAULT_LETTERS:
            if len(seen) >= 2:
                break
            if ch not in seen:
                seen.append(ch)
        return cls(tuple(seen))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def validate(self, word: str) -> str:
        bad = sorted(set(word) - set(self.symbols))
        if bad:
            raise InvalidWordError(f"symbols {bad} of {word!r} not in alphabet {''.join(self.symbols)}")
        return word

    def words(self, n: int) -> Iterator[str]:
        """All words of length ``n`` in lexicographic order of the alphabet."""
        for letters in product(self.symbols, repeat=n):
            yield "".join(letters)


@dataclass(frozen=True)
class QChain:
    """Witness that ``elements[-1]`` is quasiperiodic with quasiperiod ``q``."""

    q: str
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        check_q_chain(self.elements, self.q)

    @property
    def last(self) -> str:
        return self.elements[-1]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def check_q_chain(elements: Sequence[str], q: str) -> None:
    """Raise ``InvalidWordError`` unless ``elements`` form a q-chain."""
    if not elements:
        raise InvalidWordError("a q-chain is nonempty")
    if elements[0] != q:
        raise InvalidWordError(f"q-chain must start with q={q!r}, got {elements[0]!r}")
    for prev, cur in zip(elements, elements[1:]):
        if not (is_prefix(prev, cur) and len(prev) < len(cur)):
            raise InvalidWordError(f"{prev!r} is not a proper prefix of {cur!r}")
        if len(cur) - len(prev) > len(q):
            raise InvalidWordError(f"gap {prev!r} -> {cur!r} exceeds |q|={len(q)}")
    for w in elements:
        if not w.endswith(q):
            raise InvalidWordError(f"q-chain element {w!r} does not end in {q!r}")


def _require_nonempty(w: str, what: str = "word") -> None:
    if not w:
        raise InvalidWordError(f"{what} must be nonempty")


def is_prefix(u: str, w: str) -> bool:
    return w.startswith(u)


def is_proper_prefix(u: str, w: str) -> bool:
    return len(u) < len(w) and w.startswith(u)


def prefixes(w: str) -> list:
    """All prefixes of ``w`` including the empty word and ``w`` itself."""
    return [w[:i] for i in range(len(w) + 1)]


def left_derivative(w: str, u: str) -> Optional[str]:
    """The word ``x`` with ``u + x == w``, or ``None`` if ``u`` is not a prefix."""
    return w[len(u):] if w.startswith(u) else None


def border_array(w: str) -> list:
    """``b[i]`` = length of the longest proper border of ``w[:i+1]``."""
    b = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = b[k - 1]
        if w[i] == w[k]:
            k += 1
        b[i] = k
    return b


def periods(q: str) -> list:
    """All periods ``p`` of ``q`` (``1 <= p <= |q|``), ascending.

    Every border of length ``l`` gives the period ``|q| - l``; walking the
    border chain from the longest border down to the empty one yields all of
    them, so ``|q|`` is always included.
    """
    _require_nonempty(q, "q")
    b = border_array(q)
    n = len(q)
    out = []
    l = b[-1]
    while l:
        out.append(n - l)
        l = b[l - 1]
    out.append(n)
    return out


def is_period(q: str, p: int) -> bool:
    return 1 <= p <= len(q) and all(q[i] == q[i + p] for i in range(len(q) - p))


def is_primitive(w: str) -> bool:
    """True iff ``w`` is not a proper power ``u^n`` with ``n > 1``."""
    _require_nonempty(w)
    n = len(w)
    for d in range(1, n // 2 + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def primitive_root(w: str) -> tuple:
    """Return ``(u, n)`` with ``u`` primitive and ``u * n == w``."""
    _require_nonempty(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable: w is a power of itself")


def occurrences(w: str, q: str) -> list:
    """Start positions of (possibly overlapping) occurrences of ``q`` in ``w``."""
    out = []
    i = w.find(q)
    while i != -1:
        out.append(i)
        i = w.find(q, i + 1)
    return out


def is_quasiperiodic(w: str, q: str) -> bool:
    """Decide whether the occurrences of ``q`` cover ``w``.

    Occurrences must start at 0, one must end at ``|w|``, and consecutive
    starts may be at most ``|q|`` apart.  The empty word is covered vacuously.
    """
    _require_nonempty(q, "q")
    if not w:
        return True
    starts = occurrences(w, q)
    if not starts or starts[0] != 0 or starts[-1] + len(q) != len(w):
        return False
    return all(b - a <= len(q) for a, b in zip(starts, starts[1:]))


def extract_q_chain(w: str, q: str) -> Optional[QChain]:
    """Greedy q-chain ending at ``w``, or ``None`` if ``w`` is not covered by ``q``.

    Each step jumps to the longest prefix of ``w`` that ends with an
    occurrence of ``q`` and lies at most ``|q|`` beyond the current element.
    """
    _require_nonempty(q, "q")
    if not w:
        return None
    m = len(q)
    ends = [s + m for s in occurrences(w, q)]
    if not ends or ends[0] != m or ends[-1] != len(w):
        return None
    chain = [m]
    j = 0
    while chain[-1] < len(w):
        cur = chain[-1]
        best = None
        while j < len(ends) and ends[j] <= cur + m:
            if ends[j] > cur:
                best = ends[j]
            j += 1
        if best is None:
            return None
        chain.append(best)
    return QChain(q, [w[:e] for e in chain])


def factor_positions(w: str, generators: Iterable[str]) -> list:
    """``reach[i]`` is True iff ``w[:i]`` is a concatenation of generators."""
    gens = [g for g in set(generators) if g]
    reach = [False] * (len(w) + 1)
    reach[0] = True
    for i in range(len(w)):
        if not reach[i]:
            continue
        for g in gens:
            if w.startswith(g, i):
                reach[i + len(g)] = True
    return reach


def in_star(w: str, generators: Iterable[str]) -> bool:
    """Membership of ``w`` in ``generators*`` by dynamic programming."""
    return factor_positions(w, generators)[-1]


def is_pref_of_Qq(u: str, q: str) -> bool:
    """True iff ``u`` is a prefix of some word quasiperiodic with quasiperiod ``q``.

    Uses the factorization ``pref(Q_q) = P_q^* . pref(q)``.
    """
    from .quasiperiod import compute_P

    _require_nonempty(q, "q")
    reach = factor_positions(u, compute_P(q))
    return any(ok and q.startswith(u[i:]) for i, ok in enumerate(reach))


def canonical(w: str, alphabet: Optional[Alphabet] = None) -> str:
    """Rename letters so they appear in alphabet order of first occurrence."""
    letters = alphabet.symbols if alphabet is not None else _DEFAULT_LETTERS
    mapping = {}
    for ch in w:
        if ch not in mapping:
            if len(mapping) >= len(letters):
                raise InvalidWordError(f"{w!r} uses more letters than the alphabet has")
            mapping[ch] = letters[len(mapping)]
    return "".join(mapping[ch] for ch in w)


def all_words(alphabet: Alphabet, max_len: int, min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        yield from alphabet.words(n)
