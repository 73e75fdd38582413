"""Growth rates as polynomial roots.

The growth rate of ``P_q^*`` is the largest positive root of
``t^|q| - sum(t^(|q|-|v|) for v in star root)`` (``t^|q0| - 1`` when
``|q0|`` divides ``|q|``).  All polynomials handled here have a single
positive leading term and otherwise only ``-1`` coefficients, so once the
polynomial is nonnegative at some ``t' > 0`` it stays positive beyond it and
plain bisection on ``[1, 2]`` finds the root.  Evaluation is exact over
dyadic rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import words as W
from .errors import InvalidWordError
from .quasiperiod import QuasiperiodAnalysis, analyze

BISECTION_STEPS = 60


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first.  Trailing zeros are stripped."""

    coefficients: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict) -> "IntPolynomial":
        """Build from ``{exponent: coefficient}``."""
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Inverse of ``str``: ``"t^3 - t - 1"``."""
        terms = {}
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise InvalidWordError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            body = s[i + 1:j]
            if "t" in body:
                coef, _, power = body.partition("t")
                coef = coef.rstrip("*")
                power = power.lstrip("^")
                e = int(power) if power else 1
                v = int(coef) if coef else 1
            else:
                e, v = 0, int(body)
            terms[e] = terms.get(e, 0) + sign * v
            i = j
        return cls.from_terms(terms)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def sign_at_dyadic(self, m: int, k: int) -> int:
        """Sign of ``p(m / 2^k)``, computed with integers only."""
        d = self.degree
        total = 0
        for i, c in enumerate(self.coefficients):
            if c:
                total += c * m**i << (k * (d - i))
        return (total > 0) - (total < 0)

    def __str__(self):
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if e == 1 else f"t^{e}")
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def has_growth_shape(p: IntPolynomial) -> bool:
    """Leading coefficient 1, every other nonzero coefficient -1, constant term -1."""
    c = p.coefficients
    if len(c) < 2 or c[-1] != 1 or c[0] != -1:
        return False
    return all(x in (0, -1) for x in c[:-1])


def root_bracket(p: IntPolynomial, steps: int = BISECTION_STEPS) -> tuple:
    """Exact dyadic bracket ``(lo, hi)`` around the largest positive root."""
    if not has_growth_shape(p):
        raise InvalidWordError(f"{p} is not of the form t^n - sum(t^i) with constant term -1")
    if p.sign_at_dyadic(1, 0) == 0:
        return Fraction(1), Fraction(1)
    # p(1) = 1 - #negative terms < 0 and p(2) > 0 since 2^n > 2^(n-1) + .. + 1
    lo, hi, k = 1, 2, 0
    for _ in range(steps):
        lo, hi, k = 2 * lo, 2 * hi, k + 1
        mid = (lo + hi) // 2
        if p.sign_at_dyadic(mid, k) > 0:
            hi = mid
        else:
            lo = mid
    if not (p.sign_at_dyadic(lo, k) <= 0 < p.sign_at_dyadic(hi, k)):
        raise ArithmeticError(f"sign pattern lost while bisecting {p}")
    return Fraction(lo, 1 << k), Fraction(hi, 1 << k)


def largest_positive_root(p: IntPolynomial, tol: float = 2.0**-BISECTION_STEPS) -> float:
    """Largest positive root of ``p`` to absolute tolerance ``tol``."""
    if tol <= 0:
        raise InvalidWordError("tol must be positive")
    steps = max(1, math.ceil(-math.log2(tol)))
    lo, hi = root_bracket(p, steps)
    return float((lo + hi) / 2)


@lru_cache(maxsize=None)
def pisot_constant() -> float:
    """Real root of ``t^3 - t - 1``."""
    return largest_positive_root(IntPolynomial((-1, -1, 0, 1)))


def characteristic_polynomial(analysis: QuasiperiodAnalysis) -> IntPolynomial:
    """Reversed denominator of the generating function of ``P_q^*``.

    With ``L`` the longest star-root word this is
    ``t^L - sum(t^(L-|v|))``.  Outside the divisible case ``L = |q|``; when
    the star root is just ``q0`` it is ``t^|q0| - 1``.  A divisible ``q``
    can still have a larger star root (``abaaba`` has generators
    ``aba, abaab``), and then the general form applies.
    """
    root = analysis.star_root
    if list(root) == [analysis.q0]:
        return IntPolynomial.from_terms({len(analysis.q0): 1, 0: -1})
    n = max(len(v) for v in root)
    terms = {n: 1}
    for v in root:
        terms[n - len(v)] = terms.get(n - len(v), 0) - 1
    return IntPolynomial.from_terms(terms)


def extremal_polynomial(n: int) -> IntPolynomial:
    """``t^n - (1 + t + .. + t^floor((n-1)/2))``."""
    if n < 1:
        raise InvalidWordError("n must be >= 1")
    terms = {n: 1}
    for i in range((n - 1) // 2 + 1):
        terms[i] = -1
    return IntPolynomial.from_terms(terms)


def eventually_positive(p: IntPolynomial, grid: Iterable[Fraction], factor=Fraction(101, 100)) -> bool:
    """Spot check: ``p(t) >= 0`` at a grid point implies ``p(factor * t) > 0``."""
    return all(p(factor * t) > 0 for t in grid if t > 0 and p(t) >= 0)


@dataclass(frozen=True)
class GrowthReport:
    q: str
    lam: float
    polynomial: IntPolynomial
    ratio_lo: Optional[float] = None
    ratio_hi: Optional[float] = None
    divides_case: bool = False
    radius_estimate: Optional[float] = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "lambda": self.lam,
            "polynomial": str(self.polynomial),
            "coefficients": list(self.polynomial.coefficients),
            "ratio_lo": self.ratio_lo,
            "ratio_hi": self.ratio_hi,
            "divides_case": self.divides_case,
            "radius_estimate": self.radius_estimate,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GrowthReport":
        return cls(
            q=d["q"], lam=d["lambda"],
            polynomial=IntPolynomial(tuple(d["coefficients"])),
            ratio_lo=d.get("ratio_lo"), ratio_hi=d.get("ratio_hi"),
            divides_case=d["divides_case"], radius_estimate=d.get("radius_estimate"),
        )


RATIO_RANGE = (10, 30)
RADIUS_N = 60


def radius_estimate(star_counts: Sequence[int], n: int = RADIUS_N) -> float:
    """``(S_2n / S_n)^(1/n)`` with ``S_m = a_0 + .. + a_m``.

    Tends to the inverse convergence radius like ``a_n^(1/n)`` but without
    the ``c^(1/n)`` bias of the leading constant, so it is already close at
    ``n = 60``.  Needs ``len(star_counts) > 2n``.
    """
    if len(star_counts) <= 2 * n:
        raise InvalidWordError(f"need counts up to {2 * n}")
    s_n = sum(star_counts[: n + 1])
    s_2n = s_n + sum(star_counts[n + 1: 2 * n + 1])
    return (s_2n / s_n) ** (1.0 / n)


def root_test(star_counts: Sequence[int], n: int, window: int = 10) -> float:
    """``max a_m^(1/m)`` over ``m`` in ``(n - window, n]`` with ``a_m > 0``."""
    vals = [star_counts[m] ** (1.0 / m) for m in range(max(1, n - window + 1), n + 1) if star_counts[m] > 0]
    if not vals:
        raise ArithmeticError("no nonzero star counts in the window")
    return max(vals)


def growth_report(q: str, with_ratios: bool = True) -> GrowthReport:
    """Growth rate of ``q`` plus measured ``infix_n / lambda^n`` bounds on ``[10, 30]``."""
    from .counting import count_table, star_counts_recurrence

    a = analyze(q)
    p = characteristic_polynomial(a)
    lam = largest_positive_root(p)
    lo = hi = None
    if with_ratios:
        table = count_table(q, RATIO_RANGE[1])
        ratios = [table.infix_counts[n] / lam**n for n in range(RATIO_RANGE[0], RATIO_RANGE[1] + 1)]
        lo, hi = min(ratios), max(ratios)
    est = radius_estimate(star_counts_recurrence(a.star_root, 2 * RADIUS_N))
    return GrowthReport(q, lam, p, lo, hi, a.divides, est)


def lambda_q(q: str) -> float:
    return largest_positive_root(characteristic_polynomial(analyze(q)))


@dataclass
class LemmaPolyReport:
    max_n: int
    tol: float
    t_p: float
    roots: dict
    equality_set: list
    exhaustive_max_n: int
    exhaustive_violations: list
    passed: bool

    def as_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "tol": self.tol,
            "t_p": self.t_p,
            "roots": {str(n): r for n, r in self.roots.items()},
            "equality_set": self.equality_set,
            "exhaustive_max_n": self.exhaustive_max_n,
            "exhaustive_violations": self.exhaustive_violations,
            "passed": self.passed,
        }


def restricted_polynomials(n: int):
    """Every ``t^n - sum(t^i for i in M)`` with ``0 in M`` and ``M <= {0..floor((n-1)/2)}``."""
    top = (n - 1) // 2
    rest = range(1, top + 1)
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            terms = {n: 1, 0: -1}
            for i in extra:
                terms[i] = -1
            yield IntPolynomial.from_terms(terms)


def verify_lemma_poly(max_n: int = 50, tol: float = 1e-9, exhaustive_max_n: int = 17) -> LemmaPolyReport:
    """Check the extremal family against the cubic bound and all restricted subsets."""
    if max_n < 5:
        raise InvalidWordError("max_n must be >= 5")
    t_p = pisot_constant()
    roots = {n: largest_positive_root(extremal_polynomial(n)) for n in range(1, max_n + 1)}
    equality = [n for n, r in roots.items() if abs(r - t_p) <= tol]
    bounded = all(r <= t_p + tol for r in roots.values())
    violations = []
    for n in range(1, exhaustive_max_n + 1):
        best = roots[n] if n in roots else largest_positive_root(extremal_polynomial(n))
        for p in restricted_polynomials(n):
            if largest_positive_root(p) > best + tol:
                violations.append(str(p))
    passed = bounded and equality == [3, 5] and not violations
    return LemmaPolyReport(max_n, tol, t_p, roots, equality, exhaustive_max_n, violations, passed)


def canonical_words(alphabet_size: int, max_len: int) -> list:
    """Words up to renaming: letters appear in alphabet order of first use."""
    alphabet = W.Alphabet.of_size(alphabet_size)
    out = []
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            used = len(set(w))
            for ch in alphabet.symbols[: min(used + 1, alphabet_size)]:
                nxt.append(w + ch)
        out.extend(nxt)
        frontier = nxt
    return out


@dataclass
class SurveyResult:
    alphabet_size: int
    max_len: int
    reports: list
    argmax: list
    t_p: float

    def as_dict(self) -> dict:
        return {
            "alphabet_size": self.alphabet_size,
            "max_len": self.max_len,
            "t_p": self.t_p,
            "argmax": self.argmax,
            "reports": [r.as_dict() for r in self.reports],
        }


SURVEY_MAX_LEN = 12


def survey(alphabet_size: int = 2, max_len: int = 5, with_ratios: bool = False, tol: float = 1e-9) -> SurveyResult:
    """Growth rate of every quasiperiod up to renaming, sorted by rate descending."""
    if alphabet_size < 2:
        raise InvalidWordError("alphabet_size must be >= 2")
    if not 1 <= max_len <= SURVEY_MAX_LEN:
        raise InvalidWordError(f"max_len must be in [1, {SURVEY_MAX_LEN}]")
    reports = [growth_report(q, with_ratios) for q in canonical_words(alphabet_size, max_len)]
    reports.sort(key=lambda r: (-r.lam, len(r.q), r.q))
    top = reports[0].lam
    argmax = sorted((r.q for r in reports if top - r.lam <= tol), key=lambda w: (len(w), w))
    return SurveyResult(alphabet_size, max_len, reports, argmax, pisot_constant())


def star_included(q: str, other: str) -> bool:
    """``P_q^* <= P_other^*``, decided on the star root of ``q``."""
    gens = analyze(other).p_set
    return all(W.in_star(v, gens) for v in analyze(q).star_root)


def maximal_quasiperiods(candidates: Sequence[str]) -> list:
    """Candidates whose star language is not strictly contained in another candidate's."""
    q0s = {c: analyze(c).q0 for c in candidates}
    out = []
    for q in candidates:
        dominated = False
        for other in candidates:
            if other == q or not q.startswith(q0s[other]):
                continue
            if star_included(q, other) and not star_included(other, q):
                dominated = True
                break
        if not dominated:
            out.append(q)
    return out
