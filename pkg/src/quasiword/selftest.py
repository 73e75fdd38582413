"""Cross-oracle checks: every quantity computed two independent ways."""

from __future__ import annotations

from . import automata as A
from . import counting as C
from . import quasiperiod as QP
from . import words as W
from .errors import BudgetExceeded
from .spectral import canonical_words


def _check(name, cases, failures, skipped=0):
    return {"check": name, "cases": cases, "failures": len(failures), "skipped": skipped,
            "examples": failures[:5]}


def run_selftest(max_len: int = 6, max_n: int = 14, word_len: int = 10) -> dict:
    """Run all cross-checks over binary quasiperiods up to ``max_len`` (up to renaming)."""
    qs = canonical_words(2, max_len)
    alphabet = W.Alphabet.of_size(2)
    checks = []

    bad = []
    for q in qs:
        root = QP.analyze(q).star_root
        rec = C.star_counts_recurrence(root, max_n)
        brute = C.star_counts_bruteforce(root, max_n)
        auto = A.count_words(C.star_dfa(root), max_n)
        if not rec == brute == auto:
            bad.append(q)
    checks.append(_check("star counts: recurrence = brute force = automaton", len(qs), bad))

    bad = []
    cases = 0
    ws = list(W.all_words(alphabet, word_len))
    for q in qs:
        for w in ws:
            cases += 1
            cover = W.is_quasiperiodic(w, q)
            chain = W.extract_q_chain(w, q) is not None or w == ""
            if not cover == QP.membership_Qq(w, q) == chain:
                bad.append(f"{q}:{w}")
    checks.append(_check("membership: occurrence cover = factorization = q-chain", cases, bad))

    bad = []
    for q in qs:
        p = QP.compute_P(q)
        if not p == QP.P_by_definition(q) == QP.P_by_power(q):
            bad.append(q)
        elif QP.compute_star_root(p) != QP.star_root_bruteforce(p):
            bad.append(q)
    checks.append(_check("generators and star root: formula = definition", len(qs), bad))

    bad = []
    skipped = 0
    for q in qs:
        a = QP.analyze(q)
        if not QP.is_code(a.star_root):
            bad.append(q)
            continue
        try:
            if QP.find_ambiguity(a.star_root, 2 * (a.k + 2) * len(q), budget=200_000) is not None:
                bad.append(q)
        except BudgetExceeded:
            skipped += 1
    checks.append(_check("star root is a code: dangling suffixes = brute force", len(qs), bad, skipped))

    bad = []
    for q in qs:
        try:
            QP.analyze(q).check_invariants()
        except Exception as exc:  # report, do not abort the run
            bad.append(f"{q}: {exc}")
    checks.append(_check("analysis invariants", len(qs), bad))

    return {"passed": all(c["failures"] == 0 for c in checks), "checks": checks}
