"""The eleven acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import time

import pytest

from conftest import covered_by_definition, minimal_delay_bruteforce
from quasiword import automata as A
from quasiword import counting as C
from quasiword import quasiperiod as QP
from quasiword import spectral as S
from quasiword import words as W
from quasiword.omega import build_prefix, check_saturation, subword_complexity

T_P_REFERENCE = 1.324718


@pytest.mark.criterion("1. aabaaaaba: q0, k, generators, suffix code, delay 2, q.q0 not in Q_q")
def test_criterion_1_example_one():
    q = "aabaaaaba"
    start = time.perf_counter()
    a = QP.analyze.__wrapped__(q)
    in_qq = QP.membership_Qq(q + a.q0, q)
    elapsed = time.perf_counter() - start
    gens = ("aabaa", "aabaaaab", "aabaaaaba")
    assert (a.q0, a.k) == ("aabaa", 1)
    assert a.p_set == gens and a.star_root == gens
    assert a.is_suffix_code and a.delay == 2
    assert minimal_delay_bruteforce(list(gens), 3) == 2
    assert not in_qq and not covered_by_definition(q + a.q0, q)
    assert elapsed < 1.0


@pytest.mark.criterion("2. aba: generators {ab, aba}, delay 1 below the bound k+1 = 2")
def test_criterion_2_example_two():
    a = QP.analyze("aba")
    assert a.p_set == ("ab", "aba")
    assert a.delay == 1 and a.k + 1 == 2
    assert minimal_delay_bruteforce(["ab", "aba"], 2) == 1


@pytest.mark.criterion("3. lambda(aba) = 1.324718 within 1e-6, polynomial t^3 - t - 1")
def test_criterion_3_cubic_constant():
    r = S.growth_report("aba", with_ratios=False)
    assert abs(r.lam - T_P_REFERENCE) < 1e-6
    assert str(r.polynomial) == "t^3 - t - 1"
    assert abs(S.pisot_constant() - T_P_REFERENCE) < 1e-6


@pytest.mark.criterion("4. lambda(aabaa) = lambda(aba) within 1e-9, polynomial t^5 - t^2 - t - 1")
def test_criterion_4_factorization_identity():
    assert abs(S.lambda_q("aabaa") - S.lambda_q("aba")) < 1e-9
    p = S.characteristic_polynomial(QP.analyze("aabaa"))
    assert str(p) == "t^5 - t^2 - t - 1"
    assert p == S.IntPolynomial.parse("t^2 + 1") * S.IntPolynomial.parse("t^3 - t - 1")


@pytest.mark.criterion("5. recurrence = brute force = automaton, binary |q| <= 9, n <= 14, < 2 min")
def test_criterion_5_oracle_equivalence(binary_q9):
    start = time.perf_counter()
    mismatches = []
    for q in binary_q9:
        root = QP.analyze(q).star_root
        rec = C.star_counts_recurrence(root, 14)
        brute = C.star_counts_bruteforce(root, 14)
        auto = A.count_words(C.star_dfa(root), 14)
        if not rec == brute == auto:
            mismatches.append(q)
    elapsed = time.perf_counter() - start
    assert mismatches == []
    assert elapsed < 120


def _prefix_structure_failures(q, a):
    bad = []
    pre = W.prefixes(q)
    small = [v for v in a.p_set if len(v) <= len(q) - len(a.q0)]
    for v in a.p_set:
        for w in pre:
            vw = v + w
            if not (q.startswith(vw) or vw.startswith(q)):
                bad.append(("v.w comparable with q", v, w))
            if q.startswith(w + v) and not W.in_star(w, [a.q0]):
                bad.append(("left factor in q0^*", v, w))
    for v in small:
        if not W.in_star(v, [a.q0]):
            bad.append(("short generator in q0^*", v))
    return bad


@pytest.mark.criterion("6. code axioms for binary |q| <= 9")
def test_criterion_6_code_axioms(binary_q9):
    failures = []
    for q in binary_q9:
        a = QP.analyze(q)
        if not QP.is_suffix_code(a.star_root):
            failures.append((q, "suffix code"))
        if a.delay is None or a.delay > a.k + 1:
            failures.append((q, "delay bound"))
        if not W.is_primitive(a.q0):
            failures.append((q, "q0 primitive"))
        if QP.star_root_bruteforce(a.p_set) != list(a.star_root):
            failures.append((q, "star root identity"))
        if any(v != a.q0 and len(a.q0) + len(v) <= len(q) for v in a.star_root):
            failures.append((q, "star root inclusion"))
        failures.extend((q,) + f for f in _prefix_structure_failures(q, a))
    assert failures == []


@pytest.mark.criterion("7. count sandwiches for aba, aa, aabaaaaba, aabba up to n = 20")
def test_criterion_7_sandwiches():
    for q in ["aba", "aa", "aabaaaaba", "aabba"]:
        t = C.count_table(q, 20)
        assert t.state_bound == C.build_star_automaton(QP.analyze(q).star_root).n_states
        assert C.lemma_L_failures(t) == [], q


@pytest.mark.criterion("8. survey |q| <= 9: every lambda <= t_P + 1e-9; argmax over |q| <= 5 is {aba, aabaa}")
def test_criterion_8_global_bound():
    t_p = S.pisot_constant()
    res = S.survey(2, 9)
    assert len(res.reports) == 2**9 - 1
    assert all(r.lam <= t_p + 1e-9 for r in res.reports)
    assert set(S.survey(2, 5).argmax) == {"aba", "aabaa"}


@pytest.mark.criterion("9. extremal polynomials n <= 50, equality only at 3 and 5, exhaustive to 17")
def test_criterion_9_extremal_family():
    rep = S.verify_lemma_poly(max_n=50, tol=1e-9, exhaustive_max_n=17)
    t_p = S.pisot_constant()
    assert all(r <= t_p + 1e-9 for r in rep.roots.values())
    assert [n for n, r in rep.roots.items() if abs(r - t_p) <= 1e-9] == [3, 5]
    assert rep.exhaustive_violations == []
    assert rep.passed


@pytest.mark.criterion("10. omega-prefix saturates infix counts for aba, aabaa, aabaaaaba, n <= 12")
def test_criterion_10_saturation():
    for q in ["aba", "aabaa", "aabaaaaba"]:
        infix = C.count_table(q, 12).infix_counts
        for n in range(13):
            s = check_saturation(q, n)
            assert s.saturated, (q, n)
            w = build_prefix(q, max(s.prefix_len_needed, len(q))).prefix[: s.prefix_len_needed]
            assert subword_complexity(w, n) == infix[n], (q, n)


@pytest.mark.criterion("11. q = a^m, m <= 6: lambda 1, star counts all 1, delay 0")
def test_criterion_11_unary():
    for m in range(1, 7):
        q = "a" * m
        a = QP.analyze(q)
        assert S.lambda_q(q) == 1.0
        assert C.count_table(q, 20).star_counts[:21] == (1,) * 21
        assert a.delay == 0
