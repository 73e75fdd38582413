from itertools import product

import pytest

N_SMALL = 14

ACCEPTANCE_RESULTS = {}


def binary_words(max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for letters in product("ab", repeat=n):
            yield "".join(letters)


@pytest.fixture(scope="session")
def binary_q9():
    """Every word over {a, b} of length 1..9 (no renaming quotient)."""
    return list(binary_words(9))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        ACCEPTANCE_RESULTS[marker.args[0]] = "PASS" if report.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[label]}  {label}")


# --- independent oracles -------------------------------------------------


def covered_by_definition(w, q):
    """Quasiperiodicity straight from the covering family: for every j < |w| some
    prefix u with j - |q| < |u| <= j has u.q a prefix of w."""
    if not w:
        return True
    return all(
        any(w.startswith(w[:i] + q) for i in range(max(0, j - len(q) + 1), j + 1))
        for j in range(len(w))
    )


def star_words_naive(gens, max_len):
    """Word set of gens^* up to max_len by repeated concatenation to a fixed point."""
    words = {""}
    frontier = {""}
    while frontier:
        new = set()
        for w in frontier:
            for g in gens:
                x = w + g
                if len(x) <= max_len and x not in words:
                    new.add(x)
        words |= new
        frontier = new
    return words


def in_pref_of_star(x, code):
    """x in pref(code^*) = code^* . pref(code), by a left-to-right scan."""
    reach = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for c in code:
            if x.startswith(c, i) and i + len(c) not in reach and i + len(c) <= len(x):
                reach.add(i + len(c))
                todo.append(i + len(c))
    return any(any(c.startswith(x[i:]) for c in code) or i == len(x) for i in reach)


def delay_holds_bruteforce(code, m):
    """Delay m: no w != w2, v1..vm with w.v1..vm a prefix of a word in w2.code^*."""
    for w in code:
        for w2 in code:
            if w == w2:
                continue
            for vs in product(code, repeat=m):
                x = w + "".join(vs)
                if x.startswith(w2):
                    if in_pref_of_star(x[len(w2):], code):
                        return False
                elif w2.startswith(x):
                    return False
    return True


def minimal_delay_bruteforce(code, bound):
    for m in range(bound + 1):
        if delay_holds_bruteforce(code, m):
            return m
    return None
