"""Command-line interface: ``quasiword <command> ...``.

Exit codes: 0 ok, 2 malformed input, 3 enumeration budget exceeded,
4 internal cross-check failed.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .counting import budget_from_env, check_lemma_L, count_table, star_counts_bruteforce
from .errors import BudgetExceeded, InvalidWordError, InvariantViolation, NotACodeError
from .omega import build_prefix, check_saturation, subword_complexity
from .quasiperiod import analyze
from .report import ReportDocument
from .selftest import run_selftest
from .spectral import SURVEY_MAX_LEN, characteristic_polynomial, growth_report, largest_positive_root, survey
from .words import Alphabet

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


def _word(text: str, alphabet: str = None) -> str:
    if not text:
        raise InvalidWordError("quasiperiod must be nonempty")
    if any(ch.isspace() or not ch.isprintable() for ch in text):
        raise InvalidWordError(f"quasiperiod {text!r} contains whitespace or control characters")
    if alphabet:
        Alphabet(tuple(alphabet)).validate(text)
    return text


def _analysis_payload(q):
    a = analyze(q)
    a.check_invariants()
    p = characteristic_polynomial(a)
    d = a.as_dict()
    d["lambda"] = largest_positive_root(p)
    d["polynomial"] = str(p)
    return d


def cmd_analyze(args):
    q = _word(args.q, args.alphabet)
    return {"q": q, "alphabet": args.alphabet}, _analysis_payload(q)


def cmd_count(args):
    q = _word(args.q, args.alphabet)
    budget = budget_from_env()
    table = count_table(q, args.max_n)
    if args.check:
        brute = star_counts_bruteforce(analyze(q).star_root, args.max_n, budget)
        if brute != list(table.star_counts[: args.max_n + 1]):
            raise InvariantViolation(f"brute-force and automaton star counts differ for {q!r}")
    lam = growth_report(q, with_ratios=False).lam
    rows = [{"n": n, "star": s, "pref": p, "infix": f, "lambda_pow": lam**n} for n, s, p, f in table.rows()]
    payload = {"table": table.as_dict(), "lambda": lam, "lemma_L": check_lemma_L(table), "rows": rows}
    return {"q": q, "max_n": args.max_n, "check": args.check}, payload


def cmd_lambda(args):
    q = _word(args.q, args.alphabet)
    return {"q": q}, growth_report(q).as_dict()


def cmd_survey(args):
    result = survey(args.alphabet, args.max_len, with_ratios=args.ratios)
    return {"max_len": args.max_len, "alphabet": args.alphabet, "ratios": args.ratios}, result.as_dict()


def cmd_omega(args):
    q = _word(args.q, args.alphabet)
    if args.n > args.len:
        raise InvalidWordError("--n must not exceed --len")
    prefix = build_prefix(q, max(args.len, len(q)))
    table = count_table(q, args.n)
    lam = growth_report(q, with_ratios=False).lam
    rows = []
    for n in range(args.n + 1):
        sat = check_saturation(q, n)
        rows.append({
            "n": n,
            "subword_count": subword_complexity(prefix.prefix, n),
            "infix_count": table.infix_counts[n],
            "lambda_pow": lam**n,
            "prefix_len_needed": sat.prefix_len_needed,
            "saturated": sat.saturated,
        })
    payload = {
        "prefix": prefix.summary(args.n),
        "lambda": lam,
        "infix_count": table.infix_counts[args.n],
        "saturation": check_saturation(q, args.n).as_dict(),
        "rows": rows,
    }
    return {"q": q, "len": args.len, "n": args.n}, payload


def cmd_selftest(args):
    result = run_selftest(args.max_len, args.max_n, args.word_len)
    return {"max_len": args.max_len, "max_n": args.max_n, "word_len": args.word_len}, result


def _human(doc: ReportDocument) -> str:
    p = doc.payload
    name = doc.name
    lines = []
    if name == "analyze":
        for key in ("q", "q0", "k", "q_bar", "divides"):
            lines.append(f"{key}: {p[key]}")
        lines.append(f"P_q: [{', '.join(p['p_set'])}]")
        lines.append(f"star_root: [{', '.join(p['star_root'])}]")
        lines.append(f"suffix_code: {p['is_suffix_code']}")
        lines.append(f"delay: {p['delay']} (bound k+1 = {p['k'] + 1})")
        if p["witness"] and p["delay"] == p["k"] + 1:
            left, right = p["witness"]["left"], p["witness"]["right"]
            lines.append(f"witness: {'.'.join(left)} <= {'.'.join(right)}")
        lines.append(f"polynomial: {p['polynomial']}")
        lines.append(f"lambda: {p['lambda']:.9f}")
    elif name == "count":
        t = p["table"]
        lines.append(f"q: {t['q']}  lambda: {p['lambda']:.9f}  state_bound: {t['state_bound']}")
        lines.append(f"{'n':>4} {'star':>12} {'pref':>12} {'infix':>12} {'lambda^n':>14}")
        for r in p["rows"]:
            lines.append(f"{r['n']:>4} {r['star']:>12} {r['pref']:>12} {r['infix']:>12} {r['lambda_pow']:>14.6g}")
        lines.append(f"lemma_L: {'holds' if p['lemma_L'] else 'FAILS'}")
    elif name == "lambda":
        lines.append(f"q: {p['q']}")
        lines.append(f"polynomial: {p['polynomial']}")
        lines.append(f"lambda: {p['lambda']:.9f}")
        if p["ratio_lo"] is not None:
            lines.append(f"infix/lambda^n on [10,30]: [{p['ratio_lo']:.6f}, {p['ratio_hi']:.6f}]")
        lines.append(f"radius estimate (n=60): {p['radius_estimate']:.9f}")
    elif name == "survey":
        lines.append(f"{'rank':>5}  {'q':<14} {'lambda':>12}  polynomial")
        for i, r in enumerate(p["reports"], 1):
            lines.append(f"{i:>5}  {r['q']:<14} {r['lambda']:>12.9f}  {r['polynomial']}")
        lines.append(f"argmax: {{{', '.join(p['argmax'])}}}  (t_P = {p['t_p']:.9f})")
    elif name == "omega":
        pre, sat = p["prefix"], p["saturation"]
        lines.append(f"q: {pre['q']}  prefix length: {pre['length']}  order: {pre['enumeration_order']}")
        lines.append(f"head: {pre['head']}")
        lines.append(f"subwords of length {pre['n']}: {pre['subword_count']}  (infix(Q_q): {p['infix_count']})")
        state = "saturated" if sat["saturated"] else "NOT saturated"
        lines.append(f"{state} at prefix length {sat['prefix_len_needed']}")
    elif name == "selftest":
        for c in p["checks"]:
            mark = "ok  " if c["failures"] == 0 else "FAIL"
            extra = f", {c['skipped']} skipped" if c.get("skipped") else ""
            lines.append(f"[{mark}] {c['check']}: {c['cases']} cases, {c['failures']} failures{extra}")
        lines.append("selftest passed" if p["passed"] else "selftest FAILED")
    return "\n".join(lines)


def _plot(doc: ReportDocument, path: str) -> None:
    from . import plotting

    plotter = {
        "count": plotting.plot_counts,
        "omega": plotting.plot_omega,
        "survey": plotting.plot_survey,
        "lambda": plotting.plot_polynomial,
    }.get(doc.name)
    if plotter is None:
        raise InvalidWordError(f"--plot is not supported for {doc.name}")
    plotter(doc.payload, path)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the JSON report document")
    fmt.add_argument("--csv", action="store_true", help="emit CSV with a fixed header row")
    common.add_argument("--plot", metavar="PATH", help="also write a figure to PATH (count, lambda, survey, omega)")

    parser = _Parser(prog="quasiword", description="Analyze quasiperiods of finite and infinite words.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="generators, star root, code properties")
    p.add_argument("q")
    p.add_argument("--alphabet", help="declared symbols, e.g. 'ab'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("count", parents=[common], help="exact star/prefix/infix counts per length")
    p.add_argument("q")
    p.add_argument("max_n_pos", nargs="?", type=int, metavar="N", help=argparse.SUPPRESS)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--alphabet")
    p.add_argument("--no-check", dest="check", action="store_false",
                   help="skip the brute-force cross-check (bounded by QUASIWORD_BUDGET)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("lambda", parents=[common], help="growth rate as a polynomial root")
    p.add_argument("q")
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("survey", parents=[common], help="growth rates of all quasiperiods up to renaming")
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--alphabet", type=int, default=2, help="alphabet size r")
    p.add_argument("--ratios", action="store_true", help="also measure infix/lambda^n ratios (slower)")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("omega", parents=[common], help="prefix of a maximal-complexity omega-word")
    p.add_argument("q")
    p.add_argument("--len", type=int, default=2000)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("selftest", parents=[common], help="run the cross-oracle checks")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--word-len", type=int, default=10)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "count":
        if args.max_n is None:
            args.max_n = args.max_n_pos if args.max_n_pos is not None else 20
        if args.max_n < 0:
            parser.error("--max-n must be >= 0")
    if args.command == "survey" and not 1 <= args.max_len <= SURVEY_MAX_LEN:
        parser.error(f"--max-len must be in [1, {SURVEY_MAX_LEN}]")

    started = time.perf_counter()
    try:
        arguments, payload = args.func(args)
        doc = ReportDocument(args.command, arguments, payload, time.perf_counter() - started)
        if args.json:
            print(doc.to_json())
        elif args.csv:
            sys.stdout.write(doc.to_csv())
        else:
            print(_human(doc))
        if args.plot:
            _plot(doc, args.plot)
    except InvalidWordError as exc:
        print(f"quasiword: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"quasiword: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvariantViolation, NotACodeError) as exc:
        print(f"quasiword: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.command == "selftest" and not payload["passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
