"""Figures for CLI reports, written straight to files.

Uses ``matplotlib.figure.Figure`` directly so no GUI backend or pyplot
global state is involved.
"""

from __future__ import annotations

import math

from matplotlib.figure import Figure

GOLDEN = (math.sqrt(5) - 1.0) / 2.0


def _figure(width=6.0, height=None):
    if height is None:
        height = width * GOLDEN
    fig = Figure(figsize=(width, height), facecolor="w")
    ax = fig.add_subplot(1, 1, 1)
    return fig, ax


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return path


def plot_counts(payload: dict, path):
    """Star, prefix and infix counts on a log axis against ``lambda^n``."""
    rows = payload["rows"]
    n = [r["n"] for r in rows]
    fig, ax = _figure()
    for key, style in (("star", "o-"), ("pref", "s-"), ("infix", "^-")):
        ys = [r[key] if r[key] > 0 else float("nan") for r in rows]
        ax.plot(n, ys, style, ms=3, lw=1, label=key)
    ax.plot(n, [r["lambda_pow"] for r in rows], "k--", lw=1, label=r"$\lambda^n$")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("words of length n")
    ax.set_title(f"q = {payload['table']['q']},  lambda = {payload['lambda']:.6f}")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)


def plot_omega(payload: dict, path):
    rows = payload["rows"]
    n = [r["n"] for r in rows]
    fig, ax = _figure()
    ax.plot(n, [r["subword_count"] for r in rows], "o-", ms=3, label="prefix factors")
    ax.plot(n, [r["infix_count"] for r in rows], "x--", ms=4, label="infix(Q_q)")
    ax.plot(n, [r["lambda_pow"] for r in rows], "k:", lw=1, label=r"$\lambda^n$")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("f(n)")
    ax.set_title(f"q = {payload['prefix']['q']},  prefix length {payload['prefix']['length']}")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)


def plot_survey(payload: dict, path):
    """Growth rate against quasiperiod length, with the cubic bound drawn in."""
    reports = payload["reports"]
    fig, ax = _figure()
    xs = [len(r["q"]) for r in reports]
    ys = [r["lambda"] for r in reports]
    ax.scatter(xs, ys, s=10, alpha=0.6)
    ax.axhline(payload["t_p"], color="k", ls="--", lw=1, label=f"t_P = {payload['t_p']:.6f}")
    for r in reports:
        if r["q"] in payload["argmax"]:
            ax.annotate(r["q"], (len(r["q"]), r["lambda"]), fontsize=7,
                        xytext=(3, 3), textcoords="offset points")
    ax.set_xlabel("|q|")
    ax.set_ylabel("lambda_q")
    ax.legend(frameon=False, fontsize=8, loc="lower right")
    return _save(fig, path)


def plot_polynomial(payload: dict, path, lo=0.5, hi=1.6, samples=200):
    coeffs = payload["coefficients"]

    def p(t):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc

    ts = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    fig, ax = _figure()
    ax.plot(ts, [p(t) for t in ts], lw=1.2)
    ax.axhline(0, color="0.6", lw=0.8)
    ax.axvline(payload["lambda"], color="k", ls="--", lw=1)
    ax.set_xlabel("t")
    ax.set_ylabel("p(t)")
    ax.set_title(f"{payload['polynomial']}   root {payload['lambda']:.9f}")
    return _save(fig, path)
