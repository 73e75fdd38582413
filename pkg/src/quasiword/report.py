"""Report documents emitted by the CLI: JSON envelope plus fixed CSV layouts."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources

from . import __version__

# CSV header rows are part of the external interface; do not reorder
CSV_HEADERS = {
    "analyze": ["field", "value"],
    "count": ["n", "star", "pref", "infix", "lambda_pow"],
    "lambda": ["q", "lambda", "polynomial", "ratio_lo", "ratio_hi", "radius_estimate", "divides_case"],
    "survey": ["rank", "q", "lambda", "polynomial", "divides_case"],
    "omega": ["n", "subword_count", "infix_count", "lambda_pow", "prefix_len_needed", "saturated"],
    "selftest": ["check", "cases", "failures"],
}


@dataclass
class ReportDocument:
    name: str
    arguments: dict
    payload: dict
    seconds: float = 0.0
    version: str = field(default=__version__)

    def to_dict(self) -> dict:
        return {
            "command": {"name": self.name, "version": self.version, "arguments": self.arguments},
            "payload": self.payload,
            "timing": {"seconds": self.seconds},
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        cmd = d["command"]
        return cls(cmd["name"], cmd["arguments"], d["payload"], d["timing"]["seconds"], cmd["version"])

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def csv_rows(self) -> list:
        return csv_rows(self.name, self.payload)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADERS[self.name])
        writer.writerows(self.csv_rows())
        return buf.getvalue()


def load_schema() -> dict:
    text = resources.files("quasiword").joinpath("report_schema.json").read_text()
    return json.loads(text)


def _fmt_lambda(x):
    return None if x is None else f"{x:.9f}"


def csv_rows(name: str, payload: dict) -> list:
    if name == "analyze":
        keys = ["q", "q0", "k", "q_bar", "p_set", "star_root", "is_suffix_code", "delay", "divides", "lambda", "polynomial"]
        out = []
        for key in keys:
            value = payload[key]
            if isinstance(value, list):
                value = " ".join(value)
            elif key == "lambda":
                value = _fmt_lambda(value)
            out.append([key, value])
        return out
    if name == "count":
        return [[r["n"], r["star"], r["pref"], r["infix"], f"{r['lambda_pow']:.9g}"] for r in payload["rows"]]
    if name == "lambda":
        return [[payload["q"], _fmt_lambda(payload["lambda"]), payload["polynomial"], payload["ratio_lo"],
                 payload["ratio_hi"], payload["radius_estimate"], payload["divides_case"]]]
    if name == "survey":
        return [[i + 1, r["q"], _fmt_lambda(r["lambda"]), r["polynomial"], r["divides_case"]]
                for i, r in enumerate(payload["reports"])]
    if name == "omega":
        return [[r["n"], r["subword_count"], r["infix_count"], f"{r['lambda_pow']:.9g}",
                 r["prefix_len_needed"], r["saturated"]] for r in payload["rows"]]
    if name == "selftest":
        return [[c["check"], c["cases"], c["failures"]] for c in payload["checks"]]
    raise KeyError(name)
