"""Command-line front end: single queries, range sweeps, verification reports.

Usage: steinfill <subcommand> [flags] [--format human|json|csv]

Exit codes: 0 = every check in the run held, 1 = at least one check failed
or an internal cross-check tripped, 2 = usage error.

Output is deterministic (ascending index order) and never approximates:
rationals are rendered as "numerator/denominator" strings, the infinite
valuation as "+inf".  JSON output is a single object with exactly the keys
{command, results, summary, version}; CSV carries a mandatory header row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .bernoulli import (
    bernoulli_nt,
    bernoulli_top,
    num_den_parts,
    self_check,
    vsc_denominator,
)
from .congruence import (
    CarlitzParams,
    check_carlitz,
    check_doubling_divisibility,
    check_reciprocal_difference,
)
from .exact_arith import INFINITY, InternalCheckError, ord_2
from .fillability import (
    ManifoldInvariants,
    ahat,
    decide_admissibility,
    equivalence_audit_cases,
    forced_sigma_valuation,
    validate_invariants,
)

# values produced here can have thousands of digits; lift the int -> str guard
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

FORMATS = ("human", "json", "csv")


@dataclass
class Command:
    """A validated invocation: subcommand, parameters, output format."""

    name: str
    params: dict
    fmt: str
    echo: str


@dataclass
class Report:
    """Results plus summary counts; renderable to every supported format."""

    command: str
    results: list[dict]
    summary: dict
    version: str
    columns: list[str]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinfill",
        description=(
            "Exact-arithmetic checks: Bernoulli numbers, 2-adic congruences, "
            "and stable almost complex structure admissibility."
        ),
    )
    parser.add_argument("--version", action="version", version=f"steinfill {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=FORMATS, default="human")
        return p

    p = add("bern", "Bernoulli values in either convention")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--top", type=int, help="single topologist-convention index k >= 1")
    g.add_argument("--nt", type=int, help="single number-theoretic index n >= 0")
    g.add_argument("--max-k", type=int, help="sweep topologist k = 1..MAX_K")
    g.add_argument("--max-n", type=int, help="sweep number-theoretic n = 0..MAX_N")

    p = add("vsc", "prime-product denominator law for even indices")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="single even index n >= 2")
    g.add_argument("--max-n", type=int, help="sweep even n = 2..MAX_N")

    p = add("parts", "numerator/denominator/odd-part decomposition of B_k")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int, help="single index k >= 1")
    g.add_argument("--max-k", type=int, help="sweep k = 1..MAX_K")

    p = add("carlitz", "2-adic bound on iterated Bernoulli differences")
    p.add_argument("--n", type=int, help="even start index n >= 2")
    p.add_argument("--w", type=int, help="even increment w >= 2")
    p.add_argument("--r", type=int, help="difference order r >= 1")
    p.add_argument("--max-n", type=int, help="sweep even n = 2..MAX_N")
    p.add_argument("--max-w", type=int, help="sweep even w = 2..MAX_W")
    p.add_argument("--max-r", type=int, help="sweep r = 1..MAX_R")

    p = add("prop-a4", "reciprocal-difference valuation identity and bound")
    p.add_argument("--n", type=int, help="even index n >= 2")
    p.add_argument("--m", type=int, help="even index m > n")
    p.add_argument("--max-m", type=int, help="sweep all even 2 <= n < m <= MAX_M")

    p = add("thm-a1", "index-doubling divisibility of reciprocal differences")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int, help="single even k >= 2")
    g.add_argument("--max-k", type=int, help="sweep even k = 2..MAX_K")

    p = add("ahat", "A-hat genus from (k, sigma, tau^2) by Wall's formula")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--tau2", type=int, required=True)

    p = add("admits", "decide stable almost complex admissibility")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--tau2", type=int, required=True)
    p.add_argument("--tau-in-image", action="store_true")

    p = add("audit-yang", "sweep the equivalence of both admissibility conditions")
    p.add_argument("--max-k", type=int, required=True)

    p = add("self-check", "cross-check the two Bernoulli algorithms")
    p.add_argument("--max-n", type=int, required=True)

    return parser


def _require(parser: argparse.ArgumentParser, ok: bool, message: str) -> None:
    if not ok:
        parser.error(message)


def parse(argv: list[str]) -> Command:
    """Parse and validate argv; exits with code 2 on any usage problem."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    name = ns.subcommand
    params = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "format")}

    if name == "bern":
        if ns.top is not None:
            _require(parser, ns.top >= 1, f"--top must be >= 1, got {ns.top}")
        if ns.nt is not None:
            _require(parser, ns.nt >= 0, f"--nt must be >= 0, got {ns.nt}")
        if ns.max_k is not None:
            _require(parser, ns.max_k >= 0, f"--max-k must be >= 0, got {ns.max_k}")
        if ns.max_n is not None:
            _require(parser, ns.max_n >= 0, f"--max-n must be >= 0, got {ns.max_n}")
    elif name == "vsc":
        if ns.n is not None:
            _require(parser, ns.n >= 2 and ns.n % 2 == 0, f"--n must be even and >= 2, got {ns.n}")
        if ns.max_n is not None:
            _require(parser, ns.max_n >= 0, f"--max-n must be >= 0, got {ns.max_n}")
    elif name == "parts":
        if ns.k is not None:
            _require(parser, ns.k >= 1, f"--k must be >= 1, got {ns.k}")
        if ns.max_k is not None:
            _require(parser, ns.max_k >= 0, f"--max-k must be >= 0, got {ns.max_k}")
    elif name == "carlitz":
        singles = (ns.n, ns.w, ns.r)
        sweeps = (ns.max_n, ns.max_w, ns.max_r)
        if any(v is not None for v in singles):
            _require(parser, all(v is not None for v in singles), "--n, --w, --r must be given together")
            _require(parser, all(v is None for v in sweeps), "mix of single and sweep flags")
            _require(parser, ns.n >= 2 and ns.n % 2 == 0, f"--n must be even and >= 2, got {ns.n}")
            _require(parser, ns.w >= 2 and ns.w % 2 == 0, f"--w must be even and >= 2, got {ns.w}")
            _require(parser, ns.r >= 1, f"--r must be >= 1, got {ns.r}")
        else:
            _require(parser, all(v is not None for v in sweeps), "--max-n, --max-w, --max-r must be given together")
            for flag, v in (("--max-n", ns.max_n), ("--max-w", ns.max_w), ("--max-r", ns.max_r)):
                _require(parser, v >= 0, f"{flag} must be >= 0, got {v}")
    elif name == "prop-a4":
        if ns.max_m is not None:
            _require(parser, ns.n is None and ns.m is None, "mix of single and sweep flags")
            _require(parser, ns.max_m >= 0, f"--max-m must be >= 0, got {ns.max_m}")
        else:
            _require(parser, ns.n is not None and ns.m is not None, "--n and --m must be given together")
            _require(parser, ns.n >= 2 and ns.n % 2 == 0, f"--n must be even and >= 2, got {ns.n}")
            _require(parser, ns.m % 2 == 0 and ns.m > ns.n, f"--m must be even and > n, got {ns.m}")
    elif name == "thm-a1":
        if ns.k is not None:
            _require(parser, ns.k >= 2 and ns.k % 2 == 0, f"--k must be even and >= 2, got {ns.k}")
        if ns.max_k is not None:
            _require(parser, ns.max_k >= 0, f"--max-k must be >= 0, got {ns.max_k}")
    elif name == "ahat":
        _require(parser, ns.k >= 1, f"--k must be >= 1, got {ns.k}")
    elif name == "admits":
        inv = ManifoldInvariants(k=ns.k, sigma=ns.sigma, tau_sq=ns.tau2, tau_in_image=ns.tau_in_image)
        problems = validate_invariants(inv)
        _require(parser, not problems, "; ".join(problems))
        if ns.k >= 3:
            forced = forced_sigma_valuation(ns.k)
            _require(
                parser,
                ord_2(ns.sigma) >= forced,
                f"2^{forced} must divide --sigma for k={ns.k} (ord_2 is {ord_2(ns.sigma)})",
            )
    elif name == "audit-yang":
        _require(parser, ns.max_k >= 1, f"--max-k must be >= 1, got {ns.max_k}")
    elif name == "self-check":
        _require(parser, ns.max_n >= 0 and ns.max_n % 2 == 0, f"--max-n must be even and >= 0, got {ns.max_n}")

    echo = " ".join([name] + [a for a in argv if a != name and not a.startswith("--format") and a not in FORMATS])
    return Command(name=name, params=params, fmt=ns.format, echo=echo)


def _nt_row_ok(n: int, value: Fraction) -> bool:
    if n == 0:
        return value == 1
    if n == 1:
        return value == Fraction(-1, 2)
    if n % 2 == 1:
        return value == 0
    return (value > 0) == (n // 2 % 2 == 1)  # sign (-1)^(n/2+1)


def _run_bern(params: dict) -> tuple[list[str], list[dict]]:
    rows = []
    if params.get("top") is not None or params.get("max_k") is not None:
        ks = [params["top"]] if params.get("top") is not None else range(1, params["max_k"] + 1)
        for k in ks:
            v = bernoulli_top(k)
            rows.append({"convention": "top", "index": k, "value": v, "holds": v > 0})
    else:
        ns_ = [params["nt"]] if params.get("nt") is not None else range(0, params["max_n"] + 1)
        for n in ns_:
            v = bernoulli_nt(n)
            rows.append({"convention": "nt", "index": n, "value": v, "holds": _nt_row_ok(n, v)})
    return ["convention", "index", "value", "holds"], rows


def _run_vsc(params: dict) -> tuple[list[str], list[dict]]:
    ns_ = [params["n"]] if params.get("n") is not None else range(2, params["max_n"] + 1, 2)
    rows = []
    for n in ns_:
        law = vsc_denominator(n)
        actual = bernoulli_nt(n).denominator
        rows.append({"n": n, "prime_product": law, "denominator": actual, "holds": law == actual})
    return ["n", "prime_product", "denominator", "holds"], rows


def _run_parts(params: dict) -> tuple[list[str], list[dict]]:
    ks = [params["k"]] if params.get("k") is not None else range(1, params["max_k"] + 1)
    rows = []
    for k in ks:
        p = num_den_parts(k)  # raises InternalCheckError if parity facts fail
        rows.append(
            {
                "k": k,
                "numerator": p.numerator,
                "denominator": p.denominator,
                "odd_part": p.odd_part,
                "holds": True,
            }
        )
    return ["k", "numerator", "denominator", "odd_part", "holds"], rows


def _carlitz_row(cp: CarlitzParams) -> dict:
    rep = check_carlitz(cp)
    return {
        "n": cp.n,
        "w": cp.w,
        "r": cp.r,
        "ord": rep.observed_ord,
        "bound": rep.bound,
        "holds": rep.holds,
        "witness": rep.witness,
    }


def _run_carlitz(params: dict) -> tuple[list[str], list[dict]]:
    cols = ["n", "w", "r", "ord", "bound", "holds", "witness"]
    if params.get("n") is not None:
        return cols, [_carlitz_row(CarlitzParams(params["n"], params["w"], params["r"]))]
    rows = []
    for n in range(2, params["max_n"] + 1, 2):
        for w in range(2, params["max_w"] + 1, 2):
            for r in range(1, params["max_r"] + 1):
                rows.append(_carlitz_row(CarlitzParams(n, w, r)))
    return cols, rows


def _recip_row(n: int, m: int) -> dict:
    rep = check_reciprocal_difference(n, m)
    return {
        "n": n,
        "m": m,
        "ord": rep.observed_ord,
        "bound": rep.bound,
        "holds": rep.holds,
        "witness": rep.witness,
    }


def _run_prop_a4(params: dict) -> tuple[list[str], list[dict]]:
    cols = ["n", "m", "ord", "bound", "holds", "witness"]
    if params.get("max_m") is not None:
        rows = []
        for n in range(2, params["max_m"] + 1, 2):
            for m in range(n + 2, params["max_m"] + 1, 2):
                rows.append(_recip_row(n, m))
        return cols, rows
    return cols, [_recip_row(params["n"], params["m"])]


def _doubling_row(k: int) -> dict:
    rep = check_doubling_divisibility(k)
    return {
        "k": k,
        "j": ord_2(k),
        "ord": rep.observed_ord,
        "bound": rep.bound,
        "holds": rep.holds,
        "witness": rep.witness,
    }


def _run_thm_a1(params: dict) -> tuple[list[str], list[dict]]:
    cols = ["k", "j", "ord", "bound", "holds", "witness"]
    if params.get("k") is not None:
        return cols, [_doubling_row(params["k"])]
    return cols, [_doubling_row(k) for k in range(2, params["max_k"] + 1, 2)]


def _run_ahat(params: dict) -> tuple[list[str], list[dict]]:
    genus = ahat(params["k"], params["sigma"], params["tau2"])
    row = {
        "k": params["k"],
        "sigma": params["sigma"],
        "tau2": params["tau2"],
        "value": genus.value,
        "is_integer": genus.is_integer,
        "holds": True,
    }
    return ["k", "sigma", "tau2", "value", "is_integer", "holds"], [row]


def _run_admits(params: dict) -> tuple[list[str], list[dict]]:
    inv = ManifoldInvariants(
        k=params["k"],
        sigma=params["sigma"],
        tau_sq=params["tau2"],
        tau_in_image=params["tau_in_image"],
    )
    rep = decide_admissibility(inv)
    row = {
        "k": inv.k,
        "sigma": inv.sigma,
        "tau2": inv.tau_sq,
        "tau_in_image": inv.tau_in_image,
        "yang": rep.yang_verdict,
        "yang_plus": rep.yang_plus_verdict,
        "consistent": rep.consistent,
        "condition_value": rep.audit["condition_value"],
        "condition_ord": rep.audit["condition_value_ord_2"],
        "ahat": rep.audit["ahat"],
        "ahat_is_integer": rep.audit["ahat_is_integer"],
        "holds": rep.consistent,
    }
    return list(row.keys()), [row]


def _run_audit_yang(params: dict) -> tuple[list[str], list[dict]]:
    cols = ["k", "sigma", "tau2", "tau_in_image", "yang", "yang_plus", "holds"]
    rows = []
    for inv in equivalence_audit_cases(params["max_k"]):
        rep = decide_admissibility(inv)
        rows.append(
            {
                "k": inv.k,
                "sigma": inv.sigma,
                "tau2": inv.tau_sq,
                "tau_in_image": inv.tau_in_image,
                "yang": rep.yang_verdict,
                "yang_plus": rep.yang_plus_verdict,
                "holds": rep.consistent,
            }
        )
    return cols, rows


def _run_self_check(params: dict) -> tuple[list[str], list[dict]]:
    rep = self_check(params["max_n"])
    row = {
        "max_n": params["max_n"],
        "checked": rep.checked,
        "ok": rep.ok,
        "detail": rep.detail or "",
        "holds": rep.ok,
    }
    return ["max_n", "checked", "ok", "detail", "holds"], [row]


_RUNNERS = {
    "bern": _run_bern,
    "vsc": _run_vsc,
    "parts": _run_parts,
    "carlitz": _run_carlitz,
    "prop-a4": _run_prop_a4,
    "thm-a1": _run_thm_a1,
    "ahat": _run_ahat,
    "admits": _run_admits,
    "audit-yang": _run_audit_yang,
    "self-check": _run_self_check,
}


def run(cmd: Command) -> tuple[Report, int]:
    """Execute a validated command: exit 0 if every check held, else 1."""
    columns, rows = _RUNNERS[cmd.name](cmd.params)
    failed = sum(1 for row in rows if not row["holds"])
    report = Report(
        command=cmd.echo,
        results=rows,
        summary={"checked": len(rows), "held": len(rows) - failed, "failed": failed},
        version=__version__,
        columns=columns,
    )
    return report, (1 if failed else 0)


def _json_cell(v: object) -> object:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if v is INFINITY:
        return "+inf"
    return v


def _text_cell(v: object) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if v is INFINITY:
        return "+inf"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(report: Report, fmt: str) -> str:
    """Serialize a report; exact in every format (no decimal expansions)."""
    if fmt == "json":
        payload = {
            "command": report.command,
            "results": [{k: _json_cell(v) for k, v in row.items()} for row in report.results],
            "summary": report.summary,
            "version": report.version,
        }
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(report.columns)
        for row in report.results:
            writer.writerow([_text_cell(row[c]) for c in report.columns])
        return buf.getvalue().rstrip("\r\n")
    if fmt == "human":
        table = [report.columns] + [
            [_text_cell(row[c]) for c in report.columns] for row in report.results
        ]
        widths = [max(len(line[i]) for line in table) for i in range(len(report.columns))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in table]
        s = report.summary
        lines.append(f"checked={s['checked']} held={s['held']} failed={s['failed']}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def main(argv: list[str] | None = None) -> int:
    cmd = parse(sys.argv[1:] if argv is None else argv)
    try:
        report, code = run(cmd)
    except InternalCheckError as exc:
        print(f"INTERNAL CHECK FAILED: {exc}", file=sys.stderr)
        return 1
    print(render(report, cmd.fmt))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
