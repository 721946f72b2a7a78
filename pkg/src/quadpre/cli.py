"""Command-line front end: ``quadpre <command> [flags]``.

Exit status is 0 on success, 1 for usage errors, 2 when a resource cap is
hit and 3 when a numerical certificate cannot be produced.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

import gmpy2
import numpy as np

from . import coding, paramsets, poly, roots, symdyn
from .symdyn import SignSequence

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_CERT = 0, 1, 2, 3
PRECISION_ENV = "QUADPRE_PRECISION_BITS"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 53
    tol: float = roots.DEFAULT_TOL
    degree_cap: int = poly.DEFAULT_DEGREE_CAP
    depth_cap: int = symdyn.ENUMERATION_CAP
    fmt: str = "json"

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.precision_bits < 53:
            raise UsageError("--precision must be at least 53 bits")
        if self.degree_cap < 1 or self.depth_cap < 1:
            raise UsageError("caps must be positive")

    @property
    def prec(self) -> int | None:
        return None if self.precision_bits == 53 else self.precision_bits


def _num(x, prec: int = 53) -> str:
    """Shortest round-trip decimal for floats; enough digits otherwise."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, type(gmpy2.mpfr())):
        return format(x, f".{max(17, int(prec * math.log10(2)) + 2)}g")
    return repr(float(x))


def _seq_arg(text: str | None) -> SignSequence:
    if not text:
        raise UsageError("--seq is required")
    try:
        return SignSequence.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _need(ns, *names):
    for n in names:
        if getattr(ns, n) is None:
            raise UsageError(f"--{n} is required")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(payload: dict, cfg: RunConfig, text_fn=None, csv_fn=None) -> str:
    if cfg.fmt == "text" and text_fn is not None:
        return text_fn(payload)
    if cfg.fmt == "csv" and csv_fn is not None:
        return csv_fn(payload)
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_iterate(ns, cfg: RunConfig) -> str:
    _need(ns, "a", "n")
    p = poly.iterate_poly(ns.a, ns.n, cfg.degree_cap)
    if cfg.fmt == "text":
        return str(p) + "\n"
    if cfg.fmt == "csv":
        return _csv(["degree", "coefficient"], [(i, str(x)) for i, x in enumerate(p.coeffs)])
    return p.to_json() + "\n"


def cmd_params(ns, cfg: RunConfig) -> str:
    _need(ns, "a", "k", "p")
    rep = paramsets.param_set(ns.a, ns.k, ns.p, cfg.tol, degree_cap=cfg.degree_cap)
    d = rep.to_dict()

    def text(_):
        return "\n".join(_fmt_value(e["value"]) + f"  {e['kind']}" for e in rep.elements) + "\n"

    def table(_):
        return _csv(["re", "im", "mult", "kind"],
                    [(_num(complex(e["value"]).real), _num(complex(e["value"]).imag), e["mult"], e["kind"])
                     for e in rep.elements])

    return _emit(d, cfg, text, table)


def _fmt_value(v) -> str:
    if isinstance(v, int):
        return str(v)
    if isinstance(v, complex):
        return f"{v.real!r}{v.imag:+}j"
    return repr(float(v))


def cmd_points(ns, cfg: RunConfig) -> str:
    _need(ns, "c", "k", "p")
    c = _rational(ns.c)
    rs = paramsets.point_set(c, ns.k, ns.p, cfg.tol, cfg.degree_cap)
    d = rs.to_dict()
    d.update({"c": str(c), "k": ns.k, "p": ns.p, "distinct_count": rs.distinct_count})

    def text(_):
        return "\n".join(_fmt_value(v) for v in rs.values()) + "\n"

    return _emit(d, cfg, text)


def _rational(text: str):
    from fractions import Fraction
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--c must be an integer or rational, got {text!r}") from exc


def cmd_intersect(ns, cfg: RunConfig) -> str:
    _need(ns, "a", "b")
    k_max = ns.k if ns.k is not None else ns.depth
    p_max = ns.p if ns.p is not None else ns.depth
    try:
        rep = paramsets.intersect(ns.a, ns.b, k_max, p_max, cfg.degree_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = rep.to_dict()

    def text(_):
        vals = ", ".join(str(v) for v in sorted(rep.values())) or "(empty)"
        return f"{vals}\ncomplete: {rep.complete}\nverdict: {rep.verdict}\n"

    return _emit(d, cfg, text)


def cmd_code(ns, cfg: RunConfig) -> str:
    _need(ns, "c", "seq")
    seq = _seq_arg(ns.seq).canonical()
    c = _real(ns.c, cfg)
    z = coding.psi(c, seq, prec=cfg.prec)
    zs = coding.psi(c, symdyn.shift(seq), prec=cfg.prec)
    n = seq.k + 2 * seq.p
    signs = coding.itinerary(c, z, n)
    prec = cfg.precision_bits
    d = {
        "c": _num(c, prec),
        "seq": str(seq),
        "value": _num(z, prec),
        "conjugacy_residual": _num(float(abs(z * z + c - zs))),
        "itinerary": signs,
        "expected_signs": list(seq.head(n)),
    }

    def text(_):
        return d["value"] + "\n"

    return _emit(d, cfg, text)


def _real(text, cfg: RunConfig):
    try:
        if cfg.precision_bits > 53:
            return gmpy2.mpfr(text, cfg.precision_bits)
        return float(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"not a number: {text!r}") from exc


def cmd_gamma(ns, cfg: RunConfig) -> str:
    _need(ns, "a", "seq")
    seq = _seq_arg(ns.seq)
    try:
        c = coding.gamma(ns.a, seq, prec=cfg.prec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = {"a": ns.a, "seq": str(seq.canonical()), "c": _num(c, cfg.precision_bits)}
    return _emit(d, cfg, lambda _: d["c"] + "\n")


def cmd_verify_theorem(ns, cfg: RunConfig) -> str:
    depth = ns.depth
    top = ns.n if ns.n is not None else 4
    rows = []
    for a in range(0, top + 1):
        for b in range(a + 1, top + 2):
            rep = paramsets.intersect(a, b, depth, depth, cfg.degree_cap)
            rows.append({"a": a, "b": b, "found": sorted(rep.values()),
                         "predicted": sorted(rep.predicted), "verdict": rep.verdict,
                         "complete": rep.complete})
    d = {"depth": depth, "pairs": rows, "all_verdicts_true": all(r["verdict"] for r in rows)}

    def text(_):
        return "".join(f"a={r['a']} b={r['b']} found={r['found']} verdict={r['verdict']} "
                       f"complete={r['complete']}\n" for r in rows)

    def table(_):
        return _csv(["a", "b", "found", "predicted", "verdict", "complete"],
                    [(r["a"], r["b"], " ".join(map(str, r["found"])),
                      " ".join(map(str, r["predicted"])), r["verdict"], r["complete"]) for r in rows])

    return _emit(d, cfg, text, table)


def cmd_plot_data(ns, cfg: RunConfig) -> str:
    kind = ns.kind
    if ns.samples < 2:
        raise UsageError("--samples must be at least 2")
    if kind == "param-curves":
        _need(ns, "a")
        lo, hi = _range(ns, (coding.c_minus(ns.a), coding.c_plus(ns.a)) if abs(ns.a) >= 2 else (-2.0, 0.25))
        xs = np.linspace(lo, hi, ns.samples)
        polys = [poly.iterate_poly(ns.a, n) for n in range(4)]
        header = ["c"] + [f"F_{n}" for n in range(4)]
        rows = [[x] + [poly.eval_poly(p, float(x)) for p in polys] for x in xs]
    elif kind == "dyn-curves":
        _need(ns, "c")
        c = float(ns.c)
        beta = coding.RealMapParams.of(c).beta if c <= 0.25 else 2.0
        lo, hi = _range(ns, (-beta, beta))
        xs = np.linspace(lo, hi, ns.samples)
        header = ["z"] + [f"F_{n}" for n in range(4)]
        rows = []
        for z in xs:
            vals, w = [], float(z)
            for _ in range(4):
                vals.append(w)
                w = w * w + c
            rows.append([z] + vals)
    elif kind == "zeta-curves":
        _need(ns, "a")
        if abs(ns.a) < 2:
            raise UsageError("zeta-curves needs |a| >= 2")
        sgn = 1 if ns.a > 0 else -1
        lo, hi = _range(ns, (coding.c_minus(ns.a), coding.c_plus(ns.a)))
        xs = np.linspace(lo, hi, ns.samples)
        seqs = symdyn.enumerate_sequences(2, 1, sgn)
        header = ["c"] + [str(s) for s in seqs]
        rows = [[x] + [coding.zeta(s, float(x)) for s in seqs] for x in xs]
    else:
        raise UsageError(f"unknown plot kind {kind!r}")
    rows = [[_num(float(v)) for v in r] for r in rows]
    if cfg.fmt == "json":
        return json.dumps({"kind": kind, "columns": header, "rows": rows}, indent=2) + "\n"
    return _csv(header, rows)


def _range(ns, default):
    lo = float(ns.lo) if ns.lo is not None else float(default[0])
    hi = float(ns.hi) if ns.hi is not None else float(default[1])
    if not lo < hi:
        raise UsageError("need --lo < --hi")
    return lo, hi


def cmd_check(ns, cfg: RunConfig) -> str:
    from .invariants import run_quick_checks
    results = run_quick_checks()
    ns._failed = not all(ok for _, ok in results)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    if cfg.fmt == "json":
        return json.dumps({name: ok for name, ok in results}, indent=2) + "\n"
    return "\n".join(lines) + "\n"


COMMANDS = {
    "iterate": cmd_iterate,
    "params": cmd_params,
    "points": cmd_points,
    "intersect": cmd_intersect,
    "code": cmd_code,
    "gamma": cmd_gamma,
    "verify-theorem": cmd_verify_theorem,
    "plot-data": cmd_plot_data,
    "check": cmd_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    default_prec = int(os.environ.get(PRECISION_ENV, "53") or 53)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)
    common.add_argument("--precision", type=int, default=default_prec, help="mantissa bits")
    common.add_argument("--degree-cap", type=int, default=poly.DEFAULT_DEGREE_CAP)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", help="write output here (UTF-8) instead of stdout")

    parser = _Parser(prog="quadpre", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--a", type=int)
        sp.add_argument("--b", type=int)
        sp.add_argument("--c")
        sp.add_argument("--k", type=int)
        sp.add_argument("--p", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--depth", type=int, default=paramsets.DEFAULT_DEPTH)
        sp.add_argument("--seq")
        if name == "plot-data":
            sp.add_argument("kind", choices=("param-curves", "dyn-curves", "zeta-curves"))
            sp.add_argument("--lo")
            sp.add_argument("--hi")
            sp.add_argument("--samples", type=int, default=101)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fmt = ns.format or ("csv" if ns.command == "plot-data" else "json")
    try:
        cfg = RunConfig(precision_bits=ns.precision, tol=ns.tol, degree_cap=ns.degree_cap, fmt=fmt)
        out = COMMANDS[ns.command](ns, cfg)
    except UsageError as exc:
        print(f"quadpre: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except poly.ResourceLimit as exc:
        print(f"quadpre: resource limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (roots.CertificationError, coding.CodingError) as exc:
        print(f"quadpre: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except ValueError as exc:
        print(f"quadpre: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_CERT if getattr(ns, "_failed", False) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
