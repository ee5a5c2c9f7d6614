"""Command-line front end.

One binary, one subcommand per module.  Every subcommand takes `--json`
and then emits a versioned envelope {"schema": "1", "command": ...,
"result": ...}; without it a short human-readable report is printed.

Serialization rules, chosen so golden outputs are bit-stable: exact
rationals always render as "num/den" strings (denominator 1 included),
floats as decimal strings with 15 significant digits, integers as plain
JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import sympy

from .arithmetic import level_data, prime_fixed_check, sl_index
from .errors import DomainError, ParseError, TracegeoError, exit_code_for
from .error_budget import BudgetParams, beta_max, exponents, lambda_min
from .invariants_k import (GroupSpec, RelativeDatum, k_by_pairs, k_min_orbit,
                           k_report, k_richardson)
from .local_data import RationalMatrix, weyl_discriminant
from .mellin_fp import (AsymptoticExpansion, TailFunction, exp_preset,
                        fp_mellin, sqrt_exp_preset)
from .nilpotent_orbits import GLType, list_orbits, orbit_dim
from .parabolic_lattice import (dim_unipotent_radical,
                                enumerate_parabolic_subsets, levi_of)
from .reproduce import run_reproduction
from .root_datum import RootSystem, SimpleType, build_root_system


# -- group-spec grammar --------------------------------------------------------


@dataclass(frozen=True)
class ParsedGroupSpec:
    """A group-spec string, decomposed.

    Grammar: simple factors joined by 'x' ("A2", "B3xA1"), an optional
    central-torus suffix "+Tk", then optional "@res=<n>" and
    "@relative=<path>" markers in either order, each at most once.
    """

    factors: tuple[SimpleType, ...]
    torus_rank: int = 0
    restriction_degree: int = 1
    relative_path: str | None = None

    def render(self) -> str:
        body = "x".join(str(t) for t in self.factors)
        if self.torus_rank:
            body += f"+T{self.torus_rank}"
        if self.restriction_degree != 1:
            body += f"@res={self.restriction_degree}"
        if self.relative_path is not None:
            body += f"@relative={self.relative_path}"
        return body

    def root_system(self) -> RootSystem:
        return build_root_system(list(self.factors), self.torus_rank)


def parse_group_spec(text: str) -> ParsedGroupSpec:
    if not text:
        raise ParseError("empty group spec", offset=0)
    at = text.find("@")
    core = text if at < 0 else text[:at]
    plus = core.find("+")
    factor_part = core if plus < 0 else core[:plus]
    torus_rank = 0
    if plus >= 0:
        tpart = core[plus + 1:]
        if not tpart.startswith("T") or not tpart[1:].isdigit():
            raise ParseError("torus suffix must look like +T<k>",
                             offset=plus + 1)
        torus_rank = int(tpart[1:])
    if not factor_part:
        raise ParseError("expected a simple factor like A2", offset=0)
    factors = []
    pos = 0
    for chunk in factor_part.split("x"):
        if not chunk:
            raise ParseError("empty factor", offset=pos)
        try:
            factors.append(SimpleType.parse(chunk))
        except DomainError as exc:
            raise ParseError(str(exc), offset=pos) from exc
        pos += len(chunk) + 1
    degree = 1
    rel_path = None
    seen: set[str] = set()
    idx = at
    while 0 <= idx < len(text):
        nxt = text.find("@", idx + 1)
        chunk = text[idx + 1: nxt if nxt >= 0 else len(text)]
        if chunk.startswith("res="):
            if "res" in seen:
                raise ParseError("duplicate @res suffix", offset=idx + 1)
            seen.add("res")
            value = chunk[len("res="):]
            if not value.isdigit() or int(value) < 1:
                raise ParseError("@res= wants a positive integer",
                                 offset=idx + 1 + len("res="))
            degree = int(value)
        elif chunk.startswith("relative="):
            if "relative" in seen:
                raise ParseError("duplicate @relative suffix", offset=idx + 1)
            seen.add("relative")
            rel_path = chunk[len("relative="):]
            if not rel_path:
                raise ParseError("@relative= wants a file path",
                                 offset=idx + 1 + len("relative="))
        else:
            raise ParseError(f"unknown suffix {chunk!r}; expected res= or "
                             "relative=", offset=idx + 1)
        idx = nxt
    return ParsedGroupSpec(tuple(factors), torus_rank, degree, rel_path)


# -- serialization helpers -----------------------------------------------------


def _fmt(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return f"{x:.15g}"
    if isinstance(x, sympy.Expr):
        simplified = sympy.simplify(x)
        if simplified.is_Rational:
            return _fmt(Fraction(int(simplified.p), int(simplified.q)))
        return _fmt(float(simplified))
    if isinstance(x, dict):
        return {str(k): _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _parse_number(text: str, flag: str):
    """Exact when possible: integers and a/b stay exact, decimals go float."""
    t = text.strip()
    try:
        if "/" in t:
            return Fraction(t)
        return int(t)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(t)
    except ValueError:
        raise ParseError(f"{flag} expects a number, got {text!r}") from None


def _load_json_text(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON: {exc.msg}",
                         offset=exc.pos) from exc


def _load_relative(path: str) -> RelativeDatum:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read relative datum {path!r}: {exc}") from exc
    data = _load_json_text(raw, path)
    if not isinstance(data, dict) or \
            set(data) != {"simple_roots", "nilradical_dims"}:
        raise ParseError(f"{path}: relative datum must be an object with "
                         "keys simple_roots and nilradical_dims")
    try:
        roots = tuple(tuple(int(x) for x in r) for r in data["simple_roots"])
        dims = tuple(int(d) for d in data["nilradical_dims"])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: roots must be integer vectors and "
                         "dims integers") from exc
    return RelativeDatum(roots=roots, contributions=dims)


def _thread_cap() -> None:
    raw = os.environ.get("TRACEGEO_THREADS")
    if raw is None:
        return
    if not raw.isdigit() or int(raw) < 1:
        raise ParseError(
            f"TRACEGEO_THREADS must be a positive integer, got {raw!r}")
    # All computations here are single-threaded; the cap exists so callers
    # can bound whatever internal parallelism a future version introduces.


# -- subcommands ---------------------------------------------------------------


def _cmd_k(args) -> tuple[object, str, int]:
    parsed = parse_group_spec(args.spec)
    rel_path = args.relative if args.relative is not None \
        else parsed.relative_path
    relative = _load_relative(rel_path) if rel_path is not None else None
    degree = args.degree if args.degree is not None \
        else parsed.restriction_degree
    g = GroupSpec.build(list(parsed.factors), parsed.torus_rank,
                        degree, relative)
    canonical = parsed.render()
    if args.method is None:
        report = k_report(g)
        result = {"spec": canonical, **report}
        lines = [f"k invariants for {canonical}:"]
        for key in ("minorbit", "pairs", "richardson_absolute",
                    "richardson_relative"):
            value = report[key]
            lines.append(f"  {key}: " + ("n/a" if value is None else str(value)))
        lines.append(f"  agreement: {report['agreement']}")
        return result, "\n".join(lines), 0
    fn = {"pairs": k_by_pairs, "richardson": k_richardson,
          "minorbit": k_min_orbit}[args.method]
    value = fn(g)
    result = {"spec": canonical, "method": args.method, "value": value}
    return result, f"k({canonical}) = {value} [{args.method}]", 0


def _cmd_orbits(args) -> tuple[object, str, int]:
    text = args.type
    if text.startswith("gl"):
        digits = text[2:]
        if not digits.isdigit():
            raise ParseError("general-linear type must look like gl<n>",
                             offset=2)
        t: SimpleType | GLType = GLType(int(digits))
    else:
        try:
            t = SimpleType.parse(text)
        except DomainError as exc:
            raise ParseError(str(exc), offset=0) from exc
    labels = list_orbits(t)
    rows = sorted(
        ({"label": str(lab), "dim": orbit_dim(lab),
          "flags": (["very_even"] if lab.very_even else [])}
         for lab in labels),
        key=lambda r: (r["dim"], r["label"]))
    lines = [f"{len(rows)} nilpotent orbits for {text}:"]
    for r in rows:
        star = " very-even" if r["flags"] else ""
        lines.append(f"  {r['label']:<16} dim {r['dim']}{star}")
    return rows, "\n".join(lines), 0


def _cmd_parabolics(args) -> tuple[object, str, int]:
    parsed = parse_group_spec(args.spec)
    rs = parsed.root_system()
    subsets = sorted(enumerate_parabolic_subsets(rs),
                     key=lambda p: p.sort_key())
    rows = []
    for p in subsets:
        levi = levi_of(p)
        rows.append({
            "members": [list(v) for v in p.member_roots],
            "levi": [list(v) for v in levi.member_roots],
            "dim_V": dim_unipotent_radical(p),
            "a_M_dim": levi.a_M_dim,
        })
    lines = [f"{len(rows)} parabolic subsets for {parsed.render()}:"]
    for r in rows:
        lines.append(f"  |members| {len(r['members']):>3}  |levi| "
                     f"{len(r['levi']):>3}  dim_V {r['dim_V']:>3}  "
                     f"a_M_dim {r['a_M_dim']}")
    return rows, "\n".join(lines), 0


def _cmd_discriminant(args) -> tuple[object, str, int]:
    data = _load_json_text(args.matrix, "--matrix")
    if not isinstance(data, list) or not data or \
            any(not isinstance(row, list) or len(row) != len(data)
                for row in data):
        raise ParseError("--matrix wants a square JSON array of arrays")
    matrix = RationalMatrix.from_rows(data)
    primes = []
    if args.primes:
        for chunk in args.primes.split(","):
            if not chunk.strip().isdigit():
                raise ParseError(f"--primes wants integers, got {chunk!r}")
            primes.append(int(chunk))
    res = weyl_discriminant(matrix, primes)
    result = {
        "value": res.value,
        "abs_inf": res.abs_inf,
        "p_valuations": {str(p): v for p, v in res.p_valuations.items()},
        "centralizer_dim": res.centralizer_dim,
    }
    lines = [f"discriminant = {res.value}",
             f"  |.|_inf = {res.abs_inf}",
             f"  centralizer dimension = {res.centralizer_dim}"]
    for p, v in res.p_valuations.items():
        lines.append(f"  v_{p} = {v}")
    return result, "\n".join(lines), 0


def _cmd_index(args) -> tuple[object, str, int]:
    if args.group != "sl":
        raise ParseError(f"unsupported group family {args.group!r}")
    value = sl_index(args.n, args.level)
    data = level_data(args.level)
    result = {"group": args.group, "n": args.n, "level": args.level,
              "index": value, "prime_support": list(data.S_N)}
    return result, f"[SL({args.n},Z) : Gamma({args.level})] = {value}", 0


def _cmd_levels(args) -> tuple[object, str, int]:
    chunks = [c.strip() for c in args.levels.split(",")]
    if not all(c.isdigit() for c in chunks):
        raise ParseError(f"levels must be a comma list of integers, got "
                         f"{args.levels!r}")
    levels = [int(c) for c in chunks]
    allowed = None
    if args.allowed:
        allowed = [int(c) for c in args.allowed.split(",")
                   if c.strip().isdigit()]
        if len(allowed) != len(args.allowed.split(",")):
            raise ParseError("--allowed wants a comma list of primes")
    res = prime_fixed_check(levels, allowed)
    result = {
        "ok": res.ok,
        "reference": list(res.reference),
        "union": list(res.union),
        "offenders": [{"level": n, "extra": list(extra)}
                      for n, extra in res.offenders],
    }
    lines = [f"prime-fixed: {res.ok}",
             f"  reference primes: {list(res.reference)}",
             f"  union of supports: {list(res.union)}"]
    for n, extra in res.offenders:
        lines.append(f"  offender {n}: introduces {list(extra)}")
    return result, "\n".join(lines), 0


def _mellin_pair_from_spec(data) -> tuple[TailFunction, AsymptoticExpansion]:
    if not isinstance(data, dict):
        raise ParseError("--spec wants a JSON object")
    t0 = float(data.get("t0", 1.0))
    preset = data.get("preset")
    if preset is not None:
        if preset == "exp":
            return exp_preset(float(data.get("lambda", 1.0)), t0)
        if preset == "sqrt":
            return sqrt_exp_preset(t0)
        raise ParseError(f"unknown preset {preset!r}; expected exp or sqrt")
    decay = data.get("decay")
    if not isinstance(decay, dict) or set(decay) != {"C", "lambda"}:
        raise ParseError('--spec wants "decay": {"C": ..., "lambda": ...}')
    decay_pair = (float(decay["C"]), float(decay["lambda"]))
    raw_terms = data.get("terms", [])
    if not isinstance(raw_terms, list) or \
            any(not isinstance(x, list) or len(x) != 2 for x in raw_terms):
        raise ParseError('--spec wants "terms" as a list of '
                         "[exponent, coefficient] pairs")
    terms = tuple((Fraction(str(a)), float(Fraction(str(c))))
                  for a, c in raw_terms)
    remainder = Fraction(str(data.get("remainder_order", 1)))
    samples = data.get("samples")
    if samples is None:
        raise ParseError('--spec without "preset" wants "samples": '
                         "[[t, f(t)], ...]")
    if not isinstance(samples, list) or len(samples) < 2 or \
            any(not isinstance(x, list) or len(x) != 2 for x in samples):
        raise ParseError('"samples" wants at least two [t, value] pairs')
    ts = [float(t) for t, _ in samples]
    vs = [float(v) for _, v in samples]
    if ts[0] <= 0 or any(b <= a for a, b in zip(ts, ts[1:])):
        raise ParseError('"samples" abscissae must be positive and '
                         "strictly increasing")
    from scipy.interpolate import PchipInterpolator
    interp = PchipInterpolator(ts, vs, extrapolate=False)
    t_lo, t_hi, v_hi = ts[0], ts[-1], vs[-1]
    expansion = AsymptoticExpansion(terms, min(t0, t_lo), remainder)

    def evaluator(t: float) -> float:
        # Below the sampled range the declared expansion stands in; above
        # it the tail continues at the declared exponential rate.
        if t <= t_lo:
            return expansion.evaluate(t)
        if t >= t_hi:
            return v_hi * math.exp(-decay_pair[1] * (t - t_hi))
        return float(interp(t))

    return TailFunction(evaluator, decay_pair), expansion


def _cmd_mellin_fp(args) -> tuple[object, str, int]:
    if (args.spec is None) == (args.preset is None):
        raise ParseError("pass exactly one of --preset or --spec")
    if args.preset is not None:
        if args.preset == "exp":
            if args.lam is None:
                raise ParseError("--preset exp wants --lambda")
            pair = exp_preset(args.lam, args.t0)
        elif args.preset == "sqrt":
            pair = sqrt_exp_preset(args.t0)
        else:
            raise ParseError(f"unknown preset {args.preset!r}")
    else:
        pair = _mellin_pair_from_spec(_load_json_text(args.spec, "--spec"))
    value = fp_mellin(*pair, tol=args.tol)
    result = {"finite_part": value, "tol": args.tol}
    return result, f"finite part = {value:.12g}", 0


def _cmd_budget(args) -> tuple[object, str, int]:
    k = _parse_number(args.k, "--k")
    c2 = _parse_number(args.C2, "--C2")
    c4 = _parse_number(args.C4, "--C4")
    cn = _parse_number(args.Cn, "--Cn")
    eps = _parse_number(args.eps, "--eps")
    cprime = _parse_number(args.cprime, "--cprime")
    beta = beta_max(c2, c4, cn, k)
    lam = lambda_min(k, beta, eps, cprime)
    params = BudgetParams(k=k, lam=lam, epsilon=eps, C2=c2, C4=c4, Cn=cn,
                          c_prime=cprime, beta=beta, b_conj=args.b_conj,
                          m_nonarch=args.m_nonarch)
    report = exponents(params)
    a = params.b_conj + params.m_nonarch
    result = {
        "beta": beta,
        "lambda": lam,
        "exponents": {"e_spec": report.e_spec, "e1": report.e1,
                      "e2": report.e2},
        "all_ok": report.all_ok,
        "a_exponent": a,
    }
    lines = [f"beta = {_fmt(beta)}",
             f"lambda = {_fmt(lam)}",
             f"exponents: e_spec = {_fmt(report.e_spec)}, "
             f"e1 = {_fmt(report.e1)}, e2 = {_fmt(report.e2)}",
             f"all_ok: {report.all_ok}",
             f"a_exponent = {_fmt(a)}"]
    return result, "\n".join(lines), 0


def _cmd_reproduce(args) -> tuple[object, str, int]:
    results = run_reproduction(args.inject_fault)
    all_ok = all(r.ok for r in results)
    rows = [{
        "name": r.name, "ok": r.ok, "detail": r.detail,
        "expected": r.expected, "actual": r.actual,
        "seconds": r.seconds,
    } for r in results]
    lines = []
    for r in results:
        mark = " OK " if r.ok else "FAIL"
        lines.append(f"[{mark}] {r.name} ({r.seconds:.2f} s): {r.detail}")
        if not r.ok:
            lines.append(f"       expected: {r.expected}")
            lines.append(f"       actual:   {r.actual}")
    lines.append("all checks passed" if all_ok else "FAILED: " + ", ".join(
        r.name for r in results if not r.ok))
    result = {"all_ok": all_ok, "checks": rows}
    return result, "\n".join(lines), 0 if all_ok else 1


# -- wiring --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a versioned JSON envelope")
    top = _Parser(prog="tracegeo", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True,
                             parser_class=_Parser)

    p = sub.add_parser("k", parents=[common],
                       help="decay invariant of a group spec")
    p.add_argument("spec", help='group spec, e.g. "A2" or "D3xA1+T2@res=2"')
    p.add_argument("--relative", metavar="FILE",
                   help="JSON file {simple_roots, nilradical_dims}; "
                        "overrides @relative=")
    p.add_argument("--degree", type=int, metavar="N",
                   help="restriction-of-scalars degree; overrides @res=")
    p.add_argument("--method", choices=["pairs", "richardson", "minorbit"],
                   help="single method instead of the full report")
    p.set_defaults(fn=_cmd_k)

    p = sub.add_parser("orbits", parents=[common],
                       help="nilpotent orbits of a classical type")
    p.add_argument("type", help='simple type "B3" or general linear "gl4"')
    p.set_defaults(fn=_cmd_orbits)

    p = sub.add_parser("parabolics", parents=[common],
                       help="all parabolic root subsets of a group spec")
    p.add_argument("spec")
    p.set_defaults(fn=_cmd_parabolics)

    p = sub.add_parser("discriminant", parents=[common],
                       help="Weyl discriminant of a rational matrix")
    p.add_argument("--matrix", required=True,
                   help='JSON rows, rationals as "num/den" strings')
    p.add_argument("--primes", help="extra primes for valuations, e.g. 2,3")
    p.set_defaults(fn=_cmd_discriminant)

    p = sub.add_parser("index", parents=[common],
                       help="index of a principal congruence subgroup")
    p.add_argument("--group", default="sl", choices=["sl"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("levels", help="level-set predicates")
    lsub = p.add_subparsers(dest="levels_command", required=True,
                            parser_class=_Parser)
    q = lsub.add_parser("check-prime-fixed", parents=[common])
    q.add_argument("levels", help="comma list of levels, e.g. 2,4,8")
    q.add_argument("--allowed", help="comma list of allowed primes")
    q.set_defaults(fn=_cmd_levels)

    p = sub.add_parser("mellin-fp", parents=[common],
                       help="finite part of a normalized Mellin transform")
    p.add_argument("--preset", choices=["exp", "sqrt"])
    p.add_argument("--lambda", dest="lam", type=float,
                   help="decay rate for --preset exp")
    p.add_argument("--t0", type=float, default=1.0,
                   help="split point / expansion validity (default 1)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--spec", help="JSON {terms, t0, decay:{C,lambda}, "
                                  "samples|preset}")
    p.set_defaults(fn=_cmd_mellin_fp)

    p = sub.add_parser("budget", parents=[common],
                       help="error-exponent budget feasibility")
    p.add_argument("--k", required=True)
    p.add_argument("--C2", default="1")
    p.add_argument("--C4", default="1")
    p.add_argument("--Cn", default="1")
    p.add_argument("--eps", default="1/10")
    p.add_argument("--cprime", default="0")
    p.add_argument("--b-conj", dest="b_conj", type=int, default=0)
    p.add_argument("--m-nonarch", dest="m_nonarch", type=int, default=0)
    p.set_defaults(fn=_cmd_budget)

    p = sub.add_parser("reproduce", parents=[common],
                       help="run every stated-value check end to end")
    p.add_argument("--inject-fault", help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_reproduce)

    return top


def main(argv: list[str] | None = None) -> int:
    try:
        _thread_cap()
        parser = _build_parser()
        args = parser.parse_args(argv)
        handler: Callable = args.fn
        result, human, code = handler(args)
        if args.json:
            envelope = {"schema": "1", "command": args.command,
                        "result": _fmt(result)}
            print(json.dumps(envelope, indent=2))
        else:
            print(human)
        return code
    except TracegeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
