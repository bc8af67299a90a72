"""Command-line entry point.

    mahlerlab seq thue-morse 8
    mahlerlab verify --order 256
    mahlerlab eval --fn T --d 2 --alpha 1/2 --prec 64
    mahlerlab decide additive --d 2 --c 0,1
    mahlerlab decide multiplicative --d 3 --n1 0 --n2 1
    mahlerlab relations --values T2,fTMM,const --alpha 1/2 --degree 1 --height 100 --prec 512

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
Negative points must be written with '=': --alpha=-1/2.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import sequences
from .cache import EnclosureCache, resolve_cache_path
from .evaluation import EvalPoint, InvalidPointError, NoBridgeError, decimal_digits, eval_two_routes, evaluate
from .exact_algebra import (
    BRIDGE_TEXT, Bridge, FunctionId, G, T, TruncatedSeries, U, RatFunc,
    check_mahler_equation, functional_equation, series_of, substitute_power,
    verify_bridge_identity, verify_functional_equation,
)
from .exact_algebra.polynomial import ONE, Z, frac_str, parse_fraction
from .feq_decider import decide_additive, decide_multiplicative
from .independence import RelationQuery, RelationValue, search_algebraic_relation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    fmt: str = "text"
    cache_path: str | None = None
    seed: int = 0


@dataclass
class Outcome:
    """What a command produced: payload for json, rows for csv, lines for text."""

    payload: object
    rows: list[tuple[str, str, str, str]]
    text: list[str]
    exit_code: int = EXIT_OK


def _emit(out: Outcome, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(out.payload, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "params", "result", "bound"])
        w.writerows(out.rows)
        stream.write(buf.getvalue())
    else:
        stream.write("\n".join(out.text) + "\n")


# seq

def cmd_seq(cfg: RunConfig) -> Outcome:
    try:
        kind = sequences.SequenceKind.parse(cfg.args.kind)
    except ValueError as e:
        raise UsageError(str(e))
    n = cfg.args.n
    if n < 1:
        raise UsageError("N must be at least 1")
    bits = sequences.prefix(kind, n)
    return Outcome(
        {"kind": kind.value, "n": n, "bits": bits},
        [(kind.value, f"n={i}", str(b), "") for i, b in enumerate(bits)],
        [",".join(map(str, bits))],
    )


# verify

def _family():
    for d in (2, 3, 4, 5):
        yield T(d)
        yield U(d)
        for j in range(4):
            yield G(d, j)


def _coefficient_checks(N: int) -> list[tuple[str, bool]]:
    t2, u3, g22 = series_of(T(2), N), series_of(U(3), N), series_of(G(2, 2), N)
    tm = sequences.prefix("thue-morse", N + 1)
    cantor = sequences.prefix("cantor", N + 1)
    pf = sequences.prefix("paperfolding", N + 1)
    return [
        ("coeff T(2) = 1 - 2 t_n", all(t2[n] == 1 - 2 * tm[n] for n in range(N + 1))),
        ("coeff U(3) = v_n", all(u3[n] == cantor[n] for n in range(N + 1))),
        ("coeff G(2,2)[n+1] = u_n", g22[0] == 0 and all(g22[n + 1] == pf[n] for n in range(N))),
    ]


def _random_series(rng: random.Random, order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)], order)


def cmd_verify(cfg: RunConfig) -> Outcome:
    N = cfg.args.order
    if N < 1:
        raise UsageError("--order must be at least 1")
    checks: list[tuple[str, str, bool]] = []
    for f in _family():
        if cfg.args.inject_fault and f == T(2):
            # deliberately wrong multiplier: negative control
            _, b = functional_equation(f)
            ok = check_mahler_equation(series_of(f, N), 2, RatFunc(ONE, ONE + Z), b)
        else:
            ok = verify_functional_equation(f, N)
        checks.append((f"feq {f.label}", f"order={N}", ok))
    for br in Bridge:
        checks.append((f"bridge {br.value}: {BRIDGE_TEXT[br]}", f"order={N}", verify_bridge_identity(br, N)))
    for name, ok in _coefficient_checks(N):
        checks.append((name, f"order={N}", ok))
    rng = random.Random(cfg.seed)
    for t in range(cfg.args.trials):
        d = rng.randint(2, 5)
        s1, s2 = _random_series(rng, N), _random_series(rng, N)
        ok = substitute_power(s1 * s2, d) == substitute_power(s1, d) * substitute_power(s2, d)
        checks.append((f"substitute_power multiplicative #{t}", f"order={N},d={d},seed={cfg.seed}", ok))
    all_ok = all(ok for _, _, ok in checks)
    width = max(len(n) for n, _, _ in checks)
    text = [f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  {params}" for name, params, ok in checks]
    text.append(f"{sum(ok for *_, ok in checks)}/{len(checks)} checks passed")
    return Outcome(
        {"order": N, "all_pass": all_ok,
         "checks": [{"name": n, "params": p, "pass": ok} for n, p, ok in checks]},
        [(n, p, "pass" if ok else "fail", "") for n, p, ok in checks],
        text,
        EXIT_OK if all_ok else EXIT_FAIL,
    )


# eval

def _function_from_flags(name: str, d: int | None, j: int | None) -> FunctionId:
    key = name.strip()
    if key in ("T", "U"):
        return FunctionId(key, d if d is not None else 2)
    if key == "G" and (d is not None or j is not None):
        return G(d if d is not None else 2, j if j is not None else 0)
    return FunctionId.parse(key)


def _alpha(text: str) -> Fraction:
    try:
        a = parse_fraction(text)
        EvalPoint(a)
    except (ValueError, InvalidPointError) as e:
        raise UsageError(str(e))
    return a


def _evaluator(cfg: RunConfig):
    path = resolve_cache_path(cfg.cache_path)
    return EnclosureCache(path) if path else None


def cmd_eval(cfg: RunConfig) -> Outcome:
    a = cfg.args
    try:
        f = _function_from_flags(a.fn, a.d, a.j)
    except ValueError as e:
        raise UsageError(str(e))
    alpha = _alpha(a.alpha)
    if a.prec < 8:
        raise UsageError("--prec must be at least 8")
    cache = _evaluator(cfg)
    if a.two_routes:
        try:
            direct, bridged = eval_two_routes(f, alpha, a.prec)
        except NoBridgeError as e:
            raise UsageError(str(e))
        agree = direct.intersects(bridged)
        params = f"alpha={frac_str(alpha)},prec={a.prec}"
        return Outcome(
            {"function": f.label, "alpha": frac_str(alpha), "prec": a.prec,
             "direct": direct.to_json(a.prec), "bridged": bridged.to_json(a.prec), "intersect": agree},
            [(f"{f.label} direct", params, direct.decimal(decimal_digits(a.prec)), frac_str(direct.rad)),
             (f"{f.label} bridged", params, bridged.decimal(decimal_digits(a.prec)), frac_str(bridged.rad))],
            [f"{f.label}({alpha}) direct  = {direct.decimal(decimal_digits(a.prec))} +/- {float(direct.rad):.3e}",
             f"{f.label}({alpha}) bridged = {bridged.decimal(decimal_digits(a.prec))} +/- {float(bridged.rad):.3e}",
             f"enclosures intersect: {agree}"],
            EXIT_OK if agree else EXIT_FAIL,
        )
    ball = cache.evaluate(f, alpha, a.prec) if cache else evaluate(f, alpha, a.prec)
    if cache:
        cache.save()
    js = ball.to_json(a.prec)
    return Outcome(
        {"function": f.label, "alpha": frac_str(alpha), "prec": a.prec, **js},
        [(f.label, f"alpha={frac_str(alpha)},prec={a.prec}", js["decimal"], js["rad"])],
        [f"{f.label}({alpha}) = {js['decimal']}", f"  mid = {js['mid']}", f"  rad = {js['rad']}"],
    )


# decide

def _int_list(text: str) -> list[Fraction]:
    try:
        return [parse_fraction(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise UsageError(str(e))


def cmd_decide(cfg: RunConfig) -> Outcome:
    a = cfg.args
    if a.d < 2:
        raise UsageError("--d must be at least 2")
    if a.family == "additive":
        c = _int_list(a.c)
        if not c:
            raise UsageError("--c needs at least one coefficient")
        verdict = decide_additive(d=a.d, c=c)
        params = f"d={a.d},c={','.join(map(str, c))}"
    else:
        verdict = decide_multiplicative(d=a.d, n1=a.n1, n2=a.n2)
        params = f"d={a.d},n1={a.n1},n2={a.n2}"
    result = "solvable" if verdict.solvable else "unsolvable"
    witness = str(verdict.witness) if verdict.witness is not None else ""
    text = [f"{a.family} {params}: {result}"]
    if verdict.solvable:
        text.append(f"  witness: {witness}")
    text.append(f"  certificate: {verdict.certificate}")
    return Outcome(
        {"family": a.family, "params": params, **verdict.to_json()},
        [(a.family, params, result, witness)],
        text,
    )


# relations

def cmd_relations(cfg: RunConfig) -> Outcome:
    a = cfg.args
    alpha = _alpha(a.alpha)
    cache = _evaluator(cfg)
    evaluator = cache.evaluate if cache else None
    values = []
    for tok in (t.strip() for t in a.values.split(",")):
        if not tok:
            continue
        if tok.lower() in ("const", "1"):
            continue  # the constant monomial is always part of the basis
        try:
            f = FunctionId.parse(tok)
        except ValueError:
            try:
                values.append(RelationValue.constant(parse_fraction(tok), tok))
                continue
            except ValueError:
                raise UsageError(f"unknown value {tok!r}")
        values.append(RelationValue.function(f, alpha, tok, evaluator))
    if not values:
        raise UsageError("--values needs at least one function")
    try:
        q = RelationQuery(values, degree=a.degree, height=a.height, prec_bits=a.prec,
                          include_constant=not a.no_constant)
        report = search_algebraic_relation(q)
    except ValueError as e:
        raise UsageError(str(e))
    if cache:
        cache.save()
    params = f"alpha={frac_str(alpha)},degree={a.degree},height={a.height},prec={a.prec}"
    result = report.equation() if report.found else "none_up_to_bounds"
    return Outcome(
        {"alpha": frac_str(alpha), **report.to_json()},
        [("relation", params, result, "verified" if report.verified else "")],
        [f"values at alpha = {alpha}: {', '.join(report.labels)}", report.summary()],
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache", default=None, help="enclosure cache file (env MAHLERLAB_CACHE wins)")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="mahlerlab", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[common], help="prefix of an automatic sequence")
    s.add_argument("kind", help="thue-morse | paperfolding | cantor")
    s.add_argument("n", type=int)

    s = sub.add_parser("verify", parents=[common], help="exact functional-equation and bridge checks")
    s.add_argument("--order", type=int, default=256)
    s.add_argument("--trials", type=int, default=4, help="random substitute_power checks")
    s.add_argument("--inject-fault", action="store_true", help="negative control: perturb T(2)'s equation")

    s = sub.add_parser("eval", parents=[common], help="certified enclosure of a function value")
    s.add_argument("--fn", required=True, help="T, U, G (with --d/--j), fTMM, fRPF, fC, F, G")
    s.add_argument("--d", type=int, default=None)
    s.add_argument("--j", type=int, default=None)
    s.add_argument("--alpha", required=True, help="exact fraction p/q")
    s.add_argument("--prec", type=int, default=64)
    s.add_argument("--two-routes", action="store_true", help="also evaluate via the bridge identity")

    s = sub.add_parser("decide", help="rational solutions of the auxiliary equations")
    fam = s.add_subparsers(dest="family", required=True)
    add = fam.add_parser("additive", parents=[common])
    add.add_argument("--d", type=int, required=True)
    add.add_argument("--c", required=True, help="c_0,...,c_m")
    mul = fam.add_parser("multiplicative", parents=[common])
    mul.add_argument("--d", type=int, required=True)
    mul.add_argument("--n1", type=int, default=0)
    mul.add_argument("--n2", type=int, default=0)

    s = sub.add_parser("relations", parents=[common], help="bounded integer relation search")
    s.add_argument("--values", required=True, help="comma list, e.g. fTMM,fRPF,Gcoons")
    s.add_argument("--alpha", required=True)
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--height", type=int, default=10**6)
    s.add_argument("--prec", type=int, default=2048)
    s.add_argument("--no-constant", action="store_true", help="drop the constant monomial")
    return p


COMMANDS = {
    "seq": cmd_seq, "verify": cmd_verify, "eval": cmd_eval,
    "decide": cmd_decide, "relations": cmd_relations,
}


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse prints help and errors to the sys streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    cfg = RunConfig(args.command, args, args.format, args.cache, args.seed)
    try:
        out = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        stderr.write(f"mahlerlab {cfg.command}: error: {e}\n")
        return EXIT_USAGE
    _emit(out, cfg.fmt, stdout)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
