"""Command-line surface: eval, check, suite, table, catalog.

Exit codes: 0 success (disputed identities report informationally), 1 at
least one non-disputed identity failure, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import build_catalog, catalog_as_json
from .errors import DomainError
from .identities import (
    report_to_csv,
    report_to_json_lines,
    run_suite,
    suite_summary,
)
from .polynomials import (
    apostol_bernoulli,
    bernoulli_polynomial,
    euler_number,
    euler_poly_at_zero,
    euler_polynomial,
)
from .zeta import (
    dirichlet_beta,
    dirichlet_lambda,
    hurwitz_zeta,
    lerch_e,
    riemann_zeta,
    transcendental_f,
    zeta_e,
)

_EVAL_FUNCTIONS = (
    "zeta",
    "zeta-e",
    "lambda",
    "beta",
    "lerch-e",
    "euler-poly",
    "bernoulli-poly",
    "apostol-bernoulli",
    "f-transcendental",
)

_CONFIG_KEYS = {
    "filter",
    "format",
    "out",
    "jobs",
    "tol_abs",
    "tol_rel",
    "grid",
    "deterministic",
}


class UsageError(Exception):
    pass


def _fmt15(x: float) -> str:
    return f"{x:.15g}"


def _parse_number(text: str):
    """int, float or complex from a command-line token."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse number {text!r}")


def _parse_axis_values(spec: str):
    """Either 'start:stop:step' (stop inclusive) or 'v1,v2,...'."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid range must be start:stop:step, got {spec!r}")
        start, stop, step = (float(p) for p in parts)
        if step == 0:
            raise UsageError("grid step must be nonzero")
        values = []
        v = start
        n = 0
        while (step > 0 and v <= stop + 1e-9) or (step < 0 and v >= stop - 1e-9):
            values.append(v)
            n += 1
            v = start + n * step
            if n > 10**6:
                raise UsageError("grid range too large")
        return values
    values = [_parse_number(tok) for tok in spec.split(",") if tok]
    if not values:
        raise UsageError(f"empty grid specification {spec!r}")
    return values


def _load_config(path: str) -> dict:
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        cfg[key] = value.strip()
    return cfg


def _value_payload(value: complex, est_error: float, method: str) -> dict:
    value = complex(value)
    return {
        "value": {"re": value.real, "im": value.imag},
        "est_error": est_error,
        "method": method,
    }


def _print_value(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
        return
    value = payload["value"]
    if isinstance(value, dict):
        re_s = _fmt15(value["re"])
        if value["im"]:
            sign = "+" if value["im"] >= 0 else "-"
            print(f"value     = {re_s} {sign} {_fmt15(abs(value['im']))}i")
        else:
            print(f"value     = {re_s}")
    else:
        print(f"value     = {value}")
    print(f"est_error = {payload['est_error']:.3g}")
    print(f"method    = {payload['method']}")


def _cmd_eval(args) -> int:
    name = args.function
    need = lambda attr: getattr(args, attr) is not None

    def require(*attrs):
        for attr in attrs:
            if not need(attr):
                raise UsageError(f"eval {name} requires --{attr.replace('_', '-')}")

    if name == "zeta":
        require("s")
        x = args.x if need("x") else 1.0
        z = hurwitz_zeta(_parse_number(args.s), float(x))
        payload = _value_payload(z.value, z.est_error, z.method)
    elif name == "zeta-e":
        require("s", "x")
        z = zeta_e(_parse_number(args.s), float(args.x))
        payload = _value_payload(z.value, z.est_error, z.method)
    elif name == "lambda":
        require("s")
        z = dirichlet_lambda(_parse_number(args.s))
        payload = _value_payload(z.value, z.est_error, z.method)
    elif name == "beta":
        require("s")
        z = dirichlet_beta(_parse_number(args.s))
        payload = _value_payload(z.value, z.est_error, z.method)
    elif name == "lerch-e":
        require("s", "x")
        value = lerch_e(_parse_number(args.s), float(args.x))
        payload = _value_payload(value, 0.0, "lerch-dispatch")
    elif name in ("euler-poly", "bernoulli-poly"):
        require("m")
        poly = (
            euler_polynomial(int(args.m))
            if name == "euler-poly"
            else bernoulli_polynomial(int(args.m))
        )
        if need("x"):
            payload = _value_payload(complex(poly(float(args.x))), 0.0, "closed-form")
        else:
            coeffs = [str(c) for c in poly.coefficients]
            payload = {"coefficients": coeffs, "est_error": 0.0, "method": "closed-form"}
            if args.format != "json":
                print("coefficients (ascending powers):", " ".join(coeffs))
                return 0
    elif name == "apostol-bernoulli":
        require("m", "a", "alpha")
        value = apostol_bernoulli(
            int(args.m), float(args.a), complex(_parse_number(args.alpha))
        )
        payload = _value_payload(value, 0.0, "triangular-recurrence")
    elif name == "f-transcendental":
        require("x", "s")
        value = transcendental_f(_parse_number(args.x), _parse_number(args.s))
        payload = _value_payload(value, 0.0, "direct-series")
    else:
        raise UsageError(f"unknown function {name!r}")
    _print_value(payload, args.format)
    return 0


def _parse_point_flags(tokens: list[str]) -> dict:
    point = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if not tok.startswith("--"):
            raise UsageError(f"expected --name value pairs, got {tok!r}")
        key = tok[2:].replace("-", "_")
        if i + 1 >= len(tokens):
            raise UsageError(f"missing value for {tok}")
        raw = tokens[i + 1]
        if raw in ("true", "True", "false", "False"):
            point[key] = raw in ("true", "True")
        else:
            try:
                point[key] = _parse_number(raw)
            except UsageError:
                point[key] = raw
        i += 2
    return point


def _cmd_check(args) -> int:
    catalog = build_catalog()
    if args.id not in catalog:
        raise UsageError(f"unknown identity id {args.id!r}")
    spec = catalog[args.id]
    flags = _parse_point_flags(args.point)
    axis_names = [name for name, _ in spec.domain.axes]
    unknown = set(flags) - set(axis_names)
    if unknown:
        raise UsageError(
            f"identity {args.id} has no axes {sorted(unknown)}; axes are {axis_names}"
        )
    domain = spec.domain
    if flags:
        domain = domain.override({k: (v,) for k, v in flags.items()})
    reports = [
        __import__("eulerzeta.identities", fromlist=["check_identity"]).check_identity(
            spec, pt
        )
        for pt in domain.points()
    ]
    if spec.status == "disputed":
        print(f"DISPUTED identity {spec.id}: results are informational, not failures")
        if spec.notes:
            print(f"  note: {spec.notes}")
    failures = 0
    for r in reports:
        lhs, rhs = r.lhs_value, r.rhs_value
        line = (
            f"{r.identity} {json.dumps({k: str(v) for k, v in r.point.items()}, sort_keys=True)} "
            f"verdict={r.verdict} lhs={_fmt15(lhs.real)}{'+' if lhs.imag >= 0 else '-'}{_fmt15(abs(lhs.imag))}i "
            f"rhs={_fmt15(rhs.real)}{'+' if rhs.imag >= 0 else '-'}{_fmt15(abs(rhs.imag))}i "
            f"abs_err={r.abs_err:.3g} rel_err={r.rel_err:.3g}"
        )
        print(line)
        if r.verdict != "pass" and spec.status != "disputed":
            failures += 1
    return 1 if failures else 0


def _cmd_suite(args) -> int:
    cfg = _load_config(args.config) if args.config else {}
    fmt = args.format or cfg.get("format", "json")
    if fmt not in ("human", "json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    out = args.out or cfg.get("out")
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", "1"))
    tol_abs = args.tol_abs if args.tol_abs is not None else (
        float(cfg["tol_abs"]) if "tol_abs" in cfg else None
    )
    tol_rel = args.tol_rel if args.tol_rel is not None else (
        float(cfg["tol_rel"]) if "tol_rel" in cfg else None
    )
    pattern = args.filter or cfg.get("filter", "")
    grid_flags = list(args.grid or [])
    if "grid" in cfg:
        grid_flags = [g for g in cfg["grid"].split(";") if g] + grid_flags

    catalog = build_catalog()
    ids = sorted(catalog)
    if pattern:
        import fnmatch

        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
        if not ids:
            raise UsageError(f"filter {pattern!r} matches no identity")
    overrides: dict = {}
    for flag in grid_flags:
        if "=" not in flag:
            raise UsageError(f"grid override must be axis=values, got {flag!r}")
        axis, _, valspec = flag.partition("=")
        axis = axis.strip()
        values = _parse_axis_values(valspec.strip())
        touched = False
        for ident in ids:
            if any(axis == name for name, _ in catalog[ident].domain.axes):
                overrides.setdefault(ident, {})[axis] = values
                touched = True
        if not touched:
            raise UsageError(f"no selected identity has a grid axis {axis!r}")
    reports = run_suite(
        pattern=pattern,
        grid_overrides=overrides or None,
        tol_abs=tol_abs,
        tol_rel=tol_rel,
        jobs=jobs,
        catalog=catalog,
    )
    counts = suite_summary(reports)
    if fmt == "json":
        body = report_to_json_lines(reports)
    elif fmt == "csv":
        body = report_to_csv(reports)
    else:
        lines = []
        for r in reports:
            lines.append(
                f"{r.verdict:7s} {r.status:8s} {r.identity:20s} "
                f"{json.dumps({k: str(v) for k, v in r.point.items()}, sort_keys=True)} "
                f"abs_err={r.abs_err:.3g} rel_err={r.rel_err:.3g}"
            )
        body = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(body)
    elif fmt != "human":
        sys.stdout.write(body)
    else:
        sys.stdout.write(body)
    print(
        f"pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']} "
        f"disputed={counts['disputed']} total={counts['total']}"
    )
    return 1 if counts["fail"] or counts["skipped"] else 0


def _cmd_table(args) -> int:
    kind = args.kind
    n = args.max_index
    if n > 30:
        raise UsageError("max index capped at 30")
    rows = []
    if kind == "lambda-even":
        header = ("m", "closed_form", "numeric", "agree")
        for m in range(1, n + 1):
            closed = (
                (-1.0) ** m
                * math.pi ** (2 * m)
                / (4.0 * math.factorial(2 * m - 1))
                * float(euler_poly_at_zero(2 * m - 1))
            )
            numeric = dirichlet_lambda(2.0 * m).value.real
            rows.append((m, closed, numeric))
    elif kind == "beta-odd":
        header = ("m", "closed_form", "numeric", "agree")
        for m in range(0, n + 1):
            closed = (
                (-1.0) ** m
                * euler_number(2 * m)
                * math.pi ** (2 * m + 1)
                / (2.0 ** (2 * m + 2) * math.factorial(2 * m))
            )
            numeric = dirichlet_beta(2.0 * m + 1.0).value.real
            rows.append((m, closed, numeric))
    elif kind == "euler-numbers":
        header = ("m", "exact", "from_half_value", "agree")
        for m in range(0, n + 1):
            exact = euler_number(m)
            numeric = 2.0**m * euler_polynomial(m)(0.5)
            rows.append((m, float(exact), float(numeric)))
    elif kind == "euler-at-zero":
        header = ("m", "bernoulli_form", "polynomial_at_0", "agree")
        for m in range(0, n + 1):
            rows.append(
                (m, float(euler_poly_at_zero(m)), float(euler_polynomial(m)(0.0)))
            )
    else:
        raise UsageError(f"unknown table kind {kind!r}")
    print(f"{header[0]:>3s}  {header[1]:>24s}  {header[2]:>24s}  {header[3]}")
    ok_all = True
    for m, closed, numeric in rows:
        scale = max(abs(closed), abs(numeric), 1.0)
        agree = abs(closed - numeric) <= 1e-10 * scale
        ok_all = ok_all and agree
        print(f"{m:>3d}  {_fmt15(closed):>24s}  {_fmt15(numeric):>24s}  {'ok' if agree else 'MISMATCH'}")
    return 0 if ok_all else 1


def _cmd_catalog(args) -> int:
    text = catalog_as_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerzeta",
        description="Hurwitz-type Euler zeta evaluation and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at a point")
    p_eval.add_argument("function", choices=_EVAL_FUNCTIONS)
    p_eval.add_argument("--s", type=str, default=None, help="order (float or complex)")
    p_eval.add_argument("--x", type=str, default=None, help="argument")
    p_eval.add_argument("--m", type=int, default=None, help="polynomial index")
    p_eval.add_argument("--a", type=float, default=None, help="shift parameter")
    p_eval.add_argument("--alpha", type=str, default=None, help="complex weight")
    p_eval.add_argument("--format", choices=("human", "json"), default="human")

    p_check = sub.add_parser("check", help="check one identity (point flags optional)")
    p_check.add_argument("id", help="identity id, e.g. EULER-PROD")
    p_check.add_argument(
        "point", nargs=argparse.REMAINDER, help="point flags, e.g. --m 1 --n 1"
    )

    p_suite = sub.add_parser("suite", help="run the identity catalog")
    p_suite.add_argument("--filter", type=str, default="", help="id glob, e.g. 'PROD-*'")
    p_suite.add_argument("--grid", action="append", help="axis override, e.g. s=-3:0:0.5")
    p_suite.add_argument("--format", choices=("human", "json", "csv"), default=None)
    p_suite.add_argument("--out", type=str, default=None, help="report file path")
    p_suite.add_argument("--jobs", type=int, default=None, help="parallel evaluation degree")
    p_suite.add_argument("--tol-abs", type=float, default=None, dest="tol_abs")
    p_suite.add_argument("--tol-rel", type=float, default=None, dest="tol_rel")
    p_suite.add_argument("--config", type=str, default=None, help="key=value config file")
    p_suite.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="seed-free determinism (always honored; flag kept for config parity)",
    )

    p_table = sub.add_parser("table", help="special-value tables")
    p_table.add_argument(
        "kind", choices=("lambda-even", "beta-odd", "euler-numbers", "euler-at-zero")
    )
    p_table.add_argument("--max-index", type=int, default=6, dest="max_index")

    p_catalog = sub.add_parser("catalog", help="export catalog metadata as JSON")
    p_catalog.add_argument("--out", type=str, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eval": _cmd_eval,
        "check": _cmd_check,
        "suite": _cmd_suite,
        "table": _cmd_table,
        "catalog": _cmd_catalog,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
