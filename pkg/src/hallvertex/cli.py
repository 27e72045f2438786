"""Command-line front end.

    hallvertex expand Q [2,1] --target vars --vars 3
    hallvertex verify creation --max-weight 6
    hallvertex hall-table --max-weight 4 --format text
    hallvertex stability [1] [1] [] --m-max 8

Exit codes: 0 success, 2 usage error, 3 failed verification or no
stabilization within the bound, 4 internal integrity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import bases
from .exact import eval_at
from .partitions import enumerate_partitions, is_partition, weight
from .structure import IntegrityError, f_coeff, hall_g, hall_stability_scan, stability_scan
from .suites import SUITES, run_suite
from .symfunc import SymFunc, m_in_p, monomial_expansion, specialize_vars

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILED = 3
EXIT_INTEGRITY = 4

DEGREE_CEILING = 8
TABLE_CEILING = 6


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    max_weight: int | None
    t_eval: Fraction | None
    output_format: str
    seed: int
    parallelism: int

    def __post_init__(self):
        if self.max_weight is not None and self.max_weight < 0:
            raise UsageError("--max-weight must be nonnegative")
        if self.parallelism < 1:
            raise UsageError("--jobs must be at least 1")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from err


def _parse_index(text: str):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"index must be a JSON array, got {text!r}") from err
    return value


def _int_tuple(value, what: str) -> tuple:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise UsageError(f"{what} must be a JSON array of integers")
    return tuple(value)


def _partition(value, what: str) -> tuple:
    lam = _int_tuple(value, what)
    if not is_partition(lam):
        raise UsageError(f"{what} must be a partition, got {list(lam)}")
    return tuple(p for p in lam if p)


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def _build(family: str, raw) -> SymFunc:
    if family in ("skewQ", "skewB"):
        if not (isinstance(raw, list) and len(raw) == 2):
            raise UsageError(f"{family} takes a nested index [[lambda],[mu]]")
        lam, mu = _partition(raw[0], "lambda"), _partition(raw[1], "mu")
        return bases.skew_Q(lam, mu) if family == "skewQ" else bases.skew_B(lam, mu)
    idx = _int_tuple(raw, "index")
    if family == "p":
        if any(x <= 0 for x in idx):
            raise UsageError("power-sum indices must be positive")
        return SymFunc.p(*idx)
    if family == "m":
        return m_in_p(_partition(raw, "index"))
    if family == "schurQ":
        return bases.schurQ(idx)
    builders = {
        "h": bases.h_product,
        "e": bases.e_product,
        "q": bases.q_product,
        "b": bases.b_product,
        "schur": bases.schur,
        "Q": bases.hl_Q,
        "B": bases.hl_B,
    }
    return builders[family](idx)


FAMILIES = ("h", "e", "p", "m", "q", "b", "schur", "schurQ", "Q", "B", "skewQ", "skewB")
TARGETS = ("p", "monomial", "q-products", "vars")


def _index_weight(family: str, raw) -> int:
    if family in ("skewQ", "skewB") and isinstance(raw, list) and raw and isinstance(raw[0], list):
        return sum(abs(x) for x in raw[0] if isinstance(x, int))
    if isinstance(raw, list):
        return sum(abs(x) for x in raw if isinstance(x, int))
    return 0


def _coeff_out(c, t0):
    return eval_at(c, t0) if t0 is not None else c


def _term(c, name: str) -> str:
    return name if c == 1 else f"({c})*{name}"


def _coeff_json(c):
    return str(c) if isinstance(c, Fraction) else c.to_json()


def cmd_expand(args, cfg: RunConfig) -> tuple[int, object, str]:
    raw = _parse_index(args.index)
    if _index_weight(args.family, raw) > DEGREE_CEILING and not args.allow_large:
        raise UsageError(f"degree above {DEGREE_CEILING}; pass --allow-large to proceed")
    F = _build(args.family, raw)
    t0 = cfg.t_eval
    if args.target == "p":
        G = F.eval_t(t0) if t0 is not None else F
        return EXIT_OK, G.to_json(), str(G)
    if args.target == "vars":
        if args.vars is None:
            raise UsageError("--target vars needs --vars K")
        P = specialize_vars(F.eval_t(t0) if t0 is not None else F, args.vars)
        return EXIT_OK, P.to_json(), str(P)
    if args.target == "monomial":
        pairs = []
        for n in sorted({sum(k) for k, _ in F.items()}):
            for lam, c in monomial_expansion(F, n).items():
                pairs.append((lam, _coeff_out(c, t0)))
    else:
        pairs = [(lam, _coeff_out(c, t0)) for lam, c in bases.in_q_basis(F).items()]
        pairs.sort(key=lambda kc: (sum(kc[0]), [-x for x in kc[0]]))
    basis = "m" if args.target == "monomial" else "q"
    data = {"basis": basis, "terms": [{"index": list(lam), "coeff": _coeff_json(c)} for lam, c in pairs if c]}
    text = " + ".join(_term(c, f"{basis}[{','.join(map(str, lam))}]") for lam, c in pairs if c) or "0"
    return EXIT_OK, data, text


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args, cfg: RunConfig) -> tuple[int, object, str]:
    report = run_suite(args.suite, cfg.max_weight, cfg.seed)
    if report["passed"]:
        text = f"{args.suite}: pass ({report['checks']} checks, max weight {report['max_weight']})"
        return EXIT_OK, report, text
    # a failing run always reports its first failure as JSON
    return EXIT_FAILED, report, json.dumps(report, indent=2)


# ---------------------------------------------------------------------------
# hall-table
# ---------------------------------------------------------------------------

def _hall_rows_for(lam: tuple, t0):
    rows = []
    n = sum(lam)
    for k in range(n + 1):
        for mu in enumerate_partitions(k):
            for nu in enumerate_partitions(n - k):
                g = hall_g(lam, mu, nu)
                if not g:
                    continue
                f = f_coeff(lam, mu, nu)
                if t0 is not None:
                    rows.append((lam, mu, nu, str(eval_at(g, t0)), str(eval_at(f, t0))))
                else:
                    rows.append((lam, mu, nu, str(g), str(f)))
    return rows


def cmd_hall_table(args, cfg: RunConfig) -> tuple[int, object, str]:
    w = TABLE_CEILING if cfg.max_weight is None else cfg.max_weight
    if w > TABLE_CEILING and not args.allow_large:
        raise UsageError(f"table weight above {TABLE_CEILING}; pass --allow-large to proceed")
    lams = [lam for n in range(w + 1) for lam in enumerate_partitions(n)]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            chunks = list(pool.map(_hall_rows_for, lams, [cfg.t_eval] * len(lams)))
    else:
        chunks = [_hall_rows_for(lam, cfg.t_eval) for lam in lams]
    rows = [r for chunk in chunks for r in chunk]
    data = [{"lambda": list(a), "mu": list(b), "nu": list(c), "g": g, "f": f} for a, b, c, g, f in rows]
    cells = [(str(list(a)), str(list(b)), str(list(c)), g, f) for a, b, c, g, f in rows]
    head = ("lambda", "mu", "nu", "g", "f")
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(head)]
    lines = ["  ".join(h.ljust(wd) for h, wd in zip(head, widths))]
    lines += ["  ".join(x.ljust(wd) for x, wd in zip(r, widths)).rstrip() for r in cells]
    return EXIT_OK, data, "\n".join(lines)


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

def cmd_stability(args, cfg: RunConfig) -> tuple[int, object, str]:
    lam = _partition(_parse_index(args.lam), "lambda")
    mu = _partition(_parse_index(args.mu), "mu")
    nu = _partition(_parse_index(args.nu), "nu")
    if max(weight(lam), weight(mu), weight(nu)) > DEGREE_CEILING and not args.allow_large:
        raise UsageError(f"weight above {DEGREE_CEILING}; pass --allow-large to proceed")
    try:
        if args.hall:
            rep = hall_stability_scan(lam, mu, nu, args.m_max, jobs=cfg.parallelism)
        else:
            rep = stability_scan(lam, mu, nu, args.m_max, jobs=cfg.parallelism)
    except ValueError as err:
        raise UsageError(str(err)) from err
    code = EXIT_OK if rep.within_bound else EXIT_FAILED
    lines = [f"lambda={list(lam)} mu={list(mu)} nu={list(nu)} offset={rep.offset} bound={rep.theorem_bound}"]
    lines += [f"  m={m:>3}  {v}" for m, v in rep.samples]
    lines.append(f"onset={rep.onset} stable={rep.stable_value}")
    return code, rep.to_json(), "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-weight", type=int, default=None)
    common.add_argument("--eval-t", type=_parse_rational, default=None, metavar="P/Q",
                        help="specialize t to an exact rational")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--allow-large", action="store_true",
                        help="acknowledge running above the default size ceilings")

    parser = argparse.ArgumentParser(prog="hallvertex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a named symmetric function")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("index", help="JSON integer array; skew families take [[lambda],[mu]]")
    p.add_argument("--target", choices=TARGETS, default="p")
    p.add_argument("--vars", type=int, default=None)
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="run a named identity suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("hall-table", parents=[common], help="tabulate Hall polynomials")
    p.set_defaults(run=cmd_hall_table)

    p = sub.add_parser("stability", parents=[common], help="scan a coefficient sequence for stabilization")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    p.add_argument("nu", metavar="NU")
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--hall", action="store_true", help="scan Hall polynomials instead")
    p.set_defaults(run=cmd_stability)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.max_weight, args.eval_t, args.format, args.seed, args.jobs)
        code, data, text = args.run(args, cfg)
    except UsageError as err:
        print(f"hallvertex: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as err:
        print(f"hallvertex: integrity error: {err}", file=sys.stderr)
        return EXIT_INTEGRITY
    print(json.dumps(data, indent=2) if cfg.output_format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
