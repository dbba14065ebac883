"""Batch command line: verification suites, weight tables, Delta series, bracket tables.

    winfinity verify --N 2
    winfinity weights --N 1 --lambda-alpha 0 --lambda-beta -1 --max-k 6
    winfinity delta --N 2 --lambda-alpha 1/2,0 --lambda-beta 1,-3 --order 10
    winfinity bracket-table --N 1 --max-k 1

Exit status: 0 when every row passes, 1 when some row fails, 2 on a bad configuration.
The default output format comes from ``WINFINITY_FORMAT`` (json or tsv).
"""

import argparse
import itertools
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .checks import CheckResult, SuiteConfig, run_all
from .dhat import (
    DiffOpElement,
    delta_closed_form,
    delta_series,
    dhat_bracket,
    l_weights_from_j,
    measured_j_eigenvalues,
    quasifinite_decompose,
    realization_bracket_check,
    weight_components,
)
from .fock import Weight
from .scalars import as_rational, format_rational
from .weylw import hw_eigenvalue

FORMAT_ENV = "WINFINITY_FORMAT"
FORMATS = ("json", "tsv")
BRACKET_MODES = 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    N: int = 1
    lambda_alpha: tuple = ()
    lambda_beta: tuple = ()
    max_k: int = 4
    order: int = 10
    trunc_degree: int = 4
    seed: int = 0
    format: str = "json"

    def __post_init__(self):
        if self.N < 1:
            raise ConfigError("N must be at least 1")
        for name in ("max_k", "order", "trunc_degree"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name.replace('_', '-')} must be non-negative")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        alpha = self.lambda_alpha or (0,) * self.N
        beta = self.lambda_beta or (0,) * self.N
        if len(alpha) != self.N or len(beta) != self.N:
            raise ConfigError(f"lambda lists must have N = {self.N} entries, got {len(alpha)} and {len(beta)}")
        object.__setattr__(self, "lambda_alpha", tuple(as_rational(a) for a in alpha))
        object.__setattr__(self, "lambda_beta", tuple(as_rational(b) for b in beta))

    @property
    def weight(self) -> Weight:
        return Weight(self.lambda_alpha, self.lambda_beta)

    def to_json(self) -> dict:
        out = asdict(self)
        out["lambda_alpha"] = [format_rational(a) for a in self.lambda_alpha]
        out["lambda_beta"] = [format_rational(b) for b in self.lambda_beta]
        return out


def _fmt_list(values) -> List[str]:
    return [format_rational(v) for v in values]


def cmd_verify(cfg: RunConfig) -> List[CheckResult]:
    return run_all(SuiteConfig(N=cfg.N, degree=cfg.trunc_degree, max_k=cfg.max_k, order=cfg.order, seed=cfg.seed))


def cmd_weights(cfg: RunConfig) -> List[CheckResult]:
    weight = cfg.weight
    measured = measured_j_eigenvalues(weight, cfg.max_k)
    rows = []
    for k, got in enumerate(measured):
        closed = hw_eigenvalue(k, weight)
        detail = {"k": k, "measured": format_rational(got), "closed_form": format_rational(closed)}
        rows.append(CheckResult("hw", got == closed, detail))
    lam = weight_components(weight, cfg.max_k).components
    from_j = l_weights_from_j(measured)
    rows.append(CheckResult("veza", lam == from_j, {"lambda_n": _fmt_list(lam), "lambda_n_from_j": _fmt_list(from_j)}))
    rows.append(CheckResult("defl", True, {"s": _fmt_list(weight.s), "t": _fmt_list(weight.t)}))
    return rows


def cmd_delta(cfg: RunConfig) -> List[CheckResult]:
    weight = cfg.weight
    series = delta_series(weight, cfg.order)
    closed = delta_closed_form(weight, cfg.order)
    rows = [
        CheckResult(
            "main.gener",
            series == closed,
            {"order": cfg.order, "from_j": _fmt_list(series.coeffs), "closed_form": _fmt_list(closed.coeffs)},
        )
    ]
    try:
        dec = quasifinite_decompose(weight, cfg.order)
    except ArithmeticError as exc:
        rows.append(CheckResult("main.decomp", False, {"error": str(exc)}))
        return rows
    detail = {
        "central_charge": format_rational(dec.central_charge),
        "terms": [{"exponent": format_rational(r), "multiplicity": _fmt_list(p)} for r, p in dec.terms],
        "multiplicity_sum_at_zero": format_rational(dec.multiplicity_sum_at_zero()),
    }
    rows.append(CheckResult("main.decomp", dec.multiplicity_sum_at_zero() == -cfg.N, detail))
    return rows


def _element_json(x: DiffOpElement) -> dict:
    j = x.to_j()
    return {
        "terms": [{"l": l, "k": k, "coeff": format_rational(c)} for (_, l, k), c in sorted(j.terms.items())],
        "central": format_rational(j.central),
    }


def cmd_bracket_table(cfg: RunConfig) -> List[CheckResult]:
    """[J^a(m), J^b(n)] for a, b <= max-k and |m|, |n| <= 2 at c = -N, with the free-field comparison."""
    rows = []
    modes = range(-BRACKET_MODES, BRACKET_MODES + 1)
    degree = min(cfg.trunc_degree, 3)
    for a, b in itertools.product(range(cfg.max_k + 1), repeat=2):
        for m, n in itertools.product(modes, repeat=2):
            br = dhat_bracket(DiffOpElement.J(a, m), DiffOpElement.J(b, n), -cfg.N)
            agree = realization_bracket_check(a, m, b, n, cfg.N, degree)
            detail = {"a": a, "m": m, "b": b, "n": n, "bracket": _element_json(br), "realization_agrees": agree,
                      "degree": degree}
            rows.append(CheckResult("bracket", agree, detail))
    return rows


COMMANDS = {
    "verify": cmd_verify,
    "weights": cmd_weights,
    "delta": cmd_delta,
    "bracket-table": cmd_bracket_table,
}


def render(cfg: RunConfig, command: str, rows: Sequence[CheckResult]) -> str:
    rows = sorted(rows, key=lambda r: r.id)
    if cfg.format == "json":
        report = {"command": command, "config": cfg.to_json(), "results": [r.to_json() for r in rows]}
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = ["# " + json.dumps({"command": command, "config": cfg.to_json()}, sort_keys=True), "id\tstatus\tdetail"]
    for r in rows:
        row = r.to_json()
        lines.append(f"{row['id']}\t{row['status']}\t{json.dumps(row['detail'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _rational_list(text: str) -> tuple:
    try:
        return tuple(as_rational(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a list of rationals: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="winfinity", description="Free-field checks for W_{1+inf,-N}.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=1, help="number of Weyl pairs")
    common.add_argument("--lambda-alpha", type=_rational_list, default=(), help="<lambda, alpha_i>, comma separated")
    common.add_argument("--lambda-beta", type=_rational_list, default=(), help="<lambda, beta_i>, comma separated")
    common.add_argument("--max-k", type=int, default=4, help="largest J^k index")
    common.add_argument("--order", type=int, default=10, help="series truncation order")
    common.add_argument("--trunc-degree", type=int, default=4, help="largest state degree in sweeps")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=(fn.__doc__ or "").split("\n")[0] or None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or os.environ.get(FORMAT_ENV, "json")
    try:
        cfg = RunConfig(
            N=args.N,
            lambda_alpha=args.lambda_alpha,
            lambda_beta=args.lambda_beta,
            max_k=args.max_k,
            order=args.order,
            trunc_degree=args.trunc_degree,
            seed=args.seed,
            format=fmt,
        )
    except (ConfigError, ValueError, TypeError) as exc:
        print(f"winfinity: configuration error: {exc}", file=sys.stderr)
        return 2
    rows = COMMANDS[args.command](cfg)
    text = render(cfg, args.command, rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
