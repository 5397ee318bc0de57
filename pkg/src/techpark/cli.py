"""Command line: ``techpark deflate | fit | potential``.

Exit codes: 0 success, 1 usage or scenario error, 2 data error, 3 model error.
Options may also come from a JSON file given with ``--config``; keys are the
long option names with dashes turned into underscores, and flags on the
command line take precedence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import dataio
from .deflate import DeflatedSeries, deflate_series, deflate_sme_records
from .errors import DataError, ModelError, ScenarioError, ShareOutOfRange
from .localmodels import LocalModelSet, fit_local_models, year_inputs
from .potential import ScenarioParams, beta_sweep
from .regress import PolyModel, ProportionalModel

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MODEL = 0, 1, 2, 3

FIT_SCHEMA = {
    "type": "object",
    "required": ["base_year", "years", "mid", "smegm", "fmi", "smefm", "aar"],
    "properties": {
        "base_year": {"type": "integer"},
        "years": {"type": "array", "items": {"type": "integer"}},
        "mid": {"$ref": "#/$defs/poly"},
        "smegm": {"$ref": "#/$defs/poly"},
        "fmi": {"$ref": "#/$defs/poly"},
        "smefm": {
            "type": "object",
            "required": ["d", "r_squared", "stderr", "n_points"],
            "properties": {"d": {"type": "number", "minimum": 0, "maximum": 1},
                           "r_squared": {"type": "number"},
                           "n_points": {"type": "integer"}},
        },
        "aar": {"type": "object", "additionalProperties": {"type": "number",
                                                           "exclusiveMinimum": 0}},
    },
    "$defs": {
        "poly": {
            "type": "object",
            "required": ["degree", "coefficients", "t_origin", "r_squared", "stderr",
                         "n_points"],
            "properties": {
                "degree": {"enum": [1, 2]},
                "coefficients": {"type": "array", "items": {"type": "number"}},
                "t_origin": {"type": "number"},
                "r_squared": {"type": "number", "minimum": 0, "maximum": 1},
                "stderr": {"type": "array", "items": {"type": "number"}},
                "n_points": {"type": "integer"},
            },
        },
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="JSON file with option values")
    common.add_argument("--macro", help="macro CSV: year,nominal_gdp,inflation")
    common.add_argument("--base-year", type=int, help="base year for deflation (default: last year)")
    common.add_argument("--format", choices=["json", "csv", "table"])
    common.add_argument("--out", help="write output here instead of stdout")

    sme = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    sme.add_argument("--sme", help="SME CSV with per-category counts and turnover")
    sme.add_argument("--exclude-category", action="append",
                     help="SME category left out of counts and AAR (repeatable; default medium)")
    sme.add_argument("--deflate-turnover", action="store_true",
                     help="deflate turnover figures with the macro inflation series")
    sme.add_argument("--aar-window", type=int, help="trailing years averaged into the AAR")

    parser = _Parser(prog="techpark", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("deflate", parents=[common], help="nominal to real GDP")
    sub.add_parser("fit", parents=[common, sme], help="fit the four local models")
    pot = sub.add_parser("potential", parents=[common, sme], help="what-if beta sweep",
                         argument_default=argparse.SUPPRESS)
    pot.add_argument("--k", type=float, help="survival share without parks, in (0, 1]")
    pot.add_argument("--beta", type=float, action="append", help="uplift to evaluate (repeatable)")
    pot.add_argument("--alpha", type=float, help="multiplier on average SME turnover (default 1)")
    pot.add_argument("--limit", action="store_true", help="add the beta = 1 - k row")
    pot.add_argument("--d", type=float, help="override the fitted SME turnover share")
    pot.add_argument("--n0", type=float, help="override the observed survivor count")
    pot.add_argument("--s1sse", type=float, help="override the average SME revenue")
    pot.add_argument("--year", type=int, action="append", help="sweep year (repeatable)")
    return parser


DEFAULTS = {
    "format": None, "out": None, "base_year": None, "exclude_category": None,
    "deflate_turnover": False, "aar_window": 1, "alpha": 1.0, "limit": False,
    "beta": None, "k": None, "d": None, "n0": None, "s1sse": None, "year": None,
    "macro": None, "sme": None,
}


def resolve_config(argv) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    given = vars(args)
    settings = dict(DEFAULTS)
    if "config" in given:
        try:
            file_values = json.loads(Path(given["config"]).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {given['config']}: {exc}") from None
        unknown = set(file_values) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        settings.update(file_values)
    settings.update(given)
    return argparse.Namespace(**settings)


# -- formatting ------------------------------------------------------------


def _poly_dict(m: PolyModel) -> dict:
    return {"degree": m.degree, "coefficients": list(m.coefficients), "t_origin": m.t_origin,
            "r_squared": m.r_squared, "stderr": list(m.stderr), "n_points": m.n_points}


def _prop_dict(m: ProportionalModel) -> dict:
    return {"d": m.d, "r_squared": m.r_squared, "stderr": m.stderr, "n_points": m.n_points}


def models_to_dict(models: LocalModelSet, base_year: int) -> dict:
    return {
        "base_year": base_year,
        "years": list(models.years),
        "mid": _poly_dict(models.mid),
        "smegm": _poly_dict(models.smegm),
        "fmi": _poly_dict(models.fmi),
        "smefm": _prop_dict(models.smefm),
        "aar": {str(y): v for y, v in sorted(models.aar_series.items())},
    }


def _fmt(x, human: bool) -> str:
    if x is None:
        return ""
    return f"{x:.3f}" if human else repr(x)


def format_deflated(ds: DeflatedSeries, fmt: str) -> str:
    cols = ("year", "nominal_gdp", "inflation", "total_inflation", "deflator", "real_gdp")
    rows = [(y, ds.nominal_value[y], ds.inflation[y], ds.total_inflation[y], ds.deflator[y],
             ds.real_value[y]) for y in ds.years]
    if fmt == "json":
        return json.dumps({"base_year": ds.base_year,
                           "rows": [dict(zip(cols, r)) for r in rows]}, indent=2) + "\n"
    human = fmt == "table"
    cells = [[str(r[0]), *(_fmt(v, human) for v in r[1:])] for r in rows]
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        w.writerows(cells)
        return out.getvalue()
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def format_report_table(report) -> str:
    lines = [f"{'beta':>8}  {'year':>4}  {'g':>14}  {'delta_g':>14}  {'epsilon':>14}"]
    for r in report.rows:
        lines.append(f"{r.beta:8.3f}  {r.year:4d}  {r.g:14.3f}  {r.delta_g:14.3f}  {r.epsilon:14.3f}")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------


def _read(path, what: str) -> str:
    if path is None:
        raise UsageError(f"--{what} is required")
    return Path(path).read_text()


def _deflated(cfg) -> DeflatedSeries:
    macro = dataio.parse_macro_series(_read(cfg.macro, "macro"))
    if not macro:
        raise DataError("macro series is empty")
    base = cfg.base_year if cfg.base_year is not None else macro[-1].year
    return deflate_series(macro, base)


def _sme(cfg, ds: DeflatedSeries):
    records = dataio.parse_sme_series(_read(cfg.sme, "sme"))
    if cfg.deflate_turnover:
        records = deflate_sme_records(records, ds.total_inflation)
    return records


def _exclude(cfg):
    return frozenset(cfg.exclude_category) if cfg.exclude_category else frozenset({"medium"})


def cmd_deflate(cfg) -> str:
    return format_deflated(_deflated(cfg), cfg.format or "table")


def cmd_fit(cfg) -> str:
    if (cfg.format or "json") != "json":
        raise UsageError("fit only writes json")
    ds = _deflated(cfg)
    models = fit_local_models(ds.real_gdp(), _sme(cfg, ds), _exclude(cfg),
                              aar_window=cfg.aar_window)
    return json.dumps(models_to_dict(models, ds.base_year), indent=2) + "\n"


def _check_scenario(cfg):
    if cfg.k is None:
        raise UsageError("--k is required")
    betas = cfg.beta if cfg.beta is not None else []
    if not betas and not cfg.limit:
        raise UsageError("give at least one --beta or --limit")
    # validate every scenario parameter before reading or fitting anything
    probe = dict(k=cfg.k, d=0.0 if cfg.d is None else cfg.d,
                 n0=1.0 if cfg.n0 is None else cfg.n0,
                 s1sse=1.0 if cfg.s1sse is None else cfg.s1sse, alpha=cfg.alpha)
    try:
        for b in [*betas, 0.0]:
            ScenarioParams(beta=b, **probe)
    except ShareOutOfRange as exc:
        raise ScenarioError(str(exc)) from None
    return betas


def cmd_potential(cfg):
    betas = _check_scenario(cfg)
    ds = _deflated(cfg)
    sme = _sme(cfg, ds)
    exclude = _exclude(cfg)
    models = fit_local_models(ds.real_gdp(), sme, exclude, aar_window=cfg.aar_window)
    years = year_inputs(sme, cfg.year, exclude, aar_window=cfg.aar_window)
    if cfg.n0 is not None or cfg.s1sse is not None:
        years = [replace(y, n0=cfg.n0 if cfg.n0 is not None else y.n0,
                         s1sse=cfg.s1sse if cfg.s1sse is not None else y.s1sse) for y in years]
    d = cfg.d if cfg.d is not None else models.smefm.d
    report = beta_sweep(models.fmi, k=cfg.k, d=d, years=years, betas=betas,
                        alpha=cfg.alpha, limit=cfg.limit)
    fmt = cfg.format or "json"
    if fmt == "table":
        return format_report_table(report)
    return dataio.emit_report(report, fmt)


COMMANDS = {"deflate": cmd_deflate, "fit": cmd_fit, "potential": cmd_potential}


def main(argv=None) -> int:
    try:
        cfg = resolve_config(argv)
        text = COMMANDS[cfg.command](cfg)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (UsageError, ScenarioError) as exc:
        print(f"techpark: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError) as exc:
        print(f"techpark: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ModelError as exc:
        print(f"techpark: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MODEL
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
