"""Command-line front end emitting plot-ready CSV/JSON tables.

Exit codes: 0 ok, 2 configuration error, 3 numerical failure. Errors are
also written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .core.params import Params, validate_params
from .darboux import DEFAULT_K, DELTA, coeff_table
from .errors import DomainError, HeisenpolyError
from .exact import eval_exact, to_mantissa_exponent
from .expansion import error_profile, expand_cor1, expand_thm1, expand_thm2
from .special.tfuncs import X_SERIES_MAX, t_pair_bessel, t_pair_kummer, t_pair_series
from .zeros import find_zeros, prop1_scan

COMMANDS = ("eval", "errtable", "coeffs", "tfun", "zeros", "prop1")
DEFAULT_FORMAT = {"eval": "csv", "errtable": "csv", "coeffs": "csv", "tfun": "csv",
                  "zeros": "json", "prop1": "json"}
DEFAULTS = {
    "alpha": None,
    "beta": None,
    "n": "100",
    "theta": "1.0",
    "rho": 1.0,
    "m": 1,
    "K": DEFAULT_K,
    "x": "0.1,1,5,15,40",
    "x_max": 50.0,
    "grid": 2000,
    "route": "thm1",
    "samples": 0,
    "seed": 0,
    "out": None,
    "format": None,
}
CONFIG_KEYS = set(DEFAULTS)


class ConfigError(DomainError):
    pass


def fmt(v: float) -> str:
    return format(float(v), ".17g")


def _floats(text) -> list[float]:
    if isinstance(text, (int, float)):
        return [float(text)]
    if isinstance(text, list):
        return [float(v) for v in text]
    try:
        vals = [float(eval_pi(tok)) for tok in str(text).split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"cannot parse number list {text!r}") from exc
    if not vals:
        raise ConfigError("empty grid")
    return vals


def eval_pi(tok: str) -> float:
    """Parse a float, allowing ``pi`` multiples such as ``pi/4`` or ``0.5pi``."""
    tok = tok.strip().lower()
    if "pi" not in tok:
        return float(tok)
    num, _, den = tok.partition("/")
    num = num.replace("*", "").replace("pi", "")
    factor = float(num) if num not in ("", "+", "-") else float(num + "1")
    return factor * math.pi / (float(den) if den else 1.0)


def _ints(text) -> list[int]:
    vals = _floats(text)
    if any(v != int(v) or v < 0 for v in vals):
        raise ConfigError(f"degrees must be nonnegative integers: {text!r}")
    return [int(v) for v in vals]


# -- configuration ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float)
    common.add_argument("--beta", type=float, help="defaults to --alpha")
    common.add_argument("--n", help="degree or comma-separated degrees")
    common.add_argument("--theta", help="angle(s); accepts pi multiples like pi/4")
    common.add_argument("--rho", type=float)
    common.add_argument("--m", type=int, help="number of expansion terms")
    common.add_argument("--K", type=int, help="number of tabulated coefficients")
    common.add_argument("--x", help="T-function arguments (tfun)")
    common.add_argument("--x-max", dest="x_max", type=float)
    common.add_argument("--grid", type=int)
    common.add_argument("--route", choices=["thm1", "thm2", "cor1"])
    common.add_argument("--samples", type=int, help="extra random thetas (eval)")
    common.add_argument("--seed", type=int)
    common.add_argument("--out")
    common.add_argument("--format", choices=["json", "csv"])
    common.add_argument("--config", help="JSON file with default values; flags win")
    parser = argparse.ArgumentParser(prog="heisenpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(loaded) - CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(loaded)
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    cfg["command"] = args.command
    if cfg["alpha"] is None:
        raise ConfigError("--alpha is required")
    if cfg["beta"] is None:
        cfg["beta"] = cfg["alpha"]
    if cfg["format"] is None:
        cfg["format"] = DEFAULT_FORMAT[args.command]
    if cfg["format"] not in ("json", "csv"):
        raise ConfigError(f"unknown format {cfg['format']!r}")
    return cfg


# -- commands --------------------------------------------------------------

def cmd_eval(cfg: dict) -> tuple[list[str], list[list]]:
    p = validate_params(Params(cfg["alpha"], cfg["beta"]))
    thetas = _floats(cfg["theta"])
    if cfg["samples"]:
        rng = np.random.default_rng(cfg["seed"])
        thetas += sorted(rng.uniform(0.0, math.pi - DELTA, int(cfg["samples"])).tolist())
    rho, m, route = float(cfg["rho"]), int(cfg["m"]), cfg["route"]
    header = ["n", "theta", "rho", "exp10", "exact_re", "exact_im", "asym_re", "asym_im",
              "abs_err", "rel_err", "route", "m"]
    rows = []
    for n in _ints(cfg["n"]):
        for theta in thetas:
            exact = eval_exact(p, n, theta)
            asym, used_m, used_route = complex(math.nan, math.nan), m, "none"
            if n >= 1 and 0.0 <= theta <= math.pi - DELTA:
                if route == "thm1":
                    res = expand_thm1(p, n, theta, m, rho=rho)
                elif route == "thm2":
                    res = expand_thm2(p, n, rho, theta, m)
                else:
                    if p.alpha != p.beta:
                        raise ConfigError("route cor1 needs alpha == beta")
                    res = expand_cor1(p.alpha, n, rho, theta, m)
                asym, used_m, used_route = res.unit_value, res.m, res.route.value
            scale = n * math.log10(rho)
            mant, e10 = to_mantissa_exponent(1.0, scale)
            mant = mant.real
            err = abs(exact - asym)
            rel = err / abs(exact) if exact != 0 else math.inf
            rows.append([n, theta, rho, e10, (exact * mant).real, (exact * mant).imag,
                         (asym * mant).real, (asym * mant).imag, err * mant, rel,
                         used_route, used_m])
    return header, rows


def cmd_errtable(cfg: dict):
    p = validate_params(Params(cfg["alpha"], cfg["beta"]))
    prof = error_profile(p, _ints(cfg["n"]), _floats(cfg["theta"]), int(cfg["m"]))
    slopes = prof.slopes()
    header = ["theta", "n", "m", "exact_re", "exact_im", "approx_re", "approx_im",
              "abs_err", "normalized", "bound_ratio", "slope"]
    rows = []
    for i, theta in enumerate(prof.theta_grid):
        for j, n in enumerate(prof.n_grid):
            rows.append([theta, int(n), prof.m, prof.exact[i, j].real, prof.exact[i, j].imag,
                         prof.approx[i, j].real, prof.approx[i, j].imag, prof.abs_err[i, j],
                         prof.normalized[i, j], prof.bound_ratio[i, j], slopes[i]])
    return header, rows


def cmd_coeffs(cfg: dict):
    p = validate_params(Params(cfg["alpha"], cfg["beta"]))
    header = ["theta", "k", "alpha_re", "alpha_im", "beta_re", "beta_im",
              "c_re", "c_im", "d_re", "d_im"]
    rows = []
    for theta in _floats(cfg["theta"]):
        tab = coeff_table(p, theta, int(cfg["K"]))
        for k in range(tab.K):
            rows.append([theta, k, tab.alpha_k[k].real, tab.alpha_k[k].imag,
                         tab.beta_k[k].real, tab.beta_k[k].imag, tab.c_k[k].real,
                         tab.c_k[k].imag, tab.d_k[k].real, tab.d_k[k].imag])
    return header, rows


def cmd_tfun(cfg: dict):
    p = validate_params(Params(cfg["alpha"], cfg["beta"]))
    header = ["x", "route", "t1_re", "t1_im", "t2_re", "t2_im", "max_rel_diff"]
    rows = []
    for x in _floats(cfg["x"]):
        pairs = []
        if x <= X_SERIES_MAX:
            pairs.append(t_pair_series(p, x))
        if not p.gamma_pole:
            pairs.append(t_pair_kummer(p, x))
        if p.alpha == p.beta:
            pairs.append(t_pair_bessel(p.alpha, x))
        for tp in pairs:
            diff = max(
                max(abs(tp.t1 - o.t1) / max(abs(tp.t1), abs(o.t1)),
                    abs(tp.t2 - o.t2) / max(abs(tp.t2), abs(o.t2)))
                for o in pairs
            )
            rows.append([x, tp.route.value, tp.t1.real, tp.t1.imag, tp.t2.real, tp.t2.imag, diff])
    return header, rows


def cmd_zeros(cfg: dict):
    if cfg["alpha"] != cfg["beta"]:
        raise ConfigError("zeros are located for alpha == beta only")
    header = ["n", "k", "theta", "estimate_bessel", "estimate_large_k", "disc_bessel", "disc_large_k"]
    rows = []
    for n in _ints(cfg["n"]):
        rep = find_zeros(cfg["alpha"], n)
        for k in range(n):
            rows.append([n, k + 1, rep.zeros[k], rep.estimates_bessel[k], rep.estimates_large_k[k],
                         rep.disc_bessel[k], rep.disc_large_k[k]])
    return header, rows


def cmd_prop1(cfg: dict):
    p = validate_params(Params(cfg["alpha"], cfg["beta"]))
    rep = prop1_scan(p, float(cfg["x_max"]), int(cfg["grid"]))
    header = ["x", "abs_t1", "im_flux"]
    rows = [[x, a, f] for x, a, f in zip(rep.x, rep.abs_t1, rep.im_flux)]
    summary = {"min_abs_t1": rep.min_abs_t1, "all_positive": rep.all_positive,
               "nondecreasing": rep.nondecreasing, "beta_gt_alpha": rep.beta_gt_alpha}
    return header, rows, summary


HANDLERS = {"eval": cmd_eval, "errtable": cmd_errtable, "coeffs": cmd_coeffs,
            "tfun": cmd_tfun, "zeros": cmd_zeros, "prop1": cmd_prop1}


# -- emission --------------------------------------------------------------

def _cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else fmt(v)
    return v


def meta_block(cfg: dict) -> dict:
    return {
        "command": cfg["command"],
        "version": __version__,
        "config": {k: cfg[k] for k in sorted(CONFIG_KEYS) if k != "out"},
        "tolerances": {"delta": DELTA, "x_series_max": X_SERIES_MAX},
    }


def render(cfg: dict, header: list[str], rows: list[list], summary: dict | None = None) -> str:
    meta = meta_block(cfg)
    if summary is not None:
        meta["summary"] = {k: _json_value(v) for k, v in summary.items()}
    if cfg["format"] == "json":
        payload = {"meta": meta,
                   "rows": [{h: _json_value(v) for h, v in zip(header, row)} for row in rows]}
        return json.dumps(payload, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    for line in json.dumps(meta, sort_keys=True, indent=1).splitlines():
        buf.write("# " + line + "\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_cell(v) for v in row) + "\n")
    return buf.getvalue()


def read_csv(text: str) -> tuple[dict, list[str], list[list[str]]]:
    """Parse an emitted CSV back into ``(meta, header, rows)``."""
    meta_lines, body = [], []
    for line in text.splitlines():
        (meta_lines if line.startswith("#") else body).append(line)
    meta = json.loads("\n".join(line[2:] for line in meta_lines)) if meta_lines else {}
    header = body[0].split(",")
    return meta, header, [line.split(",") for line in body[1:]]


def run(argv: list[str] | None = None) -> tuple[str, dict]:
    args = build_parser().parse_args(argv)
    cfg = resolve_config(args)
    text = render(cfg, *HANDLERS[cfg["command"]](cfg))
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text, cfg


def _fail(code: int, exc: Exception) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit": code}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        text, cfg = run(argv)
    except DomainError as exc:
        return _fail(2, exc)
    except (HeisenpolyError, ArithmeticError) as exc:
        return _fail(3, exc)
    if not cfg["out"]:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
