"""Command-line front end: parameter sweeps, fluctuation reports and a self-test.

Examples
--------
::

    casimir-polder wall-scan --var d --min 1e-3 --max 1e3 --count 7 --spacing log
    casimir-polder pair-scan --var rho --min 1 --max 10 --count 10 \\
        --fix z_a=1000 --fix z_b=1000 --format json
    casimir-polder fluctuation-report --d 1e-6 --T 1e-5 --units si
    casimir-polder selftest

Every sweep output embeds the fully resolved spec; feeding that spec back
through ``--config`` reproduces the output byte for byte.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

import numpy as np

from . import __version__
from .errors import CasimirPolderError
from .fluctuations import InstrumentSpec, crossover_time, feasibility_report, relative_fluctuation
from .pair import PairConfiguration, geometry_frame, pair_force, pair_potential_far
from .units import AtomSpec, UnitSystem, make_two_level_atom
from .wall import wall_energy, wall_force

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_INVALID_SPEC = 2
EXIT_NUMERIC_FAILURE = 3

SCHEMA_VERSION = "1"

# quantity -> (subcommand, default parameters, required parameters)
_ATOM_PAIR_DEFAULTS = {"alpha_a": 1.0, "alpha_b": 1.0, "k0_a": 1.0, "k0_b": 1.0}
_ATOM_DEFAULTS = {"mu_sq": 1.0, "k0": 1.0}
QUANTITIES = {
    "pair_potential": ("pair-scan", _ATOM_PAIR_DEFAULTS, ("z_a", "z_b", "rho")),
    "pair_force": ("pair-scan", {**_ATOM_PAIR_DEFAULTS, "direction": "radial"}, ("z_a", "z_b", "rho")),
    "wall_force_ground": ("wall-scan", _ATOM_DEFAULTS, ("d",)),
    "wall_force_excited": ("wall-scan", _ATOM_DEFAULTS, ("d",)),
    "fluctuation": ("wall-scan", _ATOM_DEFAULTS, ("d", "T")),
    "wall_energy": ("energy-scan", {**_ATOM_DEFAULTS, "state": "ground"}, ("d",)),
}
DEFAULT_QUANTITY = {
    "pair-scan": "pair_potential",
    "wall-scan": "wall_force_ground",
    "energy-scan": "wall_energy",
}
_STRING_PARAMS = {"direction": ("radial", "lateral", "normal"), "state": ("ground", "excited")}
# Parameters carrying a dimension convert with --units si; atom parameters never do.
_PARAM_KINDS = {"z_a": "length", "z_b": "length", "rho": "length", "d": "length", "T": "time"}

_COLUMNS = {
    "pair_potential": [("total", "energy"), ("term_free", "energy"), ("term_image", "energy"),
                       ("term_cross", "energy"), ("far_zone_valid", None)],
    "pair_force": [("force", "force"), ("force_error", "force")],
    "wall_force_ground": [("force", "force"), ("z", None), ("regime", None)],
    "wall_force_excited": [("force", "force"), ("z", None), ("regime", None)],
    "wall_energy": [("energy", "energy")],
    "fluctuation": [("x", None), ("regime", None), ("relative_low", None), ("relative_high", None),
                    ("observable", None), ("mean_force", "force"), ("absolute_low", "force"),
                    ("absolute_high", "force"), ("caveat", None)],
}


class SpecError(CasimirPolderError):
    """Invalid sweep specification (exit code 2)."""


# -- formatting ---------------------------------------------------------------

def format_number(value) -> str:
    """Shortest round-trip decimal form (at most 17 significant digits)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


# -- spec resolution ----------------------------------------------------------

def _parse_fix(items):
    fixed = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SpecError(f"--fix expects KEY=VAL, got {item!r}")
        fixed[key] = val.strip()
    return fixed


def _coerce_param(key, value):
    if key in _STRING_PARAMS:
        value = str(value)
        if value not in _STRING_PARAMS[key]:
            raise SpecError(f"{key} must be one of {', '.join(_STRING_PARAMS[key])}, got {value!r}")
        return value
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise SpecError(f"parameter {key} must be a number, got {value!r}") from None
    if not math.isfinite(value):
        raise SpecError(f"parameter {key} must be finite, got {value!r}")
    return value


def resolve_spec(command: str, args) -> dict:
    """Merge built-in defaults, the ``--config`` file and command-line flags."""
    config = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecError(f"cannot read config {args.config!r}: {exc}") from None
        if not isinstance(config, dict):
            raise SpecError("config file must hold a JSON object")

    quantity = args.quantity or config.get("quantity") or DEFAULT_QUANTITY[command]
    if quantity not in QUANTITIES:
        raise SpecError(f"unknown quantity {quantity!r}")
    owner, defaults, required = QUANTITIES[quantity]
    if owner != command:
        raise SpecError(f"quantity {quantity!r} belongs to subcommand {owner!r}, not {command!r}")

    rng = dict(config.get("range") or {})
    for key in ("min", "max", "count", "spacing"):
        flag = getattr(args, key)
        if flag is not None:
            rng[key] = flag
    rng.setdefault("spacing", "linear")
    for key in ("min", "max", "count"):
        if key not in rng:
            raise SpecError(f"missing range parameter --{key}")
    try:
        lo, hi = float(rng["min"]), float(rng["max"])
        count = int(rng["count"])
    except (TypeError, ValueError):
        raise SpecError("range min/max must be numbers and count an integer") from None
    if float(rng["count"]) != count:
        raise SpecError("count must be an integer")
    spacing = rng["spacing"]
    if spacing not in ("linear", "log"):
        raise SpecError(f"spacing must be 'linear' or 'log', got {spacing!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise SpecError(f"need finite min < max, got {lo!r}, {hi!r}")
    if count < 2:
        raise SpecError(f"count must be >= 2, got {count}")
    if spacing == "log" and lo <= 0:
        raise SpecError("log spacing requires min > 0")

    units = args.units or config.get("units") or "reduced"
    if units not in ("reduced", "si"):
        raise SpecError(f"units must be 'reduced' or 'si', got {units!r}")
    fmt = args.format or config.get("output_format") or "csv"
    if fmt not in ("csv", "json"):
        raise SpecError(f"format must be 'csv' or 'json', got {fmt!r}")

    fixed = {"base_length": 1e-6, **defaults}
    fixed.update(config.get("fixed") or {})
    fixed.update(_parse_fix(args.fix))
    allowed = set(defaults) | set(required) | {"base_length"}
    variable = args.var or config.get("variable")
    if variable is None:
        raise SpecError("missing --var")
    if variable not in allowed or variable in _STRING_PARAMS or variable == "base_length":
        raise SpecError(f"cannot sweep {variable!r} for {quantity}; choose from "
                        f"{', '.join(sorted(allowed - set(_STRING_PARAMS) - {'base_length'}))}")
    unknown = set(fixed) - allowed
    if unknown:
        raise SpecError(f"unknown parameter(s) for {quantity}: {', '.join(sorted(unknown))}")
    fixed.pop(variable, None)
    missing = [k for k in required if k != variable and k not in fixed]
    if missing:
        raise SpecError(f"missing fixed parameter(s) for {quantity}: {', '.join(missing)}")
    fixed = {k: _coerce_param(k, v) for k, v in sorted(fixed.items())}
    if not fixed["base_length"] > 0:
        raise SpecError("base_length must be positive")

    return {
        "command": command,
        "quantity": quantity,
        "variable": variable,
        "range": {"min": lo, "max": hi, "count": count, "spacing": spacing},
        "fixed": fixed,
        "output_format": fmt,
        "units": units,
        "version": __version__,
    }


# -- evaluation ---------------------------------------------------------------

def _pair_atoms(p):
    a = AtomSpec.from_polarizability(p["alpha_a"], p["k0_a"], label="A")
    b = AtomSpec.from_polarizability(p["alpha_b"], p["k0_b"], label="B")
    return a, b


def _eval_pair_potential(p):
    a, b = _pair_atoms(p)
    res = pair_potential_far(a, b, PairConfiguration(p["z_a"], p["z_b"], p["rho"]))
    return {"total": res.total, "term_free": res.term_free, "term_image": res.term_image,
            "term_cross": res.term_cross, "far_zone_valid": res.valid}


def _eval_pair_force(p):
    a, b = _pair_atoms(p)
    cfg = PairConfiguration(p["z_a"], p["z_b"], p["rho"])
    if p["direction"] == "radial":
        R = geometry_frame(cfg).R
        u = (cfg.position_b - cfg.position_a) / R
    elif p["direction"] == "lateral":
        u = (1.0, 0.0, 0.0)
    else:
        u = (0.0, 0.0, 1.0)
    est = pair_force(a, b, cfg, u)
    return {"force": est.value, "force_error": est.error}


def _eval_wall(state):
    def run(p):
        res = wall_force(make_two_level_atom(p["mu_sq"], p["k0"]), p["d"], state)
        return {"force": res.force, "z": res.z, "regime": res.regime}
    return run


def _eval_wall_energy(p):
    return {"energy": wall_energy(make_two_level_atom(p["mu_sq"], p["k0"]), p["d"], p["state"])}


def _eval_fluctuation(p):
    atom = make_two_level_atom(p["mu_sq"], p["k0"])
    rep = feasibility_report(p["d"], InstrumentSpec(p["T"]), atom)
    fl = rep.fluctuation
    return {"x": fl.x, "regime": fl.regime, "relative_low": fl.bounds[0],
            "relative_high": fl.bounds[1], "observable": fl.observable,
            "mean_force": rep.mean_force, "absolute_low": rep.absolute_fluctuation[0],
            "absolute_high": rep.absolute_fluctuation[1], "caveat": rep.caveat}


_EVALUATORS = {
    "pair_potential": _eval_pair_potential,
    "pair_force": _eval_pair_force,
    "wall_force_ground": _eval_wall("ground"),
    "wall_force_excited": _eval_wall("excited"),
    "wall_energy": _eval_wall_energy,
    "fluctuation": _eval_fluctuation,
}


def sweep_grid(spec) -> np.ndarray:
    r = spec["range"]
    if r["spacing"] == "log":
        return np.geomspace(r["min"], r["max"], r["count"])
    return np.linspace(r["min"], r["max"], r["count"])


def run_sweep(spec) -> tuple[list[dict], int]:
    """Evaluate ``spec``; returns the rows and the number of failed points."""
    units = UnitSystem(spec["fixed"]["base_length"])
    si = spec["units"] == "si"
    quantity = spec["quantity"]
    evaluate = _EVALUATORS[quantity]
    columns = _COLUMNS[quantity]
    var = spec["variable"]
    rows = []
    failed = 0
    for i, value in enumerate(sweep_grid(spec)):
        params = dict(spec["fixed"])
        params[var] = float(value)
        for key, kind in _PARAM_KINDS.items():
            if si and key in params:
                params[key] = units.from_si(params[key], kind)
        row = {"index": i, var: float(value)}
        try:
            out = evaluate(params)
        except (CasimirPolderError, ArithmeticError, ValueError) as exc:
            failed += 1
            out = {name: math.nan for name, _ in columns}
            status = f"error: {exc}"
        else:
            status = "ok"
        for name, kind in columns:
            val = out[name]
            if si and kind is not None:
                val = units.to_si(val, kind)
            row[name] = val
        row["status"] = status
        rows.append(row)
    return rows, failed


def render_csv(spec, rows) -> str:
    buf = io.StringIO()
    buf.write(f"# spec: {canonical_json(spec)}\n")
    header = ["index", spec["variable"], *[name for name, _ in _COLUMNS[spec["quantity"]]], "status"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(row[h]) for h in header])
    return buf.getvalue()


def render_json(spec, rows) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "spec": spec,
        "rows": [{k: _json_value(v) for k, v in row.items()} for row in rows],
    }
    return json.dumps(doc, indent=1, sort_keys=True, allow_nan=False) + "\n"


def _emit(text, out_path):
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_sweep(args) -> int:
    spec = resolve_spec(args.command, args)
    rows, failed = run_sweep(spec)
    text = render_json(spec, rows) if spec["output_format"] == "json" else render_csv(spec, rows)
    _emit(text, args.out)
    if failed:
        print(f"warning: {failed} of {len(rows)} points failed", file=sys.stderr)
    return EXIT_NUMERIC_FAILURE if failed == len(rows) else EXIT_OK


# -- fluctuation report -------------------------------------------------------

def fluctuation_document(d, T, mu_sq=1.0, k0=1.0, units="reduced", base_length=1e-6) -> dict:
    """Feasibility report in the requested units as a plain dict."""
    us = UnitSystem(base_length)
    si = units == "si"
    d_r = us.from_si(d, "length") if si else d
    T_r = us.from_si(T, "time") if si else T
    atom = make_two_level_atom(mu_sq, k0)
    rep = feasibility_report(d_r, InstrumentSpec(T_r), atom)

    def out(value, kind):
        return us.to_si(value, kind) if si else value

    fl = rep.fluctuation
    return {
        "schema_version": SCHEMA_VERSION,
        "inputs": {"d": d, "T": T, "mu_sq": mu_sq, "k0": k0, "units": units, "base_length": base_length},
        "x": fl.x,
        "regime": fl.regime,
        "relative_fluctuation": list(fl.bounds) if fl.regime == "crossover" else fl.bounds[0],
        "observable": fl.observable,
        "crossover_time": out(rep.crossover_time, "time"),
        "mean_force": out(rep.mean_force, "force"),
        "absolute_fluctuation": [out(v, "force") for v in rep.absolute_fluctuation],
        "caveat": rep.caveat,
    }


def render_fluctuation_text(doc) -> str:
    unit_t = "s" if doc["inputs"]["units"] == "si" else "(reduced)"
    unit_f = "N" if doc["inputs"]["units"] == "si" else "(reduced)"
    obs = "observable" if doc["observable"] else "not observable"
    rel = doc["relative_fluctuation"]
    if isinstance(rel, list):
        rel_text = f"[{format_number(rel[0])}, {format_number(rel[1])}]"
    else:
        rel_text = format_number(rel)
    lines = [
        f"regime: {doc['regime']}; {obs}",
        f"d/(cT): {format_number(doc['x'])}",
        f"relative fluctuation: {rel_text}",
        f"crossover time d/c: {format_number(doc['crossover_time'])} {unit_t}",
        f"mean force: {format_number(doc['mean_force'])} {unit_f}",
        "absolute fluctuation: [{}, {}] {}".format(
            *(format_number(v) for v in doc["absolute_fluctuation"]), unit_f),
        f"caveat: {doc['caveat']}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_fluctuation(args) -> int:
    for name in ("d", "T", "mu_sq", "k0", "base_length"):
        val = getattr(args, name)
        if not (val > 0 and math.isfinite(val)):
            raise SpecError(f"--{name.replace('_', '-')} must be positive, got {val!r}")
    doc = fluctuation_document(args.d, args.T, args.mu_sq, args.k0, args.units or "reduced", args.base_length)
    if (args.format or "text") == "json":
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    else:
        text = render_fluctuation_text(doc)
    _emit(text, args.out)
    return EXIT_OK


# -- selftest -----------------------------------------------------------------

def _selftest_checks():
    """Yield ``(name, passed, detail)``; each check is a closed-form evaluation."""
    from .special import aux_f, aux_g, cos_integral, sin_integral
    from .wall import wall_force_far_ground, wall_force_ground

    def rel(a, b):
        return abs(a - b) / abs(b)

    oracle = {"Si(1)": (sin_integral, 0.94608307036718301494),
              "Ci(1)": (cos_integral, 0.33740392290096813466),
              "f(1)": (aux_f, 0.62144962423581335764),
              "g(1)": (aux_g, 0.34337796155642703283)}
    for name, (fn, ref) in oracle.items():
        err = rel(fn(1.0), ref)
        yield f"special function {name}", err < 1e-12, f"rel err {err:.1e}"

    h = 1e-6
    fd = (aux_f(1 + h) - aux_f(1 - h)) / (2 * h)
    err = rel(-fd, aux_g(1.0))
    yield "derivative identity f' = -g", err < 1e-6, f"rel err {err:.1e}"

    atom = make_two_level_atom(1.0, 1.0)
    ratio = wall_force_ground(atom, 1e3).force / wall_force_far_ground(atom, 1e3)
    yield "far-zone wall force", abs(ratio - 1) < 1e-3, f"ratio {ratio:.8f}"
    near = wall_force_ground(atom, 1e-3).force * 4e-12 / atom.mu_sq
    yield "near-zone wall force", abs(near + 1) < 1e-2, f"F*4d^4/mu^2 = {near:.6f}"

    unit = AtomSpec.from_polarizability(1.0, 1.0)
    res = pair_potential_far(unit, unit, PairConfiguration(1e3, 1e3, 1.0))
    err = abs(res.total - res.term_free) / abs(res.total)
    coeff_err = abs(res.total + 23 / (4 * math.pi))
    yield "free-space pair limit", err < 1e-6 and coeff_err < 1e-6 * 23 / (4 * math.pi), f"rel dev {err:.1e}"

    res = pair_potential_far(unit, unit, PairConfiguration(1e-9, 1e-9, 1.0))
    err = abs(res.total + 13 / (2 * math.pi))
    yield "on-plate coefficient", err < 1e-12, f"total*R^7 = {res.total:.15f}"

    lo = relative_fluctuation(0.1, 1.0).relative_fluctuation
    hi = relative_fluctuation(10.0, 1.0).relative_fluctuation
    ok = abs(math.log10(lo) + 6) < 1e-12 and abs(math.log10(hi) - 5) < 1e-12
    yield "fluctuation exponents", ok, f"x=0.1 -> {lo:.3g}, x=10 -> {hi:.3g}"

    tc = UnitSystem().to_si(crossover_time(1.0), "time")
    ok = 1e-15 <= tc <= 1e-13
    yield "crossover time at 1 um", ok, f"{tc:.4g} s"


def selftest(stream=None) -> int:
    stream = stream or sys.stdout
    start = time.perf_counter()
    failed = []
    width = 32
    for name, passed, detail in _selftest_checks():
        stream.write(f"{'PASS' if passed else 'FAIL'}  {name:<{width}} {detail}\n")
        if not passed:
            failed.append(name)
    stream.write(f"{len(failed)} failed, {time.perf_counter() - start:.2f} s\n")
    if failed:
        stream.write(f"selftest failed: {', '.join(failed)}\n")
        return EXIT_SELFTEST_FAILED
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------

def _add_sweep_flags(p, quantities):
    p.add_argument("--quantity", choices=quantities)
    p.add_argument("--var", help="parameter to sweep")
    p.add_argument("--min", type=float)
    p.add_argument("--max", type=float)
    p.add_argument("--count", type=int)
    p.add_argument("--spacing", choices=("linear", "log"))
    p.add_argument("--fix", action="append", metavar="KEY=VAL", help="fixed parameter (repeatable)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--units", choices=("reduced", "si"),
                   help="si: lengths/times in and energies/forces out are SI; atom parameters stay reduced")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")
    p.add_argument("--config", metavar="PATH", help="JSON spec; flags override it")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_SPEC, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="casimir-polder", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in ("pair-scan", "wall-scan", "energy-scan"):
        quantities = [q for q, (owner, *_) in QUANTITIES.items() if owner == command]
        p = sub.add_parser(command, help=f"sweep {', '.join(quantities)}")
        _add_sweep_flags(p, quantities)
        p.set_defaults(handler=_cmd_sweep)
    p = sub.add_parser("fluctuation-report", help="force-fluctuation feasibility report")
    p.add_argument("--d", type=float, required=True, help="atom-wall distance")
    p.add_argument("--T", type=float, required=True, help="measurement response time")
    p.add_argument("--mu-sq", dest="mu_sq", type=float, default=1.0)
    p.add_argument("--k0", type=float, default=1.0)
    p.add_argument("--base-length", dest="base_length", type=float, default=1e-6)
    p.add_argument("--units", choices=("reduced", "si"))
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=_cmd_fluctuation)
    p = sub.add_parser("selftest", help="run the embedded acceptance subset")
    p.set_defaults(handler=lambda args: selftest())
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_SPEC
    except CasimirPolderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_SPEC


if __name__ == "__main__":
    sys.exit(main())
