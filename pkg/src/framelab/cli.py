"""Command line driver.

Usage::

    framelab <command> --config <path> [--out <path>] [--format csv|json]
                       [--tol <real>] [--rng-seed <u64>]

Commands: ``frame-bounds``, ``norm-ratio``, ``carleson``, ``check-b``,
``concentration``, ``sweep``. The sweep command runs from flags instead of
a config file: ``framelab sweep --preset annulus --dims 8,16,32``.

Exit codes: 0 on success (including indeterminate verdicts), 1 when the
computed check fails (incomplete family, failed windowed bound, partial
sweep), 2 on configuration or input errors. Stdout carries a one-line
summary; the full report goes to ``--out`` when given, otherwise to
stdout after the summary.
"""

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from .conditions import carleson_delta, circle_concentration, rescaling_condition_b
from .errors import FramelabError, ParseError, ValidationError
from .experiments import (DEFAULT_RNG_SEED, SweepConfig, norm_ratio_experiment,
                          run_sweep)
from .frames import frame_bounds
from .operators import NormalOperatorModel, SpectralAtom
from .systems import (ExplicitScaling, IndexSet, IterativeSystemSpec,
                      Normalized, ShiftedNormalized, Unscaled, build_system)

DEFAULT_CHECK_B = {"eta": 1, "delta": 1e-6, "gap_cap": 8}


# ---------------------------------------------------------------- config

def _fail(path, msg):
    raise ValidationError(f"{path}: {msg}")


def _get(obj, key, path, required=True, default=None):
    if not isinstance(obj, dict):
        _fail(path, "expected an object")
    if key not in obj:
        if required:
            _fail(f"{path}.{key}" if path else key, "missing required field")
        return default
    return obj[key]


def _complex_in(obj, path):
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        _fail(path, 'expected an object {"re": <real>, "im": <real>}')
    re, im = obj["re"], obj["im"]
    for name, v in (("re", re), ("im", im)):
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            _fail(f"{path}.{name}", "expected a real number")
    return complex(float(re), float(im))


def _complex_out(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _positive_int(v, path):
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        _fail(path, f"expected a positive integer, got {v!r}")
    return v


def _parse_index_set(obj, path, truncation):
    kind = _get(obj, "type", path)
    if kind == "all":
        count = _get(obj, "M", path, required=False, default=truncation)
        return IndexSet.all(_positive_int(count, f"{path}.M"))
    if kind == "arithmetic":
        start = _get(obj, "start", path)
        step = _get(obj, "step", path)
        count = _get(obj, "M", path)
        if not isinstance(start, int) or isinstance(start, bool) or start < 0:
            _fail(f"{path}.start", f"expected a nonnegative integer, got {start!r}")
        return IndexSet.arithmetic(start, _positive_int(step, f"{path}.step"),
                                   _positive_int(count, f"{path}.M"))
    if kind == "explicit":
        values = _get(obj, "values", path)
        if not isinstance(values, list) or not values:
            _fail(f"{path}.values", "expected a nonempty list of integers")
        for i, v in enumerate(values):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                _fail(f"{path}.values[{i}]", f"expected a nonnegative integer, got {v!r}")
        return IndexSet(tuple(values))
    _fail(f"{path}.type", f"unknown index set type {kind!r}")


def _parse_scaling(obj, path, n_seeds):
    kind = _get(obj, "type", path)
    if kind == "unscaled":
        return Unscaled()
    if kind == "normalized":
        return Normalized()
    if kind == "shifted":
        offsets = _get(obj, "offsets", path)
        eta = _get(obj, "eta", path)
        if not isinstance(offsets, list) or not offsets:
            _fail(f"{path}.offsets", "expected a nonempty list of integers")
        for i, o in enumerate(offsets):
            if not isinstance(o, int) or isinstance(o, bool):
                _fail(f"{path}.offsets[{i}]", f"expected an integer, got {o!r}")
        return ShiftedNormalized(tuple(offsets), _positive_int(eta, f"{path}.eta"))
    if kind == "explicit":
        rows = _get(obj, "coefficients", path)
        if not isinstance(rows, list) or len(rows) != n_seeds:
            _fail(f"{path}.coefficients", f"expected one coefficient list per seed ({n_seeds})")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or not row:
                _fail(f"{path}.coefficients[{i}]", "expected a nonempty list")
            parsed.append(tuple(
                _complex_in(c, f"{path}.coefficients[{i}][{j}]")
                for j, c in enumerate(row)))
        return ExplicitScaling(tuple(parsed))
    _fail(f"{path}.type", f"unknown scaling type {kind!r}")


def parse_config(text):
    """Parse a JSON config into ``(spec, extras)``.

    Raises :class:`ParseError` on malformed JSON and
    :class:`ValidationError` (naming the field path) on schema violations.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        _fail("<root>", "expected a JSON object")

    operator = _get(doc, "operator", "")
    atoms_doc = _get(operator, "atoms", "operator")
    if not isinstance(atoms_doc, list) or not atoms_doc:
        _fail("operator.atoms", "expected a nonempty list")
    atoms = []
    for i, a in enumerate(atoms_doc):
        path = f"operator.atoms[{i}]"
        z = _complex_in(_get(a, "z", path), f"{path}.z")
        weight = _get(a, "weight", path, required=False, default=1.0)
        if not isinstance(weight, (int, float)) or isinstance(weight, bool) or weight <= 0:
            _fail(f"{path}.weight", f"expected a positive real, got {weight!r}")
        mult = _get(a, "mult", path, required=False, default=1)
        atoms.append(SpectralAtom(z, float(weight), _positive_int(mult, f"{path}.mult")))
    try:
        model = NormalOperatorModel(atoms)
    except FramelabError as exc:
        raise ValidationError(f"operator.atoms: {exc}") from exc

    seeds_doc = _get(doc, "seeds", "")
    if not isinstance(seeds_doc, list) or not seeds_doc:
        _fail("seeds", "expected a nonempty list of coordinate vectors")
    seeds = []
    for i, s in enumerate(seeds_doc):
        if not isinstance(s, list) or len(s) != model.dim:
            _fail(f"seeds[{i}]", f"expected a list of {model.dim} complex entries")
        seeds.append(np.array(
            [_complex_in(c, f"seeds[{i}][{j}]") for j, c in enumerate(s)],
            dtype=np.complex128))

    truncation = _positive_int(_get(doc, "truncation", ""), "truncation")

    indices_doc = _get(doc, "indices", "")
    if not isinstance(indices_doc, list) or len(indices_doc) != len(seeds):
        _fail("indices", f"expected one index set per seed ({len(seeds)})")
    index_sets = [_parse_index_set(obj, f"indices[{i}]", truncation)
                  for i, obj in enumerate(indices_doc)]

    scaling = _parse_scaling(_get(doc, "scaling", ""), "scaling", len(seeds))

    try:
        spec = IterativeSystemSpec(model, seeds, index_sets,
                                   rule=scaling, truncation=truncation)
    except FramelabError as exc:
        raise ValidationError(str(exc)) from exc

    extras = {}
    if "check_b" in doc:
        cb = doc["check_b"]
        path = "check_b"
        eta = _get(cb, "eta", path, required=False, default=DEFAULT_CHECK_B["eta"])
        delta = _get(cb, "delta", path, required=False, default=DEFAULT_CHECK_B["delta"])
        gap_cap = _get(cb, "gap_cap", path, required=False,
                       default=DEFAULT_CHECK_B["gap_cap"])
        if not isinstance(eta, int) or isinstance(eta, bool) or eta < 0:
            _fail("check_b.eta", f"expected a nonnegative integer, got {eta!r}")
        if not isinstance(delta, (int, float)) or isinstance(delta, bool) or delta <= 0:
            _fail("check_b.delta", f"expected a positive real, got {delta!r}")
        extras["check_b"] = {"eta": eta, "delta": float(delta),
                             "gap_cap": _positive_int(gap_cap, "check_b.gap_cap")}
    return spec, extras


def serialize_spec(spec):
    """Inverse of :func:`parse_config` (up to index-set normalization)."""
    rule = spec.rule
    if isinstance(rule, Unscaled):
        scaling = {"type": "unscaled"}
    elif isinstance(rule, Normalized):
        scaling = {"type": "normalized"}
    elif isinstance(rule, ShiftedNormalized):
        scaling = {"type": "shifted", "offsets": list(rule.offsets), "eta": rule.eta}
    else:
        scaling = {"type": "explicit",
                   "coefficients": [[_complex_out(c) for c in row]
                                    for row in rule.coefficients]}
    return json.dumps({
        "operator": {"atoms": [
            {"z": _complex_out(a.z), "weight": a.weight, "mult": a.mult}
            for a in spec.model.atoms]},
        "seeds": [[_complex_out(c) for c in s] for s in spec.seeds],
        "indices": [{"type": "explicit", "values": list(js.values)}
                    for js in spec.index_sets],
        "scaling": scaling,
        "truncation": spec.truncation,
    }, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- reports

def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv_text(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(args, summary, payload, csv_header=None, csv_rows=None):
    print(summary)
    if args.format == "csv":
        if csv_header is None:
            csv_header, csv_rows = ("key", "value"), sorted(
                (k, v) for k, v in payload.items()
                if isinstance(v, (int, float, str, bool)))
        text = _csv_text(csv_header, csv_rows)
    else:
        text = _json_text(payload)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_spec(args):
    with open(args.config) as fh:
        return parse_config(fh.read())


# ---------------------------------------------------------------- commands

def _cmd_frame_bounds(args):
    spec, _ = _load_spec(args)
    report = frame_bounds(build_system(spec), spec.model)
    payload = asdict(report)
    _emit(args, f"frame-bounds: lower={report.lower!r} upper={report.upper!r} "
                f"complete={report.complete}", payload)
    return 0 if report.complete else 1


def _cmd_norm_ratio(args):
    spec, _ = _load_spec(args)
    rows, summary = norm_ratio_experiment(spec.model, spec.seeds[0],
                                          spec.truncation)
    payload = {"rows": [[n, r] for n, r in rows], "summary": summary}
    _emit(args, f"norm-ratio: rho_last={summary['rho_last']!r} "
                f"support_radius={summary['support_radius']!r}",
          payload, csv_header=("n", "rho"), csv_rows=rows)
    return 0


def _cmd_carleson(args):
    spec, _ = _load_spec(args)
    points = [a.z for a in spec.model.atoms]
    delta = carleson_delta(points)
    payload = {"delta": delta, "points": len(points)}
    _emit(args, f"carleson: delta={delta!r} over {len(points)} points", payload)
    return 0


def _cmd_check_b(args):
    spec, extras = _load_spec(args)
    params = dict(DEFAULT_CHECK_B)
    params.update(extras.get("check_b", {}))
    if args.tol is not None:
        params["delta"] = args.tol
    report = rescaling_condition_b(spec, params["eta"], params["delta"],
                                   params["gap_cap"])
    payload = {"verdict": report.verdict, "witness": report.witness,
               "parameters": report.parameters}
    _emit(args, f"check-b: {report.verdict} (eta={params['eta']} "
                f"delta={params['delta']!r} gap_cap={params['gap_cap']})", payload)
    return 1 if report.verdict == "fail" else 0


def _cmd_concentration(args):
    spec, _ = _load_spec(args)
    if args.tol is not None:
        delta = args.tol
    else:
        # default: 5% of the smallest support radius outside the kernel
        live = []
        for s in spec.seeds:
            b2 = spec.model.block_norms_sq(s)
            sup = b2 > 0.0
            mods = np.abs(spec.model._z[sup])
            if sup.any() and mods.max() > 0.0:
                live.append(float(mods.max()))
        if not live:
            raise ValidationError("seeds: every seed lies in the kernel")
        delta = 0.05 * min(live)
    profile, offenders, counts = circle_concentration(spec.model, spec.seeds, delta)
    payload = {
        "delta": float(delta),
        "radii": list(profile.radii),
        "counts": counts,
        "offenders": [{"z": _complex_out(a.z), "weight": a.weight, "mult": a.mult}
                      for a in offenders],
        "seed_count": profile.seed_count,
        "nonkernel_seed_count": profile.nonkernel_seed_count,
        "seed_assignment": list(profile.seed_assignment),
    }
    rows = [(i + 1, r, c) for i, (r, c) in enumerate(zip(profile.radii, counts))]
    _emit(args, f"concentration: {sum(counts)} offenders across "
                f"{len(profile.radii)} radii (delta={float(delta)!r})",
          payload, csv_header=("radius_index", "radius", "offender_count"),
          csv_rows=rows)
    return 0


def _cmd_sweep(args):
    if not args.preset or not args.dims:
        raise ValidationError("sweep: --preset and --dims are required")
    params = {}
    scaling = Normalized()
    for item in args.param or []:
        if "=" not in item:
            raise ValidationError(f"--param {item!r}: expected key=value")
        key, value = item.split("=", 1)
        if key == "scaling":
            if value == "normalized":
                scaling = Normalized()
            elif value == "unscaled":
                scaling = Unscaled()
            else:
                raise ValidationError(
                    f"--param scaling={value!r}: expected normalized or unscaled")
        elif key == "factor":
            params["factor"] = value
        else:
            params[key] = value
    factor = int(params.pop("factor", 8))
    typed = {k: float(v) for k, v in params.items()}
    config = SweepConfig(preset=args.preset, dims=tuple(args.dims),
                         params=typed, factor=factor, scaling=scaling,
                         rng_seed=args.rng_seed)
    report = run_sweep(config)
    payload = {
        "preset": config.preset,
        "dims": list(config.dims),
        "factor": config.factor,
        "scaling": type(config.scaling).__name__.lower(),
        "params": typed,
        "rng_seed": config.rng_seed,
        "rows": [{"d": r.d, "M": r.truncation, "lower": r.lower,
                  "upper": r.upper, "ratio": r.ratio, "error": r.error}
                 for r in report.rows],
        "lower_monotone_decreasing": report.lower_monotone_decreasing,
        "lower_stable_20pct": report.lower_stable_20pct,
        "decay_factor": report.decay_factor,
        "partial": report.partial,
    }
    rows = [(r.d, r.truncation, r.lower, r.upper, r.ratio) for r in report.rows]
    _emit(args, f"sweep: {config.preset} dims={list(config.dims)} "
                f"monotone={report.lower_monotone_decreasing} "
                f"decay_factor={report.decay_factor!r}",
          payload, csv_header=("d", "M", "lower", "upper", "ratio"),
          csv_rows=rows)
    return 1 if report.partial else 0


_COMMANDS = {
    "frame-bounds": (_cmd_frame_bounds, True),
    "norm-ratio": (_cmd_norm_ratio, True),
    "carleson": (_cmd_carleson, True),
    "check-b": (_cmd_check_b, True),
    "concentration": (_cmd_concentration, True),
    "sweep": (_cmd_sweep, False),
}


def _dims(text):
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framelab",
        description="Frame bounds and spectral checks for rescaled iterative systems.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, needs_config) in _COMMANDS.items():
        p = sub.add_parser(name)
        p.add_argument("--config", required=needs_config,
                       help="path to a JSON system description")
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--tol", type=float, default=None,
                       help="override the command's main tolerance")
        p.add_argument("--rng-seed", type=int, default=DEFAULT_RNG_SEED,
                       help="seed for pseudo-random preset data")
        if name == "sweep":
            p.add_argument("--dims", type=_dims, help="comma-separated dimensions")
            p.add_argument("--preset",
                           choices=("interpolating", "circle", "annulus"))
            p.add_argument("--param", action="append", metavar="KEY=VALUE",
                           help="preset parameter, e.g. r_min=0.3 or scaling=unscaled")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler, _ = _COMMANDS[args.command]
    try:
        return handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FramelabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
