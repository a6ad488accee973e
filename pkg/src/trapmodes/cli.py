"""Batch front end.

Each subcommand computes one table, writes it to ``<out>.csv`` (also echoed
to stdout) together with a ``<out>.manifest.json`` recording the effective
inputs, the spectral context, BEM diagnostics and wall time. Numbers in the
CSV carry 12 significant digits so identical inputs give byte-identical
files. Defaults are the standard configuration (b = 1, k = 1, unit circle),
so e.g. ``trapmodes embedded --beta 0.5`` alone locates the special
submergence a* of the unit circle.

Exit codes: 0 success, 2 bad input (one-line diagnostic naming the offending
field on stderr), 3 internal consistency failure.

Options may also come from a ``--config`` file with flat ``key = value``
lines and ``#`` comments; command-line flags override the file.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
import time

import numpy as np

from . import __version__
from .contour import make_circle, make_ellipse, read_fourier_file
from .dispersion import FluidConfig, spectral_context
from .embedded import a_star, sweep_f
from .errors import ConsistencyError, ValidationError
from .potentialflow import assemble, dipoles_bem
from .spectra import (
    ProblemSetup,
    resonance_lower,
    resonance_upper,
    trapped_lower,
    trapped_upper,
)

COMMANDS = ("cutoffs", "dipoles", "trapped", "resonance", "embedded", "sweep")
SHAPES = ("circle", "ellipse", "fourier")
SWEEP_TARGETS = ("cutoffs", "dipoles", "trapped", "resonance", "embedded", "f")

# CSV column sets, fixed per command (documented in --help).
COLUMNS = {
    "cutoffs": ["beta", "b", "k", "Lambda1", "Lambda2", "tau1", "p1_zero",
                "q1", "q2"],
    "dipoles": ["shape", "r", "a0", "b0", "theta0", "N", "mu", "kappa", "nu",
                "S", "delta"],
    "trapped": ["beta", "b", "k", "side", "a", "epsilon", "shape", "mu", "S",
                "sigma", "lambda", "threshold", "omega", "D"],
    "resonance": ["beta", "b", "k", "side", "a", "epsilon", "shape", "mu",
                  "S", "re_sigma", "im_sigma", "rcal", "jcal",
                  "near_embedded", "decay_rate", "D", "D1"],
    "embedded": ["beta", "b", "k", "epsilon", "shape", "delta", "exists",
                 "a_star", "w", "tau0", "sigma", "diagnostics"],
    "f": ["alpha", "tau0", "a", "f", "has_root", "a_star"],
}


@dataclasses.dataclass
class RunConfig:
    command: str
    beta: float = 0.5
    b: float = 1.0
    k: float = 1.0
    side: str = "U"
    a: float = 0.5
    epsilon: float = 0.01
    shape: str = "circle"
    r: float = 1.0
    a0: float = 1.0
    b0: float = 1.0
    theta0: float = 0.0
    fourier_file: str | None = None
    N: int = 256
    g: float | None = None
    out: str | None = None
    sweep: str | None = None
    what: str | None = None


_FIELD_TYPES = {
    "beta": float, "b": float, "k": float, "side": str, "a": float,
    "epsilon": float, "shape": str, "r": float, "a0": float, "b0": float,
    "theta0": float, "fourier_file": str, "N": int, "g": float, "out": str,
    "sweep": str, "what": str,
}

# Scalars a sweep may range over, per target command.
_SWEEPABLE = {
    "cutoffs": ("beta", "b", "k"),
    "dipoles": ("r", "a0", "b0", "theta0"),
    "trapped": ("beta", "b", "k", "a", "epsilon", "r", "a0", "b0", "theta0"),
    "resonance": ("beta", "b", "k", "a", "epsilon", "r", "a0", "b0",
                  "theta0"),
    "embedded": ("beta", "b", "k", "epsilon", "r", "a0", "b0", "theta0"),
    "f": ("a",),
}


def read_config_file(path: str) -> dict:
    """Flat key = value pairs, # comments, blank lines ignored."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValidationError(f"config: cannot read {path!r}: {exc}") from exc
    pairs = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ValidationError(
                f"config: line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in _FIELD_TYPES:
            raise ValidationError(f"config: unknown key {key!r} (line {lineno})")
        conv = _FIELD_TYPES[key]
        try:
            pairs[key] = conv(value)
        except ValueError as exc:
            raise ValidationError(
                f"config key {key!r}: cannot parse {value!r} as {conv.__name__}"
            ) from exc
    return pairs


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="trapmodes",
        description="Trapped modes and resonances of thin submerged "
                    "cylinders in a two-layer fluid.",
    )
    top.add_argument("--version", action="version",
                     version=f"trapmodes {__version__}")
    sub = top.add_subparsers(dest="command", required=True)
    descr = {
        "cutoffs": "Cut-off values and threshold roots of the two branches. "
                   "Columns: " + ", ".join(COLUMNS["cutoffs"]),
        "dipoles": "Dipole coefficients of the cross-section by boundary "
                   "quadrature. Columns: " + ", ".join(COLUMNS["dipoles"]),
        "trapped": "Trapped-mode eigenvalue below the first cut-off. "
                   "Columns: " + ", ".join(COLUMNS["trapped"]),
        "resonance": "Complex resonance near the second cut-off. Columns: "
                     + ", ".join(COLUMNS["resonance"]),
        "embedded": "Special submergence turning the resonance into an "
                    "embedded trapped mode. Columns: "
                    + ", ".join(COLUMNS["embedded"]),
        "sweep": "Run another command over a grid of one scalar parameter "
                 "(--what picks the command, --sweep the grid). "
                 "--what f tabulates the circle root function "
                 "(columns: " + ", ".join(COLUMNS["f"]) + ").",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, description=descr[name])
        p.add_argument("--config", help="key = value file; flags override it")
        p.add_argument("--beta", type=float, default=None,
                       help="density ratio rho1/rho2 in (0, 1) [0.5]")
        p.add_argument("--b", type=float, default=None,
                       help="upper layer depth [1.0]")
        p.add_argument("--k", type=float, default=None,
                       help="axial wavenumber [1.0]")
        p.add_argument("--side", choices=("U", "L"), default=None,
                       help="cylinder in upper (U) or lower (L) layer [U]")
        p.add_argument("--a", type=float, default=None,
                       help="submergence depth of the cylinder axis [0.5]; "
                            "ignored by 'embedded', which solves for it")
        p.add_argument("--epsilon", type=float, default=None,
                       help="slenderness parameter [0.01]")
        p.add_argument("--shape", choices=SHAPES, default=None,
                       help="cross-section family [circle]")
        p.add_argument("--r", type=float, default=None,
                       help="circle radius [1.0]")
        p.add_argument("--a0", type=float, default=None,
                       help="ellipse semi-axis along x before tilt [1.0]")
        p.add_argument("--b0", type=float, default=None,
                       help="ellipse semi-axis along y before tilt [1.0]")
        p.add_argument("--theta0", type=float, default=None,
                       help="ellipse tilt, radians clockwise [0.0]")
        p.add_argument("--fourier-file", dest="fourier_file", default=None,
                       help="4-column coefficient file (cos_x sin_x cos_y "
                            "sin_y) for --shape fourier")
        p.add_argument("--N", type=int, default=None,
                       help="boundary quadrature nodes, power of two [256]")
        p.add_argument("--g", type=float, default=None,
                       help="gravitational acceleration; enables the omega "
                            "and decay_rate columns")
        p.add_argument("--out", default=None,
                       help="output stem; writes <out>.csv and "
                            "<out>.manifest.json [trapmodes_<command>]")
        p.add_argument("--sweep", default=None, metavar="PARAM:START:STOP:COUNT",
                       help="grid for the 'sweep' command")
        p.add_argument("--what", choices=SWEEP_TARGETS, default=None,
                       help="which table the 'sweep' command produces")
    return top


def parse_run(argv=None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    run = RunConfig(command=ns.command)
    if ns.config is not None:
        for key, value in read_config_file(ns.config).items():
            setattr(run, key, value)
    for key in _FIELD_TYPES:
        value = getattr(ns, key, None)
        if value is not None:
            setattr(run, key, value)
    if run.side not in ("U", "L"):
        raise ValidationError(f"side must be 'U' or 'L', got {run.side!r}")
    if run.shape not in SHAPES:
        raise ValidationError(f"shape must be one of {SHAPES}, got {run.shape!r}")
    if run.what is not None and run.what not in SWEEP_TARGETS:
        raise ValidationError(
            f"what must be one of {SWEEP_TARGETS}, got {run.what!r}")
    if run.out is None:
        run.out = f"trapmodes_{run.command}"
    return run


def _parse_sweep(run: RunConfig):
    if run.sweep is None:
        raise ValidationError("sweep: --sweep PARAM:START:STOP:COUNT is required")
    if run.what is None:
        raise ValidationError("sweep: --what is required")
    parts = run.sweep.split(":")
    if len(parts) != 4:
        raise ValidationError(
            f"sweep: expected PARAM:START:STOP:COUNT, got {run.sweep!r}")
    param = parts[0].strip()
    allowed = _SWEEPABLE[run.what]
    if param not in allowed:
        raise ValidationError(
            f"sweep: parameter {param!r} not sweepable for --what {run.what} "
            f"(allowed: {', '.join(allowed)})")
    try:
        start, stop = float(parts[1]), float(parts[2])
        count = int(parts[3])
    except ValueError as exc:
        raise ValidationError(f"sweep: cannot parse {run.sweep!r}") from exc
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ValidationError("sweep: start and stop must be finite")
    if not start < stop:
        raise ValidationError(
            f"sweep: need start < stop, got {start} >= {stop}")
    if count < 2:
        raise ValidationError(f"sweep: count must be >= 2, got {count}")
    return param, np.linspace(start, stop, count)


def _fluid(run: RunConfig) -> FluidConfig:
    return FluidConfig(beta=run.beta, b=run.b, k=run.k)


def _contour(run: RunConfig):
    if run.shape == "circle":
        return make_circle(run.r)
    if run.shape == "ellipse":
        return make_ellipse(run.a0, run.b0, run.theta0)
    if run.fourier_file is None:
        raise ValidationError("fourier_file: required when shape = fourier")
    try:
        return read_fourier_file(run.fourier_file)
    except OSError as exc:
        raise ValidationError(
            f"fourier_file: cannot read {run.fourier_file!r}: {exc}") from exc


def _spectral_summary(ctx) -> dict:
    q1 = math.sqrt(2.0 * ctx.cfg.k * ctx.Lambda1 / ctx.dlam1_k)
    q2 = ctx.cfg.k * math.sqrt(2.0)
    return {"Lambda1": ctx.Lambda1, "Lambda2": ctx.Lambda2, "tau1": ctx.tau1,
            "p1_zero": ctx.p1_zero, "q1": q1, "q2": q2}


def _bem_parts(run: RunConfig, manifest: dict):
    """Contour, assembled system and dipoles, recorded into the manifest."""
    C = _contour(run)
    system = assemble(C, run.N)
    dip = dipoles_bem(C, run.N, system=system)
    manifest["bem"] = {"N": run.N, "gauss_residual": system.gauss_residual,
                       "cond_estimate": system.cond_estimate}
    manifest["dipoles"] = {"mu": dip.mu, "kappa": dip.kappa, "nu": dip.nu,
                           "S": dip.S, "delta": dip.delta}
    if run.shape == "fourier":
        manifest["inputs"]["fourier_coefficients"] = [
            list(map(float, C.cos_x)), list(map(float, C.sin_x)),
            list(map(float, C.cos_y)), list(map(float, C.sin_y))]
    return C, system, dip


def _shape_cells(run: RunConfig) -> dict:
    cells = {"shape": run.shape, "r": None, "a0": None, "b0": None,
             "theta0": None}
    if run.shape == "circle":
        cells["r"] = run.r
    elif run.shape == "ellipse":
        cells.update(a0=run.a0, b0=run.b0, theta0=run.theta0)
    return cells


def _row_cutoffs(run: RunConfig, manifest: dict) -> dict:
    ctx = spectral_context(_fluid(run))
    summary = _spectral_summary(ctx)
    manifest["spectral_context"] = summary
    return {"beta": run.beta, "b": run.b, "k": run.k, **summary}


def _row_dipoles(run: RunConfig, manifest: dict) -> dict:
    _, _, dip = _bem_parts(run, manifest)
    return {**_shape_cells(run), "N": run.N, "mu": dip.mu,
            "kappa": dip.kappa, "nu": dip.nu, "S": dip.S,
            "delta": dip.delta}


def _setup(run: RunConfig, dip, a=None) -> ProblemSetup:
    return ProblemSetup(cfg=_fluid(run), side=run.side,
                        a=run.a if a is None else a,
                        epsilon=run.epsilon, dip=dip)


def _row_trapped(run: RunConfig, manifest: dict) -> dict:
    _, _, dip = _bem_parts(run, manifest)
    ctx = spectral_context(_fluid(run))
    manifest["spectral_context"] = _spectral_summary(ctx)
    fn = trapped_upper if run.side == "U" else trapped_lower
    res = fn(_setup(run, dip), ctx, g_grav=run.g)
    return {"beta": run.beta, "b": run.b, "k": run.k, "side": run.side,
            "a": run.a, "epsilon": run.epsilon, "shape": run.shape,
            "mu": dip.mu, "S": dip.S, "sigma": res.sigma, "lambda": res.lam,
            "threshold": res.threshold, "omega": res.omega,
            "D": res.coefficients.D}


def _row_resonance(run: RunConfig, manifest: dict) -> dict:
    _, _, dip = _bem_parts(run, manifest)
    ctx = spectral_context(_fluid(run))
    manifest["spectral_context"] = _spectral_summary(ctx)
    fn = resonance_upper if run.side == "U" else resonance_lower
    res = fn(_setup(run, dip), ctx, g_grav=run.g)
    return {"beta": run.beta, "b": run.b, "k": run.k, "side": run.side,
            "a": run.a, "epsilon": run.epsilon, "shape": run.shape,
            "mu": dip.mu, "S": dip.S, "re_sigma": res.re_sigma,
            "im_sigma": res.im_sigma, "rcal": res.rcal, "jcal": res.jcal,
            "near_embedded": res.near_embedded,
            "decay_rate": res.decay_rate, "D": res.coefficients.D,
            "D1": res.coefficients.D1}


def _row_embedded(run: RunConfig, manifest: dict) -> dict:
    _, _, dip = _bem_parts(run, manifest)
    cfg = _fluid(run)
    ctx = spectral_context(cfg)
    manifest["spectral_context"] = _spectral_summary(ctx)
    # the submergence field is solved for, not prescribed; seed with b/2
    setup = ProblemSetup(cfg=cfg, side="U", a=0.5 * run.b,
                         epsilon=run.epsilon, dip=dip)
    res = a_star(setup, ctx)
    return {"beta": run.beta, "b": run.b, "k": run.k,
            "epsilon": run.epsilon, "shape": run.shape, "delta": res.delta,
            "exists": res.exists, "a_star": res.a_star, "w": res.w,
            "tau0": res.tau0, "sigma": res.sigma,
            "diagnostics": res.diagnostics}


_ROW_FN = {
    "cutoffs": _row_cutoffs,
    "dipoles": _row_dipoles,
    "trapped": _row_trapped,
    "resonance": _row_resonance,
    "embedded": _row_embedded,
}


def _rows_sweep(run: RunConfig, manifest: dict):
    param, grid = _parse_sweep(run)
    manifest["inputs"]["sweep_grid"] = [float(v) for v in grid]
    if run.what == "f":
        _, _, dip = _bem_parts(run, manifest)
        rows = sweep_f([_fluid(run)], grid, delta=dip.delta)
        return COLUMNS["f"], rows
    columns = COLUMNS[run.what]
    rows = []
    for v in grid:
        point = dataclasses.replace(run, command=run.what)
        setattr(point, param, float(v) if param != "N" else int(v))
        # each grid point keeps its own manifest scratch; only the last
        # point's spectral/BEM blocks are recorded (they differ only in
        # the swept parameter, which the grid itself documents)
        rows.append(_ROW_FN[run.what](point, manifest))
    return columns, rows


def _format_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".12g")
    return str(v)


def _render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def _write_outputs(run: RunConfig, csv_text: str, manifest: dict) -> None:
    try:
        with open(f"{run.out}.csv", "w", newline="", encoding="utf-8") as fh:
            fh.write(csv_text)
        with open(f"{run.out}.manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise ValidationError(f"out: cannot write {run.out!r}: {exc}") from exc


def main(argv=None) -> int:
    t0 = time.perf_counter()
    try:
        run = parse_run(argv)
        manifest = {
            "tool": "trapmodes",
            "version": __version__,
            "command": run.command,
            "inputs": dataclasses.asdict(run),
            "spectral_context": None,
            "bem": None,
            "dipoles": None,
        }
        if run.command == "sweep":
            columns, rows = _rows_sweep(run, manifest)
        else:
            columns = COLUMNS[run.command]
            rows = [_ROW_FN[run.command](run, manifest)]
        manifest["columns"] = columns
        manifest["csv"] = f"{run.out}.csv"
        manifest["wall_time_s"] = time.perf_counter() - t0
        csv_text = _render_csv(columns, rows)
        _write_outputs(run, csv_text, manifest)
        sys.stdout.write(csv_text)
        return 0
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:  # argparse --help/--version/bad flag
        code = exc.code
        return 0 if code is None else int(code)


if __name__ == "__main__":
    sys.exit(main())
