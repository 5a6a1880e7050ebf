"""Experiment command-line front end.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import json
import math
import os
import sys

import click
import numpy as np

from . import circuit
from .analysis import (
    convergence_study,
    fit_study_slopes,
    make_field,
    sample,
    success_probability_exact,
    write_study_csv,
    write_summary_json,
)
from .config import ExperimentConfig
from .grid import GridSpec
from .kernel import (
    build_kernel_pair,
    build_stencil,
    c_dog_constant,
    coefficient_one_norm,
    write_kernel_csv,
)
from .spectral import transfer_function, write_transfer_csv
from .verify import run_verification

CONFIG_ERROR = 2
VERIFY_ERROR = 1


def _config_options(f):
    opts = [
        click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                     help="JSON config file; flags override its values."),
        click.option("--dim", type=int, default=None, help="Spatial dimension D."),
        click.option("--n-points", type=int, multiple=True,
                     help="Points per axis (repeat for sweeps); must be powers of two."),
        click.option("--radius", type=int, default=None, help="Stencil radius R."),
        click.option("--shape", type=click.Choice(["hypercube", "cross"]), default=None),
        click.option("--sigma-p", type=float, default=None),
        click.option("--sigma-q", type=float, default=None),
        click.option("--field", "field_name", type=str, default=None,
                     help="Analytic field: sin1d, sin-product, constant, gaussian-bump."),
        click.option("--out", type=click.Path(), default=None, help="Output directory."),
        click.option("--tol", type=float, default=None),
        click.option("--max-dim-cap", type=int, default=None,
                     help="Full-space dimension cap for circuit-level checks."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _build_config(config_path, **flags) -> ExperimentConfig:
    try:
        cfg = ExperimentConfig.load(config_path) if config_path else ExperimentConfig()
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"bad config file: {exc}")
    mapping = {
        "dim": "dim",
        "n_points": "n_points",
        "radius": "radius",
        "shape": "shape",
        "sigma_p": "sigma_p",
        "sigma_q": "sigma_q",
        "field_name": "field",
        "out": "out",
        "tol": "tol",
        "max_dim_cap": "max_dim_cap",
    }
    for flag, attr in mapping.items():
        value = flags.get(flag)
        if value not in (None, ()):
            setattr(cfg, attr, value)
    for N in cfg.n_points:
        if N < 2 or N & (N - 1):
            raise click.UsageError(f"--n-points {N} is not a power of two >= 2")
    return cfg


def _problem(cfg: ExperimentConfig):
    try:
        stencil = build_stencil(cfg.dim, cfg.radius, cfg.shape)
        kp = build_kernel_pair(stencil, cfg.sigma_p, cfg.sigma_q)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    return stencil, kp


def _grid(cfg: ExperimentConfig, N: int) -> GridSpec:
    return GridSpec(D=cfg.dim, n=int(round(math.log2(N))))


@click.group()
def main():
    """Difference-of-Gaussian block-encoding experiments."""


@main.command("kernel")
@_config_options
def cmd_kernel(config_path, **flags):
    """Write the kernel CSV and report the derived scalars."""
    cfg = _build_config(config_path, **flags)
    _, kp = _problem(cfg)
    os.makedirs(cfg.out, exist_ok=True)
    csv_path = os.path.join(cfg.out, "kernel.csv")
    write_kernel_csv(kp, csv_path)
    one_norm = coefficient_one_norm(kp.c)
    report = {
        "coefficient_one_norm": one_norm,
        "c_dog": c_dog_constant(kp),
        "one_norm_within_lambda": one_norm <= 2.0,
        "stencil_size": len(kp.stencil),
    }
    with open(os.path.join(cfg.out, "kernel_report.json"), "w") as f:
        json.dump(report, f, indent=2, sort_keys=True)
        f.write("\n")
    click.echo(f"wrote {csv_path}")
    click.echo(f"sum|c_t| = {one_norm:.6f} (bound 2), C_DoG = {report['c_dog']:.6f}")


@main.command("spectrum")
@_config_options
def cmd_spectrum(config_path, **flags):
    """Write the transfer-function CSV."""
    cfg = _build_config(config_path, **flags)
    _, kp = _problem(cfg)
    g = _grid(cfg, cfg.n_points[0])
    tf = transfer_function(kp, g)
    os.makedirs(cfg.out, exist_ok=True)
    csv_path = os.path.join(cfg.out, "transfer.csv")
    write_transfer_csv(tf, csv_path, half_axis=(cfg.dim == 1))
    click.echo(f"wrote {csv_path}")


@main.command("verify")
@_config_options
@click.option("--inject-asymmetry", is_flag=True,
              help="Break kernel symmetry; the Hermiticity check must then fail.")
def cmd_verify(config_path, inject_asymmetry, **flags):
    """Run the full verification suite at the configured size."""
    cfg = _build_config(config_path, **flags)
    _, kp = _problem(cfg)
    g = _grid(cfg, cfg.n_points[0])
    layout = circuit.layout_for(kp.stencil, g)
    if layout.total_dim > cfg.max_dim_cap:
        raise click.UsageError(
            f"full-space dimension {layout.total_dim} exceeds cap {cfg.max_dim_cap}"
        )
    results = run_verification(kp, g, tol=cfg.tol, inject_asymmetry=inject_asymmetry)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        click.echo(f"[{status}] {r.name}: residual {r.residual:.3e} (tol {r.tol:.1e})")
        all_ok &= r.passed
    if not all_ok:
        sys.exit(VERIFY_ERROR)


@main.command("sweep")
@_config_options
def cmd_sweep(config_path, **flags):
    """Convergence study across the configured grid sizes."""
    cfg = _build_config(config_path, **flags)
    _, kp = _problem(cfg)
    try:
        field = make_field(cfg.field, cfg.dim)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    N_list = sorted(cfg.n_points)
    rows = convergence_study(field, kp, N_list)

    # circuit-level Born cross-check, capped to keep the dense path small
    layout_s = circuit.shift_register_size(kp.stencil)
    for row in rows:
        N = row["N"]
        g = GridSpec(D=cfg.dim, n=int(round(math.log2(N))))
        if 2 ** (1 + layout_s) * g.num_points > min(cfg.max_dim_cap, 2**10):
            continue
        U, layout = circuit.build_circuit(kp, g)
        sig = sample(field, g)
        if sig.norm == 0.0:
            continue
        p_born, _ = circuit.apply_and_postselect(U, sig.state(), layout)
        if abs(p_born - row["P_exact"]) > 1e-12:
            click.echo(f"[FAIL] Born cross-check at N={N}: {p_born} vs {row['P_exact']}")
            sys.exit(VERIFY_ERROR)

    os.makedirs(cfg.out, exist_ok=True)
    csv_path = os.path.join(cfg.out, "sweep.csv")
    write_study_csv(rows, csv_path)
    summary = fit_study_slopes(rows)
    summary["field"] = cfg.field
    json_path = os.path.join(cfg.out, "sweep_summary.json")
    write_summary_json(summary, json_path)
    click.echo(f"wrote {csv_path} and {json_path}")
    if not math.isnan(summary["slope_P_exact"]):
        click.echo(
            f"slope log2(P_exact) vs log2(N): {summary['slope_P_exact']:.3f}, "
            f"final ratio {summary['final_ratio']:.4f}"
        )


if __name__ == "__main__":
    main()
