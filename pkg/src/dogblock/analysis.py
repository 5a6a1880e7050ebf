"""Success-probability analysis: exact Parseval form, spectral bound,
asymptotic scaling, and grid-refinement studies."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .grid import GridSpec, all_indices
from .kernel import KernelPair, c_dog_constant
from .operator import apply_dog
from .spectral import TransferFunction, operator_norm, transfer_function


@dataclass(frozen=True)
class SampledSignal:
    """Grid samples of a continuous field, flattened row-major."""

    g: GridSpec
    values: np.ndarray = field(repr=False)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def state(self) -> np.ndarray:
        n = self.norm
        if n == 0.0:
            raise ValueError("cannot normalize an identically-zero signal")
        return self.values / n


@dataclass(frozen=True)
class SmoothField:
    """Periodic field on [0,1)^D with caller-supplied analytic Laplacian.

    L2 norms are over the continuous domain (analytic or quadrature values).
    """

    D: int
    name: str
    value_fn: Callable[[np.ndarray], np.ndarray]
    laplacian_fn: Callable[[np.ndarray], np.ndarray]
    l2_norm: float
    laplacian_l2_norm: float


def _bump_1d(x, kappa):
    return np.exp(kappa * (np.cos(2 * np.pi * x) - 1.0))


def make_field(name: str, D: int = 1) -> SmoothField:
    """Named analytic test fields: sin1d, sin-product, constant, gaussian-bump."""
    two_pi = 2.0 * np.pi
    if name == "constant":
        return SmoothField(
            D=D,
            name=name,
            value_fn=lambda x: np.ones(x.shape[:-1]),
            laplacian_fn=lambda x: np.zeros(x.shape[:-1]),
            l2_norm=1.0,
            laplacian_l2_norm=0.0,
        )
    if name == "sin1d":
        if D != 1:
            raise ValueError("sin1d is one-dimensional")
        return SmoothField(
            D=1,
            name=name,
            value_fn=lambda x: np.sin(two_pi * x[..., 0]),
            laplacian_fn=lambda x: -(two_pi**2) * np.sin(two_pi * x[..., 0]),
            l2_norm=math.sqrt(0.5),
            laplacian_l2_norm=two_pi**2 * math.sqrt(0.5),
        )
    if name == "sin-product":
        def value(x):
            return np.prod(np.sin(two_pi * x), axis=-1)

        return SmoothField(
            D=D,
            name=name,
            value_fn=value,
            laplacian_fn=lambda x: -D * two_pi**2 * value(x),
            l2_norm=0.5 ** (D / 2.0),
            laplacian_l2_norm=D * two_pi**2 * 0.5 ** (D / 2.0),
        )
    if name == "gaussian-bump":
        kappa = 2.0

        def value(x):
            return np.prod(_bump_1d(x, kappa), axis=-1)

        def laplacian(x):
            v = value(x)
            s = np.sin(two_pi * x)
            c = np.cos(two_pi * x)
            # g''/g per axis for g = exp(kappa (cos 2πx - 1))
            ratio = two_pi**2 * kappa * (kappa * s * s - c)
            return v * np.sum(ratio, axis=-1)

        l2, lap_l2 = _quadrature_norms(value, laplacian, D)
        return SmoothField(
            D=D,
            name=name,
            value_fn=value,
            laplacian_fn=laplacian,
            l2_norm=l2,
            laplacian_l2_norm=lap_l2,
        )
    raise ValueError(f"unknown field {name!r}")


def _quadrature_norms(value_fn, laplacian_fn, D, points_per_axis=2048):
    """Periodic trapezoid rule (spectrally accurate for smooth fields)."""
    m = points_per_axis if D == 1 else 256
    axes = np.meshgrid(*[np.arange(m) / m] * D, indexing="ij")
    x = np.stack(axes, axis=-1)
    w = m ** (-D)
    l2 = math.sqrt(float(np.sum(np.abs(value_fn(x)) ** 2)) * w)
    lap = math.sqrt(float(np.sum(np.abs(laplacian_fn(x)) ** 2)) * w)
    return l2, lap


def sample(field: SmoothField, g: GridSpec) -> SampledSignal:
    """Point samples v(h j) over the grid in row-major order."""
    if field.D != g.D:
        raise ValueError(f"field dimension {field.D} != grid dimension {g.D}")
    x = all_indices(g) * g.h  # (N^D, D)
    values = np.asarray(field.value_fn(x), dtype=complex)
    return SampledSignal(g=g, values=values)


def state_spectrum(v: np.ndarray, g: GridSpec) -> np.ndarray:
    """Fourier coefficients <ω|v> of a normalized state, row-major over ω."""
    grid_vals = np.asarray(v, dtype=complex).reshape((g.N,) * g.D)
    return np.fft.fftn(grid_vals).reshape(-1) / math.sqrt(g.num_points)


def success_probability_exact(v, tf: TransferFunction) -> float:
    """Parseval form: (1/4) Σ_ω |mu(ω)|^2 |v_hat(ω)|^2 for the normalized state."""
    if isinstance(v, SampledSignal):
        state = v.state()
    else:
        state = np.asarray(v, dtype=complex)
        state = state / np.linalg.norm(state)
    v_hat = state_spectrum(state, tf.g)
    return float(0.25 * np.sum(np.abs(tf.mu) ** 2 * np.abs(v_hat) ** 2))


def success_probability_bound(tf: TransferFunction) -> float:
    """Spectral bound (1/4) max_ω |mu(ω)|^2 = ||A||^2 / 4."""
    return 0.25 * operator_norm(tf) ** 2


def success_probability_asymptotic(
    field: SmoothField, kp: KernelPair, g: GridSpec
) -> float:
    """Leading term (C^2 / 4D^2) h^4 ||Δv||^2 / ||v||^2 of the h -> 0 expansion."""
    if field.l2_norm == 0.0:
        raise ValueError("field has zero L2 norm")
    c_dog = c_dog_constant(kp)
    ratio = (field.laplacian_l2_norm / field.l2_norm) ** 2
    return (c_dog**2 / (4.0 * g.D**2)) * g.h**4 * ratio


def taylor_consistency(field: SmoothField, kp: KernelPair, g: GridSpec) -> float:
    """Max residual of (A v_h)(j) - (C/D) h^2 Δv(h j); O(h^4) for smooth fields."""
    sig = sample(field, g)
    applied = apply_dog(kp, g, sig.values)
    x = all_indices(g) * g.h
    target = (c_dog_constant(kp) / g.D) * g.h**2 * np.asarray(
        field.laplacian_fn(x), dtype=complex
    )
    return float(np.max(np.abs(applied - target)))


def observed_order(residuals, N_list) -> float:
    """Least-squares convergence order of residuals against grid size."""
    logs = np.log2(np.asarray(residuals, dtype=float))
    slope = np.polyfit(np.log2(np.asarray(N_list, dtype=float)), logs, 1)[0]
    return float(-slope)


def convergence_study(
    field: SmoothField, kp: KernelPair, N_list
) -> list[dict]:
    """Exact vs asymptotic success probability across dyadic grid sizes."""
    rows = []
    for N in N_list:
        n = int(round(math.log2(N)))
        if (1 << n) != N:
            raise ValueError(f"grid size {N} is not a power of two")
        g = GridSpec(D=field.D, n=n)
        tf = transfer_function(kp, g)
        p_exact = success_probability_exact(sample(field, g), tf)
        p_asym = success_probability_asymptotic(field, kp, g)
        rows.append(
            {
                "N": N,
                "h": g.h,
                "P_exact": p_exact,
                "P_asym": p_asym,
                "ratio": p_exact / p_asym if p_asym > 0 else math.nan,
            }
        )
    return rows


def fit_study_slopes(rows: list[dict]) -> dict:
    """Log-log slopes of both probability columns and the final ratio."""
    N = np.array([r["N"] for r in rows], dtype=float)
    out = {"final_ratio": rows[-1]["ratio"]}
    for key in ("P_exact", "P_asym"):
        vals = np.array([r[key] for r in rows], dtype=float)
        if len(rows) >= 2 and np.all(vals > 0):
            out[f"slope_{key}"] = float(np.polyfit(np.log2(N), np.log2(vals), 1)[0])
        else:
            out[f"slope_{key}"] = math.nan
    return out


def write_study_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["N", "h", "P_exact", "P_asym", "ratio"])
        for r in rows:
            writer.writerow(
                [
                    r["N"],
                    f"{r['h']:.17g}",
                    f"{r['P_exact']:.17g}",
                    f"{r['P_asym']:.17g}",
                    f"{r['ratio']:.17g}",
                ]
            )


def write_summary_json(summary: dict, path) -> None:
    with open(path, "w") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
        f.write("\n")
