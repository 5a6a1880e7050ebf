"""Truncated symmetric stencils and difference-of-Gaussian coefficients."""

from __future__ import annotations

import csv
import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np

HYPERCUBE = "hypercube"
CROSS = "cross"


@dataclass(frozen=True)
class Stencil:
    """Finite symmetric set of integer offsets with a fixed lexicographic order."""

    offsets: tuple[tuple[int, ...], ...]
    shape_tag: str
    radius: int

    @property
    def D(self) -> int:
        return len(self.offsets[0])

    def __len__(self) -> int:
        return len(self.offsets)

    @property
    def squared_norms(self) -> np.ndarray:
        return np.array([sum(x * x for x in t) for t in self.offsets], dtype=float)


def build_stencil(D: int, R: int, shape_tag: str = HYPERCUBE) -> Stencil:
    """Symmetric stencil around the origin.

    hypercube: {-R..R}^D, |T| = (2R+1)^D.
    cross: origin plus axis-aligned offsets up to R, |T| = 2*D*R + 1.
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    if R < 0:
        raise ValueError(f"radius must be nonnegative, got {R}")
    if shape_tag == HYPERCUBE:
        offsets = list(itertools.product(range(-R, R + 1), repeat=D))
    elif shape_tag == CROSS:
        offsets = {(0,) * D}
        for k in range(D):
            for r in range(1, R + 1):
                for sign in (-1, 1):
                    t = [0] * D
                    t[k] = sign * r
                    offsets.add(tuple(t))
        offsets = sorted(offsets)
    else:
        raise ValueError(f"unknown stencil shape {shape_tag!r}")
    return Stencil(offsets=tuple(offsets), shape_tag=shape_tag, radius=R)


def gaussian_weights(stencil: Stencil, sigma: float) -> np.ndarray:
    """Normalized discrete Gaussian over the stencil, w_t ∝ exp(-|t|^2 / 2σ^2).

    Weights depend on t only through |t|^2, so mirrored offsets get
    bit-identical values.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    w = np.exp(-stencil.squared_norms / (2.0 * sigma * sigma))
    total = w.sum()
    if total == 0.0:
        raise ValueError(f"all Gaussian weights underflow at sigma={sigma}")
    return w / total


@dataclass(frozen=True)
class KernelPair:
    """Two normalized Gaussians on a shared stencil and their signed difference."""

    stencil: Stencil
    sigma_p: float
    sigma_q: float
    p: np.ndarray = field(repr=False)
    q: np.ndarray = field(repr=False)

    @property
    def c(self) -> np.ndarray:
        return self.p - self.q


def build_kernel_pair(stencil: Stencil, sigma_p: float, sigma_q: float) -> KernelPair:
    if sigma_p >= sigma_q:
        warnings.warn(
            f"sigma_p={sigma_p} >= sigma_q={sigma_q}: bandpass sign flips",
            stacklevel=2,
        )
    p = gaussian_weights(stencil, sigma_p)
    q = gaussian_weights(stencil, sigma_q)
    return KernelPair(stencil=stencil, sigma_p=sigma_p, sigma_q=sigma_q, p=p, q=q)


def dog_coefficients(kp: KernelPair) -> np.ndarray:
    """Signed stencil coefficients c_t = p_t - q_t."""
    if kp.p.shape != kp.q.shape or len(kp.p) != len(kp.stencil):
        raise ValueError("kernel weight vectors do not match the stencil")
    return kp.p - kp.q


def coefficient_one_norm(c: np.ndarray) -> float:
    return float(np.sum(np.abs(c)))


def c_dog_constant(kp: KernelPair) -> float:
    """Second-moment constant (1/2) Σ_t c_t |t|^2.

    Negative when sigma_p < sigma_q; only its square enters the asymptotic
    success-probability formula.
    """
    return float(0.5 * np.dot(kp.c, kp.stencil.squared_norms))


def isotropy_matrix(kp: KernelPair) -> np.ndarray:
    """Second-moment matrix Σ_t c_t t t^T; (2 C/D) I for isotropic stencils."""
    T = np.asarray(kp.stencil.offsets, dtype=float)  # (|T|, D)
    return np.einsum("t,ti,tj->ij", kp.c, T, T)


def write_kernel_csv(kp: KernelPair, path) -> None:
    """One row per offset in stencil order: t_1..t_D, p, q, c."""
    D = kp.stencil.D
    c = kp.c
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([f"t{k + 1}" for k in range(D)] + ["p", "q", "c"])
        for i, t in enumerate(kp.stencil.offsets):
            writer.writerow(
                [*t, f"{kp.p[i]:.17g}", f"{kp.q[i]:.17g}", f"{c[i]:.17g}"]
            )
