"""Fourier diagonalization: transfer function, operator norm, Fourier basis."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .grid import GridSpec, all_indices
from .kernel import KernelPair, Stencil


def kernel_dft(weights: np.ndarray, stencil: Stencil, g: GridSpec) -> np.ndarray:
    """Direct-summation DFT of stencil weights over all frequencies.

    hat(w) = Σ_t w_t exp(-2πi <ω, t> / N), flattened row-major over ω.
    """
    omega = all_indices(g)  # (N^D, D)
    T = np.asarray(stencil.offsets)  # (|T|, D)
    phase = np.exp(-2j * np.pi * (omega @ T.T) / g.N)  # (N^D, |T|)
    return phase @ np.asarray(weights, dtype=complex)


@dataclass(frozen=True)
class TransferFunction:
    """Eigenvalues mu(ω) = p_hat(ω) - q_hat(ω) of the DoG operator."""

    g: GridSpec
    p_hat: np.ndarray = field(repr=False)
    q_hat: np.ndarray = field(repr=False)

    @property
    def mu(self) -> np.ndarray:
        return self.p_hat - self.q_hat


def transfer_function(kp: KernelPair, g: GridSpec) -> TransferFunction:
    if kp.stencil.D != g.D:
        raise ValueError(f"stencil dimension {kp.stencil.D} != grid dimension {g.D}")
    p_hat = kernel_dft(kp.p, kp.stencil, g)
    q_hat = kernel_dft(kp.q, kp.stencil, g)
    return TransferFunction(g=g, p_hat=p_hat, q_hat=q_hat)


def operator_norm(tf: TransferFunction) -> float:
    """max_ω |mu(ω)|, the spectral norm of the (normal) DoG operator."""
    return float(np.max(np.abs(tf.mu)))


def fourier_basis_vector(omega, g: GridSpec) -> np.ndarray:
    """|ω> = N^{-D/2} Σ_j exp(+2πi <ω, j> / N) |j>."""
    omega = np.asarray([int(x) % g.N for x in omega])
    if omega.shape != (g.D,):
        raise ValueError(f"expected {g.D} frequency components")
    j = all_indices(g)
    return np.exp(2j * np.pi * (j @ omega) / g.N) / np.sqrt(g.num_points)


def write_transfer_csv(tf: TransferFunction, path, half_axis: bool = False) -> None:
    """Rows (ω_1..ω_D, Re mu, Im mu, |mu|).

    half_axis restricts 1D output to ω = 0..N/2 (the displayed range).
    """
    g = tf.g
    omega = all_indices(g)
    mu = tf.mu
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([f"w{k + 1}" for k in range(g.D)] + ["re_mu", "im_mu", "abs_mu"])
        for row, z in zip(omega, mu):
            if half_axis and g.D == 1 and row[0] > g.N // 2:
                continue
            writer.writerow(
                [*row, f"{z.real:.17g}", f"{z.imag:.17g}", f"{abs(z):.17g}"]
            )
