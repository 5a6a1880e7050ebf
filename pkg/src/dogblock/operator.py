"""Dense assembly of the difference-of-Gaussian operator A = Σ_t c_t S_t."""

from __future__ import annotations

import csv

import numpy as np

from .grid import GridSpec, apply_shift, shift_operator
from .kernel import KernelPair

DEFAULT_DENSE_CAP = 4096


class DimensionCapError(RuntimeError):
    """Dense assembly would exceed the configured size cap."""


def assemble_dog(kp: KernelPair, g: GridSpec, max_dim: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Dense N^D x N^D matrix Σ_t c_t S_t (circulant in each dimension)."""
    if kp.stencil.D != g.D:
        raise ValueError(f"stencil dimension {kp.stencil.D} != grid dimension {g.D}")
    if g.num_points > max_dim:
        raise DimensionCapError(
            f"data dimension {g.num_points} exceeds cap {max_dim}"
        )
    A = np.zeros((g.num_points, g.num_points), dtype=complex)
    for c_t, t in zip(kp.c, kp.stencil.offsets):
        A += c_t * shift_operator(t, g)
    return A


def apply_dog(kp: KernelPair, g: GridSpec, values: np.ndarray) -> np.ndarray:
    """Matrix-free application of Σ_t c_t S_t to a flat data vector."""
    out = np.zeros(g.num_points, dtype=complex)
    for c_t, t in zip(kp.c, kp.stencil.offsets):
        out += c_t * apply_shift(t, g, values)
    return out


def is_hermitian(A: np.ndarray, tol: float = 1e-12) -> bool:
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    return bool(np.max(np.abs(A - A.conj().T)) <= tol)


def write_matrix_csv(A: np.ndarray, path) -> None:
    """Row-major dump with interleaved real/imag columns (debug aid)."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        n = A.shape[1]
        header = []
        for j in range(n):
            header += [f"re{j}", f"im{j}"]
        writer.writerow(header)
        for row in A:
            flat = []
            for z in row:
                flat += [f"{z.real:.17g}", f"{z.imag:.17g}"]
            writer.writerow(flat)
