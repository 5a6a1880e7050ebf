"""Periodic multi-dimensional grid indexing and cyclic shift operators."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Dyadic periodic grid: N = 2**n points per axis, spacing h = 1/N."""

    D: int
    n: int

    def __post_init__(self):
        if self.D < 1:
            raise ValueError(f"dimension must be positive, got D={self.D}")
        if self.n < 1:
            raise ValueError(f"qubits per axis must be positive, got n={self.n}")

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def h(self) -> float:
        return 1.0 / self.N

    @property
    def num_points(self) -> int:
        """Total data-space dimension N**D."""
        return self.N**self.D


def flatten(j, g: GridSpec) -> int:
    """Row-major linear index of a multi-index, first axis most significant."""
    j = tuple(int(x) for x in j)
    if len(j) != g.D:
        raise ValueError(f"expected {g.D} coordinates, got {len(j)}")
    idx = 0
    for jk in j:
        if not 0 <= jk < g.N:
            raise ValueError(f"coordinate {jk} outside [0, {g.N})")
        idx = idx * g.N + jk
    return idx


def unflatten(idx: int, g: GridSpec) -> tuple[int, ...]:
    """Inverse of flatten."""
    if not 0 <= idx < g.num_points:
        raise ValueError(f"index {idx} outside [0, {g.num_points})")
    coords = []
    for _ in range(g.D):
        coords.append(idx % g.N)
        idx //= g.N
    return tuple(reversed(coords))


def all_indices(g: GridSpec) -> np.ndarray:
    """(num_points, D) array of multi-indices in row-major (flatten) order."""
    axes = np.indices((g.N,) * g.D)  # (D, N, ..., N)
    return axes.reshape(g.D, -1).T


def reduce_offset(t, g: GridSpec) -> tuple[int, ...]:
    """Reduce an integer offset tuple mod N, warning when |t_k| >= N/2."""
    t = tuple(int(x) for x in t)
    if len(t) != g.D:
        raise ValueError(f"expected {g.D} offset components, got {len(t)}")
    if any(abs(x) >= g.N // 2 for x in t) and t != tuple(0 for _ in t):
        warnings.warn(
            f"offset {t} reaches half the grid (N={g.N}); wrap-around aliases",
            stacklevel=2,
        )
    return tuple(x % g.N for x in t)


def shift_operator(t, g: GridSpec) -> np.ndarray:
    """Dense permutation matrix of the cyclic shift |j> -> |j + t mod N>."""
    t = reduce_offset(t, g)
    dim = g.num_points
    src = all_indices(g)  # (dim, D)
    dst = (src + np.asarray(t)) % g.N
    # row-major flatten of the destination indices
    weights = g.N ** np.arange(g.D - 1, -1, -1)
    rows = dst @ weights
    S = np.zeros((dim, dim), dtype=complex)
    S[rows, np.arange(dim)] = 1.0
    return S


def apply_shift(t, g: GridSpec, values: np.ndarray) -> np.ndarray:
    """Apply the cyclic shift to a flat data vector without building the matrix."""
    t = reduce_offset(t, g)
    field = np.asarray(values).reshape((g.N,) * g.D)
    return np.roll(field, shift=t, axis=tuple(range(g.D))).reshape(-1)
