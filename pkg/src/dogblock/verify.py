"""Verification suites run by the CLI: unitarity, block identity, Hermiticity,
Parseval agreement, and the finite-precision loader bound."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import circuit
from .grid import GridSpec
from .kernel import KernelPair
from .operator import assemble_dog
from .spectral import transfer_function
from .analysis import success_probability_exact


@dataclass
class CheckResult:
    name: str
    residual: float
    tol: float
    passed: bool


def _unitarity_residual(X: np.ndarray) -> float:
    return float(np.max(np.abs(X.conj().T @ X - np.eye(X.shape[0]))))


def random_loader_perturbation(G: np.ndarray, magnitude: float, rng) -> np.ndarray:
    """Nearby unitary via QR of a randomly perturbed loader."""
    noise = rng.standard_normal(G.shape) + 1j * rng.standard_normal(G.shape)
    Q, R = np.linalg.qr(G + magnitude * noise)
    # fix the QR phase ambiguity so Q stays close to G
    return Q * np.sign(np.diag(R).real)


def run_verification(
    kp: KernelPair,
    g: GridSpec,
    tol: float = 1e-10,
    n_random_states: int = 20,
    n_perturbation_trials: int = 20,
    seed: int = 0,
    inject_asymmetry: bool = False,
) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    layout = circuit.layout_for(kp.stencil, g)
    Gp = circuit.loader_unitary(circuit.padded_amplitudes(kp.p, layout.s))
    Gq = circuit.loader_unitary(circuit.padded_amplitudes(kp.q, layout.s))
    P = circuit.prepare_unitary(Gp, Gq)
    SEL = circuit.select_unitary(kp.stencil, g, layout)
    U = circuit.block_encoding_unitary(P, SEL, layout)
    A = assemble_dog(kp, g, max_dim=g.num_points)
    tf = transfer_function(kp, g)

    results = []

    def check(name, residual, bound):
        results.append(CheckResult(name, residual, bound, residual <= bound))

    check("unitarity P", _unitarity_residual(P), 1e-11)
    check("unitarity SEL", _unitarity_residual(SEL), 1e-11)
    check("unitarity U", _unitarity_residual(U), 1e-11)

    block = circuit.extract_block(U, layout)
    check("block identity", float(np.linalg.norm(block - A / 2.0, ord=2)), tol)

    if inject_asymmetry:
        # break c_t = c_{-t} on purpose; Hermiticity must then fail
        A_bad = A + 1e-3 * circuit.shift_operator((1,) + (0,) * (g.D - 1), g)
        herm = float(np.max(np.abs(A_bad - A_bad.conj().T)))
        results.append(CheckResult("hermiticity (expected fail)", herm, 1e-12, herm > 1e-12))
    else:
        check("hermiticity", float(np.max(np.abs(A - A.conj().T))), 1e-12)

    # three-way success-probability agreement on random states
    worst = 0.0
    for _ in range(n_random_states):
        v = rng.standard_normal(g.num_points) + 1j * rng.standard_normal(g.num_points)
        v /= np.linalg.norm(v)
        p_parseval = success_probability_exact(v, tf)
        p_dense = float(np.vdot(A @ v, A @ v).real) / 4.0
        p_born, _ = circuit.apply_and_postselect(U, v, layout)
        worst = max(worst, abs(p_parseval - p_dense), abs(p_parseval - p_born))
    check("parseval agreement", worst, 1e-12)

    # finite-precision bound eps <= 2 eps_G
    margin = 0.0
    for _ in range(n_perturbation_trials):
        mag = 10.0 ** rng.uniform(-4, -2)
        Gp_t = random_loader_perturbation(Gp, mag, rng)
        Gq_t = random_loader_perturbation(Gq, mag, rng)
        eps_g, block_err = circuit.perturbed_encoding_error(
            Gp, Gq, Gp_t, Gq_t, kp.stencil, g
        )
        margin = max(margin, block_err - 2.0 * eps_g)
    check("finite-precision bound", margin, 0.0)

    return results
