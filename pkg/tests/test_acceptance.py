"""Acceptance suite: one test per top-level claim, one PASS line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import math
import time

import numpy as np
import pytest

from dogblock import circuit
from dogblock.analysis import (
    convergence_study,
    fit_study_slopes,
    make_field,
    observed_order,
    success_probability_bound,
    success_probability_exact,
    taylor_consistency,
)
from dogblock.grid import GridSpec
from dogblock.kernel import (
    build_kernel_pair,
    build_stencil,
    c_dog_constant,
    coefficient_one_norm,
    isotropy_matrix,
)
from dogblock.operator import assemble_dog
from dogblock.spectral import fourier_basis_vector, operator_norm, transfer_function
from dogblock.verify import random_loader_perturbation


def example_setup():
    kp = build_kernel_pair(build_stencil(1, 3, "hypercube"), 0.8, 1.6)
    return kp, GridSpec(1, 4)


def report(name, detail):
    print(f"[PASS] {name}: {detail}")


def test_block_encoding_identity_1d():
    start = time.monotonic()
    kp, g = example_setup()
    U, layout = circuit.build_circuit(kp, g)
    A = assemble_dog(kp, g)
    residual = np.linalg.norm(circuit.extract_block(U, layout) - A / 2.0, ord=2)
    elapsed = time.monotonic() - start
    assert residual <= 1e-10
    assert elapsed < 5.0
    report("block identity D=1 N=16", f"residual {residual:.2e}, {elapsed:.2f}s")


def test_block_encoding_identity_2d_cross():
    start = time.monotonic()
    kp = build_kernel_pair(build_stencil(2, 1, "cross"), 0.8, 1.6)
    g = GridSpec(2, 2)
    U, layout = circuit.build_circuit(kp, g)
    A = assemble_dog(kp, g)
    residual = np.linalg.norm(circuit.extract_block(U, layout) - A / 2.0, ord=2)
    elapsed = time.monotonic() - start
    assert residual <= 1e-10
    assert elapsed < 5.0
    report("block identity D=2 N=4 cross", f"residual {residual:.2e}, {elapsed:.2f}s")


def test_coefficient_one_norm_reproduction():
    kp, _ = example_setup()
    value = coefficient_one_norm(kp.c)
    assert value == pytest.approx(0.556, abs=0.005)
    report("coefficient one-norm", f"sum|c_t| = {value:.6f} (target 0.556 ± 0.005)")


def test_spectral_consistency():
    kp, g = example_setup()
    A = assemble_dog(kp, g)
    tf = transfer_function(kp, g)
    worst = max(
        np.linalg.norm(A @ fourier_basis_vector((w,), g) - tf.mu[w] * fourier_basis_vector((w,), g))
        for w in range(g.N)
    )
    assert worst <= 1e-10
    dense_norm = np.max(np.abs(np.linalg.eigvalsh(A)))
    assert abs(operator_norm(tf) - dense_norm) <= 1e-10
    assert abs(tf.mu[0]) <= 1e-12
    herm = np.max(np.abs(A - A.conj().T))
    assert herm <= 1e-12
    report(
        "spectral consistency",
        f"eigen residual {worst:.2e}, norm gap {abs(operator_norm(tf) - dense_norm):.2e}, "
        f"|mu(0)| {abs(tf.mu[0]):.2e}, hermiticity {herm:.2e}",
    )


@pytest.mark.parametrize(
    "D,n,R,shape", [(1, 4, 3, "hypercube"), (2, 2, 1, "cross")],
    ids=["1d-N16", "2d-N4"],
)
def test_three_way_probability_agreement(D, n, R, shape):
    kp = build_kernel_pair(build_stencil(D, R, shape), 0.8, 1.6)
    g = GridSpec(D, n)
    tf = transfer_function(kp, g)
    U, layout = circuit.build_circuit(kp, g)
    A = assemble_dog(kp, g)
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(100):
        v = rng.standard_normal(g.num_points) + 1j * rng.standard_normal(g.num_points)
        v /= np.linalg.norm(v)
        parseval = success_probability_exact(v, tf)
        dense = float(np.vdot(A @ v, A @ v).real) / 4.0
        born, _ = circuit.apply_and_postselect(U, v, layout)
        worst = max(worst, abs(parseval - dense), abs(parseval - born))
    assert worst <= 1e-12
    report(f"three-way agreement D={D}", f"worst spread {worst:.2e} over 100 states")


def test_bound_dominance_and_saturation():
    kp, g = example_setup()
    tf = transfer_function(kp, g)
    bound = success_probability_bound(tf)
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = rng.standard_normal(g.num_points) + 1j * rng.standard_normal(g.num_points)
        assert success_probability_exact(v, tf) <= bound + 1e-14
    argmax = int(np.argmax(np.abs(tf.mu)))
    saturated = success_probability_exact(fourier_basis_vector((argmax,), g), tf)
    assert abs(saturated - bound) <= 1e-12
    report("bound dominance", f"bound {bound:.6f} saturated within {abs(saturated - bound):.2e}")


def test_finite_precision_bound():
    kp, g = example_setup()
    layout = circuit.layout_for(kp.stencil, g)
    Gp = circuit.loader_unitary(circuit.padded_amplitudes(kp.p, layout.s))
    Gq = circuit.loader_unitary(circuit.padded_amplitudes(kp.q, layout.s))
    rng = np.random.default_rng(11)
    worst_margin = -np.inf
    trials = 0
    for magnitude in (1e-2, 1e-3, 1e-4):
        for _ in range(34):
            Gp_t = random_loader_perturbation(Gp, magnitude, rng)
            Gq_t = random_loader_perturbation(Gq, magnitude, rng)
            eps, err = circuit.perturbed_encoding_error(Gp, Gq, Gp_t, Gq_t, kp.stencil, g)
            assert err <= 2.0 * eps
            worst_margin = max(worst_margin, err - 2.0 * eps)
            trials += 1
    assert trials >= 100
    report("finite-precision bound", f"{trials} trials, worst err - 2eps = {worst_margin:.2e}")


def test_asymptotic_scaling_sweep():
    start = time.monotonic()
    kp, _ = example_setup()
    rows = convergence_study(make_field("sin1d"), kp, [2**k for k in range(4, 11)])
    summary = fit_study_slopes(rows)
    elapsed = time.monotonic() - start
    assert summary["slope_P_exact"] == pytest.approx(-4.0, abs=0.3)
    assert 0.95 <= summary["final_ratio"] <= 1.05
    assert elapsed < 30.0
    report(
        "asymptotic scaling",
        f"slope {summary['slope_P_exact']:.3f}, final ratio {summary['final_ratio']:.4f}, "
        f"{elapsed:.1f}s",
    )


def test_taylor_consistency_order():
    kp, _ = example_setup()
    field = make_field("sin1d")
    Ns = [16, 32, 64, 128]
    residuals = [taylor_consistency(field, kp, GridSpec(1, int(math.log2(N)))) for N in Ns]
    order = observed_order(residuals, Ns)
    assert order >= 3.7
    report("taylor consistency", f"observed order {order:.2f} over N=16..128")


def test_isotropy_identity():
    worst = 0.0
    for D in (1, 2, 3):
        for R in (1, 2, 3):
            for shape in ("hypercube", "cross"):
                kp = build_kernel_pair(build_stencil(D, R, shape), 0.8, 1.6)
                M = isotropy_matrix(kp)
                target = (2.0 * c_dog_constant(kp) / D) * np.eye(D)
                worst = max(worst, float(np.max(np.abs(M - target))))
    assert worst <= 1e-12
    report("isotropy identity", f"max deviation {worst:.2e} over the D/R/shape sweep")
