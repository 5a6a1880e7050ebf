"""Block encoding of periodic difference-of-Gaussian operators."""

from .grid import GridSpec, flatten, shift_operator, unflatten
from .kernel import (
    KernelPair,
    Stencil,
    build_kernel_pair,
    build_stencil,
    c_dog_constant,
    coefficient_one_norm,
    dog_coefficients,
    gaussian_weights,
    isotropy_matrix,
)
from .operator import assemble_dog, apply_dog, is_hermitian
from .spectral import (
    TransferFunction,
    fourier_basis_vector,
    kernel_dft,
    operator_norm,
    transfer_function,
)
from .circuit import (
    RegisterLayout,
    apply_and_postselect,
    block_encoding_unitary,
    build_circuit,
    extract_block,
    layout_for,
    loader_unitary,
    padded_amplitudes,
    perturbed_encoding_error,
    prepare_unitary,
    resource_estimate,
    select_unitary,
    shift_label_map,
    shift_register_size,
)
from .analysis import (
    SampledSignal,
    SmoothField,
    convergence_study,
    make_field,
    sample,
    success_probability_asymptotic,
    success_probability_bound,
    success_probability_exact,
    taylor_consistency,
)

__all__ = [name for name in dir() if not name.startswith("_")]
