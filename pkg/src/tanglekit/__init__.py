"""Negativity-based entanglement measures for n-qubit pure states."""

from .basis import MAX_QUBITS, BasisState, SupportBasis
from .closed_form import (
    ClosedFormResult,
    FormulaValidityError,
    w_one_tangle,
    w_pi,
    w_pt_spectrum,
    w_total_negativity,
    w_total_squares,
    w_two_tangle,
    xi_negative_eigenvalue,
    xi_one_tangle,
    xi_pi,
    xi_total_squares,
    xi_two_tangle,
)
from .measures import (
    MeasureReport,
    ckw_report,
    closed_form_report,
    is_ppt_separable_pair,
    one_tangle,
    pi_tangle,
    total_bipartition_negativity,
    total_one_tangle_squares,
    two_tangle,
)
from .operators import (
    DenseCapError,
    DensityOperator,
    SupportCapError,
    embed_dense,
    partial_trace_to_pair,
    partial_transpose,
    permute_qubits,
)
from .spectral import (
    NonHermitianError,
    Spectrum,
    hermitian_eigenvalues,
    hermitian_eigensystem,
    negativity,
    trace_norm,
)
from .states import (
    PureState,
    StateFamily,
    StateFormatError,
    density_of,
    make_ghz,
    make_w,
    make_xi,
    parse_custom,
    permute_amplitudes,
)

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "ClosedFormResult",
    "DenseCapError",
    "DensityOperator",
    "FormulaValidityError",
    "MAX_QUBITS",
    "MeasureReport",
    "NonHermitianError",
    "PureState",
    "Spectrum",
    "StateFamily",
    "StateFormatError",
    "SupportBasis",
    "SupportCapError",
    "ckw_report",
    "closed_form_report",
    "density_of",
    "embed_dense",
    "hermitian_eigenvalues",
    "hermitian_eigensystem",
    "is_ppt_separable_pair",
    "make_ghz",
    "make_w",
    "make_xi",
    "negativity",
    "one_tangle",
    "parse_custom",
    "partial_trace_to_pair",
    "partial_transpose",
    "permute_amplitudes",
    "permute_qubits",
    "pi_tangle",
    "total_bipartition_negativity",
    "total_one_tangle_squares",
    "trace_norm",
    "two_tangle",
    "w_one_tangle",
    "w_pi",
    "w_pt_spectrum",
    "w_total_negativity",
    "w_total_squares",
    "w_two_tangle",
    "xi_negative_eigenvalue",
    "xi_one_tangle",
    "xi_pi",
    "xi_total_squares",
    "xi_two_tangle",
]
