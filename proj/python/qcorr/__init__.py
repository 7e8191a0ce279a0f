"""Classical and quantum correlations of two-qubit Bell-diagonal states
under local phase-flip, bit-flip and bit-phase-flip channels."""

from qcorr._core import (
    BellVector,
    ChannelKind,
    CorrelationRecord,
    EvolvedCoefficients,
    MeasurementBasis,
    NotAStateError,
    OperationalMeasure,
    RegimeReport,
    ShapeError,
    SweepResult,
    UnsupportedStateError,
    apply_channel,
    bell_state_matrix,
    classical_correlation_analytic,
    classical_correlation_numeric,
    classify_regime,
    coefficients_from_matrix,
    commutation_condition,
    conditional_entropy,
    evaluate_analytic,
    evolve_coefficients,
    hermitian_eigenvalues,
    is_physical,
    kraus_set,
    mutual_information,
    operational_discord,
    p_from_time,
    partial_trace,
    quantum_discord_analytic,
    spectrum_from_coefficients,
    sudden_change_time,
    sweep,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BellVector",
    "ChannelKind",
    "CorrelationRecord",
    "EvolvedCoefficients",
    "MeasurementBasis",
    "NotAStateError",
    "OperationalMeasure",
    "RegimeReport",
    "ShapeError",
    "SweepResult",
    "UnsupportedStateError",
    "apply_channel",
    "bell_state_matrix",
    "classical_correlation_analytic",
    "classical_correlation_numeric",
    "classify_regime",
    "coefficients_from_matrix",
    "commutation_condition",
    "conditional_entropy",
    "evaluate_analytic",
    "evolve_coefficients",
    "hermitian_eigenvalues",
    "is_physical",
    "kraus_set",
    "mutual_information",
    "operational_discord",
    "p_from_time",
    "partial_trace",
    "quantum_discord_analytic",
    "spectrum_from_coefficients",
    "sudden_change_time",
    "sweep",
    "von_neumann_entropy",
]
