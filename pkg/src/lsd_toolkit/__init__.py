"""Two-qubit entanglement toolkit.

Concurrence and its basis of tilde-orthogonal vectors, maximal
separable-plus-pure splits with optimality certificates, and a
hyperbolic-frame generator for states with prescribed overlap spectra.
"""

from .coset import (
    ETA,
    ETA_INV,
    O_MAT,
    CosetParams,
    CosetResult,
    XMatrix,
    YMatrix,
    build_x,
    coset_generate,
    haar_su2,
    local_unitary_action,
    params_from_json,
    params_to_json,
    so4r_image,
    y_factor,
    y_from_x,
)
from .errors import (
    DependentVectors,
    LsdToolkitError,
    NoPurePart,
    NotHermitian,
    NotNormalized,
    NotPSD,
    NotSpecialUnitary,
    NotSymmetric,
    NotUnitTrace,
    PhaseConstraintViolated,
    RankDeficient,
    RankMismatch,
    SingularCoefficients,
    ZeroState,
)
from .lsd import (
    DEFAULT_PHASES,
    H4,
    LSDecomposition,
    OptimalityReport,
    PairCheck,
    PptResult,
    SingleCheck,
    StructuralCheck,
    average_concurrence,
    ls_decompose,
    lsd_from_json,
    lsd_to_json,
    ppt_check,
    product_ensemble,
    report_from_json,
    report_to_json,
    verify_optimality,
)
from .matcore import (
    DualBasis,
    TakagiFactorization,
    dual_basis,
    herm_eig,
    psd_sqrt,
    restricted_inverse,
    svd2_real,
    takagi,
)
from .qstate import (
    SIGMA_YY,
    DensityMatrix,
    EigenEnsemble,
    SpectrumLambda,
    density_from_json,
    density_to_json,
    eigen_ensemble,
    lambda_spectrum,
    lambda_spectrum_raw,
    sample_random,
    spin_flip,
    spin_flip_matrix,
    spin_flip_vec,
    validate,
)
from .suites import (
    PropertyResult,
    run_all_suites,
    run_coset_suite,
    run_lsd_suite,
    run_wootters_suite,
)
from .wootters import (
    TauMatrix,
    WoottersDecomposition,
    concurrence,
    entanglement_of_formation,
    pure_state_entropy,
    tau_matrix,
    wootters_basis,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "LsdToolkitError",
    "NotHermitian",
    "NotUnitTrace",
    "NotPSD",
    "NotSymmetric",
    "NotNormalized",
    "DependentVectors",
    "SingularCoefficients",
    "NoPurePart",
    "PhaseConstraintViolated",
    "RankMismatch",
    "RankDeficient",
    "ZeroState",
    "NotSpecialUnitary",
    # matrix core
    "herm_eig",
    "psd_sqrt",
    "TakagiFactorization",
    "takagi",
    "svd2_real",
    "DualBasis",
    "dual_basis",
    "restricted_inverse",
    # states
    "SIGMA_YY",
    "DensityMatrix",
    "validate",
    "spin_flip",
    "spin_flip_matrix",
    "spin_flip_vec",
    "SpectrumLambda",
    "lambda_spectrum",
    "lambda_spectrum_raw",
    "EigenEnsemble",
    "eigen_ensemble",
    "sample_random",
    "density_to_json",
    "density_from_json",
    # tilde-orthogonal basis
    "TauMatrix",
    "tau_matrix",
    "WoottersDecomposition",
    "wootters_basis",
    "concurrence",
    "entanglement_of_formation",
    "pure_state_entropy",
    # splits and certificates
    "H4",
    "DEFAULT_PHASES",
    "LSDecomposition",
    "ls_decompose",
    "average_concurrence",
    "product_ensemble",
    "PptResult",
    "ppt_check",
    "SingleCheck",
    "PairCheck",
    "StructuralCheck",
    "OptimalityReport",
    "verify_optimality",
    "lsd_to_json",
    "lsd_from_json",
    "report_to_json",
    "report_from_json",
    # generators
    "O_MAT",
    "ETA",
    "ETA_INV",
    "CosetParams",
    "XMatrix",
    "YMatrix",
    "build_x",
    "y_from_x",
    "y_factor",
    "CosetResult",
    "coset_generate",
    "local_unitary_action",
    "so4r_image",
    "haar_su2",
    "params_to_json",
    "params_from_json",
    # suites
    "PropertyResult",
    "run_wootters_suite",
    "run_lsd_suite",
    "run_coset_suite",
    "run_all_suites",
]
