"""Variable-transform approximation of functions with endpoint singularities.

A function on (0, 1) is carried to the real line by one of four maps
(``E``, ``SE``, ``DE``, ``SDE``), truncated to ``[-L, L]`` and expanded in
the cosine basis ``cos(k pi (y + 1) / 2)``.
"""

__version__ = "0.1.0"

from .special import lambert_w0, jacobi_sn, jacobi_sn_cn, ellipk_agm, log_ratio_1p_exp
from .maps import (
    ALPHA_GUIDE,
    MAP_KINDS,
    FinitePrecisionWarning,
    MapSpec,
    g_forward,
    g_inverse,
    psi_forward,
    psi_inverse,
    psi_inverse_complex,
    strip_halfwidth,
)
from .cosine import (
    CosineExpansion,
    aliased_index,
    direct_coefficients,
    discrete_coefficients,
    evaluate_expansion,
    exact_coefficient,
    nodes,
)
from .approximant import (
    ErrorReport,
    MappedApproximant,
    ParameterRule,
    SampleEvaluationError,
    build_approximant,
    build_from_rule,
    evaluate_approximant,
    measure_error,
    select_parameters,
)
from .analysis import (
    BOUND_PREFACTOR,
    BoundParams,
    ResolutionNotFound,
    ResolutionRecord,
    general_bound,
    measure_resolution,
    psi_e_resolution_bound,
    psi_se_resolution_terms,
    rate_index,
    resolution_H,
    resolution_constant,
)
