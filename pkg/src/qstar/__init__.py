"""qstar: the q-starlike function family, its sharp coefficient bounds, and
brute-force verification that every bound is tight.

Layering, bottom up: :mod:`~qstar.series` (truncated complex series and the
q-difference operator), :mod:`~qstar.schwarz` (Schur parameters, Schwarz and
Caratheodory classes), :mod:`~qstar.starlike` (coefficient recursion,
extremal functions, membership), :mod:`~qstar.functionals` (Hankel/Toeplitz
determinants), :mod:`~qstar.bounds` (the closed-form catalog),
:mod:`~qstar.search` (grid and randomized verification), :mod:`~qstar.cli`.
"""

from ._version import __version__
from .bounds import (
    AN_PRODUCT,
    BoundQuery,
    CaseFlag,
    bound_value,
    cubic_bound_region,
    disk_quadratic_max_closed,
    disk_quadratic_max_grid,
    h2_quadratic_triple,
    parseval_rhs,
    product_bound_applies,
    schwarz_cubic_functional,
)
from .errors import (
    DegenerateDivisor,
    DenominatorVanished,
    DivisorNearZero,
    IndexOutOfRange,
    InnerNotVanishing,
    InvalidParams,
    InvalidSchwarz,
    MissingCaseFlag,
    OutOfRange,
    PreconditionViolated,
    QStarError,
    UnknownFunctional,
    UnknownId,
)
from .functionals import (
    FunctionalId,
    hankel_det,
    hankel_matrix,
    named_functional,
    toeplitz_det,
    toeplitz_matrix,
)
from .schwarz import (
    CaratheodorySeries,
    SchurParams,
    SchwarzSeries,
    canonical_schwarz,
    caratheodory_p2p3,
    caratheodory_to_schwarz,
    schur_expand,
    schur_test,
    schwarz_b2b3,
    schwarz_to_caratheodory,
)
from .search import (
    GridSpec,
    ReportItem,
    SearchResult,
    SearchSpec,
    VerificationReport,
    maximize_functional,
    random_schwarz_suite,
    rotated_extremal_values,
    sharpness_report,
)
from .series import ClassParams, PowerSeries, q_difference, q_kernel, q_number
from .starlike import (
    StarlikeFunction,
    coeffs_from_schwarz,
    extremal_by_formula,
    extremal_coeff_formula,
    extremal_product,
    initial_coeffs_closed,
    membership_margin,
    rotate,
)

__all__ = [
    "__version__",
    "PowerSeries",
    "ClassParams",
    "q_number",
    "q_difference",
    "q_kernel",
    "SchurParams",
    "SchwarzSeries",
    "CaratheodorySeries",
    "schur_expand",
    "schur_test",
    "schwarz_b2b3",
    "caratheodory_p2p3",
    "schwarz_to_caratheodory",
    "caratheodory_to_schwarz",
    "canonical_schwarz",
    "StarlikeFunction",
    "coeffs_from_schwarz",
    "initial_coeffs_closed",
    "extremal_product",
    "extremal_coeff_formula",
    "extremal_by_formula",
    "rotate",
    "membership_margin",
    "FunctionalId",
    "named_functional",
    "hankel_matrix",
    "toeplitz_matrix",
    "hankel_det",
    "toeplitz_det",
    "CaseFlag",
    "BoundQuery",
    "AN_PRODUCT",
    "bound_value",
    "parseval_rhs",
    "cubic_bound_region",
    "schwarz_cubic_functional",
    "disk_quadratic_max_closed",
    "disk_quadratic_max_grid",
    "h2_quadratic_triple",
    "product_bound_applies",
    "GridSpec",
    "SearchSpec",
    "SearchResult",
    "ReportItem",
    "VerificationReport",
    "maximize_functional",
    "rotated_extremal_values",
    "random_schwarz_suite",
    "sharpness_report",
    "QStarError",
    "DivisorNearZero",
    "InnerNotVanishing",
    "InvalidParams",
    "OutOfRange",
    "IndexOutOfRange",
    "DegenerateDivisor",
    "InvalidSchwarz",
    "DenominatorVanished",
    "UnknownId",
    "UnknownFunctional",
    "MissingCaseFlag",
    "PreconditionViolated",
]
