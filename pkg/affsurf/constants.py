"""affsurf constants, enums and numerical defaults."""

from enum import IntEnum, StrEnum

# ----------------------------------------------------------------------------
# Body representations
# ----------------------------------------------------------------------------


class BodyType(StrEnum):
    """Type tags used by the JSON body format."""

    HPOLYTOPE = "hpolytope"
    VPOLYTOPE = "vpolytope"
    ELLIPSOID = "ellipsoid"
    BALL = "ball"
    SUPPORT2D = "support2d"


# ----------------------------------------------------------------------------
# Evaluation methods and extremal kinds
# ----------------------------------------------------------------------------


class AspMethod(StrEnum):
    """How an L_p-affine surface area value was obtained."""

    CLOSED_FORM = "closed_form"
    QUADRATURE_2D = "quadrature2d"
    FLOATING_LIMIT = "floating_limit"
    SPHERICAL_CAP_LOWER_BOUND = "spherical_cap_lower_bound"
    EXACT_PIECEWISE = "exact_piecewise"  # arcs and segments in the plane
    FLAT_FACES = "flat_faces"  # polytopes, curvature zero a.e.


class ExtremalKind(StrEnum):
    """Inner/outer maximal and minimal affine surface areas."""

    INNER_MAX = "IS"
    OUTER_MAX = "OS"
    OUTER_MIN = "os"
    INNER_MIN = "is"


class Semantics(StrEnum):
    """One-sided meaning of an extremal estimate."""

    EXACT = "exact"
    LOWER = "lower"  # certified lower bound on a supremum
    UPPER = "upper"  # certified upper bound on an infimum
    LIMIT = "limit"  # value of a divergent/vanishing witness sequence


class Severity(StrEnum):
    ERROR = "error"
    WARNING = "warning"


# ----------------------------------------------------------------------------
# Output formats and exit codes
# ----------------------------------------------------------------------------


class OutputFormat(IntEnum):
    """Report encodings registered in affsurf.codecs."""

    JSON = 0x0001
    CSV = 0x0002
    TABLE = 0x0003  # rich console rendering, CLI only


class ExitCode(IntEnum):
    """CLI process exit codes."""

    OK = 0
    BOUND_VIOLATION = 1
    INPUT_ERROR = 2
    DOMAIN_ERROR = 3


# ----------------------------------------------------------------------------
# Numerical defaults
# ----------------------------------------------------------------------------

DEFAULT_GRID = 2048  # support-function grid size m
DEFAULT_DIRECTIONS = 720  # floating-body direction grid
LIMIT_DIRECTIONS = 1440  # direction grid used by the floating-body limit
FLOATING_DELTA0 = 0.02
FLOATING_HALVINGS = 7
KHACHIYAN_TOL = 1e-7
KHACHIYAN_MAX_ITER = 100_000
BURN_IN = 50
C_THIN = 1.0
R_GRID_SIZE = 32
OS_RADIUS_FACTOR = 4.0
POLYGONIZE_POINTS = 4096
DEFAULT_SAMPLES = 20_000
DEFAULT_SEED = 0

DEFAULT_TOLERANCES: dict[str, float] = {
    "asp": 1e-8,
    "mvee": KHACHIYAN_TOL,
    "isotropy": 1e-6,
    "santalo": 1e-6,
    "bound": 1e-7,
    "steiner": 1e-8,
}
