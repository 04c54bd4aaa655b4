"""Default budgets and tolerances, overridable per call.

All comparisons in the test-suite use relative error unless the quantity can
legitimately be zero.
"""

# Boundary sampling for geometric functionals (plus golden-section refinement
# around every local extremum candidate).
GEOMETRY_SAMPLES = 4096

# Boundary scan budget for sup-norm / Markov-factor evaluation.
SUPNORM_SAMPLES = 8192

# Reduced scan used inside the extremal search objective; the returned
# configuration is always re-certified at full budget.
SEARCH_SCAN_SAMPLES = 1024

# Fraction of the perimeter excluded around w = z in boundary-pair scans;
# the diagonal limit is spliced in from the curvature instead.
DIAGONAL_BAND = 1e-3

# Tangent-angle jump above which a boundary point counts as a vertex.
VERTEX_ANGLE_TOL = 1e-6

# Root-proximity switch for derivative evaluation, as a fraction of the
# diameter of the root set.
EPS_ROOT_FRACTION = 1e-9

# Default membership tolerance (length units).
CONTAINS_TOL = 1e-9

# Extremal reports flag a soundness violation when the empirical Markov
# factor falls below (1 - CERT_EPSILON) times the best lower bound.
CERT_EPSILON = 1e-3

# Golden-section iterations per refined extremum bracket.
REFINE_ITERS = 60

# Finite-difference steps (in parameter units, period 1) for generic domains
# built from a bare position callable.
FD_TANGENT_STEP = 1e-6
FD_CURVATURE_STEP = 1e-4

# Environment variable capping worker threads in the extremal search.
THREADS_ENV = "TURAN_THREADS"

# Environment variable forcing the pure-numpy kernel backend.
NO_EXT_ENV = "TURANBOUNDS_NO_EXT"
