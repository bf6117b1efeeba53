from pathlib import Path

DEFAULT_DATA_DIR = (Path(__file__).parent.parent.resolve() / "data").absolute().resolve()

# Channel
NOISE_SCALE = 1.0  # Standard deviation of the Gaussian channel
HUGE_MESSAGE = 1e6  # Finite stand-in for the M = infinity sentinel
HUGE_SIGNAL_THRESHOLD = 1e3  # Signals at or above this are read as "huge"

# Population regimes
MANY_RHO_THRESHOLD = 0.8  # rho >= 0.8 -> "many rebels"
FEW_RHO_THRESHOLD = 0.2  # rho <= 0.2 -> "few rebels"
SUCCESS_FRACTION = 1 / 3  # Success: at least a third of the rebels output "many"

# Epsilon range where the Median guarantee holds
MEDIAN_EPSILON_MIN = 0.04
MEDIAN_EPSILON_MAX = 0.2
MEDIAN_SLOPE = 7 / 30  # phi(eps) = 7 eps / 30

# Self-Immolation
SELF_IMMOLATION_DEFAULT_C = 8.0

# Graph construction
RANDOM_REGULAR_MAX_RETRIES = 100
RANDOM_REGULAR_MAX_STALLS = 50  # Re-pairing rounds without progress before an attempt is abandoned

# Statistics
CONFIDENCE_LEVEL = 0.99  # Wilson level used for every acceptance check
STANDARD_ERROR_SLACK = 3.0  # Slack for analytic comparisons, in standard errors
QS_TOTAL_RISK_FACTOR = 0.715

# Desk-scale experiment defaults
DEFAULT_N = 2000
DEFAULT_DEGREE = 200
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 20220301
DEFAULT_THREADS = 1

# Output
CSV_HEADER = [
    "param",
    "regime",
    "mode",
    "protocol",
    "police",
    "n",
    "median_degree",
    "trials",
    "success",
    "success_lo",
    "success_hi",
    "output_risk",
    "or_lo",
    "or_hi",
    "msg_risk_analytic",
    "msg_risk_emp",
    "mre_lo",
    "mre_hi",
    "total_risk",
]
CSV_FLOAT_FORMAT = "{:.10g}"
