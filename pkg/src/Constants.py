from enum import Enum

# General
VERSION = 1.0
PYTHON_MAJOR = 3
PYTHON_MINOR = 8
LINER = "--------------------------------------------"
APP_NAME = "NMDL"

# Persistent data directories
BASE_DIR = "~/numeral_mdl"
DEFAULT_LOG_FILE = "logs/app.log"
MANIFEST_SUFFIX = ".manifest.json"
SYSTEMS_SUFFIX = "_systems.csv"

THREADS_ENV_VAR = "NUMERAL_MDL_THREADS"
DEFAULT_THREADS = 1

# Number range and grammar bounds
DEFAULT_RANGE_LO = 1
DEFAULT_RANGE_HI = 99
DEFAULT_MAX_DEPTH = 5
MAX_INTERMEDIATE_VALUE = 10**6

# Priors
POWER_LAW_PREFIX = "power"
DEFAULT_POWER_LAW_EXPONENT = 2.0
DEFAULT_PRIOR = "power2"
UNIFORM_PRIOR = "uniform"
PRIOR_SUM_TOLERANCE = 1e-12

# Baseline sampling
DEFAULT_BATCHES = 100
DEFAULT_PER_BATCH = 100
DEFAULT_MIN_DIGITS = 3
DEFAULT_MAX_DIGITS = 12
DEFAULT_MIN_MULTIPLIERS = 1
DEFAULT_MAX_MULTIPLIERS = 3
DEFAULT_SUBTRACTION_PROBABILITY = 0.2
DEFAULT_RETRY_BUDGET = 1000

# Genetic algorithm
DEFAULT_POPULATION_SIZE = 100
DEFAULT_MAX_GENERATIONS = 50
DEFAULT_MAX_MUTATIONS = 3
DEFAULT_MAX_SEQUENTIAL_DIGIT = 20

# Local neighbourhood search
DEFAULT_BETA = 30
DEFAULT_GAMMA = 3
DEFAULT_LOCAL_DEPTH = 5

DEFAULT_SEED = 0
FLOAT_DECIMALS = 6

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


class Combinator(str, Enum):
    PLUS = "+"
    MINUS = "-"
    TIMES = "*"

    def apply(self, left, right):
        if self is Combinator.PLUS:
            return left + right
        if self is Combinator.MINUS:
            return left - right
        return left * right

    def __str__(self):
        return self.value


class MorphemeKind(Enum):
    NUMBER_ATOM = 1
    COMBINATOR = 2
    OPEN_PAREN = 3
    CLOSE_PAREN = 4


class SystemSource(str, Enum):
    NATURAL = "natural"
    BASELINE = "baseline"
    GA = "ga"
    LOCAL = "local"
    MANUAL = "manual"

    def __str__(self):
        return self.value


class Direction(str, Enum):
    BEST = "best"
    WORST = "worst"

    def __str__(self):
        return self.value


OPEN_PAREN = "("
CLOSE_PAREN = ")"

# CSV layouts
SYSTEM_CSV_HEADER = ["language", "number", "tokens"]
SYSTEM_CSV_FAMILY_COLUMN = "family"
MEASURE_CSV_HEADER = [
    "system_id",
    "source",
    "prior",
    "irregularity_bits",
    "processing_bits",
    "lexicon_size",
    "avg_morph_complexity",
]
FRONTIER_CSV_HEADER = [
    "system_id",
    "prior",
    "digits",
    "multipliers",
    "combinators",
    "lexicon_size",
    "avg_morph_complexity",
    "irregularity_bits",
    "processing_bits",
]
LOCAL_FRONTIER_CSV_HEADER = [
    "system_id",
    "direction",
    "is_seed",
    "irregularity_bits",
    "processing_bits",
    "lexicon_size",
    "avg_morph_complexity",
]
GA_HISTORY_CSV_HEADER = ["generation", "archive_size", "evaluated", "hypervolume"]
HISTORY_SUFFIX = "_history.csv"
