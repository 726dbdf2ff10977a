from config.yaml_conf_parser import YamlConfParser
from Constants import (
    DEFAULT_BATCHES,
    DEFAULT_BETA,
    DEFAULT_GAMMA,
    DEFAULT_LOCAL_DEPTH,
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_DIGITS,
    DEFAULT_MAX_GENERATIONS,
    DEFAULT_MAX_MULTIPLIERS,
    DEFAULT_MAX_MUTATIONS,
    DEFAULT_MIN_DIGITS,
    DEFAULT_MIN_MULTIPLIERS,
    DEFAULT_PER_BATCH,
    DEFAULT_POPULATION_SIZE,
    DEFAULT_PRIOR,
    DEFAULT_RANGE_HI,
    DEFAULT_RANGE_LO,
    DEFAULT_RETRY_BUDGET,
    DEFAULT_SUBTRACTION_PROBABILITY,
    Combinator,
)
from exception.configuration import ConfigurationException
from log_config import main_logger
from model.experiment_conf import (
    ATTESTED_DIGITS,
    ATTESTED_MULTIPLIERS,
    BASELINE,
    BATCHES,
    BETA,
    COMBINATORS,
    DEPTH,
    GA,
    GAMMA,
    LOCAL,
    MAX_DEPTH,
    MAX_DIGITS,
    MAX_GENERATIONS,
    MAX_MULTIPLIERS,
    MAX_MUTATIONS,
    MIN_DIGITS,
    MIN_MULTIPLIERS,
    OVERRIDES,
    PER_BATCH,
    POPULATION_SIZE,
    PRIOR,
    RANGE,
    RETRY_BUDGET,
    SECTIONS,
    SUBTRACTION_PROBABILITY,
)
from model.numeral_system import NumberRange
from model.prior import parse_prior_descriptor

logger = main_logger.getChild("config_parser")

SECTION_DEFAULTS = {
    GA: {
        POPULATION_SIZE: DEFAULT_POPULATION_SIZE,
        MAX_GENERATIONS: DEFAULT_MAX_GENERATIONS,
        COMBINATORS: [c.value for c in Combinator],
        MAX_MUTATIONS: DEFAULT_MAX_MUTATIONS,
    },
    BASELINE: {
        BATCHES: DEFAULT_BATCHES,
        PER_BATCH: DEFAULT_PER_BATCH,
        SUBTRACTION_PROBABILITY: DEFAULT_SUBTRACTION_PROBABILITY,
        MIN_DIGITS: DEFAULT_MIN_DIGITS,
        MAX_DIGITS: DEFAULT_MAX_DIGITS,
        MIN_MULTIPLIERS: DEFAULT_MIN_MULTIPLIERS,
        MAX_MULTIPLIERS: DEFAULT_MAX_MULTIPLIERS,
        RETRY_BUDGET: DEFAULT_RETRY_BUDGET,
    },
    LOCAL: {
        BETA: DEFAULT_BETA,
        GAMMA: DEFAULT_GAMMA,
        DEPTH: DEFAULT_LOCAL_DEPTH,
        OVERRIDES: {},
    },
}

POSITIVE_INT_KEYS = {
    GA: (POPULATION_SIZE, MAX_GENERATIONS, MAX_MUTATIONS),
    BASELINE: (
        BATCHES,
        PER_BATCH,
        MIN_DIGITS,
        MAX_DIGITS,
        MIN_MULTIPLIERS,
        MAX_MULTIPLIERS,
        RETRY_BUDGET,
    ),
    LOCAL: (BETA, GAMMA, DEPTH),
}


class YamlExperimentConfParser(YamlConfParser):
    def __init__(self, yaml_text) -> None:
        super().__init__(yaml_text)

    def parse(self):
        yaml_conf_dict = super().parse()
        self.set_conf_obj(yaml_conf_dict)

    def validate(self):
        conf_obj = self.get_conf_obj()
        self.validate_range(conf_obj)
        self.validate_prior(conf_obj)
        self.validate_positive_int(conf_obj, MAX_DEPTH, DEFAULT_MAX_DEPTH)
        self.validate_pool(conf_obj, ATTESTED_DIGITS)
        self.validate_pool(conf_obj, ATTESTED_MULTIPLIERS)
        for section in SECTIONS:
            self.validate_section(conf_obj, section)
        self.validate_combinators(conf_obj[GA])
        self.validate_probability(conf_obj[BASELINE], SUBTRACTION_PROBABILITY)
        self.validate_bounds(conf_obj[BASELINE], MIN_DIGITS, MAX_DIGITS)
        self.validate_bounds(conf_obj[BASELINE], MIN_MULTIPLIERS, MAX_MULTIPLIERS)
        self.validate_overrides(conf_obj[LOCAL])

        unknown = set(conf_obj) - {
            RANGE,
            PRIOR,
            MAX_DEPTH,
            ATTESTED_DIGITS,
            ATTESTED_MULTIPLIERS,
        } - set(SECTIONS)
        for key in sorted(unknown):
            logger.warning(
                "[config_parser] Unknown parameter '{:s}' is ignored.".format(str(key))
            )

    def process(self):
        conf_obj = self.get_conf_obj()
        conf_obj[RANGE] = NumberRange.parse(conf_obj[RANGE])
        conf_obj[GA][COMBINATORS] = frozenset(
            Combinator(c) for c in conf_obj[GA][COMBINATORS]
        )
        for pool in (ATTESTED_DIGITS, ATTESTED_MULTIPLIERS):
            if conf_obj[pool] is not None:
                conf_obj[pool] = frozenset(conf_obj[pool])

    def validate_range(self, conf_obj):
        if RANGE not in conf_obj or conf_obj[RANGE] is None:
            conf_obj[RANGE] = "{}:{}".format(DEFAULT_RANGE_LO, DEFAULT_RANGE_HI)
            return

        try:
            NumberRange.parse(conf_obj[RANGE])
        except ValueError as e:
            raise ConfigurationException(str(e), RANGE)

    def validate_prior(self, conf_obj):
        if PRIOR not in conf_obj or conf_obj[PRIOR] is None:
            conf_obj[PRIOR] = DEFAULT_PRIOR
            return

        conf_obj[PRIOR] = str(conf_obj[PRIOR])
        parse_prior_descriptor(conf_obj[PRIOR])

    def validate_pool(self, conf_obj, pool_name):
        if pool_name not in conf_obj or conf_obj[pool_name] is None:
            conf_obj[pool_name] = None
            return

        pool = conf_obj[pool_name]
        if not isinstance(pool, list) or not pool:
            raise ConfigurationException(
                "'{}' must be a non-empty list of positive integers".format(pool_name),
                pool_name,
            )
        for value in pool:
            if not self.is_positive_int(value):
                raise ConfigurationException(
                    "Invalid value:'{}'. '{}' entries must be positive integers".format(
                        value, pool_name
                    ),
                    pool_name,
                )

    def validate_section(self, conf_obj, section):
        given = conf_obj.get(section) or {}
        if not isinstance(given, dict):
            raise ConfigurationException(
                "Section '{}' must be a mapping".format(section), section
            )
        merged = dict(SECTION_DEFAULTS[section])
        merged.update(given)
        conf_obj[section] = merged

        for key in POSITIVE_INT_KEYS[section]:
            self.validate_positive_int(merged, key, SECTION_DEFAULTS[section][key])

    def validate_positive_int(self, scope, key, default):
        if key not in scope or scope[key] is None:
            scope[key] = default
            return

        if not self.is_positive_int(scope[key]):
            raise ConfigurationException(
                "Invalid value:'{}'. {} parameter value must be a positive integer".format(
                    scope[key], key
                ),
                key,
            )

    def validate_combinators(self, ga_conf):
        combinators = ga_conf[COMBINATORS]
        try:
            parsed = {Combinator(c) for c in combinators}
        except (TypeError, ValueError):
            raise ConfigurationException(
                "'{}' must list combinators among + - *".format(COMBINATORS),
                COMBINATORS,
            )
        if not {Combinator.PLUS, Combinator.TIMES} <= parsed:
            raise ConfigurationException(
                "'{}' must contain '+' and '*'".format(COMBINATORS), COMBINATORS
            )

    def validate_probability(self, scope, key):
        value = scope[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigurationException(
                "'{}' must be a number in [0, 1]".format(key), key
            )
        if not 0 <= value <= 1:
            raise ConfigurationException(
                "'{}' must be a number in [0, 1], got {}".format(key, value), key
            )

    def validate_bounds(self, scope, lo_key, hi_key):
        if scope[lo_key] > scope[hi_key]:
            raise ConfigurationException(
                "'{}' ({}) must not exceed '{}' ({})".format(
                    lo_key, scope[lo_key], hi_key, scope[hi_key]
                ),
                lo_key,
            )

    def validate_overrides(self, local_conf):
        overrides = local_conf[OVERRIDES]
        if overrides is None:
            local_conf[OVERRIDES] = {}
            return

        if not isinstance(overrides, dict):
            raise ConfigurationException(
                "'{}.{}' must map language names to beta/gamma".format(
                    LOCAL, OVERRIDES
                ),
                OVERRIDES,
            )
        for language, values in overrides.items():
            if not isinstance(values, dict) or not set(values) <= {BETA, GAMMA}:
                raise ConfigurationException(
                    "Override for '{}' may only set {} and {}".format(
                        language, BETA, GAMMA
                    ),
                    OVERRIDES,
                )
            for key, value in values.items():
                if not self.is_positive_int(value):
                    raise ConfigurationException(
                        "Override {}.{} must be a positive integer".format(
                            language, key
                        ),
                        OVERRIDES,
                    )

    @staticmethod
    def is_positive_int(value):
        return isinstance(value, int) and not isinstance(value, bool) and value > 0
