import json
from model.custom_json_encoder import CustomJsonEncoder

RANGE = "range"
MAX_DEPTH = "max_depth"
PRIOR = "prior"
ATTESTED_DIGITS = "attested_digits"
ATTESTED_MULTIPLIERS = "attested_multipliers"

GA = "ga"
POPULATION_SIZE = "population_size"
MAX_GENERATIONS = "max_generations"
COMBINATORS = "combinators"
MAX_MUTATIONS = "max_mutations"

BASELINE = "baseline"
BATCHES = "batches"
PER_BATCH = "per_batch"
SUBTRACTION_PROBABILITY = "subtraction_probability"
MIN_DIGITS = "min_digits"
MAX_DIGITS = "max_digits"
MIN_MULTIPLIERS = "min_multipliers"
MAX_MULTIPLIERS = "max_multipliers"
RETRY_BUDGET = "retry_budget"

LOCAL = "local"
BETA = "beta"
GAMMA = "gamma"
DEPTH = "depth"
OVERRIDES = "overrides"

SECTIONS = (GA, BASELINE, LOCAL)


class ExperimentConf:
    def __init__(self, cfg_dict) -> None:
        super().__init__()
        self.cfg_dict = cfg_dict

    def get_attribute(self, attr, section=None):
        scope = self.cfg_dict if section is None else self.cfg_dict.get(section, {})
        if attr in scope:
            return scope[attr]

        raise Exception(
            "Attribute {} not found in experiment configuration.".format(
                attr if section is None else section + "." + attr
            )
        )

    def set_attribute(self, attr, value, section=None):
        scope = self.cfg_dict if section is None else self.cfg_dict[section]
        scope[attr] = value

    def get_range(self):
        return self.get_attribute(RANGE)

    def get_max_depth(self):
        return self.get_attribute(MAX_DEPTH)

    def get_prior(self):
        return self.get_attribute(PRIOR)

    def get_attested_digits(self):
        return self.get_attribute(ATTESTED_DIGITS)

    def get_attested_multipliers(self):
        return self.get_attribute(ATTESTED_MULTIPLIERS)

    def get_population_size(self):
        return self.get_attribute(POPULATION_SIZE, GA)

    def get_max_generations(self):
        return self.get_attribute(MAX_GENERATIONS, GA)

    def get_ga_combinators(self):
        return self.get_attribute(COMBINATORS, GA)

    def get_max_mutations(self):
        return self.get_attribute(MAX_MUTATIONS, GA)

    def get_batches(self):
        return self.get_attribute(BATCHES, BASELINE)

    def get_per_batch(self):
        return self.get_attribute(PER_BATCH, BASELINE)

    def get_subtraction_probability(self):
        return self.get_attribute(SUBTRACTION_PROBABILITY, BASELINE)

    def get_digit_count_bounds(self):
        return (
            self.get_attribute(MIN_DIGITS, BASELINE),
            self.get_attribute(MAX_DIGITS, BASELINE),
        )

    def get_multiplier_count_bounds(self):
        return (
            self.get_attribute(MIN_MULTIPLIERS, BASELINE),
            self.get_attribute(MAX_MULTIPLIERS, BASELINE),
        )

    def get_retry_budget(self):
        return self.get_attribute(RETRY_BUDGET, BASELINE)

    def get_beta(self, language=None):
        return self._local_value(BETA, language)

    def get_gamma(self, language=None):
        return self._local_value(GAMMA, language)

    def get_local_depth(self):
        return self.get_attribute(DEPTH, LOCAL)

    def _local_value(self, attr, language):
        overrides = self.get_attribute(OVERRIDES, LOCAL)
        if language is not None and attr in overrides.get(language, {}):
            return overrides[language][attr]
        return self.get_attribute(attr, LOCAL)

    def snapshot(self):
        """Plain JSON-ready copy, for run manifests."""
        return json.loads(json.dumps(self.cfg_dict, cls=CustomJsonEncoder))

    def __repr__(self) -> str:
        return json.dumps(self.cfg_dict, cls=CustomJsonEncoder, indent=1)
