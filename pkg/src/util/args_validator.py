from exception.configuration import ConfigurationException
from log_config import main_logger
from model.numeral_system import NumberRange
from model.prior import parse_prior_descriptor
from search.constraints import parse_constraint

POSITIVE_INT_ARGS = (
    "batches",
    "per_batch",
    "max_depth",
    "generations",
    "pop",
    "beta",
    "gamma",
    "depth",
)


class ArgsValidator:
    def __init__(self, parser, argv=None):
        self._parser = parser
        self._logger = main_logger
        self._args = parser.parse_args(argv)

    def _positive_int_validator(self):
        for name in POSITIVE_INT_ARGS:
            value = getattr(self._args, name, None)
            if value is not None and value < 1:
                self._parser.error(
                    "--{} must be a positive integer, got {}".format(
                        name.replace("_", "-"), value
                    )
                )
        return True

    def _seed_validator(self):
        seed = getattr(self._args, "seed", None)
        if seed is not None and seed < 0:
            self._parser.error("--seed must be non-negative, got {}".format(seed))
        return True

    def _range_validator(self):
        if self._args.range is None:
            return True
        try:
            NumberRange.parse(self._args.range)
        except ValueError as e:
            self._parser.error("--range: {}".format(e))
        return True

    def _prior_validator(self):
        prior = getattr(self._args, "prior", None)
        if prior is None:
            return True
        try:
            parse_prior_descriptor(prior)
        except ConfigurationException as e:
            self._parser.error("--prior: {}".format(e))
        return True

    def _constraints_validator(self):
        try:
            self._args.constraints
        except AttributeError:
            self._logger.debug("args: constraints argument does not exist.")
        else:
            try:
                parse_constraint(self._args.constraints)
            except ConfigurationException as e:
                self._parser.error("--constraints: {}".format(e))
        return True

    def run_validation(self):
        self._positive_int_validator()
        self._seed_validator()
        self._range_validator()
        self._prior_validator()
        self._constraints_validator()
        return self._args


def validate(parser, argv=None):
    validator = ArgsValidator(parser, argv)
    return validator.run_validation()
