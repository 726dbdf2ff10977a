"""
One class per sub-command. The process life cycle drives every command
through the same steps: load inputs, run, write outputs. Values come from
the command line first, then the experiment file, then the built-in
defaults.
"""

from abc import ABC, abstractmethod

from Constants import Direction
from automaton.dot_exporter import export_dot
from automaton.minimal_dfa_builder import build_minimal_dfa
from calc.measure_calculator import MeasureCalculator
from exception.dataset import UnknownSystemException
from log_config import main_logger
from model.numeral_system import NumberRange
from model.prior import make_prior
from search.baseline_sampler import BaselineConfig, sample_baselines
from search.constraints import parse_constraint
from search.genetic_algorithm import GaConfig, run_ga
from search.local_frontier import (
    LocalSearchConfig,
    local_frontier,
    local_frontier_extremes,
)
from util.atomic_file import atomic_write
from util.csv_frontier_file_parser import (
    CsvFrontierFileParser,
    systems_path,
    write_frontier,
)
from util.csv_measure_file_parser import export_measures
from util.csv_system_file_parser import (
    load_attested_pools,
    load_systems,
    write_systems,
)
from util.parser import (
    BOTH_DIRECTIONS,
    DFA,
    GA,
    LOCAL_FRONTIER,
    MEASURE,
    SAMPLE_BASELINES,
)

logger = main_logger.getChild("cli")


def first_given(*values):
    for value in values:
        if value is not None:
            return value
    return None


class Command(ABC):
    name = None

    def __init__(self, args, conf, threads=None):
        self.args = args
        self.conf = conf
        self.threads = threads
        self.number_range = (
            NumberRange.parse(args.range) if args.range else conf.get_range()
        )
        self.outputs = {}

    @property
    def seed(self):
        return getattr(self.args, "seed", None)

    @property
    def out(self):
        return self.args.out

    def inputs(self):
        return [
            p
            for p in (getattr(self.args, "input", None), getattr(self.args, "attested", None))
            if p
        ]

    def prior(self):
        return make_prior(first_given(self.args.prior, self.conf.get_prior()), self.number_range)

    def settings(self):
        """Effective values after command line, file and default resolution."""
        return {"range": str(self.number_range)}

    @abstractmethod
    def load_inputs(self):
        pass

    @abstractmethod
    def run(self):
        pass

    @abstractmethod
    def write_outputs(self):
        pass

    def find_system(self, systems, label):
        for system in systems:
            if system.label == label:
                return system
        raise UnknownSystemException(label, systems)


class MeasureCommand(Command):
    name = MEASURE

    def __init__(self, args, conf, threads=None):
        super().__init__(args, conf, threads)
        self.systems = []
        self.reports = []

    def settings(self):
        return dict(super().settings(), prior=self.prior().descriptor)

    def load_inputs(self):
        self.systems = load_systems(self.args.input, self.number_range)

    def run(self):
        self.reports = MeasureCalculator(self.prior()).score_all(self.systems, self.threads)

    def write_outputs(self):
        export_measures(self.reports, self.out)
        self.outputs["measures"] = self.out


class SampleBaselinesCommand(Command):
    name = SAMPLE_BASELINES

    def __init__(self, args, conf, threads=None):
        super().__init__(args, conf, threads)
        self.pools = None
        self.systems = []
        self.reports = []

    def baseline_config(self):
        conf = self.conf
        return BaselineConfig(
            pools=self.pools,
            number_range=self.number_range,
            batches=first_given(self.args.batches, conf.get_batches()),
            per_batch=first_given(self.args.per_batch, conf.get_per_batch()),
            max_depth=first_given(self.args.max_depth, conf.get_max_depth()),
            seed=self.seed,
            digit_bounds=conf.get_digit_count_bounds(),
            multiplier_bounds=conf.get_multiplier_count_bounds(),
            subtraction_probability=conf.get_subtraction_probability(),
            retry_budget=conf.get_retry_budget(),
        )

    def settings(self):
        config = self.baseline_config()
        return dict(
            super().settings(),
            prior=self.prior().descriptor,
            batches=config.batches,
            per_batch=config.per_batch,
            max_depth=config.max_depth,
            seed=config.seed,
            digit_bounds=list(config.digit_bounds),
            multiplier_bounds=list(config.multiplier_bounds),
            subtraction_probability=config.subtraction_probability,
            attested_digits=self.pools.digits if self.pools else None,
            attested_multipliers=self.pools.multipliers if self.pools else None,
        )

    def load_inputs(self):
        self.pools = load_attested_pools(
            self.args.attested,
            self.number_range,
            self.conf.get_attested_digits(),
            self.conf.get_attested_multipliers(),
        )

    def run(self):
        self.systems = sample_baselines(self.baseline_config(), self.threads)
        self.reports = MeasureCalculator(self.prior()).score_all(self.systems, self.threads)

    def write_outputs(self):
        export_measures(self.reports, self.out)
        write_systems(systems_path(self.out), self.systems)
        self.outputs["measures"] = self.out
        self.outputs["systems"] = systems_path(self.out)


class GaCommand(Command):
    name = GA

    def __init__(self, args, conf, threads=None):
        super().__init__(args, conf, threads)
        self.pools = None
        self.result = None
        self.reports = []

    def ga_config(self):
        conf = self.conf
        return GaConfig(
            prior=self.prior(),
            pools=self.pools,
            population_size=first_given(self.args.pop, conf.get_population_size()),
            max_generations=first_given(self.args.generations, conf.get_max_generations()),
            seed=self.seed,
            combinators=conf.get_ga_combinators(),
            max_mutations=conf.get_max_mutations(),
            max_depth=first_given(self.args.max_depth, conf.get_max_depth()),
            digit_policy=parse_constraint(self.args.constraints),
            digit_bounds=conf.get_digit_count_bounds(),
            multiplier_bounds=conf.get_multiplier_count_bounds(),
            retry_budget=conf.get_retry_budget(),
        )

    def settings(self):
        config = self.ga_config()
        return dict(
            super().settings(),
            prior=config.prior.descriptor,
            population_size=config.population_size,
            max_generations=config.max_generations,
            seed=config.seed,
            combinators=config.combinators,
            max_mutations=config.max_mutations,
            max_depth=config.max_depth,
            constraints=config.digit_policy.name,
            attested_digits=self.pools.digits if self.pools else None,
            attested_multipliers=self.pools.multipliers if self.pools else None,
        )

    def load_inputs(self):
        self.pools = load_attested_pools(
            self.args.attested,
            self.number_range,
            self.conf.get_attested_digits(),
            self.conf.get_attested_multipliers(),
        )

    def run(self):
        config = self.ga_config()
        self.result = run_ga(config)
        systems = [individual.system for individual in self.result.archive]
        self.reports = MeasureCalculator(config.prior).score_all(systems, self.threads)

    def write_outputs(self):
        archive = self.result.archive
        self.outputs["frontier"] = self.out
        self.outputs["systems"] = write_frontier(
            self.out, list(zip(archive, self.reports)), [i.system for i in archive]
        )
        self.outputs["history"] = CsvFrontierFileParser.write_history(
            self.out, self.result.history
        )


class LocalFrontierCommand(Command):
    name = LOCAL_FRONTIER

    def __init__(self, args, conf, threads=None):
        super().__init__(args, conf, threads)
        self.natural = None
        self.results = {}
        self.seed_report = None
        self.member_reports = []

    def local_config(self):
        language = self.args.system
        direction = self.args.direction
        return LocalSearchConfig(
            beta=first_given(self.args.beta, self.conf.get_beta(language)),
            gamma=first_given(self.args.gamma, self.conf.get_gamma(language)),
            depth=first_given(self.args.depth, self.conf.get_local_depth()),
            direction=Direction.BEST if direction == BOTH_DIRECTIONS else direction,
            seed=self.seed,
        )

    def settings(self):
        config = self.local_config()
        return dict(
            super().settings(),
            prior=self.prior().descriptor,
            system=self.args.system,
            beta=config.beta,
            gamma=config.gamma,
            depth=config.depth,
            direction=self.args.direction,
            seed=config.seed,
        )

    def load_inputs(self):
        systems = load_systems(self.args.input, self.number_range)
        self.natural = self.find_system(systems, self.args.system)

    def run(self):
        prior = self.prior()
        config = self.local_config()
        if self.args.direction == BOTH_DIRECTIONS:
            self.results = local_frontier_extremes(self.natural, config, prior, self.threads)
        else:
            self.results = {
                config.direction: local_frontier(self.natural, config, prior, self.threads)
            }

        calculator = MeasureCalculator(prior)
        self.seed_report = calculator.score(self.natural)
        self.member_reports = [
            (direction, calculator.score(system))
            for direction, result in self.results.items()
            for system in result.systems
        ]
        for direction, result in self.results.items():
            logger.info(
                "{} frontier of '{}': {} of {} neighbourhood systems".format(
                    direction, self.natural.label, len(result.members), result.neighbourhood_size
                )
            )

    def write_outputs(self):
        CsvFrontierFileParser.write_local_frontier(
            self.out, self.seed_report, self.member_reports
        )
        systems = [self.natural] + [
            system for result in self.results.values() for system in result.systems
        ]
        write_systems(systems_path(self.out), systems)
        self.outputs["frontier"] = self.out
        self.outputs["systems"] = systems_path(self.out)


class DfaCommand(Command):
    name = DFA

    def __init__(self, args, conf, threads=None):
        super().__init__(args, conf, threads)
        self.system = None
        self.automaton = None

    @property
    def out(self):
        return self.args.dot

    def settings(self):
        return dict(super().settings(), system=self.args.system)

    def load_inputs(self):
        systems = load_systems(self.args.input, self.number_range)
        self.system = self.find_system(systems, self.args.system)

    def run(self):
        self.automaton = build_minimal_dfa(self.system)
        self.automaton.check_invariants()
        logger.info(
            "Minimal automaton of '{}': {} states, {} transitions, {} symbols".format(
                self.system.label,
                self.automaton.state_count,
                self.automaton.transition_count,
                len(self.automaton.alphabet),
            )
        )

    def write_outputs(self):
        with atomic_write(self.out) as f:
            f.write(export_dot(self.automaton, name=self.system.label))
        self.outputs["dot"] = self.out


COMMANDS = {
    command.name: command
    for command in (
        MeasureCommand,
        SampleBaselinesCommand,
        GaCommand,
        LocalFrontierCommand,
        DfaCommand,
    )
}


def make_command(args, conf, threads=None):
    return COMMANDS[args.command](args, conf, threads)
