import argparse
import os

from Constants import (
    APP_NAME,
    BASE_DIR,
    DEFAULT_LOG_FILE,
    DEFAULT_RANGE_HI,
    DEFAULT_RANGE_LO,
    DEFAULT_SEED,
    Direction,
)

MEASURE = "measure"
SAMPLE_BASELINES = "sample-baselines"
GA = "ga"
LOCAL_FRONTIER = "local-frontier"
DFA = "dfa"

BOTH_DIRECTIONS = "both"


def build_parser():
    argparser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Irregularity and processing complexity of recursive numeral systems.",
    )
    subparsers = argparser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    measure = subparsers.add_parser(
        MEASURE, help="Score the numeral systems of a CSV file."
    )
    add_argument_input(measure, required=True)
    add_argument_prior(measure)
    add_argument_out(measure)
    add_common_arguments(measure)

    baselines = subparsers.add_parser(
        SAMPLE_BASELINES,
        help="Sample artificial systems from random grammars and score them.",
    )
    add_argument_batches(baselines)
    add_argument_per_batch(baselines)
    add_argument_max_depth(baselines)
    add_argument_seed(baselines)
    add_argument_attested(baselines)
    add_argument_prior(baselines)
    add_argument_out(baselines)
    add_common_arguments(baselines)

    ga = subparsers.add_parser(
        GA, help="Pareto search for lexicon size against morphosyntactic complexity."
    )
    add_argument_prior(ga)
    add_argument_generations(ga)
    add_argument_pop(ga)
    add_argument_seed(ga)
    add_argument_constraints(ga)
    add_argument_attested(ga)
    add_argument_max_depth(ga)
    add_argument_out(ga)
    add_common_arguments(ga)

    local = subparsers.add_parser(
        LOCAL_FRONTIER,
        help="Frontier of a natural system's neighbourhood of equally long numerals.",
    )
    add_argument_input(local, required=True)
    add_argument_system(local)
    add_argument_beta(local)
    add_argument_gamma(local)
    add_argument_depth(local)
    add_argument_direction(local)
    add_argument_prior(local)
    add_argument_seed(local)
    add_argument_out(local)
    add_common_arguments(local)

    dfa = subparsers.add_parser(DFA, help="Write the minimal automaton of one system as DOT.")
    add_argument_input(dfa, required=True)
    add_argument_system(dfa)
    add_argument_dot(dfa)
    add_common_arguments(dfa)

    return argparser


def add_common_arguments(argparser):
    add_argument_range(argparser)
    add_argument_config(argparser)
    add_argument_verbose(argparser)
    add_argument_syslog(argparser)
    add_argument_log_file(argparser)


def add_argument_input(argparser, required=False):
    argparser.add_argument(
        "--input",
        help="CSV file of numeral systems with columns language,number,tokens.",
        required=required,
    )


def add_argument_prior(argparser):
    argparser.add_argument(
        "--prior",
        help="Need prior over the range: 'power<k>' (P(n) proportional to n^-k) or 'uniform'. "
        "Default is power2 unless the configuration file says otherwise.",
    )


def add_argument_out(argparser):
    argparser.add_argument("--out", help="Output CSV file.", required=True)


def add_argument_batches(argparser):
    argparser.add_argument(
        "--batches", help="Number of sampled grammars.", type=int
    )


def add_argument_per_batch(argparser):
    argparser.add_argument(
        "--per-batch",
        dest="per_batch",
        help="Number of systems drawn from each sampled grammar.",
        type=int,
    )


def add_argument_max_depth(argparser):
    argparser.add_argument(
        "--max-depth",
        dest="max_depth",
        help="Maximum number of atoms in one numeral.",
        type=int,
    )


def add_argument_seed(argparser):
    argparser.add_argument(
        "--seed",
        help="Random seed. Default is {}.".format(DEFAULT_SEED),
        default=DEFAULT_SEED,
        type=int,
    )


def add_argument_attested(argparser):
    argparser.add_argument(
        "--attested",
        help="Natural-language CSV the digit and multiplier pools are read from. "
        "Optional when the configuration file lists attested_digits and attested_multipliers.",
    )


def add_argument_generations(argparser):
    argparser.add_argument(
        "--generations", help="Number of generations after the initial one.", type=int
    )


def add_argument_pop(argparser):
    argparser.add_argument(
        "--pop",
        help="Size of the initial population and of each offspring batch.",
        type=int,
    )


def add_argument_constraints(argparser):
    argparser.add_argument(
        "--constraints",
        help="Digit constraint: 'sequential-digits' or 'sequential-digits:<k>' "
        "keeps D = {1..k}. Unconstrained by default.",
    )


def add_argument_system(argparser):
    argparser.add_argument(
        "--system", help="Language name as found in the input CSV.", required=True
    )


def add_argument_beta(argparser):
    argparser.add_argument(
        "--beta", help="Maximum number of partial systems kept per step.", type=int
    )


def add_argument_gamma(argparser):
    argparser.add_argument(
        "--gamma", help="Numbers expanded together per step.", type=int
    )


def add_argument_depth(argparser):
    argparser.add_argument(
        "--depth", help="Depth limit for the alternative numerals.", type=int
    )


def add_argument_direction(argparser):
    argparser.add_argument(
        "--direction",
        help="Which frontier to estimate: the most efficient systems, the least "
        "efficient ones, or both.",
        choices=[str(d) for d in Direction] + [BOTH_DIRECTIONS],
        default=BOTH_DIRECTIONS,
    )


def add_argument_dot(argparser):
    argparser.add_argument("--dot", help="Output DOT file.", required=True)


def add_argument_range(argparser):
    argparser.add_argument(
        "--range",
        help="Number range as lo:hi. Default is {}:{}.".format(
            DEFAULT_RANGE_LO, DEFAULT_RANGE_HI
        ),
    )


def add_argument_config(argparser):
    argparser.add_argument(
        "--config", help="YAML experiment file. Command line flags take precedence."
    )


def add_argument_verbose(argparser):
    argparser.add_argument(
        "-V",
        "--verbose",
        help="Also print debug messages on the console.",
        choices=["on", "off"],
        default="off",
    )


def add_argument_syslog(argparser):
    argparser.add_argument("--syslog", help="Log to syslog.", action="store_true")


def add_argument_log_file(argparser):
    default_log_file = os.path.join(
        os.path.normpath(BASE_DIR), os.path.normpath(DEFAULT_LOG_FILE)
    )
    argparser.add_argument(
        "--log-file",
        dest="log_file",
        help="Application log file. Default is {}".format(default_log_file),
        default=default_log_file,
    )
