import json
import logging
import sys
from enum import Enum, auto

from Constants import (
    APP_NAME,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_OK,
    LINER,
    VERSION,
)
from cli.commands import make_command
from exception.automaton import NotAcceptedException
from exception.configuration import ConfigurationException
from exception.dataset import (
    BadExpressionException,
    MissingNumberException,
    UnknownSystemException,
)
from exception.expression import InvalidExpressionException, ParseException
from exception.grammar import IncompleteGrammarException
from exception.search import EmptyNeighbourhoodException, ResampleExhaustedException
from fsm.TransitionsFsmBuilder import TransitionsFsmBuilder
from launch_common import parse_arguments, print_banner
from log_config import init, main_logger
from util.config_life_cycle import ConfigLifeCycle
from util.parallel import thread_count
from util.run_manifest_writer import RunManifestWriter

logger = main_logger

INPUT_ERRORS = (
    BadExpressionException,
    MissingNumberException,
    UnknownSystemException,
    ConfigurationException,
    ParseException,
    InvalidExpressionException,
    IncompleteGrammarException,
    EmptyNeighbourhoodException,
    ResampleExhaustedException,
    OSError,
)


class NmdlState(Enum):
    INITIAL = auto()
    CMD_ARGS_PARSED = auto()
    CMD_ARGS_GIVEN = auto()
    LOGGERS_INITIATED = auto()
    CONFIG_LOADED = auto()
    INPUTS_LOADED = auto()
    EXPERIMENT_RUN = auto()
    OUTPUTS_WRITTEN = auto()
    MANIFEST_WRITTEN = auto()
    DONE = auto()
    FAILED = auto()


class NmdlEvent(Enum):
    LAUNCH = auto()
    INITIATE_LOGGERS = auto()
    LOAD_CONFIG = auto()
    LOAD_INPUTS = auto()
    RUN = auto()
    WRITE_OUTPUTS = auto()
    WRITE_MANIFEST = auto()
    COMPLETE = auto()
    FAIL = auto()


def exit_code_for(error):
    # NotAccepted while scoring means the automaton lost a word it was built from
    if isinstance(error, (AssertionError, NotAcceptedException)):
        return EXIT_INTERNAL_ERROR
    if isinstance(error, INPUT_ERRORS):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR


class ProcessLifeCycle:
    """
    One command invocation: arguments, loggers, configuration, inputs,
    experiment, outputs, run manifest. Any failure moves the machine to
    FAILED and decides the exit code.
    """

    def __init__(self, args=None, argv=None):
        self.__args = args
        self.__argv = argv
        self.__cfg = None
        self.__command = None
        self.exit_code = None

        self.fsm = self.get_fsm_builder().build()

    def get_fsm_builder(self):
        fsm_builder = TransitionsFsmBuilder()
        fsm_builder.add_initial_state(
            NmdlState.INITIAL, on_leave=lambda e: logger.debug("{} is starting...".format(APP_NAME))
        )
        fsm_builder.add_state(NmdlState.CMD_ARGS_PARSED, on_enter=self.do_parse_args)
        fsm_builder.add_state(NmdlState.CMD_ARGS_GIVEN)
        fsm_builder.add_state(NmdlState.LOGGERS_INITIATED, on_enter=self.do_initiate_loggers)
        fsm_builder.add_state(NmdlState.CONFIG_LOADED, on_enter=self.do_load_config)
        fsm_builder.add_state(NmdlState.INPUTS_LOADED, on_enter=self.do_load_inputs)
        fsm_builder.add_state(NmdlState.EXPERIMENT_RUN, on_enter=self.do_run)
        fsm_builder.add_state(NmdlState.OUTPUTS_WRITTEN, on_enter=self.do_write_outputs)
        fsm_builder.add_state(NmdlState.MANIFEST_WRITTEN, on_enter=self.do_write_manifest)
        fsm_builder.add_final_state(NmdlState.DONE, on_enter=self.print_done)
        fsm_builder.add_final_state(NmdlState.FAILED)

        fsm_builder.add_conditional_transition(
            NmdlEvent.LAUNCH,
            NmdlState.INITIAL,
            self.is_args_not_set,
            NmdlState.CMD_ARGS_PARSED,
            NmdlState.CMD_ARGS_GIVEN,
        )
        fsm_builder.add_transition(
            NmdlEvent.INITIATE_LOGGERS,
            [NmdlState.CMD_ARGS_PARSED, NmdlState.CMD_ARGS_GIVEN],
            NmdlState.LOGGERS_INITIATED,
        )
        fsm_builder.add_transition(
            NmdlEvent.LOAD_CONFIG, NmdlState.LOGGERS_INITIATED, NmdlState.CONFIG_LOADED
        )
        fsm_builder.add_transition(
            NmdlEvent.LOAD_INPUTS, NmdlState.CONFIG_LOADED, NmdlState.INPUTS_LOADED
        )
        fsm_builder.add_transition(
            NmdlEvent.RUN, NmdlState.INPUTS_LOADED, NmdlState.EXPERIMENT_RUN
        )
        fsm_builder.add_transition(
            NmdlEvent.WRITE_OUTPUTS, NmdlState.EXPERIMENT_RUN, NmdlState.OUTPUTS_WRITTEN
        )
        fsm_builder.add_transition(
            NmdlEvent.WRITE_MANIFEST, NmdlState.OUTPUTS_WRITTEN, NmdlState.MANIFEST_WRITTEN
        )
        fsm_builder.add_transition(
            NmdlEvent.COMPLETE, NmdlState.MANIFEST_WRITTEN, NmdlState.DONE
        )
        fsm_builder.add_global_transition(NmdlEvent.FAIL, NmdlState.FAILED)

        return fsm_builder

    def start(self):
        try:
            self.fsm.trigger_event(NmdlEvent.LAUNCH)
            self.fsm.trigger_event(NmdlEvent.INITIATE_LOGGERS)
            self.fsm.trigger_event(NmdlEvent.LOAD_CONFIG)
            self.fsm.trigger_event(NmdlEvent.LOAD_INPUTS)
            self.fsm.trigger_event(NmdlEvent.RUN)
            self.fsm.trigger_event(NmdlEvent.WRITE_OUTPUTS)
            self.fsm.trigger_event(NmdlEvent.WRITE_MANIFEST)
            self.fsm.trigger_event(NmdlEvent.COMPLETE)
            self.exit_code = EXIT_OK

        except SystemExit as e:
            # argparse reports usage errors and --help this way
            self.exit_code = e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR
            self.fail()
        except KeyboardInterrupt:
            logger.info("Interrupted.")
            self.exit_code = EXIT_INTERNAL_ERROR
            self.fail()
        except Exception as e:
            self.exit_code = exit_code_for(e)
            print("{}: error: {}".format(APP_NAME, e), file=sys.stderr)
            logger.error(
                "[Process Life Cycle completing With Failure] Error Details: {:s}".format(
                    str(e)
                )
            )
            logger.debug(
                "[Process Life Cycle completing With Failure] Stack Trace:", exc_info=True
            )
            self.fail()

        return self.exit_code

    def do_parse_args(self, e):
        self.__args = parse_arguments(self.__argv)

    def print_argument_configuration(self):
        logger.info("{} version {} running '{}'".format(APP_NAME, VERSION, self.args.command))
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(
                "Arguments Configuration = {}".format(json.dumps(self.args.__dict__, indent=1))
            )

    def do_initiate_loggers(self, e):
        init(self.args.syslog, self.args.log_file, self.args.verbose == "on")
        if self.args.verbose == "on":
            print_banner()
        self.print_argument_configuration()

    def do_load_config(self, e):
        cfg_life_cycle = ConfigLifeCycle(self.args, self.set_cfg)
        cfg_life_cycle.start()
        logger.debug("Experiment Configuration {}".format(self.__cfg))
        self.__command = make_command(self.args, self.__cfg, thread_count())

    def set_cfg(self, cfg):
        self.__cfg = cfg

    def do_load_inputs(self, e):
        self.__command.load_inputs()

    def do_run(self, e):
        self.__command.run()

    def do_write_outputs(self, e):
        self.__command.write_outputs()

    def do_write_manifest(self, e):
        command = self.__command
        writer = RunManifestWriter(
            command.name,
            {
                "arguments": self.args.__dict__,
                "experiment": self.__cfg.snapshot(),
                "effective": command.settings(),
            },
            command.seed,
        )
        for path in command.inputs():
            writer.add_input(path)
        if self.args.config:
            writer.add_input(self.args.config)
        for role, path in command.outputs.items():
            writer.add_output(role, path)
        writer.write(command.out)

    @staticmethod
    def print_done(e):
        logger.info("Done.")
        logger.info(LINER)

    def fail(self):
        if not self.fsm.is_complete:
            self.fsm.trigger_event(NmdlEvent.FAIL)

    @property
    def args(self):
        return self.__args

    def is_args_not_set(self, e):
        return self.args is None
