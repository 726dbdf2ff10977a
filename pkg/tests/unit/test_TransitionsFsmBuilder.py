from enum import Enum, auto
from unittest import TestCase

from fsm.TransitionsFsmBuilder import TransitionsFsmBuilder


class State(Enum):
    START = auto()
    MIDDLE = auto()
    RUNNING = auto()
    NOT_RUNNING = auto()
    DONE = auto()
    FAILED = auto()


class Event(Enum):
    MOVE = auto()
    RUN = auto()
    STOP = auto()
    FAIL = auto()


class TestFsmBuilder(TestCase):
    def setUp(self):
        self.visited = []
        self.tired = True

    def make_builder(self, on_stop=None):
        fsm_builder = TransitionsFsmBuilder()
        fsm_builder.add_initial_state(State.START, on_leave=lambda e: self.visited.append("left start"))
        fsm_builder.add_state(State.MIDDLE, on_enter=lambda e: self.visited.append(e.args))
        fsm_builder.add_state(State.RUNNING)
        fsm_builder.add_state(State.NOT_RUNNING)
        fsm_builder.add_final_state(State.DONE, on_enter=on_stop)
        fsm_builder.add_final_state(State.FAILED)

        fsm_builder.add_transition(Event.MOVE, State.START, State.MIDDLE)
        fsm_builder.add_conditional_transition(
            Event.RUN, State.MIDDLE, self.is_tired, State.NOT_RUNNING, State.RUNNING
        )
        fsm_builder.add_transition(Event.STOP, [State.NOT_RUNNING, State.RUNNING], State.DONE)
        fsm_builder.add_global_transition(Event.FAIL, State.FAILED)
        return fsm_builder

    def is_tired(self, e):
        return self.tired

    def test_happy_path(self):
        fsm = self.make_builder().build()
        self.assertTrue(fsm.is_state(State.START))

        fsm.trigger_event(Event.MOVE, "message")
        self.assertEqual(fsm.current, "MIDDLE")
        self.assertEqual(self.visited, ["left start", ("message",)])

        fsm.trigger_event(Event.RUN)
        self.assertEqual(fsm.current, "NOT_RUNNING")
        self.assertFalse(fsm.is_complete)

        fsm.trigger_event(Event.STOP)
        self.assertTrue(fsm.is_complete)

    def test_condition_not_met(self):
        self.tired = False
        fsm = self.make_builder().build()
        fsm.trigger_event(Event.MOVE)
        fsm.trigger_event(Event.RUN)
        self.assertTrue(fsm.is_state(State.RUNNING))

    def test_failure_moves_to_final_state(self):
        def explode(e):
            raise ValueError("stop failed")

        fsm = self.make_builder(on_stop=explode).build()
        fsm.trigger_event(Event.MOVE)
        fsm.trigger_event(Event.RUN)
        with self.assertRaises(ValueError):
            fsm.trigger_event(Event.STOP)

        fsm.trigger_event(Event.FAIL)
        self.assertTrue(fsm.is_state(State.FAILED))
        self.assertTrue(fsm.is_complete)

    def test_invalid_definitions(self):
        fsm_builder = TransitionsFsmBuilder()
        fsm_builder.add_initial_state(State.START)
        with self.assertRaises(ValueError):
            fsm_builder.add_state(State.START)
        with self.assertRaises(ValueError):
            fsm_builder.add_transition(Event.MOVE, State.START, State.MIDDLE)
        with self.assertRaises(ValueError):
            fsm_builder.add_transition(Event.MOVE, State.MIDDLE, State.START)
