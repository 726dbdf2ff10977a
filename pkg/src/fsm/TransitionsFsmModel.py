from fsm.fsm_helper import to_name


class TransitionsFsmModel:
    """Model object the `transitions` machine attaches its state and triggers to."""

    def __init__(self, final_states) -> None:
        self.__final_states = {to_name(s) for s in final_states}
        self.__machine = None
        self.state = None

    def init(self, machine):
        self.__machine = machine

    @property
    def current(self):
        return self.state

    def is_state(self, state):
        return self.state == to_name(state)

    def trigger_event(self, event, *args, **kwargs):
        self.trigger(to_name(event), *args, **kwargs)

    @property
    def is_complete(self):
        return self.state in self.__final_states
