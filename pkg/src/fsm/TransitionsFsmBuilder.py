import graphviz
from transitions import Machine

from fsm.TransitionsFsmModel import TransitionsFsmModel
from fsm.fsm_helper import to_list, to_name

SAME_STATE = "="


class TransitionsFsmBuilder:
    """
    Collects states and transitions keyed by enum members, then builds a
    `transitions.Machine` whose callbacks receive the event data.
    """

    def __init__(self):
        self.__states = []
        self.__state_names = []
        self.__transitions = []
        self.__initial = None
        self.__finals = []

    def add_initial_state(self, name, on_leave=None):
        self.add_state(name, initial=True, on_leave=on_leave)

    def add_final_state(self, name, on_enter=None):
        self.add_state(name, final=True, on_enter=on_enter)

    def add_state(self, state, initial=False, final=False, on_enter=None, on_leave=None):
        state = to_name(state)
        if state in self.__state_names:
            raise ValueError("Duplicate state: {}".format(state))

        if initial:
            self.__initial = state
        if final:
            self.__finals.append(state)

        state_dict = {"name": state}
        if on_enter:
            state_dict["on_enter"] = [on_enter]
        if on_leave:
            state_dict["on_exit"] = [on_leave]

        self.__states.append(state_dict)
        self.__state_names.append(state)

    def add_transition(self, event, src, dst, conditions=None, condition_target=True):
        event = to_name(event)
        src_state_names = [to_name(state) for state in to_list(src)]
        dst = to_name(dst)

        for state_name in src_state_names:
            if state_name not in self.__state_names:
                raise ValueError("Unknown source state: {}".format(state_name))
        if dst != SAME_STATE and dst not in self.__state_names:
            raise ValueError("Unknown destination state: {}".format(dst))

        trigger_dict = {"trigger": event, "source": src_state_names, "dest": dst}
        if conditions:
            trigger_dict["conditions" if condition_target else "unless"] = conditions

        self.__transitions.append(trigger_dict)

    def add_global_transition(self, event, dst):
        """From every state added so far, the destination included."""
        self.add_transition(event, list(self.__state_names), dst)

    def add_conditional_transition(self, event, src, condition, pass_dst, not_pass_dst=None):
        self.add_transition(event, src, pass_dst, conditions=[condition])
        if not_pass_dst:
            self.add_transition(
                event, src, not_pass_dst, conditions=[condition], condition_target=False
            )

    def build(self):
        fsm = TransitionsFsmModel(self.__finals)
        machine = Machine(
            model=fsm,
            states=self.__states,
            initial=self.__initial,
            transitions=self.__transitions,
            send_event=True,
            auto_transitions=False,
        )
        fsm.init(machine)
        return fsm

    def to_digraph(self, title="State Machine"):
        graph = graphviz.Digraph(name=title.replace(" ", "_"), graph_attr={"label": title})
        for state in self.__state_names:
            shape = "doublecircle" if state in self.__finals else "circle"
            graph.node(state, shape=shape)
        if self.__initial is not None:
            graph.node("__start__", label="", shape="point")
            graph.edge("__start__", self.__initial)

        for transition in self.__transitions:
            dst = transition["dest"]
            label = transition["trigger"]
            if "conditions" in transition:
                label += " [{}]".format(", ".join(c.__name__ for c in transition["conditions"]))
            elif "unless" in transition:
                label += " [!{}]".format(", ".join(c.__name__ for c in transition["unless"]))
            for src in transition["source"]:
                graph.edge(src, src if dst == SAME_STATE else dst, label=label)
        return graph

    def draw(self, path, title="State Machine"):
        """Writes the diagram as DOT source; render it with `dot -Tpng`."""
        graph = self.to_digraph(title)
        with open(path, "w", encoding="utf-8") as f:
            f.write(graph.source)
        return graph
