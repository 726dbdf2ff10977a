from automaton.minimal_dfa_builder import build_minimal_dfa
from calc.irregularity import irregularity
from calc.morphosyntax import avg_morph_complexity, lexicon_size
from calc.processing_complexity import processing_complexity
from log_config import main_logger
from model.measure_report import MeasureReport
from util.parallel import ordered_map

logger = main_logger.getChild("measures")


class MeasureCalculator:
    def __init__(self, prior):
        self.prior = prior

    def score(self, system, automaton=None):
        if system.number_range != self.prior.number_range:
            raise ValueError(
                "Prior over {} cannot score system '{}' over {}".format(
                    self.prior.number_range, system.label, system.number_range
                )
            )
        if automaton is None:
            automaton = build_minimal_dfa(system)

        report = MeasureReport(
            system_label=system.label,
            source=system.source,
            prior=self.prior.descriptor,
            irregularity_bits=irregularity(automaton),
            processing_bits=processing_complexity(system, automaton, self.prior),
            lexicon_size=lexicon_size(system),
            avg_morph_complexity=avg_morph_complexity(system, self.prior),
        )
        logger.debug(
            "{}: L(G)={:.3f} L(N|G)={:.3f}".format(
                system.label, report.irregularity_bits, report.processing_bits
            )
        )
        return report

    def score_all(self, systems, threads=None):
        reports = ordered_map(self.score, systems, threads)
        logger.info(
            "Scored {} systems under prior {}".format(len(reports), self.prior)
        )
        return reports


def score(system, prior):
    return MeasureCalculator(prior).score(system)
