from dataclasses import dataclass

from Constants import FLOAT_DECIMALS, SystemSource


@dataclass(frozen=True)
class MeasureReport:
    system_label: str
    source: SystemSource
    prior: str
    irregularity_bits: float
    processing_bits: float
    lexicon_size: int
    avg_morph_complexity: float

    def __post_init__(self):
        if self.irregularity_bits <= 0:
            raise ValueError(
                "Irregularity of '{}' must be positive".format(self.system_label)
            )
        if self.processing_bits < 0:
            raise ValueError(
                "Processing complexity of '{}' must be non-negative".format(
                    self.system_label
                )
            )

    def dominates(self, other):
        """Strict Pareto dominance on (irregularity, processing complexity)."""
        return (
            self.irregularity_bits <= other.irregularity_bits
            and self.processing_bits <= other.processing_bits
            and (
                self.irregularity_bits < other.irregularity_bits
                or self.processing_bits < other.processing_bits
            )
        )

    def to_row(self):
        return [
            self.system_label,
            str(self.source),
            self.prior,
            format_real(self.irregularity_bits),
            format_real(self.processing_bits),
            str(self.lexicon_size),
            format_real(self.avg_morph_complexity),
        ]


def format_real(value):
    return "{:.{}f}".format(value, FLOAT_DECIMALS)
