import csv
from collections import OrderedDict

from Constants import SYSTEM_CSV_FAMILY_COLUMN, SYSTEM_CSV_HEADER, SystemSource
from exception.configuration import ConfigurationException
from exception.dataset import BadExpressionException, MissingNumberException
from exception.expression import InvalidExpressionException, ParseException
from log_config import main_logger
from model.morpheme import is_number_token
from model.numeral_expr import evaluate, parse_tokens
from model.numeral_system import NumberRange, NumeralSystem
from search.grammar_sampler import AttestedPools, attested_pools
from util.atomic_file import atomic_write

logger = main_logger.getChild("dataio")

LANGUAGE = "language"
NUMBER = "number"
TOKENS = "tokens"


class CsvSystemFileParser:
    """
    Reads and writes numeral systems as `language,number,tokens` rows, with
    an optional `family` column. Row numbers in errors are file line numbers,
    the header being line 1.
    """

    def __init__(self, number_range=None, source=SystemSource.NATURAL) -> None:
        super().__init__()
        self.number_range = NumberRange() if number_range is None else number_range
        self.source = source

    def parse(self, systems_file):
        with open(systems_file, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f, delimiter=",", skipinitialspace=True)
            if reader.fieldnames is None:
                return []
            self.check_header(reader.fieldnames)

            entries = OrderedDict()
            families = {}
            for line, row in enumerate(reader, start=2):
                parsed = self.from_csv_dict_row(row, line)
                if parsed is None:
                    continue
                language, number, expr = parsed

                by_number = entries.setdefault(language, {})
                if number in by_number:
                    raise BadExpressionException(
                        line,
                        "duplicate numeral for {} in language '{}'".format(
                            number, language
                        ),
                    )
                by_number[number] = expr
                family = (row.get(SYSTEM_CSV_FAMILY_COLUMN) or "").strip()
                if family and language not in families:
                    families[language] = family

        systems = []
        for language in sorted(entries):
            by_number = entries[language]
            for n in self.number_range.numbers():
                if n not in by_number:
                    raise MissingNumberException(language, n)
            systems.append(
                NumeralSystem(
                    self.number_range,
                    by_number,
                    language,
                    self.source,
                    families.get(language),
                )
            )

        logger.info(
            "Loaded {} systems over {} from '{}'".format(
                len(systems), self.number_range, systems_file
            )
        )
        return systems

    @staticmethod
    def check_header(fieldnames):
        missing = [c for c in SYSTEM_CSV_HEADER if c not in fieldnames]
        if missing:
            raise BadExpressionException(
                1, "missing column(s) {}".format(", ".join(missing))
            )

    def from_csv_dict_row(self, row, line):
        language = (row[LANGUAGE] or "").strip()
        if not language:
            raise BadExpressionException(line, "empty language name")

        raw_number = (row[NUMBER] or "").strip()
        if not is_number_token(raw_number):
            raise BadExpressionException(
                line, "number '{}' is not an integer".format(row[NUMBER])
            )
        number = int(raw_number)

        if number not in self.number_range:
            logger.debug(
                "Line {}: {} is outside {}, skipped".format(
                    line, number, self.number_range
                )
            )
            return None

        try:
            expr = parse_tokens(row[TOKENS] or "")
            value = evaluate(expr)
        except (ParseException, InvalidExpressionException) as e:
            raise BadExpressionException(line, "'{}': {}".format(row[TOKENS], e))

        if value != number:
            raise BadExpressionException(
                line,
                "'{}' evaluates to {} instead of {}".format(row[TOKENS], value, number),
            )
        return language, number, expr

    @staticmethod
    def write(systems_file, systems):
        with_family = any(s.family for s in systems)
        header = SYSTEM_CSV_HEADER + ([SYSTEM_CSV_FAMILY_COLUMN] if with_family else [])

        with atomic_write(systems_file) as f:
            csv_writer = csv.writer(
                f,
                delimiter=",",
                quotechar='"',
                quoting=csv.QUOTE_MINIMAL,
                lineterminator="\n",
            )
            csv_writer.writerow(header)
            for system in sorted(systems, key=lambda s: s.label):
                for n in system.numbers():
                    row = [system.label, n, system.token_string(n)]
                    if with_family:
                        row.append(system.family or "")
                    csv_writer.writerow(row)


def load_systems(path, number_range=None):
    return CsvSystemFileParser(number_range).parse(path)


def write_systems(path, systems):
    CsvSystemFileParser.write(path, systems)


def load_attested_pools(path=None, number_range=None, digits=None, multipliers=None):
    """
    Sampler pools from explicit digit/multiplier values when both are given,
    otherwise from the systems in the natural-language CSV at `path`.
    """
    if digits and multipliers:
        pools = AttestedPools(frozenset(digits), frozenset(multipliers))
    elif path is None:
        raise ConfigurationException(
            "Attested pools need --attested CSV or both attested_digits and attested_multipliers",
            "attested",
        )
    else:
        pools = attested_pools(load_systems(path, number_range))
        if digits:
            pools = AttestedPools(frozenset(digits), pools.multipliers)
        if multipliers:
            pools = AttestedPools(pools.digits, frozenset(multipliers))

    logger.info(
        "Attested pools: digits {} multipliers {}".format(
            sorted(pools.digits), sorted(pools.multipliers)
        )
    )
    return pools.check()
