import json
import os
from unittest import TestCase

import pytest

from Constants import MEASURE_CSV_HEADER, SystemSource
from calc.measure_calculator import MeasureCalculator
from exception.configuration import ConfigurationException
from exception.dataset import BadExpressionException, MissingNumberException
from model.numeral_system import NumberRange
from model.prior import make_prior
from search.genetic_algorithm import GaGeneration
from util.csv_frontier_file_parser import CsvFrontierFileParser, systems_path
from util.csv_measure_file_parser import CsvMeasureFileParser, export_measures
from util.csv_system_file_parser import load_attested_pools, load_systems, write_systems
from util.run_manifest_writer import RunManifestWriter, manifest_path
from tests.utils import (
    FULL_RANGE,
    NATURAL_SYSTEMS_CSV,
    drehu_like_system,
    karo_batak_system,
    mandarin_like_system,
)

HEADER = "language,number,tokens\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return str(path)


def flat_rows(language, number_range):
    return "".join("{},{},{}\n".format(language, n, n) for n in number_range.numbers())


class TestSystemFiles(TestCase):
    def test_load_fixture(self):
        systems = load_systems(NATURAL_SYSTEMS_CSV)
        self.assertEqual([s.label for s in systems], ["drehu_like", "karo_batak", "mandarin_like"])
        drehu, karo, mandarin = systems
        self.assertEqual(drehu.words(), drehu_like_system().words())
        self.assertEqual(drehu.digit_values(), frozenset({1, 2, 3, 4, 5, 10, 15}))
        self.assertEqual(drehu.multiplier_values(), frozenset({5, 10, 15, 20}))
        self.assertEqual(karo.words(), karo_batak_system().words())
        self.assertEqual(mandarin.words(), mandarin_like_system().words())
        self.assertEqual(karo.family, "Austronesian")
        self.assertEqual(karo.source, SystemSource.NATURAL)

    def test_load_sub_range(self):
        systems = load_systems(NATURAL_SYSTEMS_CSV, NumberRange(1, 30))
        self.assertEqual([len(s) for s in systems], [30, 30, 30])

    def test_attested_pools(self):
        pools = load_attested_pools(NATURAL_SYSTEMS_CSV, FULL_RANGE)
        self.assertEqual(pools.digits, frozenset(range(1, 11)) | {15})
        self.assertEqual(pools.multipliers, frozenset({5, 10, 15, 20}))

        pools = load_attested_pools(NATURAL_SYSTEMS_CSV, FULL_RANGE, multipliers=[10, 20])
        self.assertEqual(pools.multipliers, frozenset({10, 20}))

        pools = load_attested_pools(None, FULL_RANGE, [1, 2], [5])
        self.assertEqual((pools.digits, pools.multipliers), (frozenset({1, 2}), frozenset({5})))

        with self.assertRaises(ConfigurationException):
            load_attested_pools(None, FULL_RANGE, [1, 2], None)


def test_systems_round_trip(tmp_path):
    path = str(tmp_path / "systems.csv")
    write_systems(path, [mandarin_like_system(), karo_batak_system()])
    loaded = load_systems(path)
    assert [s.label for s in loaded] == ["karo_batak", "mandarin_like"]
    assert loaded[0].words() == karo_batak_system().words()
    assert loaded[0].family == "Austronesian"
    assert loaded[1].family is None


def test_value_mismatch_names_the_row(tmp_path):
    path = write_text(tmp_path / "bad.csv", HEADER + "x,42,4 * 10 + 2\nx,43,4 * 10 + 2\n")
    with pytest.raises(BadExpressionException) as exc_info:
        load_systems(path, NumberRange(42, 43))
    assert exc_info.value.row_index == 3


@pytest.mark.parametrize(
    "rows",
    [
        "x,1,one\n",
        "x,1,1 +\n",
        "x,one,1\n",
        ",1,1\n",
        "x,1,1\nx,1,1\n",
        "x,1,2 - 1 - 1\n",
        "x,1,¹\n",
        "x,1,2 * ¹\n",
        "x,1,١\n",
        "x,١,1\n",
    ],
)
def test_malformed_rows(tmp_path, rows):
    path = write_text(tmp_path / "bad.csv", HEADER + rows)
    with pytest.raises(BadExpressionException):
        load_systems(path, NumberRange(1, 1))


def test_missing_column(tmp_path):
    path = write_text(tmp_path / "bad.csv", "language,tokens\nx,1\n")
    with pytest.raises(BadExpressionException) as exc_info:
        load_systems(path, NumberRange(1, 1))
    assert exc_info.value.row_index == 1


def test_missing_number(tmp_path):
    path = write_text(tmp_path / "short.csv", HEADER + flat_rows("flat", NumberRange(1, 98)))
    with pytest.raises(MissingNumberException) as exc_info:
        load_systems(path)
    assert (exc_info.value.language, exc_info.value.number) == ("flat", 99)


def test_empty_measure_list_writes_header_only(tmp_path):
    path = str(tmp_path / "measures.csv")
    export_measures([], path)
    with open(path, encoding="utf-8") as f:
        assert f.read() == ",".join(MEASURE_CSV_HEADER) + "\n"


def test_measures_round_trip(tmp_path):
    path = str(tmp_path / "measures.csv")
    reports = MeasureCalculator(make_prior("power2", FULL_RANGE)).score_all(
        [mandarin_like_system(), karo_batak_system()]
    )
    export_measures(reports, path)
    loaded = CsvMeasureFileParser().parse(path)
    assert [r.system_label for r in loaded] == ["karo_batak", "mandarin_like"]
    original = {r.system_label: r for r in reports}
    for report in loaded:
        expected = original[report.system_label]
        assert report.irregularity_bits == pytest.approx(expected.irregularity_bits, abs=1e-6)
        assert report.processing_bits == pytest.approx(expected.processing_bits, abs=1e-6)
        assert report.lexicon_size == expected.lexicon_size


def test_local_frontier_file(tmp_path):
    path = str(tmp_path / "local.csv")
    calculator = MeasureCalculator(make_prior("power2", FULL_RANGE))
    seed = calculator.score(karo_batak_system())
    member = calculator.score(mandarin_like_system())
    CsvFrontierFileParser.write_local_frontier(path, seed, [("best", member)])
    rows = CsvFrontierFileParser.parse(path)
    assert [(r["system_id"], r["direction"], r["is_seed"]) for r in rows] == [
        ("karo_batak", "", "1"),
        ("mandarin_like", "best", "0"),
    ]


def test_history_file(tmp_path):
    frontier = str(tmp_path / "frontier.csv")
    history = [GaGeneration(0, 3, 12, 1.5), GaGeneration(1, 4, 20, 2.25)]
    path = CsvFrontierFileParser.write_history(frontier, history)
    assert path == str(tmp_path / "frontier_history.csv")
    rows = CsvFrontierFileParser.parse(path)
    assert [r["hypervolume"] for r in rows] == ["1.500000", "2.250000"]
    assert systems_path(frontier) == str(tmp_path / "frontier_systems.csv")


def test_run_manifest(tmp_path):
    out = str(tmp_path / "measures.csv")
    writer = RunManifestWriter("measure", {"arguments": {"range": None}}, 0)
    writer.add_input(NATURAL_SYSTEMS_CSV)
    writer.add_input(str(tmp_path / "missing.csv"))
    writer.add_output("measures", out)
    path = writer.write(out)

    assert path == manifest_path(out)
    with open(path, encoding="utf-8") as f:
        manifest = json.load(f)
    assert manifest["command"] == "measure"
    assert list(manifest["input_hashes"]) == [NATURAL_SYSTEMS_CSV]
    assert len(manifest["input_hashes"][NATURAL_SYSTEMS_CSV]) == 64
    assert manifest["outputs"] == {"measures": out}
    assert manifest["timestamp"]
    assert not [n for n in os.listdir(tmp_path) if n.endswith(".tmp")]
