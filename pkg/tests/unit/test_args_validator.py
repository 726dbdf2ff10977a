import pytest

from util.args_validator import ArgsValidator, validate
from util.parser import build_parser


def test_valid_arguments_pass():
    args = validate(
        build_parser(),
        ["ga", "--pop", "5", "--prior", "power1.5", "--range", "1:30",
         "--constraints", "sequential-digits:9", "--out", "g.csv"],
    )
    assert args.pop == 5
    assert args.prior == "power1.5"


def test_validators_return_true():
    validator = ArgsValidator(build_parser(), ["measure", "--input", "a.csv", "--out", "b.csv"])
    assert validator._positive_int_validator() is True
    assert validator._seed_validator() is True
    assert validator._range_validator() is True
    assert validator._prior_validator() is True
    assert validator._constraints_validator() is True


@pytest.mark.parametrize(
    "argv, message",
    [
        (["sample-baselines", "--batches", "0", "--out", "b.csv"], "--batches must be a positive integer"),
        (["sample-baselines", "--per-batch", "-2", "--out", "b.csv"], "--per-batch must be a positive integer"),
        (["ga", "--seed", "-1", "--out", "g.csv"], "--seed must be non-negative"),
        (["measure", "--input", "a.csv", "--range", "1-99", "--out", "b.csv"], "--range"),
        (["measure", "--input", "a.csv", "--range", "9:1", "--out", "b.csv"], "--range"),
        (["measure", "--input", "a.csv", "--prior", "zipf", "--out", "b.csv"], "--prior"),
        (["ga", "--constraints", "odd-digits", "--out", "g.csv"], "--constraints"),
        (["local-frontier", "--input", "a.csv", "--system", "x", "--gamma", "0", "--out", "l.csv"],
         "--gamma must be a positive integer"),
    ],
)
def test_invalid_values_exit_with_usage_error(argv, message, capsys):
    with pytest.raises(SystemExit) as exc_info:
        validate(build_parser(), argv)
    assert exc_info.value.code == 2
    assert message in capsys.readouterr().err
