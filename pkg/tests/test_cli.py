import json
from fractions import Fraction

import pytest
from mpmath import mp, mpf
from pydantic import ValidationError

from cli.main import main, normalize_argv
from cli.schemas import BdimOutput, CommandConfig, EvalOutput, GenfunOutput, MtvGuessOutput, ShuffleOutput
from cli.shared import get_evaluator, parse_rational, reset_caches
from models.eval_config import EvalConfig
from models.letter_word import LetterWord
from services.eval_cache_service import CACHE_ENV


@pytest.fixture(autouse=True)
def isolated(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    reset_caches()
    yield
    reset_caches()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_rational():
    assert str(parse_rational("-1/2")) == "-1/2"
    assert parse_rational("+3") == 3
    for text in ("0.5", "1/", "a", "1/-2"):
        with pytest.raises(ValueError):
            parse_rational(text)


def test_negative_rational_flag_is_joined():
    assert normalize_argv(["eval", "--c", "-1/2", "--index", "2"]) == ["eval", "--c=-1/2", "--index", "2"]


def test_eval_index_one_two_is_zeta_three(capsys):
    code, out, _ = run(capsys, "eval", "--index", "1,2", "--c", "0", "--digits", "40", "--no-cache", "--jobs", "1")
    assert code == 0
    with mp.workdps(50):
        assert abs(mpf(out.strip()) - mp.zeta(3)) < mpf(10) ** -38


def test_eval_json_and_negative_parameter(capsys):
    code, out, _ = run(capsys, "eval", "--index", "2", "--c", "-1", "--digits", "30", "--json", "--no-cache")
    assert code == 0
    result = EvalOutput.model_validate_json(out)
    assert result.index == [2] and result.word == "10" and result.c == "-1"
    with mp.workdps(40):
        assert abs(mpf(result.value) - mp.pi ** 2 / 4) < mpf(10) ** -28
    assert result.model_dump_json(indent=2) + "\n" == out


def test_eval_uses_cache_file(capsys, tmp_path):
    path = str(tmp_path / "cache.json")
    first = run(capsys, "eval", "--word", "1100", "--c=-1/2", "--digits", "25", "--cache", path, "--json")
    second = run(capsys, "eval", "--word", "1100", "--c=-1/2", "--digits", "25", "--cache", path, "--json")
    assert first[0] == second[0] == 0
    a, b = EvalOutput.model_validate_json(first[1]), EvalOutput.model_validate_json(second[1])
    assert not a.cached and b.cached
    assert a.value == b.value


def test_dual(capsys):
    assert run(capsys, "dual", "--index", "3")[:2] == (0, "1,2\n")
    assert run(capsys, "dual", "--word", "100")[:2] == (0, "110\n")


def test_shuffle(capsys):
    code, out, _ = run(capsys, "shuffle", "2", "3")
    assert code == 0
    assert out.strip() == "6*Z(1,4) + 3*Z(2,3) + Z(3,2)"

    code, out, _ = run(capsys, "shuffle", "10", "100", "--json")
    result = ShuffleOutput.model_validate_json(out)
    assert {"index": [1, 4], "word": None, "coeff": "6"} in [t.model_dump() for t in result.terms]


def test_bdim(capsys):
    code, out, _ = run(capsys, "bdim", "--max-weight", "9")
    assert code == 0
    assert out.strip() == "1 0 1 1 3 4 9 15 31 55"

    code, out, _ = run(capsys, "bdim", "--max-weight", "6", "--json")
    assert json.loads(out) == BdimOutput(dims=[1, 0, 1, 1, 3, 4, 9], ranks=[0, 0, 0, 1, 1, 4, 7]).model_dump()


def test_bdim_above_default_needs_long(capsys):
    code, _, err = run(capsys, "bdim", "--max-weight", "11")
    assert code == 2
    assert "--long" in err


def test_mtv_guess(capsys):
    code, out, _ = run(capsys, "mtv-guess", "--terms", "34", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["terms"][-2:] == [105404, 122834]
    assert data["consistent"] is True


def test_mtv_guess_bad_seed(capsys):
    code, _, err = run(capsys, "mtv-guess", "--seed", "1,0,1,1,2,3")
    assert code == 2
    assert "n = 5" in err


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--max-weight", "8", "--json")
    assert code == 0
    rows = {row["name"]: row for row in json.loads(out)["rows"]}
    assert rows["MZV"]["matches"] and rows["MTV"]["matches"] and rows["B"]["matches"]
    assert rows["B"]["computed"] == [1, 0, 1, 1, 3, 4, 9, 15, 31]
    assert rows["A_MTV_c"]["golden"] == [1, 0, 1, 1, 3, 4, 9, 13, 28]


def test_genfun_classical(capsys):
    code, out, _ = run(capsys, "genfun", "--c", "0", "--order", "3", "--digits", "60", "--json", "--jobs", "1")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["path"] == "gauss"
    assert len(data["coefficients"]) == 10


@pytest.mark.parametrize("argv", [
    ("eval", "--index", "2", "--c", "1"),
    ("eval", "--index", "2", "--c", "0.5"),
    ("eval", "--index", "2", "--c", "0", "--digits", "10"),
    ("eval", "--index", "2,1", "--c", "0"),
    ("eval", "--index", "2", "--c", "0", "--cut", "3/2"),
    ("genfun", "--c", "0", "--order", "0"),
    ("nonsense",),
    ("eval", "--index", "2", "--c", "0", "--unknown"),
])
def test_validation_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_non_convergent_parameter_exits_one(capsys):
    code, _, err = run(capsys, "eval", "--index", "2", "--c=-4", "--no-cache")
    assert code == 1
    assert "converge" in err


@pytest.mark.parametrize("argv", [
    ("relations", "--weight", "5", "--c-samples", "0,-1,1/2,3/2"),
    ("relations", "--weight", "5", "--c-samples", "1/2,1/3,-1"),
    ("relations", "--weight", "5", "--c-samples", "0,-1,0.5"),
    ("relations", "--weight", "5", "--verify", "--verify-samples", "2/5,0.3"),
    ("relations", "--weight", "5", "--verify-samples", "0.3"),
    ("relations", "--weight", "5", "--verify", "--c-samples", "0,-1,1/2", "--verify-samples", "1/2,2/5"),
])
def test_relation_samples_rejected_before_evaluating(capsys, argv):
    code, out, err = run(capsys, *argv, "--jobs", "1")
    assert code == 2
    assert out == ""
    assert err
    assert not get_evaluator()._series_cache


def test_verify_samples_may_repeat_discovery_samples_without_verify():
    config = CommandConfig(command="relations", weight=5, c_samples="0,-1,2/5", verify_samples="2/5")
    assert config.c_samples[-1] == config.verify_samples[0]
    with pytest.raises(ValidationError):
        CommandConfig(command="relations", weight=5, c_samples="0,-1,2/5", verify_samples="2/5", verify=True)


@pytest.mark.slow
def test_relations_in_weight_six_report_printed_count(capsys):
    code, out, _ = run(capsys, "relations", "--weight", "6", "--json", "--jobs", "1")
    assert code == 0
    data = json.loads(out)
    assert data["relations"] == []
    assert data["dimension_estimate"] == 9
    assert data["printed_count"] == 0


def test_tables_above_default_needs_long(capsys):
    code, out, err = run(capsys, "tables", "--max-weight", "11")
    assert code == 2
    assert out == ""
    assert "--long" in err


def test_reset_caches_empties_shared_evaluator():
    evaluator = get_evaluator()
    evaluator.evaluate_word(LetterWord.parse("100"), EvalConfig.from_digits(Fraction(0), 20))
    assert evaluator._series_cache
    reset_caches()
    assert not evaluator._series_cache
    assert get_evaluator() is not evaluator


@pytest.mark.parametrize("model, argv", [
    (ShuffleOutput, ("shuffle", "10", "100")),
    (BdimOutput, ("bdim", "--max-weight", "6")),
    (MtvGuessOutput, ("mtv-guess", "--terms", "20")),
    (GenfunOutput, ("genfun", "--c", "0", "--order", "2", "--digits", "40", "--jobs", "1")),
])
def test_json_output_round_trips(capsys, model, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert model.model_validate_json(out).model_dump_json(indent=2) + "\n" == out


def test_binary_digits_read_as_word_unless_wrapped(capsys):
    as_word = run(capsys, "shuffle", "10", "2")[1]
    assert as_word == run(capsys, "shuffle", "2", "2")[1]

    code, out, _ = run(capsys, "shuffle", "Z(10)", "2", "--json")
    assert code == 0
    terms = ShuffleOutput.model_validate_json(out).terms
    assert all(sum(term.index) == 12 for term in terms)

    code, out, _ = run(capsys, "shuffle", "--help")
    assert code == 0
    assert "Z(10)" in out
