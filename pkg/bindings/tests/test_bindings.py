"""Tests for the object-style wrapper.

The equivalence block runs the engine's command line in a subprocess for
each fixture text and requires every wrapper function to return the same
serialized decimal, so the wrapper provably adds no computation.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

import readgauge_bindings
from readgauge.errors import EmptyText, NonPositiveRate
from readgauge_bindings import ConfigurationError, RequestHandle, request

DATA_DIR = Path(__file__).parent / "data"
LEXICON_DIR = DATA_DIR / "lexicons"
FIXTURES = sorted(DATA_DIR.glob("fixture_*.txt"))

CLASSIC_METHODS = {
    "fkgl": "FKGL",
    "fogi": "FOGI",
    "smog": "SMOG",
    "cole": "COLE",
    "auto": "AUTO",
}


@pytest.fixture(autouse=True)
def clean_lexicon_env(monkeypatch):
    monkeypatch.delenv("READGAUGE_LEXICON_DIR", raising=False)


@pytest.fixture
def lexicon_env(monkeypatch):
    monkeypatch.setenv("READGAUGE_LEXICON_DIR", str(LEXICON_DIR))


def run_engine_cli(*argv):
    result = subprocess.run(
        [sys.executable, "-m", "readgauge", *argv],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "READGAUGE_LEXICON_DIR": str(LEXICON_DIR)},
    )
    assert result.returncode == 0, result.stderr
    return json.loads(result.stdout)


class TestCliEquivalence:
    def test_fixture_count(self):
        assert len(FIXTURES) == 5

    @pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
    def test_all_seven_functions_match_cli(self, path, lexicon_env):
        handle = request(path.read_text(encoding="utf-8"))

        adjusted = {
            r["formula"]: r["score"]
            for r in run_engine_cli("score", "--formula", "all", "--input", str(path))
        }
        original = {
            r["formula"]: r["score"]
            for r in run_engine_cli(
                "score", "--formula", "all", "--variant", "original", "--input", str(path)
            )
        }
        minutes = run_engine_cli("readtime", "--wpm", "240", "--input", str(path))[0][
            "minutes"
        ]["240"]

        checked = {"NERF": handle.NERF()}
        assert json.dumps(checked["NERF"]) == json.dumps(adjusted["nerf"])
        for formula, method in CLASSIC_METHODS.items():
            value = getattr(handle, method)()
            checked[method] = value
            assert json.dumps(value) == json.dumps(adjusted[formula]), method
            assert json.dumps(getattr(handle, method)(adjusted=False)) == json.dumps(
                original[formula]
            ), method
        checked["RT"] = handle.RT(240)
        assert json.dumps(checked["RT"]) == json.dumps(minutes)
        assert len(checked) == 7


class TestAliases:
    @pytest.mark.parametrize(
        "alias, shortcut",
        [
            ("new_english_readability_formula", "NERF"),
            ("flesch_kincaid_grade_level", "FKGL"),
            ("fog_index", "FOGI"),
            ("smog_index", "SMOG"),
            ("coleman_liau_index", "COLE"),
            ("automated_readability_index", "AUTO"),
            ("read_time", "RT"),
        ],
    )
    def test_long_forms_are_the_same_functions(self, alias, shortcut):
        assert getattr(RequestHandle, alias) is getattr(RequestHandle, shortcut)

    def test_alias_call_path(self):
        handle = request("A cat sat on the mat. A dog ran away.")
        assert handle.flesch_kincaid_grade_level() == handle.FKGL()
        assert handle.read_time(wpm=300) == handle.RT(wpm=300)


class TestScoring:
    def test_fkgl_original_on_known_fixture(self):
        handle = request(FIXTURES[0].read_text(encoding="utf-8"))
        assert handle.FKGL(adjusted=False) == pytest.approx(6.01, abs=1e-9)

    def test_default_is_adjusted(self):
        handle = request(FIXTURES[0].read_text(encoding="utf-8"))
        assert handle.FKGL() == pytest.approx(10.409, abs=1e-9)

    def test_reading_time_default_rate(self):
        handle = request(FIXTURES[1].read_text(encoding="utf-8"))
        assert handle.RT() == 2.0

    def test_nerf_without_configuration(self):
        handle = request("The dog ran.")
        with pytest.raises(ConfigurationError) as excinfo:
            handle.NERF()
        assert "READGAUGE_LEXICON_DIR" in str(excinfo.value)

    def test_explicit_lexicon_paths_bypass_env(self):
        handle = request(
            "The dog ran.",
            aoa_path=LEXICON_DIR / "aoa.csv",
            familiarity_path=LEXICON_DIR / "familiarity.csv",
        )
        assert isinstance(handle.NERF(), float)

    def test_engine_errors_propagate(self):
        with pytest.raises(EmptyText):
            request("???").FKGL()
        with pytest.raises(NonPositiveRate):
            request("A cat sat.").RT(0)

    def test_non_string_rejected(self):
        with pytest.raises(TypeError):
            request(12345)


class TestHandleBehavior:
    def test_text_is_immutable(self):
        handle = request("A cat sat.")
        assert handle.text == "A cat sat."
        with pytest.raises(AttributeError):
            handle.text = "something else"

    def test_stats_computed_once(self, monkeypatch):
        calls = {"n": 0}
        real = readgauge_bindings.text_stats

        def counting(text):
            calls["n"] += 1
            return real(text)

        monkeypatch.setattr(readgauge_bindings, "text_stats", counting)
        handle = request("A cat sat on the mat. A dog ran away.")
        handle.FKGL()
        handle.COLE()
        handle.RT()
        assert calls["n"] == 1

    def test_handles_are_independent(self):
        first = request("A cat sat.")
        second = request("Extraordinary recommendations demonstrated complications.")
        assert first.FKGL() != second.FKGL()
