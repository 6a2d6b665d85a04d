"""Shared fixtures: paths to bundled test data and small builders."""

from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"
LEXICON_DIR = DATA_DIR / "lexicons"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def lexicon_dir():
    return LEXICON_DIR


@pytest.fixture
def mini_aoa():
    from readgauge.lexicons import KIND_AOA, load_lexicon

    return load_lexicon(LEXICON_DIR / "aoa.csv", KIND_AOA)


@pytest.fixture
def mini_familiarity():
    from readgauge.lexicons import KIND_FAMILIARITY, load_lexicon

    return load_lexicon(LEXICON_DIR / "familiarity.csv", KIND_FAMILIARITY)


@pytest.fixture
def write_lexicon(tmp_path):
    """Write rows to a temporary delimited lexicon file and return its path."""

    def _write(rows, header="word,value", name="lex.csv", delimiter=","):
        lines = [header] + [delimiter.join(str(c) for c in row) for row in rows]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write
