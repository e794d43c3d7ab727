from __future__ import annotations

from pathlib import Path

import pytest

from starkit.corpus import CorpusFile, parse

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_FILES = ["one.fincat", "chain3.fincat", "ptset2.fincat",
                 "arrow.fincat", "broken.fincat"]


def load(name: str) -> CorpusFile:
    return parse((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def one_corpus() -> CorpusFile:
    return load("one.fincat")


@pytest.fixture(scope="session")
def chain3_corpus() -> CorpusFile:
    return load("chain3.fincat")


@pytest.fixture(scope="session")
def ptset2_corpus() -> CorpusFile:
    return load("ptset2.fincat")


@pytest.fixture(scope="session")
def one(one_corpus):
    return one_corpus.category("One")


@pytest.fixture(scope="session")
def chain3(chain3_corpus):
    return chain3_corpus.category("Chain3")


@pytest.fixture(scope="session")
def ptset2(ptset2_corpus):
    return ptset2_corpus.category("PtSet2")


@pytest.fixture(scope="session")
def arrow():
    return load("arrow.fincat").category("Arrow")
