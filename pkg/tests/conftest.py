import os
from pathlib import Path

import pytest

from suturant import parse_diagram

CORPUS = Path(__file__).resolve().parents[1] / "corpus"

SEED = int(os.environ.get("SUTURANT_SEED", "20260808"))


def corpus_path(name):
    return CORPUS / f"{name}.hd"


def load(name):
    return parse_diagram(corpus_path(name).read_text())


def corpus_names():
    return sorted(p.stem for p in CORPUS.glob("*.hd"))


@pytest.fixture
def trefoil():
    return load("trefoil")


@pytest.fixture
def hopf():
    return load("hopf")


@pytest.fixture
def figure8():
    return load("figure8")
