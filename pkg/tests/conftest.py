"""Shared fixtures: standard small groups and the shipped corpus."""

from __future__ import annotations

from pathlib import Path

import pytest

from newmanlab.corpus import (alternating, cyclic, dihedral, elementary_abelian,
                              load_corpus, quaternion8, symmetric)
from newmanlab.groups import direct_product

CORPUS_PATH = Path(__file__).resolve().parent.parent / "corpus" / "standard.tsv"


@pytest.fixture(scope="session")
def corpus_entries():
    return load_corpus(CORPUS_PATH, validate=False)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric(5)


@pytest.fixture(scope="session")
def a4():
    return alternating(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def d8():
    return dihedral(4)


@pytest.fixture(scope="session")
def q8():
    return quaternion8()


@pytest.fixture(scope="session")
def v4():
    return elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def c12():
    return cyclic(12)


@pytest.fixture(scope="session")
def s3xc4():
    return direct_product(symmetric(3), cyclic(4))
