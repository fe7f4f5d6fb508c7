import pytest

from lgmirror import (
    enumerate_corpus,
    enumerate_polynomials,
    parse_polynomial,
    verify_mirror,
)

MAX_DET = 300
MAX_EXP = 8


@pytest.fixture(scope="session")
def corpus_fs():
    """Every polynomial of the five types with parameters <= 8 and |det| <= 300."""
    return enumerate_polynomials(MAX_EXP, MAX_DET)


@pytest.fixture(scope="session")
def corpus_all_exp8():
    """All five types with parameters <= 8, no determinant cap."""
    return enumerate_polynomials(MAX_EXP, None)


@pytest.fixture(scope="session")
def corpus_pairs(corpus_fs):
    return list(enumerate_corpus(MAX_DET, MAX_EXP))


@pytest.fixture(scope="session")
def mirror_reports(corpus_pairs):
    return [(f, G, verify_mirror(f, G)) for f, G in corpus_pairs]


def poly(text):
    return parse_polynomial(text)
