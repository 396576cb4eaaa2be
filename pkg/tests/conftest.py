"""Session-scoped fixtures over the exhaustive small-graph corpus."""
from __future__ import annotations

import pytest

from oracles import load_corpus


@pytest.fixture(scope="session")
def corpus_all():
    """Every connected subcubic graph with 1 <= n <= 9 (838 graphs)."""
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_n8():
    """Every connected subcubic graph with n <= 8, 3-regular ones included."""
    return load_corpus(max_n=8)


@pytest.fixture(scope="session")
def corpus_n8_noncubic():
    return load_corpus(max_n=8, include_cubic=False)


@pytest.fixture(scope="session")
def corpus_noncubic():
    """The n <= 9 corpus without its 3-regular members (830 graphs)."""
    return load_corpus(include_cubic=False)
