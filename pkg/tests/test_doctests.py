"""Run every module's docstring examples as tests."""

import doctest

import pytest

import artifact.chebyshev
import artifact.exact_algebra
import artifact.genfun
import artifact.patterns

MODULES = [
    artifact.exact_algebra,
    artifact.chebyshev,
    artifact.patterns,
    artifact.genfun,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_docstring_examples(module):
    result = doctest.testmod(module, verbose=False)
    assert result.attempted > 0, f"{module.__name__} has no examples"
    assert result.failed == 0
