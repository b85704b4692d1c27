"""Every module's docstring examples run as part of the suite."""

import doctest

import pytest

import ginvlab
from ginvlab import catalog, cli, engine, laws, matrices, rings, sampling, scalars

MODULES = [ginvlab, scalars, matrices, engine, rings, laws, sampling, catalog, cli]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0
