import doctest

import descpoly.descent
import descpoly.eulerian
import descpoly.juggling
import descpoly.permutation
import descpoly.polynomial
import pytest


@pytest.mark.parametrize(
    "module",
    [
        descpoly.polynomial,
        descpoly.eulerian,
        descpoly.permutation,
        descpoly.descent,
        descpoly.juggling,
    ],
)
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
