from fractions import Fraction

import pytest

from arthurcomb.params import ClassicalGroup, arthur_parameter, block


@pytest.fixture
def ex1():
    """Sp(4,R), psi = I_{3/2} (x) R[2] + triv (x) R[1]."""
    return arthur_parameter(
        ClassicalGroup("Sp", 2), [block(Fraction(3, 2), 2), block(0, 1)]
    )
