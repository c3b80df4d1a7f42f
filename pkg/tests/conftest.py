import pytest

from hornrows import imp, nc, normalize


@pytest.fixture
def ref6():
    """The six-variable worked example used throughout the golden tests."""
    return normalize([imp({1, 2, 3}, {5, 6}), imp({3, 4, 5}, {6}), nc({1, 3, 6})], 6)


REF6_DIMACS = """\
c six variables, four Horn clauses
p cnf 6 4
-1 -2 -3 5 0
-1 -2 -3 6 0
-3 -4 -5 6 0
-1 -3 -6 0
"""

REF6_NATIVE = """\
# six-variable example
vars 6
imp 1 2 3 -> 5 6
imp 3 4 5 -> 6
nc 1 3 6
"""


@pytest.fixture
def ref6_dimacs():
    return REF6_DIMACS


@pytest.fixture
def ref6_native():
    return REF6_NATIVE
