import pytest

from arquiver.quiver import Parameters, Quiver, normalize_parameters

# the 16-vertex example quiver: parameters (2,3,4,2), vertices labelled 1..16,
# arrows labelled a..u
VLAB16 = {
    "F": "1", "B1": "2", "A1": "3", "B2": "4", "A2": "5", "D0": "6", "A3": "7",
    "D1": "8", "C": "9", "D'3": "10", "D'2": "11", "D'1": "12", "D'0": "13",
    "B'1": "14", "A'2": "15", "A'1": "16",
}
ALAB16 = {
    "a1": "a", "g2": "b", "g1": "c", "a2": "d", "g4": "e", "g3": "f",
    "a3": "g", "g6": "h", "g5": "i", "a4": "j", "a5": "k", "b6": "l",
    "b5": "m", "b4": "n", "b3": "o", "b2": "p", "d4": "q", "d3": "r",
    "b1": "s", "d2": "t", "d1": "u",
}

# smallest parameter quadruple per non-hereditary normal-form variation
MINIMAL_SETS = [(0, 1, 0, 1), (0, 1, 1, 0), (1, 1, 0, 1), (1, 1, 1, 0), (1, 1, 1, 1)]


def make_quiver(r1, r2, s1, s2, **kw):
    return Quiver(normalize_parameters(Parameters(r1, r2, s1, s2)), **kw)


@pytest.fixture(scope="session")
def q16():
    return make_quiver(2, 3, 4, 2, vertex_labels=VLAB16, arrow_labels=ALAB16)


@pytest.fixture(scope="session")
def q1111():
    return make_quiver(1, 1, 1, 1)


@pytest.fixture(scope="session")
def small_quivers():
    return {ps: make_quiver(*ps) for ps in MINIMAL_SETS}
