import pytest

from arquiver.complexes import iso_normalize
from arquiver.errors import EmptyString
from arquiver.strings import HomotopyString, enumerate_strings, parse
from arquiver.triangles import (
    ar_triangle_ending,
    ar_triangle_starting,
    diagonal,
    m_doubleprime,
    m_prime,
    omega_minus,
    omega_minus_upper,
    omega_plus,
    omega_plus_lower,
    omega_plus_table,
    tau,
    tau_inverse,
)


def test_upper_right_of_stalks(q16):
    up, m = omega_plus(q16, parse(q16, "1_7"))
    assert up.render() == "e i" and m == -1
    up, m = omega_plus(q16, parse(q16, "1_3"))
    assert up.render() == "k- l m n o p s c" and m == 0
    up, m = omega_plus(q16, parse(q16, "1_5-"))
    assert up is None and m is None


def test_table_keeps_literal_offsets(q16):
    # the as-tabulated offset for A stalks of index > 1 stays 0; the
    # production value is the mesh-consistent -1
    _, lit, row = omega_plus_table(q16, parse(q16, "1_7"))
    assert (lit, row) == (0, "A")
    assert omega_plus(q16, parse(q16, "1_7"))[1] == -1
    _, lit, row = omega_plus_table(q16, parse(q16, "1_15"))
    assert (lit, row) == (0, "A'")


def test_upper_right_of_words(q16):
    up, m = omega_plus(q16, parse(q16, "d"))
    assert up.render() == "e d" and m == -1
    up, m = omega_plus(q16, parse(q16, "j-"))
    assert up.render() == "h j-" and m == -1
    up, m = omega_plus(q16, parse(q16, "k-"))
    assert up.render() == "j- k-" and m == 0
    up, m = omega_plus(q16, parse(q16, "b f"))
    assert up.render() == "k- l m n o p s c b f" and m == 0
    assert omega_plus(q16, parse(q16, "k"))[0] is None  # plain arrow of length 1


def test_lower_left_values(q16):
    assert omega_minus(q16, parse(q16, "e i")).render() == "1_7"
    assert omega_minus(q16, parse(q16, "1_3")) is None
    assert omega_minus(q16, parse(q16, "1_6")).render() == "1_8"
    assert omega_minus(q16, parse(q16, "1_8")).render() == "1_9"
    assert omega_minus(q16, parse(q16, "1_13")).render() == "1_12"
    assert omega_minus(q16, parse(q16, "1_10")).render() == "1_9-"
    assert omega_minus(q16, parse(q16, "1_1")).render() == "u-"


def test_lower_and_upper_mirrors(q16):
    assert omega_plus_lower(q16, parse(q16, "e i")).render() == "1_5"
    assert omega_minus_upper(q16, parse(q16, "1_7")).render() == "h j-"
    # the defining identity: lower-right = inverted upper-right of the inverse
    w = parse(q16, "b f e i")
    lhs = omega_plus_lower(q16, w)
    rhs = omega_plus(q16, w.inverse())[0].inverse()
    assert lhs == rhs


def test_adjointness_exhaustive(q1111):
    for w in enumerate_strings(q1111, 8, include_trivial=True):
        lo = omega_minus(q1111, w)
        if lo is not None:
            assert omega_plus(q1111, lo)[0] == w, w.render()
        up = omega_minus_upper(q1111, w)
        if up is not None:
            assert omega_plus_lower(q1111, up) == w, w.render()


def test_m_doubleprime(q16):
    assert m_doubleprime(q16, parse(q16, "1_7")) == -1
    # empty upper-right falls through to the lower-right neighbour
    assert omega_plus(q16, parse(q16, "1_5-"))[0] is None
    assert m_doubleprime(q16, parse(q16, "1_5-")) == m_prime(
        q16, omega_plus_lower(q16, parse(q16, "1_5-")))


def test_triangle_starting_at_edge_stalk(q16):
    tri = ar_triangle_starting(q16, 0, parse(q16, "1_7"))
    assert [(m, w.render()) for m, w in tri.middles] == [(-1, "e i")]
    assert (tri.end[0], tri.end[1].render()) == (-1, "1_5")
    assert tri.corner == (-1, parse(q16, "1_7"))


def test_triangle_starting_mid_mesh(q16):
    tri = ar_triangle_starting(q16, -1, parse(q16, "e i"))
    assert [(m, w.render()) for m, w in tri.middles] == [(-2, "b f e i"), (-1, "1_5")]
    assert (tri.end[0], tri.end[1].render()) == (-2, "b f")


def test_triangle_ending(q16):
    tri = ar_triangle_ending(q16, -3, parse(q16, "1_7"))
    assert (tri.start[0], tri.start[1].render()) == (-2, "j-")
    assert [(m, w.render()) for m, w in tri.middles] == [(-3, "h j-")]
    tri = ar_triangle_ending(q16, -1, parse(q16, "1_5"))
    assert (tri.start[0], tri.start[1].render()) == (0, "1_7")


def test_middle_count_edge_vs_interior(q16):
    # edge members have one middle term, interior members two
    for text, m, n in [("1_7", 0, 1), ("k-", -2, 1), ("e i", -1, 2),
                       ("b f e i", -2, 2), ("d", 0, 2), ("1_9-", 0, 2)]:
        tri = ar_triangle_starting(q16, m, parse(q16, text))
        assert len(tri.middles) == n, text


def test_tau_relations(q16):
    node = (0, parse(q16, "1_7"))
    for _ in range(5):
        node = tau_inverse(q16, *node)
    assert node == (-3, parse(q16, "1_7"))
    node = (0, parse(q16, "1_15"))
    for _ in range(6):
        node = tau_inverse(q16, *node)
    assert node == (-2, parse(q16, "1_15"))


def test_tau_roundtrip(q1111):
    for w in enumerate_strings(q1111, 6, include_trivial=True):
        m1, w1 = tau_inverse(q1111, 0, w)
        m2, w2 = tau(q1111, m1, w1)
        assert iso_normalize(q1111, m2, w2) == iso_normalize(q1111, 0, w)


def test_diagonals(q16):
    d = diagonal(q16, 0, parse(q16, "1_7"), "upper-right", 3)
    assert [(m, w.render()) for m, w in d] == \
        [(0, "1_7"), (-1, "e i"), (-2, "b f e i")]
    d = diagonal(q16, 0, parse(q16, "1_9-"), "upper-right", 5)
    assert [(m, w.render()) for m, w in d] == \
        [(0, "1_9-"), (0, "1_10"), (0, "1_11"), (0, "1_12"), (0, "1_13")]
    d = diagonal(q16, 0, parse(q16, "1_9-"), "lower-right", 3)
    assert [(m, w.render()) for m, w in d] == [(0, "1_9-"), (0, "1_8-"), (0, "1_6-")]
    # an edge stalk has no lower-right diagonal beyond itself
    d = diagonal(q16, 0, parse(q16, "1_7"), "lower-right", 4)
    assert len(d) == 1


def test_diagonal_growth_follows_the_walk(q16):
    # once the upper-right diagonal grows by walk steps, successive entries
    # differ by the successive steps of the same walk
    d = diagonal(q16, 0, parse(q16, "1_3"), "upper-right", 4)
    texts = [w.render() for _, w in d]
    assert texts[1] == "k- l m n o p s c"
    assert texts[2] == "j- " + texts[1]
    assert texts[3] == "h j- " + texts[1]


def test_empty_string_rejected(q16):
    with pytest.raises(EmptyString):
        omega_plus(q16, HomotopyString.empty(q16))
    with pytest.raises(EmptyString):
        ar_triangle_starting(q16, 0, HomotopyString.empty(q16))
