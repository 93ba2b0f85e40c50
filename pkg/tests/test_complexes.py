import pytest

from arquiver.complexes import (
    BandComplexDescriptor,
    PathLabel,
    StringComplex,
    band_ar_triangle,
    build_string_complex,
    iso_normalize,
    shift,
    verify_d_squared,
)
from arquiver.errors import PreconditionError
from arquiver.strings import HomotopyString, enumerate_strings, parse


def _labels(q, x):
    return {d: [f"P_{q.vertex_token(v)}" for _, v in slots]
            for d, slots in x.objects.items()}


def test_worked_complex(q16):
    x = build_string_complex(q16, 0, parse(q16, "u- c b f"))
    assert _labels(q16, x) == {-1: ["P_1"], 0: ["P_16", "P_3"], 1: ["P_5"]}
    d_in = x.differentials[-1]
    assert [[e.render() if e else None for e in row] for row in d_in] == \
        [["p_u"], ["p_c"]]
    d_out = x.differentials[0]
    assert [[e.render() if e else None for e in row] for row in d_out] == \
        [[None, "p_bf"]]
    assert verify_d_squared(x)
    assert x.summand_count() == len(parse(q16, "u- c b f").partition()) + 1


def test_stalk_and_zero_complexes(q16):
    x = build_string_complex(q16, 3, parse(q16, "1_7"))
    assert _labels(q16, x) == {3: ["P_7"]}
    assert not x.differentials
    z = build_string_complex(q16, 0, HomotopyString.empty(q16))
    assert z.is_zero and verify_d_squared(z)


def test_single_segment_complex(q16):
    x = build_string_complex(q16, -1, parse(q16, "e i"))
    assert _labels(q16, x) == {-1: ["P_5"], 0: ["P_7"]}
    assert x.differentials[-1][0][0].render() == "p_ei"
    assert verify_d_squared(x)


def test_antipath_complex_spans_degrees(q16):
    # c b a partitions into three single arrows, all forward
    x = build_string_complex(q16, 0, parse(q16, "c b a"))
    assert sorted(x.objects) == [0, 1, 2, 3]
    assert verify_d_squared(x)


def test_d_squared_exhaustive_small(q1111):
    for w in enumerate_strings(q1111, 7, include_trivial=True):
        assert verify_d_squared(build_string_complex(q1111, 0, w)), w.render()


def test_fabricated_nonzero_composite_fails(q16):
    # u then a composes to a non-relation, so d^2 does not vanish
    u = parse(q16, "u")
    a = parse(q16, "a")
    bogus = StringComplex(
        q16, 0, parse(q16, "u"),
        objects={0: [(0, q16.vertex_by_token("2"))],
                 1: [(1, q16.vertex_by_token("1"))],
                 2: [(2, q16.vertex_by_token("16"))]},
        differentials={0: [[PathLabel(a)]], 1: [[PathLabel(u)]]},
    )
    assert not verify_d_squared(bogus)


def test_shift_moves_degrees_down(q16):
    x = build_string_complex(q16, 2, parse(q16, "1_7"))
    assert sorted(shift(x, 1).objects) == [1]
    assert sorted(shift(x, -2).objects) == [4]


def test_iso_normalize(q16):
    w = parse(q16, "u- c b f")
    # the inverse rendering wins lexicographically here
    assert iso_normalize(q16, -1, w) == (0, w.inverse())
    assert iso_normalize(q16, 0, w.inverse()) == (0, w.inverse())
    m1, w1 = iso_normalize(q16, 5, w)
    assert iso_normalize(q16, m1, w1) == (m1, w1)
    # both members of an isomorphism class normalize identically
    assert iso_normalize(q16, -1, w) == iso_normalize(q16, -1 + w.degree(), w.inverse())


def test_nonzero_degree_span_matches_prefix_degrees(q16):
    for text in ["u- c b f", "b f e i", "k- l m n o p s c"]:
        w = parse(q16, text)
        x = build_string_complex(q16, 0, w)
        degs = [0] + [0 + w.prefix(i).degree() for i in range(1, len(w.partition()) + 1)]
        assert sorted(x.objects) == sorted(set(degs))


def test_band_descriptor_and_triangle(q16):
    band = parse(q16, "s- t- u- c b a")
    d1 = BandComplexDescriptor(0, band, "lam", 1)
    tri = band_ar_triangle(d1)
    assert [m.jordan_size for m in tri.middles] == [2]
    assert tri.start == tri.end == d1
    d3 = BandComplexDescriptor(0, band, "lam", 3)
    assert [m.jordan_size for m in band_ar_triangle(d3).middles] == [2, 4]
    with pytest.raises(PreconditionError):
        BandComplexDescriptor(0, band, "lam", 0)
    with pytest.raises(PreconditionError):
        BandComplexDescriptor(0, parse(q16, "e i"), "lam", 1)
