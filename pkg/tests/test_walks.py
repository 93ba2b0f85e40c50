import pytest

from arquiver.strings import enumerate_strings, parse
from arquiver.walks import (
    BaseType,
    WalkKind,
    applicable_reduction_kind,
    arriving_step,
    is_central,
    left_admissible_reduction,
    reduce_once,
    reduce_to_base,
    right_admissible_reduction,
    walk,
    walk_step,
)

from conftest import make_quiver


def test_clockwise_walk_from_vertex_seven(q16):
    steps = walk(q16, q16.vertex_by_token("7"), WalkKind.CW_R, 6)
    assert [s.render() for s in steps] == \
        ["e i", "b f", "k- l m n o p s c", "j-", "h", "e i"]


def test_walk_from_five_drops_first_step(q16):
    from7 = walk(q16, q16.vertex_by_token("7"), WalkKind.CW_R, 6)
    from5 = walk(q16, q16.vertex_by_token("5"), WalkKind.CW_R, 5)
    assert [s.render() for s in from5] == [s.render() for s in from7[1:]]


def test_walk_periodicity(q16):
    for name in ("A1", "A3", "D0", "D1"):
        steps = walk(q16, q16.vertex(name), WalkKind.CW_R, 2 * q16.r)
        for i in range(q16.r):
            assert steps[i] == steps[i + q16.r]
    for name in ("A'1", "A'2", "D'2"):
        steps = walk(q16, q16.vertex(name), WalkKind.CCW_S, 2 * q16.s)
        for i in range(q16.s):
            assert steps[i] == steps[i + q16.s]


def test_prefix_step_at_off_walk_vertex(q16):
    assert walk_step(q16, q16.vertex_by_token("4"), WalkKind.CW_R).render() == "e"
    # the long step through the beta side, cut at the bottom pole
    assert walk_step(q16, q16.vertex("C"), WalkKind.CW_R).render() == "k-"
    assert walk_step(q16, q16.vertex("F"), WalkKind.CW_S).render() == "u-"


ON_WALK_CLASSES = {
    WalkKind.CW_R: {"A": None, "D": None},
    WalkKind.CCW_R: {"A": None, "C": None, "D": 1},
    WalkKind.CCW_S: {"A'": None, "D'": None},
    WalkKind.CW_S: {"A'": None, "C": None, "D'": 1},
}


def _on_walk(v, kind):
    classes = ON_WALK_CLASSES[kind]
    if v.cls not in classes:
        return False
    min_index = classes[v.cls]
    return min_index is None or (v.index or 0) >= min_index


def test_prefix_steps_are_proper_prefixes(q16):
    for kind in WalkKind:
        full, prefixes = [], []
        for v in q16.vertices:
            try:
                st = walk_step(q16, v, kind)
            except Exception:
                continue
            (full if _on_walk(v, kind) else prefixes).append(st)
        assert prefixes
        for st in prefixes:
            assert any(s.length > st.length and s.letters[: st.length] == st.letters
                       for s in full)


def test_reduction_chain_from_example(q16):
    w = parse(q16, "b f e d")
    r1 = reduce_once(q16, w, WalkKind.CW_R)
    assert r1.render() == "e d"
    r2 = reduce_once(q16, r1, WalkKind.CW_R)
    assert r2.render() == "d"
    # d is central: no property applies any more
    assert applicable_reduction_kind(q16, r2) is None


def test_counterclockwise_reduction_example(q16):
    w = parse(q16, "j g d")
    assert applicable_reduction_kind(q16, w) == WalkKind.CCW_R
    assert reduce_once(q16, w, WalkKind.CCW_R).render() == "g d"
    assert applicable_reduction_kind(q16, parse(q16, "g d")) is None


def test_full_strip_leaves_signed_trivial(q16):
    assert reduce_once(q16, parse(q16, "e i"), WalkKind.CW_R).render() == "1_7"
    assert reduce_once(q16, parse(q16, "b"), WalkKind.CW_R).render() == "1_2"


def test_at_most_one_property(q16):
    for w in enumerate_strings(q16, 6):
        applicable_reduction_kind(q16, w)  # raises if two kinds fire


def test_admissible_exclusions(q16):
    assert left_admissible_reduction(q16, parse(q16, "k-")) is None
    assert left_admissible_reduction(q16, parse(q16, "k")) is None
    assert left_admissible_reduction(q16, parse(q16, "d")) is None  # central
    assert left_admissible_reduction(q16, parse(q16, "1_7")) is None
    kind, out = left_admissible_reduction(q16, parse(q16, "b f e d"))
    assert kind == WalkKind.CW_R and out.render() == "e d"


def test_right_admissible_via_inverse(q16):
    w = parse(q16, "b f e i")
    got = right_admissible_reduction(q16, w)
    assert got is not None
    kind, out = got
    assert out.render() == "b f"


def test_central_strings(q16):
    assert is_central(q16, parse(q16, "1_2"))        # B stalk
    assert is_central(q16, parse(q16, "1_14-"))      # B' stalk, either sign
    assert is_central(q16, parse(q16, "1_1"))        # F stalk
    assert is_central(q16, parse(q16, "d"))
    assert is_central(q16, parse(q16, "g d"))
    assert not is_central(q16, parse(q16, "1_9"))    # C stalk is not central
    assert not is_central(q16, parse(q16, "b"))      # even gamma ends it
    assert not is_central(q16, parse(q16, "k-"))     # plain arrows are not


def test_reduce_to_base_examples(q16):
    red = reduce_to_base(q16, parse(q16, "b f e d"))
    assert red.base.render() == "d"
    assert red.base_type == BaseType.CENTRAL
    assert [t.result.render() for t in red.trace] == ["e d", "d"]

    red = reduce_to_base(q16, parse(q16, "1_5"))
    assert red.base_type == BaseType.EDGE_SEED and not red.trace

    red = reduce_to_base(q16, parse(q16, "1_6-"))
    assert red.base_type == BaseType.STALK_CDD and not red.trace

    red = reduce_to_base(q16, parse(q16, "k-"))
    assert red.base_type == BaseType.EDGE_SEED and not red.trace


def test_reduce_to_base_exhaustive_small(small_quivers):
    for ps, q in small_quivers.items():
        for w in enumerate_strings(q, 8, include_trivial=True):
            red = reduce_to_base(q, w)
            lens = [w.length] + [t.result.length for t in red.trace]
            assert all(b < a for a, b in zip(lens, lens[1:])), (ps, w.render())
            assert red.base_type in (BaseType.EDGE_SEED, BaseType.CENTRAL,
                                     BaseType.STALK_CDD)
            if is_central(q, w):
                assert not red.trace, (ps, w.render())


def test_mirror_walk_shapes():
    # with s2 = 0 the beta side walks along the alpha chain and back
    q = make_quiver(1, 2, 3, 0)
    top = q.vertex("D'0")
    step = walk_step(q, top, WalkKind.CCW_S)
    assert step.letters[0].arrow.name == "b3"  # leads with the last beta, inverted
    assert step.letters[0].inverse
    steps = walk(q, top, WalkKind.CCW_S, 2 * q.s)
    for i in range(q.s):
        assert steps[i] == steps[i + q.s]
