import pytest

from arquiver.errors import DuplicateLabel, HereditaryCase, UnknownEntity
from arquiver.quiver import (
    Parameters,
    Quiver,
    apply_labels,
    build_normal_form,
    normalize_parameters,
    quiver_from_spec,
    validate_gentle,
)

from conftest import ALAB16, VLAB16, make_quiver


def test_normalize_identity():
    p = normalize_parameters(Parameters(2, 3, 4, 2))
    assert (p.r1, p.r2, p.s1, p.s2) == (2, 3, 4, 2)


def test_normalize_swaps_when_r2_zero():
    p = normalize_parameters(Parameters(4, 0, 1, 2))
    assert (p.r1, p.r2, p.s1, p.s2) == (1, 2, 4, 0)


def test_normalize_rejects_hereditary():
    with pytest.raises(HereditaryCase):
        normalize_parameters(Parameters(3, 0, 2, 0))


def test_example_quiver_shape(q16):
    assert len(q16.vertices) == 16
    assert len(q16.arrows) == 21
    assert len(q16.relations) == 3 * (q16.r2 + q16.s2) == 15
    census = q16.class_census()
    assert census == {"A": 3, "A'": 2, "B": 2, "B'": 1, "C": 1, "D": 2, "D'": 4, "F": 1}
    # labelled vertex classes as in the example
    by_class = {
        cls: sorted(q16.vertex_token(v) for v in q16.class_members(cls))
        for cls in census
    }
    assert by_class["A"] == ["3", "5", "7"]
    assert by_class["A'"] == ["15", "16"]
    assert by_class["B"] == ["2", "4"]
    assert by_class["B'"] == ["14"]
    assert by_class["C"] == ["9"]
    assert by_class["D"] == ["6", "8"]
    assert by_class["D'"] == ["10", "11", "12", "13"]
    assert by_class["F"] == ["1"]


def test_example_arrow_incidences(q16):
    # spot-check arrows against the labelled example
    expect = {"a": ("1", "2"), "d": ("2", "4"), "g": ("4", "6"), "j": ("6", "8"),
              "k": ("8", "9"), "l": ("10", "9"), "s": ("1", "14"), "u": ("16", "1"),
              "h": ("6", "7"), "i": ("7", "4"), "q": ("13", "15")}
    for lab, (src, tgt) in expect.items():
        a = q16.arrow_by_token(lab)
        assert (q16.vertex_token(a.source), q16.vertex_token(a.target)) == (src, tgt)


def test_case2_quiver_has_both_poles():
    q = make_quiver(0, 1, 0, 1)
    assert q.class_census() == {"A": 1, "A'": 1, "F": 1, "F'": 1}


def test_minimal_case6_classes(q1111):
    assert q1111.class_census() == {"A": 1, "A'": 1, "C": 1, "D": 1, "D'": 1, "F": 1}


TABLE_CASES = {
    # case number -> (params, allowed vertex classes)
    2: ((0, 1, 0, 1), {"A", "A'", "B", "B'", "F", "F'"}),
    3: ((0, 1, 1, 0), {"A", "B", "C", "D'"}),
    4: ((1, 1, 0, 1), {"A", "A'", "B", "B'", "C", "D", "F"}),
    5: ((1, 1, 1, 0), {"A", "B", "C", "D", "D'"}),
    6: ((1, 1, 1, 1), {"A", "A'", "B", "B'", "C", "D", "D'", "F"}),
}


@pytest.mark.parametrize("case", sorted(TABLE_CASES))
def test_vertex_classes_per_variation(case):
    params, allowed = TABLE_CASES[case]
    q = make_quiver(*params)
    assert set(q.class_census()) <= allowed


def test_every_arrow_in_exactly_one_family(q16):
    for a in q16.arrows:
        in_cycle = q16.in_cycle(a)
        plain_r = a.kind == "alpha" and a.index > q16.r2
        plain_s = a.kind == "beta" and a.index > q16.s2
        assert sum([in_cycle, plain_r, plain_s]) == 1


def test_gentle_for_all_small_parameters():
    for r1 in range(7):
        for r2 in range(7):
            for s1 in range(7):
                for s2 in range(7):
                    if not (0 < r1 + r2 <= 6 and 0 < s1 + s2 <= 6):
                        continue
                    if r2 == 0 and s2 == 0:
                        continue
                    q = make_quiver(r1, r2, s1, s2)
                    ok, bad = validate_gentle(q)
                    assert ok, (r1, r2, s1, s2, bad)


def test_sign_assignment_spot_values(q16):
    assert (q16.arrow("a1").s_sign, q16.arrow("a1").t_sign) == (1, 1)
    assert (q16.arrow("a2").s_sign, q16.arrow("a2").t_sign) == (-1, 1)
    assert (q16.arrow("b6").s_sign, q16.arrow("b6").t_sign) == (-1, -1)  # last beta
    assert q16.arrow("g1").t_sign == 1     # first cycle keeps T = +1 on the down arrow
    assert q16.arrow("g3").t_sign == -1    # standard cycles flip it
    q = make_quiver(1, 1, 0, 1)            # s1 = 0: the last beta sits in a cycle
    assert q.arrow("d2").s_sign == -1


def test_flipped_sign_breaks_gentle(q16):
    q = make_quiver(2, 3, 4, 2)
    hacked = q.arrow("g2")
    object.__setattr__(hacked, "s_sign", -hacked.s_sign)
    ok, bad = validate_gentle(q)
    object.__setattr__(hacked, "s_sign", -hacked.s_sign)
    assert not ok and bad


def test_duplicate_relation_partner_detected():
    q = make_quiver(2, 3, 4, 2)
    rels = set(q.relations)
    rels.add(("a1", "a2"))  # a second relational continuation for a1
    q.relations = frozenset(rels)
    ok, bad = validate_gentle(q)
    assert not ok
    assert any("two relational continuations" in b for b in bad)


def test_apply_labels_roundtrip(q16):
    fresh = build_normal_form(Parameters(2, 3, 4, 2))
    labelled = apply_labels(fresh, vertex_labels=VLAB16, arrow_labels=ALAB16)
    assert labelled.vertex_token(labelled.vertex("A3")) == "7"
    assert labelled.arrow_token(labelled.arrow("g6")) == "h"
    # empty maps leave canonical naming in place
    bare = apply_labels(fresh)
    assert bare.vertex_token(bare.vertex("A3")) == "A3"


def test_apply_labels_rejects_duplicates():
    fresh = build_normal_form(Parameters(2, 3, 4, 2))
    with pytest.raises(DuplicateLabel):
        apply_labels(fresh, arrow_labels={"a1": "x", "a2": "x"})
    with pytest.raises(UnknownEntity):
        apply_labels(fresh, arrow_labels={"zz9": "x"})


def test_quiver_from_spec_doc():
    doc = {"parameters": [2, 3, 4, 2], "vertex_labels": VLAB16, "arrow_labels": ALAB16}
    q = quiver_from_spec(doc)
    assert q.vertex_token(q.vertex("C")) == "9"
    report = q.report()
    assert "parameters (r1,r2,s1,s2) = (2,3,4,2)" in report
    assert "relations" in report
