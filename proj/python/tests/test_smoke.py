from fractions import Fraction as F

import pytest

import cantorgap as cg


def test_interval_union_ops():
    a = cg.IntervalUnion([cg.Interval.closed(0, F(1, 3)), cg.Interval.closed(F(2, 3), 1)])
    assert a.measure() == F(2, 3)
    assert F(1, 2) not in a
    gap = a.complement_within(cg.Interval.closed(0, 1))
    assert list(gap) == [cg.Interval.open(F(1, 3), F(2, 3))]
    assert (a + cg.IntervalUnion(cg.Interval.point(F(1, 3)))).measure() == F(2, 3)
    assert (a | gap) == cg.IntervalUnion(cg.Interval.closed(0, 1))
    assert a.reflect().parts[0].lo == -1


def test_floats_are_refused():
    with pytest.raises(TypeError):
        cg.Interval.closed(0.0, 0.5)


def test_ternary_stage_and_bracket():
    spec = cg.FamilySpec.ternary()
    s2 = spec.stage(2)
    assert s2.gap_table() == [
        ("ε", F(1, 3), F(2, 3), 1),
        ("0", F(1, 9), F(2, 9), 2),
        ("1", F(7, 9), F(8, 9), 2),
    ]
    b = cg.diff_bracket(spec.stage(3))
    assert b.missing_outer.measure() == F(2, 27)
    assert 0 in b.missing_outer
    assert b.inner.issubset(b.outer)


def test_spec_parsing_and_errors():
    spec = cg.FamilySpec.from_json('{"family": "central", "ratio": "1/2"}')
    assert spec.stage(1).components.parts[1].lo == F(3, 4)
    with pytest.raises(cg.SpecError, match="ratio out of"):
        cg.FamilySpec.from_json('{"family": "central", "ratio": "1/1"}')


def test_verify_reports():
    report = cg.verify("ccp", cg.FamilySpec.ternary(), max_stage=6)
    assert report["status"] == "pass"
    assert "26/27" in report["payload"]["points"]
    with pytest.raises(cg.IncompatibleSelector, match=r"requires a ∈ \[1/3,1\)"):
        cg.verify("t13", cg.FamilySpec.central(F(1, 4)), max_stage=4)
    assert cg.verify("cspm", cg.FamilySpec.greedy(), max_stage=4)["status"].startswith("pass")


def test_budget():
    with pytest.raises(cg.BudgetExceeded):
        cg.FamilySpec.ternary().stage(10, budget=64)


def test_measure_scan():
    rows = cg.measure_scan(cg.FamilySpec.perturbed(), 3)
    assert [r["n"] for r in rows] == [0, 1, 2, 3]
    assert rows[1]["measure"] == F(4, 5)
