import json

import pytest

from csl.errors import EmptyBattery
from csl.fields import QQ
from csl.quadratic import QuadIdeals, QuadraticOrder, enumerate_class_semigroup
from csl.regularity import (
    RegularityReport,
    check_l_stable,
    check_regular,
    check_stable,
    check_strongly_stable,
    regularity_report,
    ring_verdict,
)
from csl.window import cusp_ring


class Chain:
    """Toy arithmetic where (I^n : I^n) is the integer min(n, cap)."""

    def __init__(self, cap):
        self.cap = cap

    def product(self, I, J):
        return I + J

    def colon(self, I, J):
        return min(I, self.cap)

    def equals(self, I, J):
        return I == J


def _report(**kw):
    base = dict(
        ideal="I", regular=True, regular_certificate={}, stable=True, strongly_stable=True,
        generator="1", scalar_idempotent=True, scalar="1", l_stable=True,
        l_stable_status="stable", l_stable_index=1,
    )
    base.update(kw)
    return RegularityReport(**base)


def test_implication_checks():
    assert _report().implication_violations() == []
    assert "strongly_stable without stable" in _report(stable=False).implication_violations()
    assert "stable without regular" in _report(regular=False).implication_violations()
    assert "stable without l_stable" in _report(l_stable=False).implication_violations()
    assert _report(scalar_idempotent=False).implication_violations() == ["strongly_stable != (stable and I^2 = cI)"]
    assert _report(strongly_stable=False, scalar_idempotent=False).implication_violations() == []


def test_l_stable_three_valued():
    assert check_l_stable(Chain(1), 1) == (True, "stable", 1)
    assert check_l_stable(Chain(2), 1) == (False, "not_stable", 2)
    assert check_l_stable(Chain(10), 1, n_max=4) == (False, "inconclusive", None)
    with pytest.raises(ValueError):
        check_l_stable(Chain(1), 1, n_max=1)


def test_empty_battery():
    with pytest.raises(EmptyBattery):
        ring_verdict(Chain(1), [])


def test_unit_ideal_everywhere():
    for A in (cusp_ring(QQ), QuadIdeals(QuadraticOrder(-7, 3))):
        one = A.one()
        ok, _ = check_regular(A, one)
        assert ok and check_stable(A, one)
        assert check_strongly_stable(A, one) is not None


def test_quadratic_battery_is_clifford():
    O = QuadraticOrder(-15, 2)
    A = QuadIdeals(O)
    v = ring_verdict(A, enumerate_class_semigroup(O).reps, exhaustive=True, noetherian=True)
    assert v.clifford_on_battery and v.stable_on_battery and v.exhaustive
    assert not v.boole_on_battery and v.equivalences_hold


def test_report_json():
    O = QuadraticOrder(-3, 2)
    r = regularity_report(QuadIdeals(O), O.lattice(), family="quadratic")
    back = json.loads(json.dumps(r.to_json()))
    assert back["regular"] and back["strongly_stable"] and back["extra"] == {"family": "quadratic"}
