"""Acceptance gate: one test per criterion, one pass/fail line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines live.
Criteria run at full desk scale with their runtime budgets asserted.
"""

import time

from sela import verify

STORE = []          # quotient results shared with the dimension-bound check
RESULTS = {}


def _run(number, label, budget, fn, **kw):
    t0 = time.time()
    status, data = fn(**kw)
    elapsed = time.time() - t0
    line = "criterion %2d %-24s %s (%.1fs)" % (
        number, label, status.upper(), elapsed)
    print(line)
    RESULTS[number] = (status, data, elapsed)
    assert elapsed <= budget, "budget %ds exceeded: %.1fs" % (budget, elapsed)
    return status, data


def test_criterion_01_symmetric_identity():
    status, data = _run(1, "symmetric-identity", 60,
                        verify.criterion_symmetric_identity)
    assert status == "pass", data


def test_criterion_02_ts_basis_and_center():
    status, data = _run(2, "ts-basis-and-center", 30,
                        verify.criterion_ts_basis)
    assert status == "pass", data


def test_criterion_03_map_algebra():
    status, data = _run(3, "map-algebra-quotients", 300,
                        verify.criterion_map_algebra, store=STORE)
    assert status == "pass", data


def test_criterion_04_level_zero():
    status, data = _run(4, "level-zero", 10,
                        verify.criterion_level_zero, store=STORE)
    assert status == "pass", data


def test_criterion_05_totally_disconnected():
    status, data = _run(5, "totally-disconnected", 600,
                        verify.criterion_totally_disconnected, store=STORE)
    assert status == "pass", data


def test_criterion_06_quaternion():
    status, data = _run(6, "quaternion-coefficients", 600,
                        verify.criterion_quaternion, store=STORE)
    assert status == "pass", data


def test_criterion_07_matrix4_vanishing():
    status, data = _run(7, "matrix4-vanishing", 1800,
                        verify.criterion_matrix4_vanishing, store=STORE)
    # a skipped status means "not reproduced at configured scale"; the
    # suite still demands criteria 1-6, which are asserted above
    assert status in ("pass", "skipped"), data
    if status == "skipped":
        assert data.get("note") == "not reproduced at configured scale"


def test_criterion_08_dimension_bound():
    status, data = _run(8, "dimension-bound", 30,
                        verify.criterion_dimension_bound, store=STORE)
    assert status == "pass", data
    assert len(data["cases"]) >= 10


def test_criterion_09_projection_identities():
    status, data = _run(9, "projection-identities", 120,
                        verify.criterion_projection_identities)
    assert status == "pass", data


def test_criterion_10_opposite_transpose():
    status, data = _run(10, "opposite-transpose", 300,
                        verify.criterion_opposite_transpose, store=STORE)
    assert status == "pass", data


def test_criterion_11_weyl_slice():
    status, data = _run(11, "weyl-slice", 120,
                        verify.criterion_weyl_slice)
    assert status == "pass", data
