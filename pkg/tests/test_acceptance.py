"""The fourteen acceptance criteria, one test each.

Every test prints a single ``[PASS]`` / ``[FAIL]`` line (visible with
``pytest -s`` and in the ``-v`` summary).  All checks are exact; the only
tolerances are wall-clock bounds: criterion 1 under 1 s, the ``I[4]``
certificate of criterion 5 under 60 s, the whole battery under 10 min.
"""
import time

import pytest

from cylkit.suite import CRITERIA, run_criterion, run_suite

SEED = 42
TIME_LIMITS = {1: 1.0}
I4_LIMIT = 60.0
SUITE_LIMIT = 600.0


@pytest.mark.parametrize("entry", CRITERIA, ids=[f"c{c[0]:02d}_{c[1]}" for c in CRITERIA])
def test_criterion(entry):
    r = run_criterion(entry, SEED)
    print()
    print(r.line())
    assert r.passed, r.detail
    if r.id in TIME_LIMITS:
        assert r.seconds < TIME_LIMITS[r.id]
    if r.id == 5:
        assert r.detail["I[4]"]["under_60s"]


def test_i4_certificate_time():
    from cylkit.anodyne import certify_inner_anodyne
    from cylkit.standard import spine_inclusion
    t = time.perf_counter()
    v = certify_inner_anodyne(spine_inclusion(4))
    dt = time.perf_counter() - t
    print(f"\nI[4] certified in {dt:.3f}s")
    assert v.status == "YES_CERTIFIED" and v.witness.replay()
    assert dt < I4_LIMIT


def test_battery_is_reproducible_and_fast():
    t = time.perf_counter()
    a = [r.to_dict() for r in run_suite(SEED)]
    dt = time.perf_counter() - t
    b = [r.to_dict() for r in run_suite(SEED)]
    assert a == b
    assert all(r["passed"] for r in a)
    assert dt < SUITE_LIMIT


@pytest.mark.parametrize("seed", [7, 123])
def test_battery_other_seeds(seed):
    results = run_suite(seed)
    for r in results:
        print(r.line())
    assert all(r.passed for r in results)
