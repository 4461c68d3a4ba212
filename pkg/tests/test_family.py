"""Oracle agreement on the enumerable family of binomial towers.

The degree-criterion verdict is compared with the direct embedding-dimension computation,
and with the verdict of the intersection criterion, on every instance.
"""

import time

import pytest

from regtensor.engine import Regularity, check_theorem2, regular_direct, verdict_condition_v
from families import family

FAMILY_SIZE = 60


@pytest.fixture(scope="module")
def instances():
    return family(FAMILY_SIZE)


def test_family_is_in_scope(instances):
    assert len(instances) >= 50
    for inst in instances:
        assert inst.p in (2, 3)
        assert len(inst.exps) <= 3 and max(inst.exps.values()) <= 2
        assert len(inst.K.steps) <= 2 and len(inst.L.steps) <= 2


def test_family_covers_both_verdicts(instances):
    verdicts = {check_theorem2(i.K, i.L, with_condition_v=False).regular for i in instances}
    assert {Regularity.YES, Regularity.NO} <= verdicts


def test_degree_criterion_matches_direct_computation(instances):
    t0 = time.perf_counter()
    bad = [i.label for i in instances
           if (check_theorem2(i.K, i.L, with_condition_v=False).regular is Regularity.YES)
           != regular_direct(i.K, i.L)]
    assert not bad
    assert time.perf_counter() - t0 < 60


def test_degree_and_intersection_criteria_agree(instances):
    bad = []
    for i in instances:
        via_degree = check_theorem2(i.K, i.L, with_condition_v=False).regular
        via_intersection, _ = verdict_condition_v(i.K, i.L)
        if via_degree is not via_intersection:
            bad.append(i.label)
    assert not bad
