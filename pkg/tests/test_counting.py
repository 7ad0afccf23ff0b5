"""Two independent counting routes for window-constrained partitions.

The brute route enumerates partitions and filters.  The dynamic route never
sees a partition.  Their agreement on randomized condition sets is the main
correctness evidence for both.
"""

import random

import pytest

from flatpart.conditions import condition_set, parse_condition_set, satisfies
from flatpart.counting import sum_series_brute, sum_series_dp
from flatpart.errors import CeilingExceeded
from flatpart.partitions import partitions_of


def random_condition_set(rng):
    rules = []
    for _ in range(rng.randrange(1, 4)):
        b = rng.randrange(1, 4)
        d = rng.randrange(1, 7)
        c = rng.randrange(d)
        a = rng.randrange(1, 3)
        mode = rng.random() < 0.85
        text = "%d:%d:%d:%d" % (a, b, c, d) + ("" if mode else ":n")
        rules.append(text)
    return parse_condition_set(";".join(rules), zeros=rng.randrange(0, 3))


def test_dp_matches_brute_on_random_sets():
    rng = random.Random(2024)
    for _ in range(30):
        cs = random_condition_set(rng)
        order = 28
        assert sum_series_dp(cs, order) == sum_series_brute(cs, order)


def test_dp_matches_direct_filter():
    cs = parse_condition_set("1:2:1:2", zeros=1)
    dp = sum_series_dp(cs, 20)
    for n in range(21):
        direct = sum(1 for p in partitions_of(n) if satisfies(cs, p))
        assert dp[n] == direct


def test_brute_refuses_to_run_past_its_ceiling():
    cs = parse_condition_set("1:2:1:2")
    with pytest.raises(CeilingExceeded):
        sum_series_brute(cs, 61)
    sum_series_brute(cs, 10, ceiling=10)
    with pytest.raises(CeilingExceeded):
        sum_series_brute(cs, 11, ceiling=10)


def test_largest_part_bound():
    cs = parse_condition_set("1:2:1:2", zeros=1)
    capped = sum_series_dp(cs, 24, largest_part=5)
    for n in range(25):
        direct = sum(1 for p in partitions_of(n, max_part=5)
                     if satisfies(cs, p))
        assert capped[n] == direct


def test_min_part_bound():
    cs = parse_condition_set("1:2:0:1", zeros=0)
    floored = sum_series_dp(cs, 24, min_part=2)
    for n in range(25):
        direct = sum(1 for p in partitions_of(n)
                     if (not p or p[-1] >= 2) and satisfies(cs, p))
        assert floored[n] == direct


def test_empty_partition_always_counts():
    cs = parse_condition_set("1:1:0:1", zeros=2)   # forbids every positive part
    dp = sum_series_dp(cs, 10)
    assert dp[0] == 1
