"""
Hunting for new identities by machine
=====================================

Enumerate small forbidden-window rule sets, keep the ones whose
generating function factors with periodic exponents, then push the
survivors to high order.  The run below rediscovers the classical
no-consecutive-parts identity without being told about it.
"""

from flatpart.search import SearchBounds, search, verify_candidate

bounds = SearchBounds(max_rules=1, a_range=(1, 1), b_range=(1, 2),
                      d_range=(1, 6), zeros_range=(0, 1), n_check=25)
print("screening", bounds)
hits = search(bounds)
print("%d candidates survive the screen" % len(hits))
print()

# push the period-6 survivors (the interesting ones here) to order 200
for hit in hits:
    if hit.verdict.period == 6:
        print(verify_candidate(hit, n_big=200))

# widen to three-part windows mod 5: the complete family drops out
print()
bounds5 = SearchBounds(max_rules=1, a_range=(1, 5), b_range=(3, 3),
                       d_range=(5, 5), zeros_range=(2, 2), n_check=25)
for hit in search(bounds5):
    if hit.verdict.period == 5:
        print(verify_candidate(hit, n_big=200))
