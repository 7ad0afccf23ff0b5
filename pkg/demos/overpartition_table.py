"""
The two-variable overpartition count and its specializations
============================================================

A_k(m, n) counts overpartitions of n with m overlines, where an
overline on b blocks nearby parts.  The table factors as an infinite
product, and substituting a -> q^s, q -> q^t collapses it onto
one-variable families from the registry.
"""

from flatpart.families import get_identity
from flatpart.overpartitions import count_A, product_biseries, specialize

k = 2
table = count_A(k, 10, 4)
print("A_%d(m, n) for n <= 10:" % k)
print(table)
print()
assert table == product_biseries(k, 10, 4)
print("matches the product form (-aq; q^%d)/(q; q) exactly" % k)
print()

# a = -1 kills overlined-weight pairs; what survives is an odd/even family
s, t = -1, 2
collapsed = specialize(k, s, t, 20)
family = get_identity("FAM9_K2")
print("specialized at a=q^%d, q=q^%d:" % (s, t))
print("  ", ",".join(str(c) for c in collapsed.coeffs))
print("family count:")
print("  ", ",".join(str(c) for c in family.count_series(20).coeffs))
assert collapsed == family.count_series(20)
