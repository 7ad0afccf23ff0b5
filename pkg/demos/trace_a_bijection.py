"""
Walking a partition through a family map
========================================

The family maps are pipelines: halve the evens, fold the odd residues
down, replicate, merge.  Passing a trace dict exposes every stage.
The partition below is the worked example for family 2 with k = 2,
where parts are even or congruent to -1 mod 6.
"""

from flatpart.bijections import wrapper_inverse, wrapper_map, wrapper_spec

spec = wrapper_spec("FAM2", 2)
source = (40, 23, 14, 14, 12, 11, 6, 6, 6, 5, 5)

print("source:", "+".join(str(p) for p in source))

trace = {}
image = wrapper_map(spec, source, trace=trace)
for stage in ("evens_halved", "odd_mapped", "mu", "replicated"):
    print("  %-12s %s" % (stage, trace[stage]))
print("image: ", "+".join(str(p) for p in image))
print()

# and back again, watching the five-way split reassemble the original
trace = {}
recovered = wrapper_inverse(spec, image, trace=trace)
for stage in ("pi_1", "pi_2", "pi_3", "pi_1_prime", "pi_2_prime",
              "pi_3_prime", "pi_1_double_prime", "mu", "mu_prime",
              "mu_double_prime"):
    print("  %-18s %s" % (stage, trace[stage]))
print("recovered:", "+".join(str(p) for p in recovered))
assert recovered == source
