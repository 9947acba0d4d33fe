"""
Choosing between readings of a recursion
========================================

A few recursions can be read in two ways.  This script shows what each
alternative reading does to the final counts.
"""
from chern_count import DEFAULT_VARIANTS, OnePointEngine, TwoPointEngine, format_polynomial

print("defaults:", DEFAULT_VARIANTS.as_dict())
base_one = OnePointEngine()
base_two = TwoPointEngine(one_point=base_one)

for name, variants in DEFAULT_VARIANTS.alternates().items():
    one = OnePointEngine(variants)
    two = TwoPointEngine(variants, one)
    print(f"\n{name} -> {getattr(variants, name)}")
    for sing in ("A7", "D6"):
        if one.n_singularity(sing) != base_one.n_singularity(sing):
            print(f"  N({sing}) becomes {one.n_singularity(sing)}")
    for sing in ("A3", "D4"):
        t = two.n_two_point("A1P" + sing)
        if sing == "D4":
            t = t / 3
        if t != base_two.n_pair(sing):
            print(f"  N(A1{sing}) becomes {format_polynomial(t, order="grouped")}")
        else:
            print(f"  N(A1{sing}) unchanged")
