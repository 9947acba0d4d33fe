"""
Singular plane curves
=====================

Evaluate the universal one-point formulas on the projective plane and compare
with the classical counts of nodal and cuspidal plane curves.
"""
from chern_count import n_singularity, projective_plane
from chern_count.surfaces import count, expected_point_count

# the universal class of nodal curves, over the basis c1^2, c1 x1, x1^2, x2
node = n_singularity("A1")
print("N(A1) =", node)

# on P^2 with L = O(d) the four Chern numbers are (d^2, -3d, 9, 3)
for d in range(1, 8):
    plane = projective_plane(d)
    nodal = count("A1", plane).value
    cusp = count("A2", plane).value
    print(f"d={d}: {nodal} nodal, {cusp} cuspidal curves", end="")
    print(f"  (classical: {3 * (d - 1) ** 2}, {12 * (d - 1) * (d - 2)})")

# every count comes with the number of point conditions it assumes
quartic = projective_plane(4)
for sing in ("A1", "A3", "D4", "E6"):
    res = count(sing, quartic)
    pts = expected_point_count(sing, quartic)
    ok = res.ampleness.satisfied
    print(f"{sing}: {res.value} quartics through {pts} points (ampleness satisfied: {ok})")
