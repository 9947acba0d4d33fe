"""
A node plus one more singular point
===================================

Two-point classes live on X x X.  The product part is kept as a 4x4 matrix,
so the printed (flattened) polynomial is only a display form.
"""
from chern_count import format_polynomial, n_pair
from chern_count.chern_ring import flatten
from chern_count.surfaces import count, p1_x_p1, projective_plane

binodal = n_pair("A1")
print("N(A1A1) =", format_polynomial(binodal, order="grouped"))
print("rank of the product part:", binodal.quad_rank())
print("diagonal correction:", binodal.lin)

# ordered pairs of nodes; halve for unordered binodal curves
for d in range(3, 8):
    n = count("A1A1", projective_plane(d)).value
    print(f"degree {d}: {n} ordered, {n / 2} unordered binodal curves")

# the flattened form forgets which factor each monomial came from
t = n_pair("D4")
print("N(A1D4) flattened has", len(flatten(t).terms), "terms")

for a, b in [(2, 2), (4, 4), (6, 6)]:
    res = count("A1D4", p1_x_p1(a, b))
    print(f"O({a},{b}) on P1xP1: N(A1D4) = {res.value}, needs {res.ampleness.required}-ample:"
          f" {res.ampleness.satisfied}")
