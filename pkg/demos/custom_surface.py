"""
Counts on a surface given by its Chern numbers
==============================================

Any surface can be described by the four intersection numbers
<c1^2>, <c1 x1>, <x1^2>, <x2>.  Here: a K3 surface with a polarisation of
degree 2k, where the canonical class vanishes and the Euler number is 24.
"""
from chern_count import SurfaceGeometry
from chern_count.surfaces import all_singularities, count, custom_surface, expected_point_count

for k in (1, 2, 3):
    k3 = custom_surface(SurfaceGeometry(2 * k, 0, 0, 24), name=f"K3 degree {2 * k}")
    print(k3.name)
    for sing in all_singularities()[:5]:
        res = count(sing, k3)
        print(f"  {sing:5} {str(res.value):>8}   points: {expected_point_count(sing, k3)}"
              f"   ampleness: {res.ampleness.satisfied}")
