"""
The annulus at a root of unity
==============================

Left multiplication, the trace and the trace pairing of the annulus skein
algebra, all over the character ring of threaded curves.
"""

from skeinfrob import (
    AnnulusSkein, ann_invert, ann_left_matrix, ann_pairing_det, ann_pairing_matrix,
    ann_reduce, ann_trace, mat_det,
)

N = 5
T = lambda k: AnnulusSkein.T(N, k)  # noqa: E731

# products follow T_m T_n = T_{m+n} + T_{|m-n|}
print("T_2 T_3 =", T(2) * T(3))

# T_7 in the basis T_0..T_4; X[a] stands for T_{aN}(x)
print("T_7 reduced:", ann_reduce(T(7)))

# the matrix of multiplication by T_1, and its determinant T_N(x)
L = ann_left_matrix(T(1))
print(L)
print("det =", mat_det(L))

# only threaded indices survive the trace
for k in (3, 5, 10):
    print(f"Tr(T_{k}) =", ann_trace(T(k)))

# the pairing is block diagonal; its determinant is a power of T_0^2 - T_N^2 up to 2T_0
print(ann_pairing_matrix(N))
print("pairing det =", ann_pairing_det(N))

# T_1 is invertible once the character ring is localized
print("T_1^-1 =", ann_invert(T(1)))
