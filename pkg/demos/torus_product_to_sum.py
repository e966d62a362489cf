"""
Product-to-sum on the torus
===========================

Curves on the torus multiply with a twist by A to the determinant. Threaded
curves are central, and the trace keeps only threaded terms.
"""

from skeinfrob import (
    TorusSkein, centrality_check, laurent_embed, torus_pairing_det,
    torus_pairing_det_block_form, torus_pairing_matrix, torus_reduce_to_Bprime, torus_thread,
    torus_trace,
)

N = 3
c = lambda p, q: TorusSkein.key(N, (p, q))  # noqa: E731

a, b = c(1, 0), c(0, 1)
print("(1,0)(0,1) =", a * b)
print("(0,1)(1,0) =", b * a)

# the threaded curve (N,0) commutes with everything
z = torus_thread(a)
print("(3,0) central:", centrality_check(z, b), " (1,0) central:", centrality_check(a, b))

# reduction to the N^2 basis needs denominators from the character ring
print("(1,-1) =", torus_reduce_to_Bprime(c(1, -1)))

# trace: drop every curve that is not a multiple of N
print("Tr((3,3) + (1,2)) =", torus_trace(c(3, 3) + c(1, 2)))

# the 9x9 pairing and its determinant
print(torus_pairing_matrix(N))
d = torus_pairing_det(N)
print("det =", d)
print("matches the 2x2 block product:", d == torus_pairing_det_block_form(N))

# the determinant as a Laurent polynomial in lam, mu
print("embedded:", laurent_embed(d))
