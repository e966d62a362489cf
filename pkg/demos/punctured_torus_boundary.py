"""
The once-punctured torus
========================

Only the central part of the algebra is pinned down: multiplication by
polynomials in the boundary curve delta, the trace rule, and the quotient
onto the closed torus.
"""

from skeinfrob import (
    NotComputableError, PuncturedSkein, eta_delta_convert, punctured_trace, quotient_to_torus,
    specialized_frobenius_check, to_cheb_view, verify_delta_power_relation,
)
from skeinfrob.punctured import cheb_delta

N = 3
u = PuncturedSkein.key(N, (2, 1, 0))  # delta^2 (1,0)
print("u =", u)
print("in eta powers:", eta_delta_convert(u, "to_eta"))
print("T_k(delta) view:", to_cheb_view(u))

# delta^N obeys the same relation as x^N
print("delta^N relation:", verify_delta_power_relation(N))

# the trace keeps T_k(delta)(p,q) with N dividing k, p and q
print("Tr(T_3(delta)) =", punctured_trace(cheb_delta(N, 3)))
print("Tr(T_1(delta)) =", punctured_trace(cheb_delta(N, 1)))

# eta generates the kernel of the map to the closed torus
print("quotient of u:", quotient_to_torus(u))

# products of two non-central skeins are not determined
try:
    PuncturedSkein.key(N, (0, 1, 0)) * PuncturedSkein.key(N, (0, 0, 1))
except NotComputableError as exc:
    print("not computable:", exc)

print(specialized_frobenius_check("ptorus", N, None))
