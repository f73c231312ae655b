"""
Expanding Eisenstein series and prime-vanishing combinations
============================================================

"""

from qprime import eisenstein_g, delta, hk, hk_quasiform
from qprime.exactnum import is_prime

# the weight-4 Eisenstein series: constant term -1/240, then divisor sums
g4 = eisenstein_g(4, 10)
print("G_4 coefficients:", g4.coeffs)

# the discriminant cusp form; its coefficients are the tau values
d = delta(10)
print("tau(n) for n <= 10:", d.coeffs[1:])

# H_6 vanishes at every prime index and is positive elsewhere
h6 = hk(6, 30)
print("\n  n  c(n)      prime?")
for n in range(2, 31):
    print(f"{n:>3}  {str(h6[n]):<8}  {is_prime(n)}")

# the same combination written out as a dictionary of (weight, derivative)
# keys with rational coefficients
print("\nH_6 as a quasiform:", hk_quasiform(6).eis)
