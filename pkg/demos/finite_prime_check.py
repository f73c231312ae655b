"""
Deciding prime vanishing from finitely many primes
==================================================

"""

from fractions import Fraction

from qprime import finite_check, prime_polynomial, hk_quasiform
from qprime.exactnum import first_primes
from qprime.forms import QuasiForm

# at a prime p the only divisors are 1 and p, so each Eisenstein term
# contributes a polynomial in p; the whole combination vanishes at every
# prime exactly when that polynomial is identically zero
h8 = hk_quasiform(8)
poly = prime_polynomial(h8)
print("H_8 prime polynomial betas:", poly.betas)
print("degree bound:", poly.degree_bound)

# a polynomial of degree d with d+1 roots is zero, so checking d+1 primes
# settles the question
result = finite_check(h8, first_primes(poly.degree_bound + 1))
print("verdict with", poly.degree_bound + 1, "primes:", result.verdict)

# too few primes and the check refuses to conclude
partial = finite_check(h8, [2, 3])
print("verdict with 2 primes:", partial.verdict, "(needed", partial.needed, ")")

# a combination built to vanish at 2, 3 and 5 only: the check is not fooled
q = [Fraction(1)]
for p in (2, 3, 5):
    q = [lo - p * hi for lo, hi in zip([Fraction(0)] + q, q + [Fraction(0)])]
planted = QuasiForm(eis={(2, l): c for l, c in enumerate(q) if c})
print("\nplanted form vanishes at 2, 3, 5:",
      finite_check(planted, [2, 3, 5]).verdict)
print("but with enough primes:",
      finite_check(planted, first_primes(5)).verdict)
