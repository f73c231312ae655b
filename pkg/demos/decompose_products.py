"""
Splitting products of generators into Eisenstein and cusp parts
===============================================================

"""

from qprime import from_monomials, split_eis_cusp
from qprime.forms import expand_monomials

# G_2^2 lives entirely in the Eisenstein span: weight 4 has no cusp forms
square = from_monomials({(2, 0, 0): 1})
print("G_2^2 =", square.eis)

# G_4^3 has weight 12, so a multiple of the discriminant appears
cube = from_monomials({(0, 3, 0): 1})
result = split_eis_cusp(cube, certificate_precision=40)
print("\nG_4^3 Eisenstein part:", result.eis_part.eis)
print("G_4^3 cusp part:      ", result.cusp_part.cusp)

# the certificate: both parts re-expanded reproduce the product exactly
total = result.eis_part + result.cusp_part
direct = expand_monomials({(0, 3, 0): 1}, 40)
print("\nre-expansion matches direct product:", total.expand(40) == direct)
