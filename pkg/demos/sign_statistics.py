"""
Sign changes and partial sums of cusp form coefficients
=======================================================

"""

from qprime import (
    count_sign_changes,
    deligne_check,
    exponent_profile,
    partial_sum_report,
    prime_coefficients,
)
from qprime.formspec import parse_form_spec

# tau at primes oscillates; count the sign changes along ascending primes
delta_form = parse_form_spec("DELTA")
tau = prime_coefficients(delta_form, 2000)
print("first few (p, tau(p)):", tau[:5])
print("sign changes among p <= 2000:", count_sign_changes([v for _, v in tau]))

# partial sums swing through both signs as primes accumulate
report = partial_sum_report(delta_form, 2000, grid=[100, 500, 1000, 2000])
for (x, s), (_, sq) in zip(report.partial_sum, report.partial_sum_sq):
    print(f"x = {x:>5}: sum = {s:>12}  sum of squares = {sq}")

# the growth exponents that normalize those sums
profile = exponent_profile(delta_form)
print("\nalpha_0 =", profile.alpha0, " beta_0 =", profile.beta0)

# the prime coefficient bound for the weight-12 eigenform, checked by
# exact squaring: tau(p)^2 <= 4 p^11
check = deligne_check(12, 2000)
print("bound holds up to 2000:", check.passed,
      " worst ratio:", round(check.worst_ratio, 4), "at p =", check.worst_prime)
