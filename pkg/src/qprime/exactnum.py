"""Exact integer and rational arithmetic utilities.

Everything in this module is exact: Bernoulli numbers and all derived
rationals are `fractions.Fraction`, divisor sums and primes are Python
integers.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

__all__ = [
    "Fraction",
    "ComplexRational",
    "PrimeList",
    "bernoulli",
    "sigma",
    "sigma_array",
    "primes_up_to",
    "prime_mask",
    "is_prime",
    "solve_exact",
]


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

# cache of B_0, B_2, B_4, ... (even indices only)
_BERNOULLI_EVEN: list[Fraction] = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k for even k >= 0.

    Convention: generating function x/(e^x - 1), so B_1 = -1/2 and
    B_2 = 1/6, B_4 = -1/30.  Only even indices are accepted; odd ones
    vanish for k >= 3 and a request for them is almost certainly a bug
    upstream, so they are rejected rather than silently returning 0.
    """
    if k < 0 or k % 2 != 0:
        raise ValueError(f"bernoulli: index must be even and nonnegative, got {k}")
    half = k // 2
    while len(_BERNOULLI_EVEN) <= half:
        # binomial recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0, written over
        # even j only; the lone odd contribution is B_1 = -1/2.
        n = 2 * len(_BERNOULLI_EVEN)
        s = Fraction(n + 1, -2)  # C(n+1, 1) * B_1
        for j, b in enumerate(_BERNOULLI_EVEN):
            s += comb(n + 1, 2 * j) * b
        _BERNOULLI_EVEN.append(-s / (n + 1))
    return _BERNOULLI_EVEN[half]


# ---------------------------------------------------------------------------
# Divisor-power sums
# ---------------------------------------------------------------------------

# smallest-prime-factor sieve, grown on demand
_SPF: list[int] = [0, 1]


def _grow_spf(limit: int) -> None:
    global _SPF
    if len(_SPF) > limit:
        return
    size = max(limit + 1, 2 * len(_SPF), 1 << 10)
    spf = list(range(size))
    for p in range(2, isqrt(size - 1) + 1):
        if spf[p] == p:  # p prime
            for m in range(p * p, size, p):
                if spf[m] == m:
                    spf[m] = p
    _SPF = spf


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, exponent), ...], ascending."""
    if n < 1:
        raise ValueError(f"factorize: n must be >= 1, got {n}")
    _grow_spf(n)
    out = []
    while n > 1:
        p = _SPF[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def sigma(r: int, n: int) -> int:
    """Divisor-power sum sigma_r(n) = sum of d^r over divisors d of n.

    Computed from the prime factorization (smallest-prime-factor sieve),
    multiplicative over prime powers: sigma_r(p^e) = 1 + p^r + ... + p^{er}.
    """
    if n < 1:
        raise ValueError(f"sigma: n must be >= 1, got {n}")
    if r < 0:
        raise ValueError(f"sigma: r must be >= 0, got {r}")
    total = 1
    for p, e in factorize(n):
        if r == 0:
            total *= e + 1
        else:
            pr = p**r
            total *= (pr ** (e + 1) - 1) // (pr - 1)
    return total


def sigma_array(r: int, n_max: int) -> list[int]:
    """[0, sigma_r(1), ..., sigma_r(n_max)]: all divisor-power sums at once.

    Direct divisor accumulation, O(n_max log n_max) additions; much faster
    than per-n factorization when a whole q-expansion is being built.
    Index 0 is a placeholder 0.
    """
    if n_max < 0:
        raise ValueError(f"sigma_array: n_max must be >= 0, got {n_max}")
    arr = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dr = d**r
        for m in range(d, n_max + 1, d):
            arr[m] += dr
    return arr


# ---------------------------------------------------------------------------
# Primes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeList:
    """All primes up to a stated bound, ascending and complete."""

    bound: int
    primes: tuple[int, ...]

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, n: int) -> bool:
        from bisect import bisect_left

        i = bisect_left(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n


def prime_mask(x: int) -> bytearray:
    """Sieve of Eratosthenes: mask[n] == 1 iff n is prime, for 0 <= n <= x."""
    if x < 0:
        raise ValueError(f"prime_mask: bound must be >= 0, got {x}")
    mask = bytearray(b"\x01") * (x + 1)
    mask[0 : min(2, x + 1)] = b"\x00" * min(2, x + 1)
    for i in range(2, isqrt(x) + 1):
        if mask[i]:
            start = i * i
            mask[start :: i] = b"\x00" * ((x - start) // i + 1)
    return mask


def primes_up_to(x: int) -> PrimeList:
    """Complete ascending list of primes <= x."""
    if x < 1:
        raise ValueError(f"primes_up_to: bound must be >= 1, got {x}")
    mask = prime_mask(x)
    return PrimeList(bound=x, primes=tuple(i for i in range(2, x + 1) if mask[i]))


def is_prime(n: int) -> bool:
    """Trial-division primality test; meant for isolated queries, not scans."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def first_primes(count: int) -> tuple[int, ...]:
    """The first `count` primes."""
    if count < 0:
        raise ValueError(f"first_primes: count must be >= 0, got {count}")
    if count == 0:
        return ()
    # p_n < n(ln n + ln ln n) for n >= 6; small cases padded by the constant
    bound = 15
    while True:
        primes = primes_up_to(bound).primes
        if len(primes) >= count:
            return primes[:count]
        bound *= 2


# ---------------------------------------------------------------------------
# Exact complex rationals
# ---------------------------------------------------------------------------


class ComplexRational:
    """Exact complex number with Fraction real and imaginary parts.

    Python's builtin complex is floating point; quasiform coefficients may
    not lose exactness, so complex scalars are carried as Fraction pairs.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __add__(self, other):
        o = _as_complex(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_complex(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _as_complex(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _as_complex(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"ComplexRational({self.re!r}, {self.im!r})"


def _as_complex(x):
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexRational(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def solve_exact(rows, rhs):
    """Solve the linear system rows @ x = rhs exactly over the rationals.

    The system may be overdetermined; entries must be int or Fraction.
    Returns the unique solution as a list of Fractions, or None if the
    system is inconsistent.  A rank-deficient coefficient matrix raises
    ValueError: every caller here relies on uniqueness, so a solvable but
    underdetermined system indicates a bug, not an answer.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError(f"solve_exact: {m} rows but {len(rhs)} right-hand sides")
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(rows, rhs)]
    pivot_cols = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        if pv != 1:
            aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    if len(pivot_cols) < n:
        raise ValueError("solve_exact: coefficient matrix is rank-deficient")
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        sol[c] = aug[i][n]
    return sol
