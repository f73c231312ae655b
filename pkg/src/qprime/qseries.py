"""Truncated formal power series in q with exact rational coefficients.

A QExpansion stores coefficients for exponents 0..precision inclusive.
Arithmetic between two expansions truncates to the smaller precision, and
equality likewise compares only up to the common precision; the precision
is explicit data, never implicit.

Coefficients are Python ints where possible and Fraction otherwise (they
interoperate freely); integer-heavy series such as cusp form expansions
stay on the fast integer path.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .exactnum import ComplexRational

__all__ = ["QExpansion"]

# products at or above this precision go through Kronecker substitution;
# below it schoolbook convolution wins (and keeps small cases simple)
_FAST_MUL_MIN_PRECISION = 384


class QExpansion:
    """Truncated q-series: coefficients c(0), ..., c(N) for exponents up to N.

    Treat instances as immutable; operations always build new ones.
    """

    __slots__ = ("precision", "coeffs")

    def __init__(self, coeffs, precision: int | None = None):
        coeffs = list(coeffs)
        if precision is None:
            if not coeffs:
                raise ValueError("QExpansion: empty coefficient list needs an explicit precision")
            precision = len(coeffs) - 1
        if precision < 0:
            raise ValueError(f"QExpansion: precision must be >= 0, got {precision}")
        if len(coeffs) < precision + 1:
            coeffs.extend([0] * (precision + 1 - len(coeffs)))
        elif len(coeffs) > precision + 1:
            coeffs = coeffs[: precision + 1]
        self.precision = precision
        self.coeffs = coeffs

    # -- basic accessors ----------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "QExpansion":
        return cls([0] * (precision + 1), precision)

    @classmethod
    def one(cls, precision: int) -> "QExpansion":
        return cls([1] + [0] * precision, precision)

    def __getitem__(self, n: int):
        if not 0 <= n <= self.precision:
            raise IndexError(f"coefficient of q^{n} not known at precision {self.precision}")
        return self.coeffs[n]

    def truncate(self, precision: int) -> "QExpansion":
        if precision > self.precision:
            raise ValueError(
                f"cannot extend precision {self.precision} to {precision} by truncation"
            )
        if precision == self.precision:
            return self
        return QExpansion(self.coeffs[: precision + 1], precision)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.precision > 5 else ""
        return f"QExpansion(N={self.precision}; {shown}{tail})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QExpansion):
            n = min(self.precision, other.precision)
            return QExpansion(
                [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])], n
            )
        if isinstance(other, (int, Fraction, ComplexRational)):
            out = list(self.coeffs)
            out[0] = out[0] + other
            return QExpansion(out, self.precision)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QExpansion([-c for c in self.coeffs], self.precision)

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            n = min(self.precision, other.precision)
            a = self.coeffs[: n + 1]
            b = other.coeffs[: n + 1]
            if n >= _FAST_MUL_MIN_PRECISION and _rationals_only(a) and _rationals_only(b):
                return QExpansion(_mul_kronecker(a, b, n), n)
            return QExpansion(_mul_schoolbook(a, b, n), n)
        if isinstance(other, (int, Fraction, ComplexRational)):
            return QExpansion([c * other for c in self.coeffs], self.precision)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self, order: int = 1) -> "QExpansion":
        """Apply D = q d/dq `order` times: c(n) becomes n^order * c(n)."""
        if order < 0:
            raise ValueError(f"derivative order must be >= 0, got {order}")
        if order == 0:
            return self
        return QExpansion(
            [(n**order) * c for n, c in enumerate(self.coeffs)], self.precision
        )

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        """Equality up to the common precision (explicitly truncating)."""
        if not isinstance(other, QExpansion):
            return NotImplemented
        n = min(self.precision, other.precision)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # equality is truncating, so hashing would mislead

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "precision": self.precision,
            "coeffs": [str(Fraction(c)) for c in self.coeffs],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "QExpansion":
        precision = int(data["precision"])
        coeffs = [_coeff_from_str(s) for s in data["coeffs"]]
        if len(coeffs) != precision + 1:
            raise ValueError(
                f"QExpansion: expected {precision + 1} coefficients, got {len(coeffs)}"
            )
        return cls(coeffs, precision)

    @classmethod
    def from_json(cls, text: str) -> "QExpansion":
        return cls.from_dict(json.loads(text))


def _coeff_from_str(s: str):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def _rationals_only(coeffs) -> bool:
    return all(isinstance(c, (int, Fraction)) for c in coeffs)


# ---------------------------------------------------------------------------
# multiplication backends
# ---------------------------------------------------------------------------


def _mul_schoolbook(a, b, n: int):
    """Cauchy product truncated at q^n, plain double loop."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return out


def _mul_kronecker(a, b, n: int):
    """Exact product via Kronecker substitution.

    Coefficients are scaled to integers by the lcm of their denominators,
    split into positive and negative parts, packed into huge integers with
    fixed-width limbs, and multiplied once per sign pair; Python's big-int
    multiplication is subquadratic, which is what makes precision ~10^4
    products cheap.
    """
    den_a = lcm(*(c.denominator for c in a if isinstance(c, Fraction)), 1)
    den_b = lcm(*(c.denominator for c in b if isinstance(c, Fraction)), 1)
    ia = [int(c * den_a) if isinstance(c, Fraction) else c * den_a for c in a]
    ib = [int(c * den_b) if isinstance(c, Fraction) else c * den_b for c in b]

    ap = [c if c > 0 else 0 for c in ia]
    an = [-c if c < 0 else 0 for c in ia]
    bp = [c if c > 0 else 0 for c in ib]
    bn = [-c if c < 0 else 0 for c in ib]

    width = _limb_width(max(ap + an), max(bp + bn), n + 1)
    pp = _packed_mul(ap, bp, width, n)
    nn = _packed_mul(an, bn, width, n)
    pn = _packed_mul(ap, bn, width, n)
    np_ = _packed_mul(an, bp, width, n)

    den = den_a * den_b
    out = []
    for i in range(n + 1):
        c = pp[i] + nn[i] - pn[i] - np_[i]
        if den != 1:
            f = Fraction(c, den)
            c = int(f) if f.denominator == 1 else f
        out.append(c)
    return out


def _limb_width(max_a: int, max_b: int, length: int) -> int:
    # any convolution coefficient is at most max_a * max_b * length
    bound = max(max_a, 1) * max(max_b, 1) * length
    return bound.bit_length() // 8 + 1


def _packed_mul(a, b, width: int, n: int):
    if not any(a) or not any(b):
        return [0] * (n + 1)
    pa = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    pb = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    prod = (pa * pb).to_bytes(width * (len(a) + len(b)), "little")
    return [
        int.from_bytes(prod[i * width : (i + 1) * width], "little") for i in range(n + 1)
    ]
