"""Eisenstein series, cusp form bases, the prime-vanishing H_k family, and
the canonical quasimodular representation.

Conventions
-----------
The weight-k Eisenstein series is

    G_k(q) = B_k/(2k) + sum_{n>=1} sigma_{k-1}(n) q^n

by default; pass constant_sign="classical" for the variant whose constant
term is -B_k/(2k).  The two agree in every positive-exponent coefficient,
so the flag only moves constants around.  D denotes q d/dq throughout.

A QuasiForm is a sparse linear combination of D^l G_k terms plus D^l S
terms, where S runs over the echelonized cusp bases produced here.  Mixed
weights are allowed; the grading of a term is k + 2l (resp. m + 2l).
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from math import comb

from .exactnum import ComplexRational, bernoulli, sigma_array, solve_exact
from .qseries import QExpansion

__all__ = [
    "QuasiForm",
    "eisenstein_g",
    "delta",
    "cusp_dim",
    "cusp_basis",
    "hk",
    "hk_quasiform",
    "quasiform_expand",
    "expand_monomials",
    "from_monomials",
]


def _intify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _constant_factor(constant_sign: str) -> int:
    if constant_sign == "paper":
        return 1
    if constant_sign == "classical":
        return -1
    raise ValueError(
        f"constant_sign must be 'paper' or 'classical', got {constant_sign!r}"
    )


# ---------------------------------------------------------------------------
# Eisenstein series
# ---------------------------------------------------------------------------

# longest sigma_{r} list computed so far, per exponent r
_SIGMA_CACHE: dict[int, list[int]] = {}


def _sigma_list(r: int, n_max: int) -> list[int]:
    cached = _SIGMA_CACHE.get(r)
    if cached is None or len(cached) <= n_max:
        cached = sigma_array(r, n_max)
        _SIGMA_CACHE[r] = cached
    return cached


def eisenstein_g(k: int, precision: int, constant_sign: str = "paper") -> QExpansion:
    """G_k at the given precision: constant B_k/(2k), then sigma_{k-1}(n)."""
    if k < 2 or k % 2 != 0:
        raise ValueError(f"eisenstein_g: weight must be even and >= 2, got {k}")
    const = _constant_factor(constant_sign) * bernoulli(k) / (2 * k)
    sig = _sigma_list(k - 1, precision)
    return QExpansion([_intify(const)] + sig[1 : precision + 1], precision)


def _eisenstein_normalized(k: int, precision: int) -> QExpansion:
    # 1 - (2k/B_k) sum sigma_{k-1}(n) q^n; integer series for k in {4, 6}
    factor = Fraction(-2 * k) / bernoulli(k)
    sig = _sigma_list(k - 1, precision)
    return QExpansion(
        [1] + [_intify(factor * s) for s in sig[1 : precision + 1]], precision
    )


# ---------------------------------------------------------------------------
# the discriminant cusp form and cusp bases
# ---------------------------------------------------------------------------

# coefficients of prod_{n>=1} (1 - q^n)^24, grown on demand
_ETA24: list[int] = [1]


def _eta24(n_max: int) -> list[int]:
    g = _ETA24
    if len(g) > n_max:
        return g
    # with h = prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2} (sparse)
    # and g = h^8, comparing q^n in D(g) h = 8 D(h) g gives
    #     n g_n = sum_{j>=1} h_j (9j - n) g_{n-j}
    support = []
    j, k = 1, 1
    while j <= n_max:
        support.append((j, (-(2 * k + 1)) if k & 1 else (2 * k + 1)))
        k += 1
        j = k * (k + 1) // 2
    for n in range(len(g), n_max + 1):
        s = 0
        for j, hj in support:
            if j > n:
                break
            s += hj * (9 * j - n) * g[n - j]
        g.append(s // n)
    return g


def delta(precision: int) -> QExpansion:
    """The discriminant form q prod (1-q^n)^24; coefficient at n is tau(n)."""
    if precision < 1:
        raise ValueError(f"delta: precision must be >= 1, got {precision}")
    g = _eta24(precision - 1)
    return QExpansion([0] + g[:precision], precision)


def cusp_dim(m: int) -> int:
    """Dimension of the weight-m level-one cusp space."""
    if m % 2 != 0 or m < 12:
        return 0
    r = m - 12
    return sum(1 for b in range(r // 6 + 1) if (r - 6 * b) % 4 == 0)


# echelonized basis rows at the longest precision computed so far, per weight
_CUSP_CACHE: dict[int, list[list]] = {}


def cusp_basis(m: int, precision: int) -> list[QExpansion]:
    """Echelonized basis of the weight-m cusp space.

    Element i is q^{i+1} + O(q^{d+1}) where d is the dimension; empty
    list when the space is trivial.
    """
    if m % 2 != 0:
        raise ValueError(f"cusp_basis: weight must be even, got {m}")
    d = cusp_dim(m)
    if d == 0:
        return []
    if precision < d:
        raise ValueError(
            f"cusp_basis: precision {precision} cannot exhibit dimension {d}"
        )
    cached = _CUSP_CACHE.get(m)
    if cached is None or len(cached[0]) <= precision:
        cached = _build_cusp_basis(m, precision)
        _CUSP_CACHE[m] = cached
    return [QExpansion(row[: precision + 1], precision) for row in cached]


def _build_cusp_basis(m: int, precision: int) -> list[list]:
    # delta times the weight-(m-12) monomials in the normalized weight-4
    # and weight-6 series, then exact Gauss-Jordan on columns q^1, q^2, ...
    e4 = _eisenstein_normalized(4, precision)
    e6 = _eisenstein_normalized(6, precision)
    dlt = delta(precision)
    rows = []
    r = m - 12
    for b in range(r // 6 + 1):
        if (r - 6 * b) % 4 != 0:
            continue
        form = dlt
        for _ in range((r - 6 * b) // 4):
            form = form * e4
        for _ in range(b):
            form = form * e6
        rows.append(form.coeffs[1:])
    d = len(rows)
    for i in range(d):
        piv = next((rr for rr in range(i, d) if rows[rr][i] != 0), None)
        if piv is None:
            raise RuntimeError(f"cusp_basis: echelon pivot missing at weight {m}")
        rows[i], rows[piv] = rows[piv], rows[i]
        pv = rows[i][i]
        if pv != 1:
            rows[i] = [_intify(Fraction(x, 1) / pv) for x in rows[i]]
        for rr in range(d):
            if rr != i and rows[rr][i] != 0:
                f = rows[rr][i]
                rows[rr] = [_intify(x - f * y) for x, y in zip(rows[rr], rows[i])]
    return [[0] + row for row in rows]


# ---------------------------------------------------------------------------
# the H_k family
# ---------------------------------------------------------------------------


def hk_quasiform(k: int) -> "QuasiForm":
    """The weight-k combination whose coefficients vanish exactly at primes.

    H_6 = (1/6)((D^2 - D + 1) G_2 - G_4) and, for even k >= 8,
    H_k = (1/24)(-D^2 G_{k-6} + (D^2 + 1) G_{k-4} - G_{k-2}).
    """
    if k % 2 != 0 or k < 6:
        raise ValueError(f"hk: weight must be even and >= 6, got {k}")
    if k == 6:
        c = Fraction(1, 6)
        return QuasiForm(eis={(2, 2): c, (2, 1): -c, (2, 0): c, (4, 0): -c})
    c = Fraction(1, 24)
    return QuasiForm(
        eis={(k - 6, 2): -c, (k - 4, 2): c, (k - 4, 0): c, (k - 2, 0): -c}
    )


def hk(k: int, precision: int, constant_sign: str = "paper") -> QExpansion:
    return hk_quasiform(k).expand(precision, constant_sign=constant_sign)


# ---------------------------------------------------------------------------
# the canonical representation
# ---------------------------------------------------------------------------


def _check_coeff(value, where):
    if isinstance(value, ComplexRational):
        return value.re if value.im == 0 else value
    if isinstance(value, (int, Fraction)):
        return _intify(value)
    raise TypeError(f"QuasiForm: coefficient at {where} must be exact, got {value!r}")


class QuasiForm:
    """Sparse combination of Eisenstein derivatives and cusp form derivatives.

    eis maps (k, l) to the coefficient of D^l G_k; k is even and >= 2,
    except that the key (0, 0) carries a plain constant (products of the
    generators are constants away from the pure Eisenstein span, so the
    representation needs one).  cusp maps (m, i, l) to the coefficient of
    D^l applied to element i of cusp_basis(m).  Zero coefficients are
    never stored; coefficients may be ComplexRational, in which case the
    form cannot be serialized until split into real and imaginary parts.
    """

    __slots__ = ("eis", "cusp")

    def __init__(self, eis=None, cusp=None):
        ceis = {}
        for key, value in (eis or {}).items():
            k, l = key
            if k == 0:
                if l != 0:
                    raise ValueError(f"QuasiForm: constant key must be (0, 0), got {key}")
            elif k < 2 or k % 2 != 0 or l < 0:
                raise ValueError(f"QuasiForm: bad eis key {key}")
            value = _check_coeff(value, key)
            if value != 0:
                ceis[(k, l)] = value
        ccusp = {}
        for key, value in (cusp or {}).items():
            m, i, l = key
            if m % 2 != 0 or not 0 <= i < cusp_dim(m) or l < 0:
                raise ValueError(f"QuasiForm: bad cusp key {key}")
            value = _check_coeff(value, key)
            if value != 0:
                ccusp[(m, i, l)] = value
        self.eis = ceis
        self.cusp = ccusp

    @classmethod
    def constant(cls, c) -> "QuasiForm":
        return cls(eis={(0, 0): c})

    def is_zero(self) -> bool:
        return not self.eis and not self.cusp

    def eis_part(self) -> "QuasiForm":
        return QuasiForm(eis=self.eis)

    def cusp_part(self) -> "QuasiForm":
        return QuasiForm(cusp=self.cusp)

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QuasiForm):
            return NotImplemented
        eis = dict(self.eis)
        for key, value in other.eis.items():
            eis[key] = eis.get(key, 0) + value
        cusp = dict(self.cusp)
        for key, value in other.cusp.items():
            cusp[key] = cusp.get(key, 0) + value
        return QuasiForm(eis=eis, cusp=cusp)

    def __sub__(self, other):
        if not isinstance(other, QuasiForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QuasiForm(
            eis={key: -value for key, value in self.eis.items()},
            cusp={key: -value for key, value in self.cusp.items()},
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction, ComplexRational)):
            return NotImplemented
        return QuasiForm(
            eis={key: scalar * value for key, value in self.eis.items()},
            cusp={key: scalar * value for key, value in self.cusp.items()},
        )

    __rmul__ = __mul__

    def derivative(self, order: int = 1) -> "QuasiForm":
        """Apply D = q d/dq termwise; the constant key is annihilated."""
        if order < 0:
            raise ValueError(f"derivative order must be >= 0, got {order}")
        if order == 0:
            return self
        eis = {
            (k, l + order): value for (k, l), value in self.eis.items() if k != 0
        }
        cusp = {(m, i, l + order): value for (m, i, l), value in self.cusp.items()}
        return QuasiForm(eis=eis, cusp=cusp)

    def __eq__(self, other):
        if not isinstance(other, QuasiForm):
            return NotImplemented
        return self.eis == other.eis and self.cusp == other.cusp

    __hash__ = None

    def __repr__(self):
        return f"QuasiForm(eis={self.eis!r}, cusp={self.cusp!r})"

    # -- expansion ----------------------------------------------------------

    def expand(self, precision: int, constant_sign: str = "paper") -> QExpansion:
        total = QExpansion.zero(precision)
        for (k, l), coeff in sorted(self.eis.items()):
            base = (
                QExpansion.one(precision)
                if k == 0
                else eisenstein_g(k, precision, constant_sign)
            )
            total = total + coeff * base.derivative(l)
        for (m, i, l), coeff in sorted(self.cusp.items()):
            total = total + coeff * cusp_basis(m, precision)[i].derivative(l)
        return total

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        def coeff_str(value, where):
            if isinstance(value, ComplexRational):
                raise ValueError(
                    f"QuasiForm: complex coefficient at {where} has no JSON form; "
                    "split into real and imaginary parts first"
                )
            return str(Fraction(value))

        return {
            "eis": [
                [k, l, coeff_str(v, (k, l))] for (k, l), v in sorted(self.eis.items())
            ],
            "cusp": [
                [m, i, l, coeff_str(v, (m, i, l))]
                for (m, i, l), v in sorted(self.cusp.items())
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "QuasiForm":
        eis = {}
        for entry in data.get("eis", []):
            k, l, value = entry
            if (k, l) in eis:
                raise ValueError(f"QuasiForm: duplicate eis entry for {(k, l)}")
            eis[(int(k), int(l))] = Fraction(value)
        cusp = {}
        for entry in data.get("cusp", []):
            m, i, l, value = entry
            if (m, i, l) in cusp:
                raise ValueError(f"QuasiForm: duplicate cusp entry for {(m, i, l)}")
            cusp[(int(m), int(i), int(l))] = Fraction(value)
        return cls(eis=eis, cusp=cusp)

    @classmethod
    def from_json(cls, text: str) -> "QuasiForm":
        return cls.from_dict(json.loads(text))


def quasiform_expand(
    form: QuasiForm, precision: int, constant_sign: str = "paper"
) -> QExpansion:
    return form.expand(precision, constant_sign=constant_sign)


# ---------------------------------------------------------------------------
# conversion from generator monomials
# ---------------------------------------------------------------------------


def expand_monomials(
    monomials: dict, precision: int, constant_sign: str = "paper"
) -> QExpansion:
    """Expand sum coeff * G_2^a G_4^b G_6^c over {(a, b, c): coeff}."""
    total = QExpansion.zero(precision)
    gens = {}
    for (a, b, c), coeff in sorted(monomials.items()):
        if min(a, b, c) < 0:
            raise ValueError(f"expand_monomials: negative exponent in {(a, b, c)}")
        if coeff == 0:
            continue
        term = QExpansion.one(precision)
        for k, e in ((2, a), (4, b), (6, c)):
            if e:
                if k not in gens:
                    gens[k] = eisenstein_g(k, precision, constant_sign)
                for _ in range(e):
                    term = term * gens[k]
        total = total + coeff * term
    return total


def spanning_keys(weight: int) -> tuple[list, list]:
    """Basis keys of the weight-w quasimodular space.

    Eisenstein side: D^l G_k for every even k with k + 2l = w (the k = 2
    column only ever appears with l = w/2 - 1, which this enumeration
    produces on its own).  Cusp side: D^l applied to each cusp basis
    element of weight m = w - 2l >= 12.
    """
    if weight < 2 or weight % 2 != 0:
        raise ValueError(f"spanning_keys: weight must be even and >= 2, got {weight}")
    eis = [(k, (weight - k) // 2) for k in range(weight, 1, -2)]
    cusp = [
        (m, i, (weight - m) // 2)
        for m in range(12, weight + 1, 2)
        for i in range(cusp_dim(m))
    ]
    return eis, cusp


def _classicalize(monomials: dict) -> dict:
    # G_k(paper) = G_k(classical) + B_k/k, expanded binomially; classical
    # monomials are weight-homogeneous, which the per-weight solve needs
    shift = {k: bernoulli(k) / k for k in (2, 4, 6)}
    out: dict = defaultdict(lambda: Fraction(0))
    for (a, b, c), coeff in monomials.items():
        for aa in range(a + 1):
            for bb in range(b + 1):
                for cc in range(c + 1):
                    out[(aa, bb, cc)] += (
                        Fraction(coeff)
                        * comb(a, aa)
                        * comb(b, bb)
                        * comb(c, cc)
                        * shift[2] ** (a - aa)
                        * shift[4] ** (b - bb)
                        * shift[6] ** (c - cc)
                    )
    return {key: value for key, value in out.items() if value != 0}


def from_monomials(
    monomials: dict, n_guard: int = 60, constant_sign: str = "paper"
) -> QuasiForm:
    """Rewrite a generator-monomial combination in the canonical basis.

    Works one graded weight at a time: the monomials are first shifted to
    the sign convention in which they are weight-homogeneous, each weight
    is solved exactly against its spanning set, and the shift is undone.
    The result is certified by re-expansion through q^n_guard; a residual
    there means the internal precision bound was too small for the input
    and is reported rather than papered over.
    """
    paper = _constant_factor(constant_sign) == 1
    for key in monomials:
        if min(key) < 0:
            raise ValueError(f"from_monomials: negative exponent in {key}")
    cleaned = {key: value for key, value in monomials.items() if value != 0}
    classical = _classicalize(cleaned) if paper else cleaned

    by_weight: dict[int, dict] = defaultdict(dict)
    for (a, b, c), value in classical.items():
        by_weight[2 * a + 4 * b + 6 * c][(a, b, c)] = value
    const_total = Fraction(by_weight.pop(0, {}).get((0, 0, 0), 0))

    eis_out: dict = {}
    cusp_out: dict = {}
    for weight, mono_w in sorted(by_weight.items()):
        eis_keys, cusp_keys = spanning_keys(weight)
        ncols = len(eis_keys) + len(cusp_keys)
        prec = ncols + 10
        target = expand_monomials(mono_w, prec, "classical")
        cols = [
            eisenstein_g(k, prec, "classical").derivative(l).coeffs
            for (k, l) in eis_keys
        ]
        cols += [
            cusp_basis(m, prec)[i].derivative(l).coeffs for (m, i, l) in cusp_keys
        ]
        rows = [[col[n] for col in cols] for n in range(prec + 1)]
        solution = solve_exact(rows, target.coeffs)
        if solution is None:
            raise ValueError(
                f"from_monomials: inconsistent solve at weight {weight}; "
                "the spanning set failed to reproduce the product expansion"
            )
        for (k, l), value in zip(eis_keys, solution):
            if value != 0:
                eis_out[(k, l)] = value
                if paper and l == 0:
                    # G_k(classical) = G_k(paper) - B_k/k
                    const_total -= value * bernoulli(k) / k
        for key, value in zip(cusp_keys, solution[len(eis_keys) :]):
            if value != 0:
                cusp_out[key] = value
    if const_total != 0:
        eis_out[(0, 0)] = const_total

    result = QuasiForm(eis=eis_out, cusp=cusp_out)
    if result.expand(n_guard, constant_sign) != expand_monomials(
        cleaned, n_guard, constant_sign
    ):
        raise ValueError(
            "from_monomials: inconsistent residual at guard precision "
            f"{n_guard}; raise the guard or report the input"
        )
    return result
