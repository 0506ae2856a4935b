"""Exact polynomial arithmetic in the jet variables of two functions.

Variables f0..f6 stand for the successive derivatives of a function
evaluated at x, g0..g6 for those of a second function evaluated at y;
p0..p3 and l0, l1 are free scalar parameters used by the ODE substitution
checks. Coefficients are exact rationals, so equality of two polynomials
certifies an identity instead of approximating it.

Three derivations act on the ring:

    d/dx : f_i -> f_{i+1},  g_i -> 0
    d/dy : g_i -> g_{i+1},  f_i -> 0
    bar  : d/dy - d/dx

and the columns of the eliminated determinants are built from

    a_k = bar^(k-1)(g0 - f0),  b_k = bar^k(g0 + f0),  c_k = bar^k(g0*f0).

The jet order is capped at 6: the deepest check needs f5, and one spare
order gives the derivations headroom while keeping monomial keys fixed
width. Monomials are ordered graded-lexicographically with
f0 < f1 < ... < f6 < g0 < ... < g6 < p0 < ... < l1, fixed once so that
leading terms, exact division and rendered reports are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import JetOrderOverflow, MissingJet

MAX_JET_ORDER = 6
_JETS = MAX_JET_ORDER + 1

PARAMETERS = ("p0", "p1", "p2", "p3", "l0", "l1")
VARIABLES = (
    tuple(f"f{i}" for i in range(_JETS))
    + tuple(f"g{i}" for i in range(_JETS))
    + PARAMETERS
)
NVARS = len(VARIABLES)

_VARIDX = {name: i for i, name in enumerate(VARIABLES)}
_F_BLOCK = 0
_G_BLOCK = _JETS
_PARAM_BLOCK = 2 * _JETS
_ZERO_MONO = (0,) * NVARS
_F0 = Fraction(0)
_F1 = Fraction(1)

Scalar = Union[int, Fraction]


def _mono_key(mono):
    # graded lex; the reversed tuple makes later-listed variables dominate,
    # i.e. f0 is the smallest variable
    return (sum(mono), mono[::-1])


class DiffPolynomial:
    """Multivariate polynomial over the jet variables with exact coefficients.

    Instances are immutable after construction and safe to share; all
    arithmetic returns new objects in canonical form (no zero coefficient is
    ever stored, equality is structural).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if q:
                    acc = clean.get(mono, _F0) + q
                    if acc:
                        clean[mono] = acc
                    else:
                        clean.pop(mono, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "DiffPolynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "DiffPolynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, q: Scalar) -> "DiffPolynomial":
        q = q if isinstance(q, Fraction) else Fraction(q)
        return cls._raw({_ZERO_MONO: q} if q else {})

    @classmethod
    def variable(cls, name: str) -> "DiffPolynomial":
        idx = _VARIDX[name]
        mono = tuple(1 if i == idx else 0 for i in range(NVARS))
        return cls._raw({mono: _F1})

    def terms(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def jet_order(self, prefix: str) -> int:
        """Highest derivative index of the given block ('f' or 'g') that occurs."""
        block = _F_BLOCK if prefix == "f" else _G_BLOCK
        order = -1
        for mono in self._terms:
            for i in range(_JETS - 1, -1, -1):
                if mono[block + i]:
                    order = max(order, i)
                    break
        return order

    def leading_term(self) -> tuple[tuple, Fraction]:
        mono = max(self._terms, key=_mono_key)
        return mono, self._terms[mono]

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, DiffPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return DiffPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, q in other._terms.items():
            s = terms.get(m, _F0) + q
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return DiffPolynomial._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffPolynomial._raw({m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple, Fraction] = {}
        for m1, q1 in self._terms.items():
            for m2, q2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, _F0) + q1 * q2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return DiffPolynomial._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = DiffPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_mono_key, reverse=True):
            q = self._terms[mono]
            factors = [
                VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors)
            mag = abs(q)
            if not factors:
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = f"{mag}*{body}"
            parts.append(("- " if q < 0 else "+ ") + chunk)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"DiffPolynomial({self})"


def f(i: int) -> DiffPolynomial:
    """Jet variable f_i (i-th derivative of the x-function)."""
    return DiffPolynomial.variable(f"f{i}")


def g(i: int) -> DiffPolynomial:
    """Jet variable g_i (i-th derivative of the y-function)."""
    return DiffPolynomial.variable(f"g{i}")


def param(name: str) -> DiffPolynomial:
    if name not in PARAMETERS:
        raise KeyError(name)
    return DiffPolynomial.variable(name)


def derive(p: DiffPolynomial, direction: str) -> DiffPolynomial:
    """Apply one of the derivations d/dx, d/dy or bar = d/dy - d/dx.

    Leibniz-linear; parameters differentiate to zero. Raises
    JetOrderOverflow if the shift would pass the supported jet order.
    """
    if direction == "bar":
        return derive(p, "y") - derive(p, "x")
    if direction not in ("x", "y"):
        raise ValueError(f"unknown direction {direction!r}")
    block = _F_BLOCK if direction == "x" else _G_BLOCK
    terms: dict[tuple, Fraction] = {}
    for mono, q in p.terms():
        for i in range(_JETS):
            e = mono[block + i]
            if not e:
                continue
            if i + 1 >= _JETS:
                raise JetOrderOverflow(
                    f"derivative of {VARIABLES[block + i]} exceeds jet order {MAX_JET_ORDER}"
                )
            m = list(mono)
            m[block + i] -= 1
            m[block + i + 1] += 1
            m = tuple(m)
            s = terms.get(m, _F0) + q * e
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
    return DiffPolynomial._raw(terms)


def substitute(p: DiffPolynomial, mapping: Mapping[str, DiffPolynomial | Scalar]) -> DiffPolynomial:
    """Substitution homomorphism replacing whole variables by polynomials."""
    table: dict[int, DiffPolynomial] = {}
    for name, value in mapping.items():
        if not isinstance(value, DiffPolynomial):
            value = DiffPolynomial.constant(value)
        table[_VARIDX[name]] = value
    out = DiffPolynomial.zero()
    for mono, q in p.terms():
        term = DiffPolynomial.constant(q)
        rest = list(mono)
        for i, repl in table.items():
            e = rest[i]
            if e:
                rest[i] = 0
                term = term * repl**e
        term = term * DiffPolynomial._raw({tuple(rest): _F1})
        out = out + term
    return out


def substitute_g_to_f(p: DiffPolynomial) -> DiffPolynomial:
    """Identify the two functions: g_i -> f_i for every jet index."""
    return substitute(p, {f"g{i}": f(i) for i in range(_JETS)})


def reduce_power(p: DiffPolynomial, name: str, square: DiffPolynomial) -> DiffPolynomial:
    """Rewrite name^e as square^(e//2) * name^(e%2) in every term.

    Used for normal-form reduction against a first-order ODE, e.g. replacing
    f1^2 by the cubic in f0; `square` must not contain `name`.
    """
    idx = _VARIDX[name]
    var_poly = DiffPolynomial.variable(name)
    out = DiffPolynomial.zero()
    for mono, q in p.terms():
        e = mono[idx]
        if e < 2:
            out = out + DiffPolynomial._raw({mono: q})
            continue
        rest = list(mono)
        rest[idx] = 0
        term = DiffPolynomial._raw({tuple(rest): q}) * square ** (e // 2)
        if e % 2:
            term = term * var_poly
        out = out + term
    return out


def divide_exact(numerator: DiffPolynomial, denominator: DiffPolynomial) -> DiffPolynomial | None:
    """Exact quotient q with numerator == q*denominator, or None.

    Single-divisor multivariate division in the fixed monomial order. When
    the division is exact the quotient is recovered term by term; a leading
    monomial that the divisor's leading monomial does not divide proves
    inexactness.
    """
    if denominator.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.is_zero():
        return DiffPolynomial.zero()
    lead_mono, lead_coeff = denominator.leading_term()
    quotient: dict[tuple, Fraction] = {}
    rem = numerator
    while not rem.is_zero():
        m, c = rem.leading_term()
        dm = tuple(a - b for a, b in zip(m, lead_mono))
        if any(e < 0 for e in dm):
            return None
        qc = c / lead_coeff
        quotient[dm] = qc
        rem = rem - DiffPolynomial._raw({dm: qc}) * denominator
    return DiffPolynomial._raw(quotient)


def evaluate(
    p: DiffPolynomial,
    f_jets: Iterable[complex] | None = None,
    g_jets: Iterable[complex] | None = None,
    params: Mapping[str, complex] | None = None,
    absolute: bool = False,
) -> complex:
    """Substitute numeric jets; exact in the coefficients, floating in the jets.

    f_jets[i] supplies f_i and g_jets[i] supplies g_i. With absolute=True
    the sum of |coefficient| * prod |value|^e is returned instead, which is
    the natural cancellation scale for residual normalisation.
    """
    fv = list(f_jets) if f_jets is not None else []
    gv = list(g_jets) if g_jets is not None else []
    pv = dict(params) if params else {}
    total = 0j if not absolute else 0.0
    for mono, q in p.terms():
        value = complex(q) if not absolute else abs(float(q))
        for i, e in enumerate(mono):
            if not e:
                continue
            name = VARIABLES[i]
            if i < _G_BLOCK:
                src = fv
                k = i
            elif i < _PARAM_BLOCK:
                src = gv
                k = i - _G_BLOCK
            else:
                if name not in pv:
                    raise MissingJet(f"no value supplied for parameter {name}")
                base = pv[name]
                value *= (abs(base) if absolute else base) ** e
                continue
            if k >= len(src):
                raise MissingJet(f"jet {name} not covered by the supplied values")
            base = src[k]
            value *= (abs(base) if absolute else base) ** e
        total += value
    return total


# -- building blocks of the eliminated determinants --------------------------


def build_abc(k: int) -> tuple[DiffPolynomial, DiffPolynomial, DiffPolynomial]:
    """The k-th column (a_k, b_k, c_k) of the derived linear relations."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = g(0) - f(0)
    for _ in range(k - 1):
        a = derive(a, "bar")
    b = g(0) + f(0)
    c = g(0) * f(0)
    for _ in range(k):
        b = derive(b, "bar")
        c = derive(c, "bar")
    return a, b, c


def det3_poly(rows) -> DiffPolynomial:
    """Determinant of a 3x3 matrix of polynomials by cofactor expansion."""
    (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = rows
    return (
        m00 * (m11 * m22 - m12 * m21)
        - m01 * (m10 * m22 - m12 * m20)
        + m02 * (m10 * m21 - m11 * m20)
    )


def abc_det(k: int, l: int, s: int) -> DiffPolynomial:
    """Determinant over columns (k, l, s) of the (a, b, c) rows."""
    ak, bk, ck = build_abc(k)
    al, bl, cl = build_abc(l)
    as_, bs, cs = build_abc(s)
    return det3_poly([[ak, al, as_], [bk, bl, bs], [ck, cl, cs]])


def build_addet(k: int, l: int) -> DiffPolynomial:
    """Two-column eliminated determinant with the differentiated third column.

    Columns (a_k, b_k, c_k) and (a_l, b_l, c_l), third column
    (a_k dy a_l - a_l dy a_k,
     a_k dy b_l - a_l dy b_k,
     a_k dy c_l - a_l dy c_k + b_k c_l - b_l c_k),
    expanded into a single exact polynomial.
    """
    if k == l:
        raise ValueError("column indices must differ")
    ak, bk, ck = build_abc(k)
    al, bl, cl = build_abc(l)
    t1 = ak * derive(al, "y") - al * derive(ak, "y")
    t2 = ak * derive(bl, "y") - al * derive(bk, "y")
    t3 = ak * derive(cl, "y") - al * derive(ck, "y") + bk * cl - bl * ck
    return det3_poly([[ak, al, t1], [bk, bl, t2], [ck, cl, t3]])
