"""Certified symbolic identities behind the elimination argument.

Every check builds both sides of an identity as exact jet polynomials and
reports whether one side exactly divides the other. The discovered cofactor
is part of the report, never assumed, because the source identities are
stated as "0 = product" without fixing an overall scale. A report with
holds=False is a valid outcome, not an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import JetOrderOverflow, TruncationTooLow
from .jetpoly import (
    MAX_JET_ORDER,
    DiffPolynomial,
    abc_det,
    build_abc,
    build_addet,
    derive,
    divide_exact,
    f,
    g,
    param,
    reduce_power,
    substitute,
    substitute_g_to_f,
)


@dataclass(frozen=True)
class CofactorReport:
    """Outcome of one exact-division certification.

    When holds is true, lhs - cofactor*rhs re-expands to the zero polynomial;
    the note carries human-readable detail for the run report.
    """

    holds: bool
    cofactor: DiffPolynomial | None
    note: str = ""

    def cofactor_text(self) -> str:
        return str(self.cofactor) if self.cofactor is not None else ""


# -- quadratic-in-g2 factorization -------------------------------------------


def elimination_polynomial() -> DiffPolynomial:
    """The combined determinant with the third-derivative column cancelled.

    Linear combination of the differentiated two-column determinant for
    columns (1, 2) and -a_1 times the plain determinant over columns
    (1, 2, 3); the combination removes every g3 from the third column.
    """
    a1 = build_abc(1)[0]
    return build_addet(1, 2) - a1 * abc_det(1, 2, 3)


def factor_one() -> DiffPolynomial:
    """First factor: quadratic in the jets, linear in g2."""
    return f(1) * g(1) - g(1) ** 2 - f(0) * g(2) + g(0) * g(2)


def factor_two() -> DiffPolynomial:
    """Second factor: cubic in the jets, carries the third x-derivative."""
    return (
        3 * f(1) ** 3
        - 3 * f(1) * g(1) ** 2
        - 4 * f(0) * f(1) * f(2)
        + 4 * g(0) * f(1) * f(2)
        + g(0) ** 2 * f(3)
        - 2 * f(0) * f(1) * g(2)
        + 2 * g(0) * f(1) * g(2)
        + f(0) ** 2 * f(3)
        - 2 * f(0) * g(0) * f(3)
    )


def factorization_check(factors: tuple[DiffPolynomial, DiffPolynomial] | None = None) -> CofactorReport:
    """Certify that the eliminated determinant splits into the two factors.

    Builds the combined elimination polynomial E and divides it exactly by
    the product of the two candidate factors (the canonical ones unless a
    pair is supplied, e.g. a deliberately corrupted control). Returns the
    computed cofactor; holds=False simply reports a failed division.
    """
    t1, t2 = factors if factors is not None else (factor_one(), factor_two())
    lhs = elimination_polynomial()
    product = t1 * t2
    cofactor = divide_exact(lhs, product)
    if cofactor is None:
        return CofactorReport(False, None, "no exact cofactor exists")
    assert (lhs - cofactor * product).is_zero()
    return CofactorReport(True, cofactor, f"eliminated determinant = ({cofactor}) * factor1 * factor2")


# -- quotient-rule rewrites of the two factors --------------------------------


def factor_rewrite_check(direction: str = "y") -> tuple[CofactorReport, CofactorReport]:
    """Certify the derivative-quotient rewrites of the two factors.

    First rewrite:  (f0-g0)^2 * d/dy[(f1-g1)/(f0-g0)]          == factor one.
    Second rewrite: ((f0-g0)^4/g1) * d/dy[ f1(f1^2-g1^2)/(f0-g0)^3
                     - 2 f1 f2/(f0-g0)^2 + f3/(f0-g0) ]        == factor two.

    Denominators are cleared symbolically (quotient rule on the numerator
    and denominator separately) and the numerators compared as polynomials.
    Passing direction='x' is the sanity control: the wrong derivation
    direction must break both identities.
    """
    den = f(0) - g(0)

    # d/dy[(f1-g1)/(f0-g0)] multiplied through by (f0-g0)^2
    num1 = f(1) - g(1)
    lhs1 = derive(num1, direction) * den - num1 * derive(den, direction)
    rhs1 = factor_one()
    cof1 = divide_exact(lhs1, rhs1)
    ok1 = cof1 is not None and (lhs1 - cof1 * rhs1).is_zero()
    rep1 = CofactorReport(
        bool(ok1), cof1 if ok1 else None,
        "first factor rewrite" + ("" if ok1 else " does not hold"),
    )

    # inner rational function has denominator (f0-g0)^3; after the quotient
    # rule and multiplication by (f0-g0)^4/g1 the cleared comparison is
    #   derive(N)* (f0-g0) - 3*N*derive(f0-g0)  ==  g1 * factor two
    num2 = (
        f(1) * (f(1) ** 2 - g(1) ** 2)
        - 2 * f(1) * f(2) * den
        + f(3) * den**2
    )
    lhs2 = derive(num2, direction) * den - 3 * num2 * derive(den, direction)
    rhs2 = g(1) * factor_two()
    cof2 = divide_exact(lhs2, rhs2)
    ok2 = cof2 is not None and (lhs2 - cof2 * rhs2).is_zero()
    rep2 = CofactorReport(
        bool(ok2), cof2 if ok2 else None,
        "second factor rewrite" + ("" if ok2 else " does not hold"),
    )
    return rep1, rep2


# -- single-function specialisation of the (2, 4) determinant ------------------


def diagonal_first_factor() -> DiffPolynomial:
    """Cleared numerator of (f''/f')' in the jets: f3 f1 - f2^2."""
    return f(3) * f(1) - f(2) ** 2


def diagonal_second_factor() -> DiffPolynomial:
    """Cleared numerator of ((1/f')(f'''/f')')' in the jets."""
    return (
        f(5) * f(1) ** 2
        - f(3) ** 2 * f(1)
        - 3 * f(2) * f(4) * f(1)
        + 3 * f(2) ** 2 * f(3)
    )


def diagonal_product_check() -> CofactorReport:
    """Certify the single-function form of the (2, 4) eliminated determinant.

    Specialising the two-column determinant for columns (2, 4) to a single
    function (g_i -> f_i) must reproduce the cleared-denominator expansion of

        (f')^6 * (f''/f')' * ((1/f') (f'''/f')')'

    up to a rational-constant-times-monomial cofactor found by division.
    """
    lhs = substitute_g_to_f(build_addet(2, 4))
    product = diagonal_first_factor() * diagonal_second_factor()
    cofactor = divide_exact(lhs, product)
    if cofactor is None:
        return CofactorReport(False, None, "no exact cofactor exists")
    assert (lhs - cofactor * product).is_zero()
    return CofactorReport(True, cofactor, f"diagonal determinant = ({cofactor}) * product form")


# -- ODE coefficient block -----------------------------------------------------


def cubic_branch_reduce(p: DiffPolynomial) -> DiffPolynomial:
    """Reduce a polynomial modulo the cubic first-order ODE.

    Substitutes the successive derivatives of w'^2 = p3 w^3 + p2 w^2 + p1 w + p0:

        f2 -> (3 p3 f0^2 + 2 p2 f0 + p1)/2
        f3 -> (3 p3 f0 + p2) f1
        f4 -> (3 p3 f0 + p2) f2 + 3 p3 f1^2

    (highest order first, so each replacement is itself reduced), then
    rewrites every f1^2 as the cubic itself.
    """
    p0, p1, p2, p3 = (param(n) for n in ("p0", "p1", "p2", "p3"))
    half = Fraction(1, 2)
    p = substitute(p, {"f4": (3 * p3 * f(0) + p2) * f(2) + 3 * p3 * f(1) ** 2})
    p = substitute(p, {"f3": (3 * p3 * f(0) + p2) * f(1)})
    p = substitute(p, {"f2": half * (3 * p3 * f(0) ** 2 + 2 * p2 * f(0) + p1)})
    cubic = p3 * f(0) ** 3 + p2 * f(0) ** 2 + p1 * f(0) + p0
    return reduce_power(p, "f1", cubic)


def linear_branch_reduce(p: DiffPolynomial) -> DiffPolynomial:
    """Reduce modulo the linear first-order ODE w' = l1 w + l0."""
    l0, l1 = param("l0"), param("l1")
    p = substitute(p, {"f2": l1 * f(1)})
    return substitute(p, {"f1": l1 * f(0) + l0})


def cubic_block_formulas() -> dict[str, DiffPolynomial]:
    """Cleared-denominator coefficient formulas of the cubic branch.

    Each entry is (formula minus its coefficient symbol) multiplied through
    by the power of f1 that clears it, so that reduction modulo the ODE must
    yield the zero polynomial.
    """
    p0, p1, p2, p3 = (param(n) for n in ("p0", "p1", "p2", "p3"))
    bracket = f(1) * f(4) - f(2) * f(3)
    return {
        "p3": bracket - 3 * p3 * f(1) ** 3,
        "p2": p2 * f(1) ** 3 - (f(3) * f(1) ** 2 - f(0) * bracket),
        "p1": p1 * f(1) ** 3
        - (2 * f(2) * f(1) ** 3 - 2 * f(0) * f(3) * f(1) ** 2 + f(0) ** 2 * bracket),
        "p0": 3 * p0 * f(1) ** 3
        - (
            3 * f(1) ** 5
            - 6 * f(0) * f(2) * f(1) ** 3
            + 3 * f(0) ** 2 * f(3) * f(1) ** 2
            - f(0) ** 3 * bracket
        ),
    }


def linear_block_formulas() -> dict[str, DiffPolynomial]:
    """Cleared coefficient formulas of the linear branch."""
    l0, l1 = param("l0"), param("l1")
    return {
        "l1": l1 * f(1) - f(2),
        "l0": l0 * f(1) - (f(1) ** 2 - f(0) * f(2)),
    }


def ode_coefficient_check() -> CofactorReport:
    """Certify that all six coefficient formulas reduce to their symbols.

    Cubic branch: each cleared formula for p0..p3 reduces to zero under the
    ODE substitutions, so the quotient formula equals the constant symbol
    exactly. Linear branch: same for l0 and l1 under w' = l1 w + l0. The
    coefficient symbols are carried as extra polynomial variables.
    """
    failures = []
    for name, cleared in cubic_block_formulas().items():
        if not cubic_branch_reduce(cleared).is_zero():
            failures.append(name)
    for name, cleared in linear_block_formulas().items():
        if not linear_branch_reduce(cleared).is_zero():
            failures.append(name)
    if failures:
        return CofactorReport(False, None, "formulas failed: " + ", ".join(failures))
    return CofactorReport(
        True,
        DiffPolynomial.constant(1),
        "all six coefficient formulas reduce exactly to their symbols",
    )


# -- central-difference expansion ----------------------------------------------


@dataclass(frozen=True)
class EtaSeries:
    """Truncated power series in the half-difference variable.

    Coefficients are jet polynomials of the single function at the midpoint;
    coefficients[j] multiplies eta^j.
    """

    coefficients: tuple[DiffPolynomial, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __sub__(self, other: "EtaSeries") -> "EtaSeries":
        n = min(self.order, other.order)
        return EtaSeries(
            tuple(self.coefficients[j] - other.coefficients[j] for j in range(n + 1))
        )

    def __mul__(self, other: "EtaSeries") -> "EtaSeries":
        n = min(self.order, other.order)
        coeffs = []
        for j in range(n + 1):
            acc = DiffPolynomial.zero()
            for i in range(j + 1):
                acc = acc + self.coefficients[i] * other.coefficients[j - i]
            coeffs.append(acc)
        return EtaSeries(tuple(coeffs))

    def scaled(self, q) -> "EtaSeries":
        return EtaSeries(tuple(c * DiffPolynomial.constant(q) for c in self.coefficients))


def shifted_jet_series(order: int, derivative: int = 0, sign: int = 1) -> EtaSeries:
    """Taylor series of the derivative-th jet at midpoint +/- eta."""
    coeffs = []
    for j in range(order + 1):
        idx = j + derivative
        if idx > MAX_JET_ORDER:
            raise JetOrderOverflow(f"expansion needs jet f{idx}")
        coeffs.append(f(idx) * DiffPolynomial.constant(Fraction(sign**j, math.factorial(j))))
    return EtaSeries(tuple(coeffs))


def central_difference_series(order: int, derivative: int = 0) -> tuple[EtaSeries, EtaSeries]:
    """(difference, average) operator series for the derivative-th jet.

    difference(eta) = f(xi+eta) - f(xi-eta); average = the mean of the two.
    The difference of any series even in eta has identically zero even
    coefficients, which the parity test exercises.
    """
    plus = shifted_jet_series(order, derivative, +1)
    minus = shifted_jet_series(order, derivative, -1)
    half = Fraction(1, 2)
    return plus - minus, (plus - minus.scaled(-1)).scaled(half)


def central_difference_check(order: int = 5) -> CofactorReport:
    """Certify the two lowest relations of the central-difference expansion.

    Expanding  diff(f)*avg(f') - diff(f')*avg(f)  in powers of eta yields,
    at order eta^(2k-1), a relation  A_k F' - B_k F + C_k = 0  in the value F
    and derivative F' of the function at the doubled opposite point. The
    check confirms, up to one per-order rational normalisation reported in
    the note, that

        A_1 = f1, B_1 = f2, C_1 = f0 f2 - f1^2,
        A_2 = f3, B_2 = f4, C_2 = -4 f1 f3 + f0 f4 + 3 f2^2.
    """
    if order < 5:
        raise TruncationTooLow("expansion order must be at least 5")
    if order > MAX_JET_ORDER - 1:
        raise JetOrderOverflow(f"expansion order {order} needs jets beyond f{MAX_JET_ORDER}")
    diff0, avg0 = central_difference_series(order, 0)
    diff1, avg1 = central_difference_series(order, 1)
    lhs = diff0 * avg1 - diff1 * avg0

    expected = {
        1: (f(1), f(2), f(0) * f(2) - f(1) ** 2),
        2: (f(3), f(4), -4 * f(1) * f(3) + f(0) * f(4) + 3 * f(2) ** 2),
    }
    norms = []
    for k in (1, 2):
        j = 2 * k - 1
        a_raw = diff0.coefficients[j]
        b_raw = diff1.coefficients[j]
        c_raw = -lhs.coefficients[j]
        exp_a, exp_b, exp_c = expected[k]
        q = divide_exact(a_raw, exp_a)
        if q is None or q.total_degree() != 0:
            return CofactorReport(False, None, f"order {k}: no constant normalisation")
        if b_raw != q * exp_b or c_raw != q * exp_c:
            return CofactorReport(False, None, f"order {k}: coefficients do not match")
        norms.append(f"order {k}: {q}")
    return CofactorReport(
        True,
        DiffPolynomial.constant(1),
        "coefficients confirmed; per-order normalisations " + "; ".join(norms),
    )


CHECK_NAMES = ("factorization", "rewrites", "eqf", "coefficients", "eta")


def run_checks(names=CHECK_NAMES) -> list[tuple[str, CofactorReport]]:
    """Run the named certifications and return (label, report) rows."""
    rows: list[tuple[str, CofactorReport]] = []
    for name in names:
        if name == "factorization":
            rows.append((name, factorization_check()))
        elif name == "rewrites":
            first, second = factor_rewrite_check()
            rows.append(("rewrites/first", first))
            rows.append(("rewrites/second", second))
        elif name == "eqf":
            rows.append((name, diagonal_product_check()))
        elif name == "coefficients":
            rows.append((name, ode_coefficient_check()))
        elif name == "eta":
            rows.append((name, central_difference_check()))
        else:
            raise KeyError(name)
    return rows
