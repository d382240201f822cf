"""Quadratic Diophantine equations via reduction to a factorable Pell-like form.

The general equation

    a*x^2 + b*x*y + c*y^2 + d*x + e*y + f = 0        (integer coefficients)

reduces, with

    D = b^2 - 4ac,   E = bd - 2ae,   F = d^2 - 4af,   N = E^2 - D*F,

to X^2 - D*Y^2 = N under the substitution X = D*y + E, Y = 2a*x + b*y + d.
The reduction is implemented for arbitrary c; solving is implemented only for
the case c = 0, where D = b^2 is a perfect square and the form factors as
(X + bY)(X - bY) = N.  Every factor pair N1 * N2 = N then pins

    X = (N1 + N2)/2,   Y = (N1 - N2)/(2b),

and back-substitution recovers candidate (x, y) as exact rationals:

    y = (X - E)/D,     x = (Y - b*y - d)/(2a).

All arithmetic is exact.  Non-integral rows are retained (flagged, not
dropped) so the full enumeration trace can be rendered; only rows where
X, Y, x, y are all integers contribute to the solution set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = int | Fraction


@dataclass(frozen=True)
class QuadraticDiophantine:
    """Coefficients of a*x^2 + b*x*y + c*y^2 + d*x + e*y + f = 0.

    Requires a != 0 (back-substitution divides by 2a).
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self) -> None:
        if self.a == 0:
            raise ValueError("coefficient a must be nonzero")

    def evaluate(self, x: Rational, y: Rational) -> Rational:
        """Left-hand side at (x, y); zero exactly when (x, y) is a solution."""
        return (
            self.a * x * x
            + self.b * x * y
            + self.c * y * y
            + self.d * x
            + self.e * y
            + self.f
        )


@dataclass(frozen=True)
class ReducedForm:
    """The Pell-like constants of an equation, X^2 - D*Y^2 = N."""

    equation: QuadraticDiophantine
    D: int
    E: int
    F: int
    N: int


@dataclass(frozen=True)
class FactorPairRow:
    """One enumeration row: a factor pair and everything derived from it.

    ``integral`` is true iff X, Y, x and y are all integers; only such rows
    yield solutions of the original equation.
    """

    N1: int
    N2: int
    X: Fraction
    Y: Fraction
    x: Fraction
    y: Fraction
    integral: bool


def reduce(eq: QuadraticDiophantine) -> ReducedForm:
    """Compute the four derived constants (valid for any c)."""
    D = eq.b * eq.b - 4 * eq.a * eq.c
    E = eq.b * eq.d - 2 * eq.a * eq.e
    F = eq.d * eq.d - 4 * eq.a * eq.f
    return ReducedForm(equation=eq, D=D, E=E, F=F, N=E * E - D * F)


def back_substitute(X: Rational, Y: Rational, form: ReducedForm) -> tuple[int, int] | None:
    """Recover (x, y) from a point on X^2 - D*Y^2 = N, or None.

    y = (X - E)/D is taken first, then x = (Y - b*y - d)/(2a) using it; the
    pair is returned only when both quotients are integers.
    """
    if form.D == 0:
        raise ValueError("back-substitution requires D != 0")
    eq = form.equation
    y = Fraction(X - form.E, form.D)
    x = (Fraction(Y) - eq.b * y - eq.d) / (2 * eq.a)
    if y.denominator != 1 or x.denominator != 1:
        return None
    return int(x), int(y)


def positive_divisors(n: int) -> list[int]:
    """Ascending positive divisors of |n| by trial division; n must be nonzero."""
    if n == 0:
        raise ValueError("zero has no finite divisor list")
    n = abs(n)
    small, large = [], []
    t = 1
    while t * t <= n:
        if n % t == 0:
            small.append(t)
            if t != n // t:
                large.append(n // t)
        t += 1
    return small + large[::-1]


def _ordered_factor_pairs(N: int) -> list[tuple[int, int]]:
    # Table layout: |N1| < |N2| block ascending, then its mirror, for positive
    # N1 first and the sign-flipped rows after; a perfect-square middle pair
    # sits once between a block and its mirror.
    divs = positive_divisors(N)
    small = [t for t in divs if t * t < abs(N)]
    middle = [t for t in divs if t * t == abs(N)]
    half = [(t, N // t) for t in small]
    half += [(t, N // t) for t in middle]
    half += [(N // t, t) for t in small]
    return half + [(-n1, -n2) for (n1, n2) in half]


def solve_factor_pairs(form: ReducedForm) -> list[FactorPairRow]:
    """Enumerate every ordered factor pair of N with the derived values.

    Only supported when the originating equation has c = 0 and b != 0, so
    that D = b^2 > 0 factors the form over the integers, and when N != 0
    (N = 0 degenerates to a product of two linear factors with infinitely
    many factorizations).  Both orders of each unordered pair appear, and
    sign-flipped pairs follow the positive ones.
    """
    eq = form.equation
    if eq.c != 0:
        raise ValueError("factor-pair method requires c = 0")
    if eq.b == 0:
        raise ValueError("factor-pair method requires b != 0 (D = b^2 would be 0)")
    if form.D <= 0 or math.isqrt(form.D) ** 2 != form.D:
        # unreachable when c = 0, but forms are not forced to come from there
        raise ValueError("factor-pair method requires D to be a positive perfect square")
    if form.N == 0:
        raise ValueError("factor-pair method requires N != 0")

    rows = []
    for n1, n2 in _ordered_factor_pairs(form.N):
        X = Fraction(n1 + n2, 2)
        Y = Fraction(n1 - n2, 2 * eq.b)
        y = (X - form.E) / form.D
        x = (Y - eq.b * y - eq.d) / (2 * eq.a)
        integral = all(v.denominator == 1 for v in (X, Y, x, y))
        rows.append(FactorPairRow(N1=n1, N2=n2, X=X, Y=Y, x=x, y=y, integral=integral))
    return rows


def integer_solutions(eq: QuadraticDiophantine) -> list[tuple[int, int]]:
    """All integer (x, y) solving the equation, sorted by x then y.

    Harvested from the integral factor-pair rows; duplicates arising from
    different pairs collapse to one entry.
    """
    rows = solve_factor_pairs(reduce(eq))
    found = {(int(r.x), int(r.y)) for r in rows if r.integral}
    return sorted(found)


def format_rational(value: Rational) -> str:
    """Render exactly: integers plainly, terminating decimals as decimals,
    everything else as num/den."""
    fr = Fraction(value)
    num, den = fr.numerator, fr.denominator
    if den == 1:
        return str(num)
    twos = fives = 0
    rest = den
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{num}/{den}"
    places = max(twos, fives)
    scaled = abs(num) * 10**places // den
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if num < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
