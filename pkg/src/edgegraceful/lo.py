"""Lo's necessary divisibility condition and its usual-fan specialization.

If a graph on p vertices and q edges is edge-graceful, then p divides
q^2 + q - p(p-1)/2.  The condition is necessary only: passing it never
certifies edge-gracefulness.

For the usual fan on n+1 vertices and 2n-1 edges the condition collapses to
(7n^2 - 5n)/(2n + 2) being an integer, which is what ``classify_fans``
screens for.  Divisibility is the mathematical one (m = p*c for some integer
c), so negative residuals are handled; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LoReport:
    p: int
    q: int
    residual: int
    divides: bool


def lo_check(p: int, q: int) -> LoReport:
    """Evaluate the divisibility condition for a (p, q) graph."""
    if p < 1:
        raise ValueError(f"vertex count must be positive, got {p}")
    if q < 0:
        raise ValueError(f"edge count must be nonnegative, got {q}")
    residual = q * q + q - p * (p - 1) // 2
    return LoReport(p=p, q=q, residual=residual, divides=residual % p == 0)


def fan_lo_quotient(n: int) -> Fraction:
    """The exact rational (7n^2 - 5n)/(2n + 2); integral iff F_{1,n} passes."""
    if n < 1:
        raise ValueError(f"fan size must be positive, got {n}")
    return Fraction(7 * n * n - 5 * n, 2 * n + 2)


def classify_fans(n_max: int) -> list[int]:
    """All n in [1, n_max] whose usual fan passes the divisibility screen.

    Uses direct divisibility per n, no labeling search.  The full solution
    set of the underlying quadratic Diophantine equation is finite, so the
    answer stabilizes at [2, 3, 11] for every n_max >= 11.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    return [n for n in range(1, n_max + 1) if (7 * n * n - 5 * n) % (2 * n + 2) == 0]
