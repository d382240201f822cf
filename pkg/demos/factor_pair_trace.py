#!/usr/bin/env python3
"""Solving the fan equation 7x^2 - 2xy - 5x - 2y = 0 by factor pairs.

With c = 0 the reduced form X^2 - D*Y^2 = N has D = b^2, so it factors as
(X + bY)(X - bY) = N and every factor pair of N pins one candidate row.
Rows whose back-substituted (x, y) are both integers are the solutions.
"""

from edgegraceful import (
    QuadraticDiophantine,
    back_substitute,
    format_rational,
    integer_solutions,
    reduce,
    solve_factor_pairs,
)

eq = QuadraticDiophantine(7, -2, 0, -5, -2, 0)
form = reduce(eq)
print(f"equation: {eq.a}x^2 + ({eq.b})xy + ({eq.d})x + ({eq.e})y = 0")
print(f"reduced:  X^2 - {form.D}*Y^2 = {form.N}   "
      f"(D={form.D}, E={form.E}, F={form.F})")

rows = solve_factor_pairs(form)
print(f"\n{len(rows)} factor-pair rows; integral ones marked with *:\n")
header = ("N1", "N2", "X", "Y", "x", "y")
table = [header] + [
    (str(r.N1), str(r.N2), format_rational(r.X), format_rational(r.Y),
     format_rational(r.x), format_rational(r.y))
    for r in rows
]
widths = [max(len(row[i]) for row in table) for i in range(6)]
print("  ".join(c.rjust(w) for c, w in zip(header, widths)))
for row, r in zip(table[1:], rows):
    mark = " *" if r.integral else ""
    print("  ".join(c.rjust(w) for c, w in zip(row, widths)) + mark)

print("\ninteger solutions, sorted:")
for x, y in integer_solutions(eq):
    assert eq.evaluate(x, y) == 0
    print(f"  (x, y) = ({x}, {y})")

print("\nback-substitution spot checks:")
for X, Y in [(50, 17), (62, 25), (170, 83)]:
    print(f"  (X, Y) = ({X}, {Y}) -> (x, y) = {back_substitute(X, Y, form)}")

print("\nonly x >= 1 names a fan, leaving x in {2, 3, 11}")
