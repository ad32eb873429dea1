"""Symbolic telescoping expansion: the signed permutation terms.

expand_terms recursively expands along the first row, threading column
maps through the survivor function, and emits the classical signed
permutation list in deterministic order.
"""

import math

from minorform import expand_terms, leibniz_det, random_matrix

print("n = 3 expansion, one line per signed product (columns by row):")
for term in expand_terms(3):
    sign = "+" if term.sign > 0 else "-"
    print(f"  {sign} {' '.join(str(c) for c in term.columns)}")
print()

for n in (4, 5, 6):
    terms = expand_terms(n)
    print(f"n = {n}: {len(terms)} terms (n! = {math.factorial(n)})")
print()

n = 5
a = random_matrix(n, seed=17, complex_entries=True)
total = 0
for term in expand_terms(n):
    product = 1
    for row, col in enumerate(term.columns, start=1):
        product *= a.entry(row, col)
    total += term.sign * product
print("evaluating the n = 5 term list on a random matrix:")
print(f"  term-list total:  {total}")
print(f"  permutation sum:  {leibniz_det(a)}")
