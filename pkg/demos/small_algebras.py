"""
The smallest cyclotomic KLR algebras
====================================

Build R_2 and R_3, list their bases and multiply a few elements.
"""

from cyclotomic_klr import enumerate_admissible, enumerate_basis, multiply, rewrite
from cyclotomic_klr.expr import parse_and_evaluate

# R_2: one surviving idempotent e(0,1) and the loop y_2 e(0,1)
print(enumerate_admissible(2))
print([str(b) for b in enumerate_basis(2)])

# the loop squares to zero
beta = parse_and_evaluate("y2*e(0,1)", 2)
print("beta^2 =", multiply(beta, beta))

# R_3 has two idempotents and six basis elements
for b in enumerate_basis(3):
    print(f"{str(b):20s} degree {b.degree}")

# a double crossing between adjacent residues leaves a dot behind
print(rewrite(parse_and_evaluate("p2*p2*e(0,1,2)", 3)))

# the two crossings of R_3 compose to a dotted idempotent, with a sign
x = parse_and_evaluate("p2*e(0,1,2)", 3)
y = parse_and_evaluate("p2*e(0,2,1)", 3)
print(multiply(x, y))
