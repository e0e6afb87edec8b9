"""
Smith forms and abelian groups
==============================

Everything else in the package reduces to one question: what is the
cokernel of an integer matrix.  This script walks through the pieces.
"""
from mclag.fgab import FgAbelianGroup, from_relation_matrix, subquotient
from mclag.linalg import IntMatrix, smith_normal_form

# a certified Smith form: u @ a @ v == d, u and v unimodular
a = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
s = smith_normal_form(a)
print(s.d)
print("invariant factors:", s.invariant_factors)
assert s.u @ a @ s.v == s.d

###############################################################################
# Columns are relations among the row generators.

g = from_relation_matrix(3, a)
print("Z^3 / columns =", g)

# two relations on two generators, 2x = 0 and 2y = 0
print(from_relation_matrix(2, [[2, 0], [0, 2]]))

###############################################################################
# Groups compare up to isomorphism: Z/6 is Z/2 + Z/3.

assert FgAbelianGroup.from_orders([2, 3]) == FgAbelianGroup.cyclic(6)

###############################################################################
# Homology of a two-step complex, ker d1 / im d2.
# Here d1 = 0 and d2 = (2), so H = Z/2.

print("H =", subquotient([[2]], [[0]]))
