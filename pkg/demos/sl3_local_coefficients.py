"""
SL(3, Z) with coefficients in S^2 L
===================================

Build the Steinberg presentation, feed it the symmetric-square
representation, and read off H0 and H1 from the Fox-calculus complex.
"""
from mclag.homology import (
    chain_boundaries,
    cycle_class_order,
    homology_h0,
    homology_h1,
    s2l_representation,
    sl_s2l_chain,
)
from mclag.presentations import sl_presentation, validate_representation

pres = sl_presentation(3)
print(len(pres.generators), "generators,", len(pres.relators), "relators")

rep = s2l_representation(3)
# every relator must evaluate to the identity before we trust the complex
assert validate_representation(rep)

d1, d2 = chain_boundaries(pres, rep)
print("d2:", d2.shape, " d1:", d1.shape)
assert (d1 @ d2).is_zero()

###############################################################################
# H0 is the coinvariants of S^2 L, H1 is ker d1 / im d2.

print("H0 =", homology_h0(pres, rep))
print("H1 =", homology_h1(pres, rep))

###############################################################################
# The cycle <e12> ⊗ X3^2 (e12 fixes X3^2, so it is a cycle) carries the class.

order, generates = cycle_class_order(pres, rep, sl_s2l_chain(3, 1, 2, 3, 3))
print(f"<e12>⊗X3^2 has order {order}; generates H1: {generates}")

###############################################################################
# One genus up the torsion disappears.

print("g = 4: H1 =", homology_h1(sl_presentation(4), s2l_representation(4)))
