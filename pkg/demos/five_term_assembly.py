"""
Assembling abelianizations
==========================

Computed coinvariants go into short exact sequences.  A sequence only
becomes a direct sum when the splitting is justified: a free quotient
splits for free, anything else needs a cited fact, and reports keep
such facts apart from what was computed.
"""
from mclag.errors import UnjustifiedSplitting
from mclag.fgab import FgAbelianGroup
from mclag.report import (
    ExternalFact,
    FreeQuotient,
    assemble_five_term,
    report_prop_ursp_h2,
    torelli_coinvariants,
    verify,
)

for g in (3, 4, 5):
    coinv = torelli_coinvariants(g, "s2l")
    total = assemble_five_term(coinv, FgAbelianGroup(g * (g + 1) // 2), FreeQuotient())
    print(f"g = {g}: H1(IL) = {coinv} ⊕ S2L = {total}")

###############################################################################
# A torsion quotient refuses to split on its own.

try:
    assemble_five_term(FgAbelianGroup.cyclic(2), FgAbelianGroup.cyclic(2), FreeQuotient())
except UnjustifiedSplitting as exc:
    print("refused:", exc)

print(assemble_five_term(FgAbelianGroup.cyclic(2), FgAbelianGroup.cyclic(2),
                         ExternalFact("a homomorphism to Z/2 detecting the class")))

###############################################################################
# The verify jobs package this with expected values and provenance.

print(verify("h1-lgb", 3).to_markdown())

###############################################################################
# H2 of urSp+, with every literature input listed separately.

print(report_prop_ursp_h2(3).to_markdown())
