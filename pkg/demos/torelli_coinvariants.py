"""
Coinvariants of the Torelli abelianization
==========================================

H1 of the Torelli group is modelled as pairs (n, b) with n in ∧^3 H and
b in the Boolean algebra B^3, glued along ∧^3(H ⊗ Z/2).  Symplectic
matrices act on both halves.  Quotienting by that action for bigger and
bigger groups gives smaller and smaller answers.
"""
from mclag.coinvariants import coinvariant_witness, coinvariants
from mclag.johnson import BElement, bar_expand, sp_act, torelli_action_module, torelli_class
from mclag.symplectic import lower_transvection, s2l_generators, transvection, ursp_generators

g = 3

# the bar map is not linear: x1 + y1 picks up the constant term
print(bar_expand(g, [1, 0, 0, 1, 0, 0]))

t = torelli_class(g, ["x1", "x2", "y2"])
print("t =", t)

###############################################################################
# The transvection X_{3,2} moves t by the class of x1∧x2∧x3.

X = transvection(g, 3, 2)
print("X t - t =", sp_act(X, t) - t)

###############################################################################
# Coinvariants for the chain S^2 L ⊂ urSp ⊂ <urSp, lower transvection>.

s2l = [m for _, m in s2l_generators(g)]
ursp = [m for _, m in ursp_generators(g)]
for name, els in [("S2L", s2l), ("urSp", ursp), ("Sp", ursp + [lower_transvection(g)])]:
    print(f"{name:5s}", coinvariants(torelli_action_module(g, els)))

###############################################################################
# The surviving Z/2 under urSp is carried by (y1∧y2∧y3, y1 y2 y3).

m = torelli_action_module(g, ursp)
w = coinvariant_witness(m, torelli_class(g, ["y1", "y2", "y3"]).coordinates())
print("order", w.order, "generator", w.is_generator)

# B is the full squarefree algebra, so products are cheap to play with
print(BElement.parse(g, "x1 y1") * BElement.parse(g, "y2 + 1"))
