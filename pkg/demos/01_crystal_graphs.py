"""The coordinate crystals: elements, arrows, string lengths.

Walks through the 8-element level-one crystal, the level-two family, and
the 29-element vertex-2 crystal, and prints their graphs.
"""

from d4sca import (BNatural, D43Crystal, classical_highest, coord_to_word,
                   to_dot, weight)
from d4sca.type_d43 import COORD_LETTER, render_nat

B1 = D43Crystal(1)

print("level 1: the eight letters and their coordinates")
for b in B1.elements():
    print("  %-3s %s   wt = %s" % (COORD_LETTER[b], b, weight(B1, b)))

print("\narrows of the level-1 graph (label = node):")
for b in B1.elements():
    for i in (0, 1, 2):
        c = B1.f(i, b)
        if c is not None:
            print("  %-2s --%d--> %s" % (COORD_LETTER[b], i, COORD_LETTER[c]))

print("\nlevel 2 has %d elements; the classically highest ones are:"
      % len(D43Crystal(2).elements()))
for b in classical_highest(D43Crystal(2), (1, 2)):
    print("  ", b, "word =", " ".join(coord_to_word(b)) or "(empty)")

print("\nstring lengths are closed-form; e.g. the 0-string through the")
print("rest element of B_3 has eps0 = 6, phi0 = 0:")
B3 = D43Crystal(3)
u3 = (3, 0, 0, 0, 0, 0)
print("   eps0 =", B3.eps(0, u3), " phi0 =", B3.phi(0, u3))

nat = BNatural()
print("\nthe vertex-2 crystal has %d elements:" % len(nat.elements()))
print("  ", ", ".join(render_nat(b) for b in nat.elements()[:8]), "...")

print("\nDOT export of the level-1 graph:")
print(to_dot(B1, name="b1", label=lambda b: COORD_LETTER[b]))
