#!/usr/bin/env python3
"""Which presentations give isomorphic algebras.

Non-degenerate normalized pairs are isomorphic exactly when they lie in one
orbit of a 24-element group of fractional-linear maps.  The group's abstract
invariants match SL2 over the three-element field, and every positive
decision returns a substitution witness that transports the relation space
exactly.
"""

from ncquad import (
    QQ_THETA,
    ParamTriple,
    are_isomorphic,
    group_invariants,
    iso_group_orbit,
)

field = QQ_THETA
inv = group_invariants()
print(f"pair group: order {inv.order}, centre {inv.center_order}, "
      f"element orders {inv.element_orders}")
print(f"SL2(F3):    order {inv.sl2_f3_order}, centre {inv.sl2_f3_center_order}, "
      f"element orders {inv.sl2_f3_element_orders}")
print("invariants agree:", inv.matches_sl2_f3)

orbit = iso_group_orbit(field, field.parse("2"), field.parse("3"))
print(f"\norbit of the pair (2, 3): {len(orbit)} members, first few:")
for u, v in orbit[:5]:
    print(f"   ({field.render(u)}, {field.render(v)})")

cases = [
    ((1, 1, 1), (0, 0, 1)),
    ((1, -2, 0), (2, -1, 0)),
    ((1, 2, 1), (2, 1, 1)),
    ((1, 2, 1), (1, 5, 1)),
]
print("\ndecisions:")
for left, right in cases:
    d = are_isomorphic(ParamTriple.make(field, *left), ParamTriple.make(field, *right))
    print(f"   {left} ~ {right}: {d.isomorphic}  ({d.reason})")
