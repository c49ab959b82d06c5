#!/usr/bin/env python3
"""Reading a Motzkin path off a subspace of F_q^n.

Every subspace is the row space of a unique reduced echelon form.  Columns
where some vector has its first nonzero coordinate (left pivots) become up
steps, columns where some vector has its last nonzero coordinate (right
pivots) become down steps, and columns in both or neither sets become
horizontal steps.  The prefix height always equals the rank of the section,
and the step letter matches the pivotal/essential classification.
"""

from qlattice import (classify_columns, gf, left_pivots, psi, right_pivots,
                      section_ranks, set_and_subset, span)

f2 = gf(2)
x = span(f2, [(1, 0, 0, 1, 0, 0), (0, 0, 1, 1, 0, 1), (0, 0, 0, 0, 1, 0)], 6)

print("The subspace spanned by")
print(x)
print()
print("left pivots :", sorted(left_pivots(x)))
print("right pivots:", sorted(right_pivots(x)))
path = psi(x)
print("path        :", path)
print("heights     :", path.heights)
print("section rks :", section_ranks(x), "(equal to the heights)")

ground, inl = set_and_subset(x)
print("inessential :", sorted(ground), "  of which pivotal:", sorted(inl))

print("\ncolumn classification:")
print("  col pivotal essential step")
for j, cls in enumerate(classify_columns(x), start=1):
    print(f"  {j:3d} {str(cls.pivotal):7s} {str(cls.essential):9s} "
          f"{path.steps[j - 1]}")
