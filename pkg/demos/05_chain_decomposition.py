#!/usr/bin/env python3
"""The symmetric chain decomposition, and walking covers one at a time.

Transporting the bracket-matching chains of each block's subset lattice
through the insertion maps partitions the subspace lattice into saturated
chains with end ranks summing to n.  The cover step is computable locally:
read the pivot data of the input, find the bracket cover inside its
inessential columns, delete the pivotal inessential columns and reinsert.
"""

from qlattice import Rref, gf, ins_col, ins_set, scd, scd_cover

f2 = gf(2)

dec = scd(f2, 3)
print(f"Chains of F_2^3 ({dec.size} subspaces in {len(dec.chains)} chains):")
for i, chain in enumerate(dec.chains, start=1):
    pretty = "  ->  ".join(
        "{" + "; ".join("".join(str(e) for e in row) for row in x.rows) + "}"
        or "0" for x in chain)
    print(f"  {i}: ranks {chain[0].dim}..{chain[-1].dim}   {pretty}")

print("\nWalking covers from an 8-column primary rref:")
m = Rref(f2, 8, ((1, 0, 1, 0, 0, 0, 0, 0),
                 (0, 1, 0, 1, 0, 1, 1, 1),
                 (0, 0, 0, 0, 1, 0, 1, 1)), (1, 2, 5))
print(m)
step1 = scd_cover(m)
assert step1 == ins_col(m, 4)
print("\nis covered by (insertion at column 4):")
print(step1)
step2 = scd_cover(step1)
assert step2 == ins_set(m, (4, 7))
print("\nwhich is covered by (insertion at columns 4 and 7):")
print(step2)
print("\nwhich tops its chain:", scd_cover(step2) is None)
print("insertion at column 7 alone is already a top:",
      scd_cover(ins_col(m, 7)) is None)
