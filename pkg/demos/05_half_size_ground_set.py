"""
The case n = 2k
===============

Each uniform partition of a 2k-set is a complementary pair, so choosing one
set from every pair gives a class with parameter 1. There are
2^C(2k-1, k-1) such choices. This script counts them up to relabeling and
shows that for k >= 3 the row-space and kernel tests reject most of them:
the Kneser eigenvalue -1 then has multiplicity C(2k,k)/2, larger than
n - 1, so the eigenvector condition no longer pins down the row space.
"""

from collections import Counter

from clsets import enumerate_ekr_2k, full_check
from clsets.clkernel import eigenspace_excess

for k in (1, 2, 3):
    census = enumerate_ekr_2k(k)
    print(f"k={k}: {census.total} choices, {census.nonisomorphic} up to relabeling")
    print("   orbit sizes", [o.orbit_size for o in census.orbits])

census = enumerate_ekr_2k(3)
split = Counter(
    tuple(full_check(f).verdicts.values()) for f in census.families
)
for verdicts, count in split.items():
    print(count, verdicts)
print(eigenspace_excess(6, 3))
