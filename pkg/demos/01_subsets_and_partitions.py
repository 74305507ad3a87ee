"""
k-subsets, colex ranks and uniform partitions
=============================================

Every k-subset is a bitmask, and its colex rank is its position among all
k-subsets sorted by mask value. That rank indexes characteristic vectors
everywhere else in the package.
"""

from clsets import colex_rank, colex_unrank, count_partitions, enumerate_k_subsets, enumerate_partitions

# The six 2-subsets of {0,1,2,3} in colex order
for s in enumerate_k_subsets(4, 2):
    print(colex_rank(s), s)

# ranking is a bijection onto 0..C(n,k)-1
print(colex_unrank(4, 4, 2))

###############################################################################
# Uniform partitions are generated with the smallest free element leading
# each block, so nothing has to be deduplicated.

for p in enumerate_partitions(6, 3):
    print(p)

for n, k in [(6, 2), (8, 2), (12, 3), (12, 4)]:
    listed = sum(1 for _ in enumerate_partitions(n, k))
    print(f"({n},{k}): listed {listed}, closed form {count_partitions(n, k)}")
