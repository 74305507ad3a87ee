"""
Five ways to recognise a Cameron-Liebler class
==============================================

``full_check`` runs the partition, disjointness, Kneser-eigenvector,
row-space and kernel tests on one family and reports the parameter
``x = |F| / C(n-1, k-1)``.
"""

from clsets import Family, anti_pencil, complement, full_check, point_pencil

for name, fam in [
    ("pencil through 0", point_pencil(6, 2, 0)),
    ("anti-pencil of 0", anti_pencil(6, 2, 0)),
    ("single pair {0,1}", Family.from_subsets(6, 2, [[0, 1]])),
    ("all 2-subsets", Family.full(6, 2)),
]:
    rep = full_check(fam)
    print(f"{name:20s} x={rep.parameter!s:4s} {rep.verdicts}")
    if rep.witness is not None:
        print(" " * 21, "witness:", rep.witness)

###############################################################################
# Complements of classes are classes, with parameter n/k - x.

f = point_pencil(9, 3, 4)
print(full_check(f).parameter, full_check(complement(f)).parameter)

###############################################################################
# When k does not divide n there are no uniform partitions. The other four
# tests still run; the report says so.

rep = full_check(point_pencil(5, 2, 0))
print(rep.verdicts, rep.notes)
