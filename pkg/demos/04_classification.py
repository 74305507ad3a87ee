"""
Brute-force classification at n >= 3k
=====================================

For (6,2) all 2^15 families are screened. Only the empty family, the full
family, the six pencils and the six anti-pencils survive.
"""

from clsets import verify_classification
from clsets.classify import pencil_point
from clsets.clkernel import complement

res = verify_classification(6, 2)
print("total", res.total, "matches", res.matches_theorem)
print("by parameter", res.counts_by_parameter)
for x, fams in res.by_parameter().items():
    for f in fams:
        p, q = pencil_point(f), pencil_point(complement(f))
        label = f"pencil({p})" if p is not None else f"anti-pencil({q})" if q is not None else "trivial"
        print(x, label, f.size)
