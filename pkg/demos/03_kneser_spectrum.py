"""
Exact spectrum of the Kneser matrix
===================================

The prediction lists eigenvalues ``(-1)^j C(n-k-j, k-j)`` with
multiplicities ``C(n,j) - C(n,j-1)``. ``verify_spectrum`` proves it with
integer arithmetic only: the product of ``K - lam*I`` over the predicted
eigenvalues vanishes and each eigenspace has the predicted dimension.
"""

import numpy as np

from clsets import kneser_matrix, predicted_spectrum, verify_spectrum

for n, k in [(5, 2), (4, 2), (6, 3), (9, 3)]:
    pred = predicted_spectrum(n, k)
    print((n, k), "raw", pred.raw, "merged", pred.pairs)

rep = verify_spectrum(9, 3)
print("annihilation", rep.annihilation)
for r in rep.ranks:
    print(r)
print("traces", rep.traces)

###############################################################################
# Compare with a floating-point eigensolver.

K = np.array(kneser_matrix(9, 3).to_rows(), dtype=float)
vals, counts = np.unique(np.rint(np.linalg.eigvalsh(K)).astype(int), return_counts=True)
print(dict(zip(vals.tolist(), counts.tolist())))
