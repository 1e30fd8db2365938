#!/usr/bin/env python3
"""Polarization: from a homogeneous polynomial to its symmetric form and back.

Every m-homogeneous P has a unique symmetric m-linear form B with
B(z, ..., z) = P(z); on the class of a nondecreasing index j the form's
coefficient is c_j divided by the number of rearrangements of j.  Harris'
estimate controls B at grouped repeated arguments in terms of sup |P|.
"""

import numpy as np

from polybh import (
    HomogeneousPolynomial,
    check_harris,
    certified_upper,
    evaluate,
    evaluate_form,
    harris_factor,
    polarize,
    random_homogeneous,
    restrict_diagonal,
)

# ----------------------------------------------------------------------
# 1. The correspondence on a small polynomial.
# ----------------------------------------------------------------------
P = HomogeneousPolynomial(3, 2, {(1, 1, 2): 3.0, (2, 2, 2): 1.0})
B = polarize(P)
print("P coefficients:", dict(P.coeffs))
print("b_(1,1,2) = c/|i| =", B.coeff((1, 1, 2)))   # 3 / 3
print("b_(2,1,1) (same class):", B.coeff((2, 1, 1)))
print("round trip exact:", restrict_diagonal(B).coeffs == P.coeffs)

z = np.array([0.4 + 0.3j, -0.6 + 0.2j])
print(f"B(z, z, z) = {evaluate_form(B, [z, z, z]):.6f}")
print(f"P(z)       = {evaluate(P, z):.6f}")

# ----------------------------------------------------------------------
# 2. Symmetry: the form does not care about the order of its arguments.
# ----------------------------------------------------------------------
w1, w2, w3 = (np.exp(2j * np.pi * np.random.default_rng(k).random(2)) for k in (1, 2, 3))
print("\nB(w1, w2, w3) =", evaluate_form(B, [w1, w2, w3]))
print("B(w3, w1, w2) =", evaluate_form(B, [w3, w1, w2]))

# ----------------------------------------------------------------------
# 3. Harris' bound at repeated arguments.  The factor for the partition
#    (m-1, 1) is (1 + 1/(m-1))^{m-1}, the source of the hypercontractive
#    constant's polynomial part.
# ----------------------------------------------------------------------
print("\nharris factors at m = 3:")
for partition in [(3,), (2, 1), (1, 1, 1)]:
    print(f"  partition {partition}: factor {harris_factor(3, partition):.4f}")

rng = np.random.default_rng(7)
Q = random_homogeneous(3, 3, "complex-gaussian", seed=11)
upper = certified_upper(Q)
points = [np.exp(2j * np.pi * rng.random(3)) for _ in range(2)]
rep = check_harris(Q, (2, 1), points, upper)
print(f"\nrandom check, partition (2,1): |B| = {rep.value:.4f} <= "
      f"{rep.factor:.4f} * {rep.supnorm_bound:.4f} = {rep.bound:.4f} -> "
      f"{'ok' if rep.passed else 'VIOLATED'}")
