"""Polarization: the symmetric multilinear form attached to a homogeneous polynomial.

Every m-homogeneous polynomial P determines a unique symmetric m-linear form
B with B(z, ..., z) = P(z).  Writing P over nondecreasing indices with
coefficients c_j, the form's coefficient on the class of j is

    b_j = c_j / |j|,

where |j| is the number of distinct rearrangements of j, and the form is

    B(z1, ..., zm) = sum over all of M(m, n) of b_i z1_{i_1} ... zm_{i_m}.

A form is stored through its diagonal polynomial (the c_j table); b values
are produced on access.  This makes restrict_diagonal(polarize(P)) == P an
exact identity, not a floating-point round trip.

Harris' polarization estimate bounds the form at grouped repeated arguments:
for a partition m = m_1 + ... + m_k and points w_1, ..., w_k in the closed
polydisc,

    |B(w_1...w_1, ..., w_k...w_k)| <=
        (m_1! ... m_k! / m_1^{m_1} ... m_k^{m_k}) * (m^m / m!) * sup |P|,

with the convention 0^0 = 1 so empty groups contribute a factor of one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .indexcore import canonical, multiplicity, validate_index
from .polyalgebra import HomogeneousPolynomial

__all__ = [
    "SymmetricForm",
    "HarrisReport",
    "polarize",
    "restrict_diagonal",
    "evaluate_form",
    "harris_factor",
    "check_harris",
    "to_json_dict",
    "from_json_dict",
]


def _distinct_permutations(seq: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of ``seq`` in lexicographic order (next-permutation walk)."""
    arr = sorted(seq)
    size = len(arr)
    while True:
        yield tuple(arr)
        j = size - 2
        while j >= 0 and arr[j] >= arr[j + 1]:
            j -= 1
        if j < 0:
            return
        l = size - 1
        while arr[j] >= arr[l]:
            l -= 1
        arr[j], arr[l] = arr[l], arr[j]
        arr[j + 1 :] = arr[size - 1 : j : -1]


@dataclass(frozen=True)
class SymmetricForm:
    """Symmetric m-linear form on C^n, stored via its diagonal polynomial.

    ``diagonal.coeffs[j]`` holds c_j; the form coefficient b_i for an
    arbitrary multi-index i is c_{[i]} / |i|, computed at access time.
    """

    diagonal: HomogeneousPolynomial

    @property
    def m(self) -> int:
        return self.diagonal.m

    @property
    def n(self) -> int:
        return self.diagonal.n

    def coeff(self, i: Sequence[int]) -> complex:
        """b_i = c_{[i]} / |i| (symmetric in i)."""
        idx = validate_index(i, self.n)
        c = self.diagonal.coeff(idx)
        if c == 0:
            return 0j
        return c / multiplicity(idx)

    def coeffs(self) -> dict[tuple[int, ...], complex]:
        """The b_j table over the stored support in J(m, n)."""
        return {j: c / multiplicity(j) for j, c in self.diagonal.coeffs.items()}

    @classmethod
    def from_coefficients(cls, m: int, n: int, b, sym_tol: float = 0.0) -> "SymmetricForm":
        """Build a form from a table of b values keyed by multi-indices.

        Keys are canonicalized; duplicate classes must agree to within
        ``sym_tol`` (a non-symmetric table is rejected).
        """
        diag: dict[tuple[int, ...], complex] = {}
        seen: dict[tuple[int, ...], complex] = {}
        for key, value in dict(b).items():
            j = canonical(validate_index(key, n))
            v = complex(value)
            if j in seen and abs(seen[j] - v) > sym_tol:
                raise ValueError(f"coefficients for class {j} disagree: {seen[j]} vs {v}")
            seen[j] = v
            diag[j] = v * multiplicity(j)
        return cls(HomogeneousPolynomial(m, n, diag))

    def to_dense(self) -> np.ndarray:
        """Dense coefficient tensor b over all of M(m, n), shape (n,) * m."""
        out = np.zeros((self.n,) * self.m, dtype=np.complex128)
        for j, b in self.coeffs().items():
            for i in _distinct_permutations(j):
                out[tuple(v - 1 for v in i)] = b
        return out


def polarize(P: HomogeneousPolynomial) -> SymmetricForm:
    """The symmetric m-linear form with diagonal P (b_j = c_j / |j|)."""
    return SymmetricForm(P)


def restrict_diagonal(B: SymmetricForm) -> HomogeneousPolynomial:
    """The polynomial z -> B(z, ..., z); exact inverse of :func:`polarize`."""
    return B.diagonal


def evaluate_form(B: SymmetricForm, points: Sequence[Sequence[complex]]) -> complex:
    """Evaluate B at m points of C^n.

    Sums b_i over all of M(m, n) by walking each class in J(m, n) and its
    distinct permutations, so cost is |J| times class size (n^m products in
    total) with memory proportional to the stored support only.  Symmetric
    under any permutation of the points.
    """
    if len(points) != B.m:
        raise ValueError(f"need exactly {B.m} points, got {len(points)}")
    zs = []
    for p in points:
        zp = tuple(complex(w) for w in p)
        if len(zp) != B.n:
            raise ValueError(f"point has dimension {len(zp)}, form has {B.n}")
        zs.append(zp)
    total = 0j
    for j, b in B.coeffs().items():
        class_sum = 0j
        for i in _distinct_permutations(j):
            term = 1 + 0j
            for k, v in enumerate(i):
                term *= zs[k][v - 1]
            class_sum += term
        total += b * class_sum
    return total


def harris_factor(m: int, partition: Sequence[int]) -> float:
    """The polarization factor (m_1!...m_k!/m_1^{m_1}...m_k^{m_k}) * m^m/m!.

    ``partition`` must consist of nonnegative integers summing to m; zero
    parts contribute a factor of one (0^0 = 1).  Evaluated in exact rational
    arithmetic before conversion to float.
    """
    parts = [int(p) for p in partition]
    if any(p < 0 for p in parts):
        raise ValueError("partition entries must be nonnegative")
    if sum(parts) != m:
        raise ValueError(f"partition {parts} sums to {sum(parts)}, expected {m}")
    num = math.prod(math.factorial(p) for p in parts) * m**m
    den = math.prod(p**p for p in parts if p > 0) * math.factorial(m)
    return float(Fraction(num, den))


@dataclass(frozen=True)
class HarrisReport:
    """Outcome of one polarization-bound check."""

    value: float  # |B| at the repeated-argument tuple
    factor: float  # Harris factor for the partition
    supnorm_bound: float
    bound: float  # factor * supnorm_bound
    slack: float  # bound - value
    passed: bool


def check_harris(
    P: HomogeneousPolynomial,
    partition: Sequence[int],
    points: Sequence[Sequence[complex]],
    supnorm_bound: float,
    rel_tol: float = 1e-9,
) -> HarrisReport:
    """Check the polarization bound at grouped repeated arguments.

    ``points`` holds one point per partition block, each in the closed
    polydisc; ``supnorm_bound`` must be an upper bound for sup |P| over the
    polydisc for the pass verdict to be meaningful.
    """
    parts = [int(p) for p in partition]
    if len(points) != len(parts):
        raise ValueError(f"need one point per partition block ({len(parts)}), got {len(points)}")
    for p in points:
        if any(abs(complex(w)) > 1 + 1e-12 for w in p):
            raise ValueError("points must lie in the closed polydisc")
    factor = harris_factor(P.m, parts)
    repeated: list[Sequence[complex]] = []
    for size, p in zip(parts, points):
        repeated.extend([p] * size)
    value = abs(evaluate_form(polarize(P), repeated))
    bound = factor * supnorm_bound
    return HarrisReport(
        value=value,
        factor=factor,
        supnorm_bound=supnorm_bound,
        bound=bound,
        slack=bound - value,
        passed=value <= bound * (1 + rel_tol) + 1e-15,
    )


def to_json_dict(B: SymmetricForm) -> dict:
    """Serialize a form as its diagonal polynomial plus a "polarized" flag."""
    from .polyalgebra import to_json_dict as poly_to_json

    data = poly_to_json(B.diagonal)
    data["polarized"] = True
    return data


def from_json_dict(data) -> SymmetricForm:
    from .polyalgebra import HomogeneousPolynomial as HP, from_json_dict as poly_from_json

    if not data.get("polarized"):
        raise ValueError("not a serialized symmetric form (missing polarized flag)")
    poly = poly_from_json(data)
    if not isinstance(poly, HP):
        raise ValueError("a symmetric form serializes through a homogeneous diagonal")
    return SymmetricForm(poly)
