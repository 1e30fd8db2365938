"""Polynomials on C^n: sparse representation, evaluation, coefficient norms.

A homogeneous polynomial of degree m is stored as a sparse table mapping
nondecreasing multi-indices j in J(m, n) to complex coefficients c_j, so that

    P(z) = sum_{j in J(m, n)} c_j z_{j_1} ... z_{j_m}.

Coefficient access by an arbitrary multi-index resolves through its
nondecreasing representative, so ``P.coeff((2, 1)) == P.coeff((1, 2))``.
A general polynomial is a finite sum of homogeneous parts plus a constant.

Coefficient norms are the ell^p norms of the family {c_j}, one entry per
monomial.  By orthonormality of the monomials on the torus, the ell^2 norm
equals the L^2 norm with respect to normalized Lebesgue measure on T^n; the
L^1 torus norm has no closed form and is estimated by Monte Carlo here.

All sums of absolute values use ``math.fsum``, which is exactly rounded and
therefore independent of summation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .indexcore import (
    MultiIndex,
    canonical,
    exponent_to_index,
    index_to_exponent,
    validate_index,
)

__all__ = [
    "HomogeneousPolynomial",
    "GeneralPolynomial",
    "MCEstimate",
    "evaluate",
    "coeff_norm",
    "l2_torus_norm",
    "l1_torus_norm_mc",
    "random_homogeneous",
    "dimension_count",
    "majorant_sum",
    "add",
    "scale",
    "term_arrays",
    "to_json_dict",
    "from_json_dict",
]

RANDOM_DISTRIBUTIONS = ("complex-gaussian", "uniform-disc", "random-signs")


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """Degree-m polynomial on C^n with coefficients over J(m, n).

    ``coeffs`` may be keyed by arbitrary multi-indices; keys are canonicalized
    (sorted) on construction and coefficients of equivalent keys are merged.
    Exact zeros are dropped, so the zero polynomial has an empty table.
    Instances are immutable after construction.
    """

    m: int
    n: int
    coeffs: Mapping[MultiIndex, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        merged: dict[MultiIndex, complex] = {}
        for key, value in dict(self.coeffs).items():
            idx = validate_index(key, self.n)
            if len(idx) != self.m:
                raise ValueError(f"index {idx} has degree {len(idx)}, expected {self.m}")
            c = complex(value)
            if c != 0:
                j = canonical(idx)
                merged[j] = merged.get(j, 0j) + c
        merged = {j: c for j, c in merged.items() if c != 0}
        object.__setattr__(self, "coeffs", merged)

    def coeff(self, i: Sequence[int]) -> complex:
        """Coefficient c_{[i]}, resolved through the class representative of ``i``."""
        idx = validate_index(i, self.n)
        if len(idx) != self.m:
            raise ValueError(f"index {idx} has degree {len(idx)}, expected {self.m}")
        return self.coeffs.get(canonical(idx), 0j)

    def support(self) -> list[MultiIndex]:
        return sorted(self.coeffs)

    def __call__(self, z: Sequence[complex]) -> complex:
        return evaluate(self, z)


@dataclass(frozen=True)
class GeneralPolynomial:
    """Finite sum of homogeneous parts plus a constant term a0.

    ``parts[m]`` must be an m-homogeneous polynomial in the same dimension.
    Dimension n = 0 is allowed and means a constant.
    """

    n: int
    parts: Mapping[int, HomogeneousPolynomial] = field(default_factory=dict)
    a0: complex = 0j

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("dimension must be >= 0")
        clean: dict[int, HomogeneousPolynomial] = {}
        for m, part in dict(self.parts).items():
            if part.m != m:
                raise ValueError(f"part at degree {m} has degree {part.m}")
            if part.n != self.n:
                raise ValueError(f"part at degree {m} has dimension {part.n}, expected {self.n}")
            if part.coeffs:
                clean[m] = part
        object.__setattr__(self, "parts", dict(sorted(clean.items())))
        object.__setattr__(self, "a0", complex(self.a0))

    def part(self, m: int) -> HomogeneousPolynomial:
        if m in self.parts:
            return self.parts[m]
        return HomogeneousPolynomial(m, max(self.n, 1), {})

    def degrees(self) -> list[int]:
        return list(self.parts)

    def __call__(self, z: Sequence[complex]) -> complex:
        return evaluate(self, z)


Polynomial = Union[HomogeneousPolynomial, GeneralPolynomial]


class MCEstimate(NamedTuple):
    """A Monte Carlo mean together with its standard error."""

    value: float
    stderr: float
    samples: int


# ----------------------------------------------------------------------
# Evaluation and norms
# ----------------------------------------------------------------------

def evaluate(P: Polynomial, z: Sequence[complex]) -> complex:
    """Evaluate P at a point of C^n.

    For homogeneous P this satisfies P(lambda z) = lambda^m P(z).
    """
    zv = tuple(complex(w) for w in z)
    if len(zv) != P.n:
        raise ValueError(f"point has dimension {len(zv)}, polynomial has {P.n}")
    if isinstance(P, GeneralPolynomial):
        total = P.a0
        for part in P.parts.values():
            total += evaluate(part, zv)
        return total
    total = 0j
    for j, c in P.coeffs.items():
        term = c
        for v in j:
            term *= zv[v - 1]
        total += term
    return total


def _abs_coeffs(P: HomogeneousPolynomial) -> list[float]:
    return [abs(c) for c in P.coeffs.values()]


def coeff_norm(P: HomogeneousPolynomial, p) -> float:
    """ell^p norm of the coefficient family over J(m, n).

    One entry per monomial; p = inf gives the max modulus and p = 1 the
    coefficient sum |||P|||_1.  ``p`` may be any positive real (fractions
    accepted).
    """
    pf = float(p)
    if not pf > 0:
        raise ValueError(f"norm exponent must be positive, got {p}")
    values = _abs_coeffs(P)
    if not values:
        return 0.0
    if math.isinf(pf):
        return max(values)
    if pf == 1.0:
        return math.fsum(values)
    return math.fsum(v**pf for v in values) ** (1.0 / pf)


def l2_torus_norm(P: HomogeneousPolynomial) -> float:
    """L^2 norm of P on the torus T^n with normalized measure.

    Monomials are orthonormal in L^2(mu^n), so this is exactly the ell^2
    coefficient norm.
    """
    return coeff_norm(P, 2)


def term_arrays(P: Polynomial) -> tuple[np.ndarray, np.ndarray]:
    """Exponent matrix and coefficient vector of all terms of P.

    Returns ``(A, c)`` with A of shape (K, n) holding exponent vectors (a zero
    row for the constant term of a general polynomial) and c of shape (K,)
    the matching complex coefficients.  Row order is deterministic: ascending
    degree, then lexicographic in the stored canonical indices.
    """
    n = P.n
    rows: list[tuple[int, ...]] = []
    cs: list[complex] = []
    if isinstance(P, GeneralPolynomial):
        if P.a0 != 0:
            rows.append((0,) * n)
            cs.append(P.a0)
        homparts: Iterable[HomogeneousPolynomial] = P.parts.values()
    else:
        homparts = (P,)
    for part in homparts:
        for j in sorted(part.coeffs):
            rows.append(index_to_exponent(j, n))
            cs.append(part.coeffs[j])
    A = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    c = np.array(cs, dtype=np.complex128)
    return A, c


def l1_torus_norm_mc(
    P: Polynomial,
    samples: int,
    seed: int = 0,
    batch_size: int = 1 << 14,
) -> MCEstimate:
    """Monte Carlo estimate of the L^1 norm of P on the torus.

    Draws independent uniform phases per coordinate and averages |P|.  The
    seed expands to one child stream per batch through
    ``numpy.random.SeedSequence(seed).spawn``, and per-batch sums are reduced
    in batch order, so the estimate is reproducible for a fixed seed no
    matter how batches are executed.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    A, c = term_arrays(P)
    n = P.n
    counts = [batch_size] * (samples // batch_size)
    if samples % batch_size:
        counts.append(samples % batch_size)
    children = np.random.SeedSequence(seed).spawn(len(counts))

    def batch_sums(ss: np.random.SeedSequence, count: int) -> tuple[float, float]:
        rng = np.random.default_rng(ss)
        theta = rng.random((count, n)) * (2.0 * math.pi)
        if len(c) == 0:
            return 0.0, 0.0
        vals = np.exp(1j * (theta @ A.T)) @ c
        av = np.abs(vals)
        return float(av.sum()), float((av * av).sum())

    results = [batch_sums(ss, cnt) for ss, cnt in zip(children, counts)]
    s1 = math.fsum(r[0] for r in results)
    s2 = math.fsum(r[1] for r in results)
    mean = s1 / samples
    var = max(s2 - s1 * s1 / samples, 0.0) / (samples - 1)
    return MCEstimate(mean, math.sqrt(var / samples), samples)


# ----------------------------------------------------------------------
# Generation and counting
# ----------------------------------------------------------------------

def dimension_count(m: int, n: int) -> int:
    """Number of degree-m monomials in n variables: C(n + m - 1, m), exact."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    return math.comb(n + m - 1, m)


def random_homogeneous(
    m: int,
    n: int,
    distribution: str = "complex-gaussian",
    seed: int = 0,
) -> HomogeneousPolynomial:
    """Random polynomial with a dense coefficient table over J(m, n).

    Distributions: ``complex-gaussian`` (standard complex normal),
    ``uniform-disc`` (uniform on the closed unit disc), ``random-signs``
    (independent +-1).  Deterministic for a fixed seed.
    """
    from .indexcore import enumerate_J

    if distribution not in RANDOM_DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {distribution!r}; choose from {RANDOM_DISTRIBUTIONS}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    J = enumerate_J(m, n)
    K = len(J)
    if distribution == "complex-gaussian":
        values = (rng.standard_normal(K) + 1j * rng.standard_normal(K)) / math.sqrt(2)
    elif distribution == "uniform-disc":
        radii = np.sqrt(rng.random(K))
        values = radii * np.exp(2j * math.pi * rng.random(K))
    else:
        values = (rng.integers(0, 2, K) * 2 - 1).astype(np.complex128)
    return HomogeneousPolynomial(m, n, dict(zip(J, values.tolist())))


# ----------------------------------------------------------------------
# Majorants and arithmetic helpers
# ----------------------------------------------------------------------

def _as_general(P: Polynomial) -> GeneralPolynomial:
    if isinstance(P, GeneralPolynomial):
        return P
    return GeneralPolynomial(P.n, {P.m: P}, 0j)


def majorant_sum(P: Polynomial, r: float) -> float:
    """sup over the polydisc of radius r of the coefficient majorant sum.

    Equals |a0| + sum_m r^m * (coefficient sum of the degree-m part): the
    majorant sum_alpha |a_alpha z^alpha| is maximized on the distinguished
    boundary |z_k| = r by positivity.  Computed as one exactly rounded fsum
    over all terms.
    """
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    G = _as_general(P)
    terms: list[float] = []
    if G.a0 != 0:
        terms.append(abs(G.a0))
    for m, part in G.parts.items():
        rm = r**m
        terms.extend(rm * abs(c) for c in part.coeffs.values())
    return math.fsum(terms)


def add(P: Polynomial, Q: Polynomial):
    """Coefficient-wise sum of two polynomials of matching dimension."""
    if isinstance(P, HomogeneousPolynomial) and isinstance(Q, HomogeneousPolynomial):
        if (P.m, P.n) != (Q.m, Q.n):
            raise ValueError("can only add homogeneous polynomials of equal degree and dimension")
        merged = dict(P.coeffs)
        for j, c in Q.coeffs.items():
            merged[j] = merged.get(j, 0j) + c
        return HomogeneousPolynomial(P.m, P.n, merged)
    GP, GQ = _as_general(P), _as_general(Q)
    if GP.n != GQ.n:
        raise ValueError("dimension mismatch")
    parts: dict[int, HomogeneousPolynomial] = dict(GP.parts)
    for m, part in GQ.parts.items():
        parts[m] = add(parts[m], part) if m in parts else part
    return GeneralPolynomial(GP.n, parts, GP.a0 + GQ.a0)


def scale(P: Polynomial, factor: complex):
    """The polynomial ``factor * P``."""
    lam = complex(factor)
    if isinstance(P, HomogeneousPolynomial):
        return HomogeneousPolynomial(P.m, P.n, {j: lam * c for j, c in P.coeffs.items()})
    return GeneralPolynomial(
        P.n,
        {m: scale(part, lam) for m, part in P.parts.items()},
        lam * P.a0,
    )


# ----------------------------------------------------------------------
# JSON wire format (exponent vectors on the wire, canonical indices inside)
# ----------------------------------------------------------------------

def to_json_dict(P: Polynomial) -> dict:
    """Serializable dict for a polynomial.

    Homogeneous: ``{"kind": "homogeneous", "m": ..., "n": ..., "terms":
    [{"alpha": [...], "re": ..., "im": ...}, ...]}``.  General wraps a list of
    homogeneous parts plus ``"a0"``.
    """
    if isinstance(P, HomogeneousPolynomial):
        terms = [
            {"alpha": list(index_to_exponent(j, P.n)), "re": c.real, "im": c.imag}
            for j, c in sorted(P.coeffs.items())
        ]
        return {"kind": "homogeneous", "m": P.m, "n": P.n, "terms": terms}
    return {
        "kind": "general",
        "n": P.n,
        "a0": {"re": P.a0.real, "im": P.a0.imag},
        "parts": [to_json_dict(part) for part in P.parts.values()],
    }


def from_json_dict(data: Mapping) -> Polynomial:
    """Inverse of :func:`to_json_dict`."""
    kind = data.get("kind")
    if kind == "homogeneous":
        m, n = int(data["m"]), int(data["n"])
        coeffs: dict[MultiIndex, complex] = {}
        for term in data["terms"]:
            alpha = tuple(int(a) for a in term["alpha"])
            if len(alpha) != n:
                raise ValueError(f"exponent vector {alpha} has length {len(alpha)}, expected {n}")
            if sum(alpha) != m:
                raise ValueError(f"exponent vector {alpha} has degree {sum(alpha)}, expected {m}")
            j = exponent_to_index(alpha)
            coeffs[j] = coeffs.get(j, 0j) + complex(term["re"], term.get("im", 0.0))
        return HomogeneousPolynomial(m, n, coeffs)
    if kind == "general":
        n = int(data["n"])
        a0d = data.get("a0", {"re": 0.0, "im": 0.0})
        parts: dict[int, HomogeneousPolynomial] = {}
        for pd in data.get("parts", []):
            part = from_json_dict(pd)
            assert isinstance(part, HomogeneousPolynomial)
            parts[part.m] = part
        return GeneralPolynomial(n, parts, complex(a0d["re"], a0d.get("im", 0.0)))
    raise ValueError(f"unknown polynomial kind {kind!r}")
