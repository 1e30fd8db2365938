"""Supremum norms over the polydisc: heuristic lower bounds, certified upper bounds.

For a polynomial the supremum of |P| over the closed unit polydisc is
attained on the torus (apply the maximum principle coordinatewise), so every
search here runs purely in phase variables theta with moduli pinned to one.

Three estimators:

* ``sup_lower``: multistart fixed-step gradient ascent on |P(e^{i theta})|^2
  with backtracking halving.  The result is a genuine lower bound for the
  sup norm (it is a value of |P|), never an upper bound.

* ``sup_certified``: evaluates |P| on a uniform phase grid of step h and
  converts the grid maximum into an upper bound through the Bernstein
  derivative estimate for trigonometric polynomials: if d_k is the degree of
  P in theta_k then |P| moves by at most sum_k d_k * (h/2) * sup|P| between
  a point and its nearest grid node, hence

      sup |P| <= grid_max / (1 - n * m_max * h / 2),

  with m_max the maximal per-variable degree.  The bound is rigorous up to
  floating-point rounding only (no interval arithmetic).

* ``sup_multilinear``: block-coordinate phase ascent for an m-linear form
  over a product of polydiscs; aligning one argument at a time is exact per
  block, so the objective is nondecreasing.

All estimators are deterministic for a fixed seed, and coefficients are
normalized by their largest modulus internally so that scaling a polynomial
scales the estimate exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from .polyalgebra import GeneralPolynomial, HomogeneousPolynomial, Polynomial, majorant_sum, term_arrays

__all__ = [
    "SupNormEstimate",
    "BudgetExceededError",
    "sup_lower",
    "sup_certified",
    "sup_multilinear",
    "certified_upper",
    "as_dense_form",
]

TWO_PI = 2.0 * math.pi


class BudgetExceededError(RuntimeError):
    """A grid or search would exceed its configured evaluation budget."""


@dataclass
class SupNormEstimate:
    """A sup-norm bracket: ``lower`` is always a certified lower bound (a
    witnessed value of |P|); ``upper``, when present, is an upper bound
    certified modulo floating-point rounding."""

    lower: float
    upper: float | None
    argmax: np.ndarray
    method: dict = field(default_factory=dict)


def _abs2(v: np.ndarray) -> np.ndarray:
    return v.real * v.real + v.imag * v.imag


# ----------------------------------------------------------------------
# Multistart phase ascent
# ----------------------------------------------------------------------

def sup_lower(
    P: Polynomial,
    starts: int | None = None,
    iterations: int = 200,
    seed: int = 0,
    step0: float = 0.5,
) -> SupNormEstimate:
    """Lower bound for sup |P| by multistart gradient ascent in phases.

    The objective is f(theta) = |P(e^{i theta})|^2, whose gradient is
    2 Re(conj(P) d_theta P) with d_{theta_k} P = i sum_alpha alpha_k
    a_alpha e^{i theta . alpha}.  Each start keeps its own step size: a
    proposal that does not improve halves the step.  Start count defaults to
    8 n plus the deterministic aligned start theta = 0.  Nondecreasing in
    both ``iterations`` and ``starts`` for a fixed seed.
    """
    if starts is not None and starts < 1:
        raise ValueError("starts must be >= 1")
    A, c = term_arrays(P)
    n = P.n
    if len(c) == 0:
        return SupNormEstimate(0.0, None, np.zeros(n), {"mode": "ascent", "starts": 0, "iterations": 0, "seed": seed})
    cmax = float(np.max(np.abs(c)))
    cn = c / cmax
    At = A.T.astype(np.float64)
    cA = cn[:, None] * A

    S = starts if starts is not None else max(1, 8 * n)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    theta = rng.random((S, n)) * TWO_PI
    theta[0] = 0.0

    def value_grad(th: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        M = np.exp(1j * (th @ At))
        vals = M @ cn
        dP = M @ cA
        f = _abs2(vals)
        grad = 2.0 * (np.conjugate(vals)[:, None] * (1j * dP)).real
        return f, grad

    f, grad = value_grad(theta)
    step = np.full(S, step0)
    for _ in range(iterations):
        prop = np.mod(theta + step[:, None] * grad, TWO_PI)
        fp, gp = value_grad(prop)
        acc = fp > f
        if np.any(acc):
            theta[acc] = prop[acc]
            f[acc] = fp[acc]
            grad[acc] = gp[acc]
        step[~acc] *= 0.5
        if float(step.max()) < 1e-16:
            break
    best = int(np.argmax(f))
    arg = theta[best].copy()
    lower = float(np.abs(np.exp(1j * (arg @ At)) @ cn)) * cmax
    return SupNormEstimate(
        lower,
        None,
        arg,
        {"mode": "ascent", "starts": S, "iterations": iterations, "seed": seed},
    )


# ----------------------------------------------------------------------
# Certified grid search
# ----------------------------------------------------------------------

def sup_certified(
    P: Polynomial,
    grid_step: float,
    max_evaluations: int = 10**8,
    chunk_points: int = 1 << 22,
) -> SupNormEstimate:
    """Bracket sup |P| by exhaustive evaluation on a uniform phase grid.

    ``grid_step`` must satisfy h < 2 / (n * m_max); the actual step used is
    2 pi / ceil(2 pi / h) <= h.  Variables P does not depend on are skipped
    during evaluation (they change nothing), but the correction factor keeps
    the stated n * m_max form.  Ties among grid maxima resolve to the first
    point in lexicographic grid order.  Raises BudgetExceededError if the
    grid would exceed ``max_evaluations`` points.
    """
    if grid_step <= 0:
        raise ValueError("grid_step must be positive")
    A, c = term_arrays(P)
    n = P.n
    meta = {"mode": "certified-grid", "grid_step": grid_step, "note": "certified-modulo-floating-point"}
    if len(c) == 0:
        return SupNormEstimate(0.0, 0.0, np.zeros(n), meta | {"evaluations": 0})
    per_var_degree = A.max(axis=0) if n else np.zeros(0, dtype=np.int64)
    m_max = int(per_var_degree.max()) if n else 0
    if m_max == 0:
        value = float(abs(c.sum()))
        return SupNormEstimate(value, value, np.zeros(n), meta | {"evaluations": 1, "m_max": 0})
    if grid_step >= 2.0 / (n * m_max):
        raise ValueError(f"grid_step {grid_step} too large; need h < 2/(n*m_max) = {2.0 / (n * m_max)}")

    active = [k for k in range(n) if per_var_degree[k] > 0]
    d = len(active)
    L = int(math.ceil(TWO_PI / grid_step))
    h_eff = TWO_PI / L
    points = L**d
    if points > max_evaluations:
        raise BudgetExceededError(f"grid needs {points} evaluations, cap is {max_evaluations}")

    theta1d = np.arange(L) * h_eff
    # Per-axis, per-term phase tables: E[k][j, :] = exp(i alpha_{j,k} theta)
    E = [np.exp(1j * np.outer(A[:, k].astype(float), theta1d)) for k in active]

    tail_shape = (L,) * (d - 1)
    tail_size = L ** (d - 1)
    block = max(1, min(L, chunk_points // max(tail_size, 1)))

    best_val = -1.0
    best_flat = 0
    K = len(c)
    for start in range(0, L, block):
        rows = slice(start, min(start + block, L))
        nrows = rows.stop - rows.start
        V = np.zeros((nrows,) + tail_shape, dtype=np.complex128)
        for j in range(K):
            t = c[j] * E[0][j, rows]
            for k in range(1, d):
                t = np.multiply.outer(t, E[k][j])
            V += t
        av = np.abs(V).reshape(nrows * tail_size)
        loc = int(np.argmax(av))
        val = float(av[loc])
        if val > best_val:
            best_val = val
            best_flat = start * tail_size + loc
    # Decode the flat C-order index into an argmax phase vector.
    arg = np.zeros(n)
    rem = best_flat
    for k in reversed(active):
        arg[k] = theta1d[rem % L]
        rem //= L
    correction = 1.0 - n * m_max * h_eff / 2.0
    upper = best_val / correction
    meta.update({"evaluations": points, "grid_points_per_axis": L, "h_eff": h_eff, "m_max": m_max})
    return SupNormEstimate(best_val, upper, arg, meta)


def certified_upper(
    P: Polynomial,
    target_correction: float = 0.25,
    points_cap: int = 2_000_000,
) -> float:
    """A cheap certified upper bound for sup |P|.

    Always bounded by the coefficient sum (sup |P| <= sum |a_alpha|); when a
    Bernstein grid with relative correction ``target_correction`` fits inside
    ``points_cap`` evaluations, the grid bound is computed too and the
    smaller of the two is returned.
    """
    l1 = majorant_sum(P, 1.0)
    A, _ = term_arrays(P)
    if A.shape[0] == 0 or P.n == 0:
        return l1
    m_max = int(A.max(axis=0).max()) if A.size else 0
    if m_max == 0:
        return l1
    h = 2.0 * target_correction / (P.n * m_max)
    active = int((A.max(axis=0) > 0).sum())
    L = int(math.ceil(TWO_PI / h))
    if L**active > points_cap:
        return l1
    grid = sup_certified(P, h, max_evaluations=points_cap)
    assert grid.upper is not None
    return min(l1, grid.upper)


# ----------------------------------------------------------------------
# Multilinear forms over products of polydiscs
# ----------------------------------------------------------------------

def as_dense_form(B, m: int | None = None, n: int | None = None) -> np.ndarray:
    """Coerce a form coefficient table to a dense complex array of shape (n,) * m.

    Accepts an ndarray, a mapping from 1-based multi-indices to coefficients,
    or anything with a ``to_dense`` method (e.g. a SymmetricForm).
    """
    if hasattr(B, "to_dense"):
        return np.asarray(B.to_dense(), dtype=np.complex128)
    if isinstance(B, np.ndarray):
        out = np.asarray(B, dtype=np.complex128)
        if out.ndim < 1 or len(set(out.shape)) > 1:
            raise ValueError("form tensor must be cubical with at least one axis")
        return out
    if isinstance(B, Mapping):
        if m is None or n is None:
            keys = list(B)
            if not keys:
                raise ValueError("empty mapping needs explicit m and n")
            m = len(keys[0])
            n = max(max(k) for k in keys)
        out = np.zeros((n,) * m, dtype=np.complex128)
        for key, value in B.items():
            if len(key) != m or any(not 1 <= v <= n for v in key):
                raise ValueError(f"bad multi-index {key} for shape ({n},)*{m}")
            out[tuple(v - 1 for v in key)] = complex(value)
        return out
    raise TypeError(f"cannot interpret {type(B).__name__} as a multilinear form")


def sup_multilinear(
    B,
    starts: int = 8,
    iterations: int = 100,
    seed: int = 0,
    tol: float = 1e-12,
) -> SupNormEstimate:
    """Lower bound for sup |B(z1, ..., zm)| over the product of polydiscs.

    Multilinearity pins the optimum to unimodular coordinates.  With all
    arguments but the k-th fixed, B = sum_j w_j z_{k,j} is maximized exactly
    by z_{k,j} = conj(w_j)/|w_j|, giving sum_j |w_j|; sweeping k makes the
    value nondecreasing.  Multistart over random unimodular initializations
    plus one deterministic all-ones start.
    """
    T = as_dense_form(B)
    m, n = T.ndim, T.shape[0]
    scale = float(np.max(np.abs(T)))
    meta = {"mode": "block-ascent", "starts": starts, "iterations": iterations, "seed": seed}
    if scale == 0.0:
        return SupNormEstimate(0.0, None, np.zeros((m, n)), meta)
    Tn = T / scale
    rng = np.random.default_rng(np.random.SeedSequence(seed))

    def contract_all_but(Z: np.ndarray, k: int) -> np.ndarray:
        w = Tn
        for l in range(m - 1, -1, -1):
            if l == k:
                continue
            w = np.tensordot(w, Z[l], axes=([l], [0]))
        return w

    best_val = -1.0
    best_Z = np.ones((m, n), dtype=np.complex128)
    for s in range(starts):
        if s == 0:
            Z = np.ones((m, n), dtype=np.complex128)
        else:
            Z = np.exp(1j * TWO_PI * rng.random((m, n)))
        prev = -math.inf
        val = 0.0
        for _ in range(iterations):
            for k in range(m):
                w = contract_all_but(Z, k)
                aw = np.abs(w)
                val = float(aw.sum())
                nz = aw > 0
                Z[k, nz] = np.conjugate(w[nz]) / aw[nz]
            if val - prev <= tol * max(1.0, val):
                break
            prev = val
        if val > best_val:
            best_val = val
            best_Z = Z.copy()
    return SupNormEstimate(best_val * scale, None, np.mod(np.angle(best_Z), TWO_PI), meta)
