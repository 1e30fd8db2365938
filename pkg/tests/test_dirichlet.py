import json
import math

import numpy as np
import pytest

from polybh.dirichlet import (
    DirichletPolynomial,
    asymptotic_formula,
    bcq_partial_sum,
    bohr_lift,
    certified_ratio_small,
    dirichlet_l1,
    dirichlet_sup,
    evaluate_line,
    factorize,
    from_json_dict,
    primes_up_to,
    sidon_N_bounds,
    to_json_dict,
)
from polybh.polyalgebra import evaluate, majorant_sum


def is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(math.isqrt(n)) + 1))


class TestFactorize:
    def test_twelve(self):
        assert factorize(12) == (2, 1)

    def test_one_is_empty(self):
        assert factorize(1) == ()

    def test_prime_97(self):
        assert is_prime(97)
        alpha = factorize(97)
        assert len(alpha) == sum(1 for p in range(2, 98) if is_prime(p)) == 25
        assert alpha[24] == 1 and sum(alpha) == 1

    def test_reconstructs_n(self):
        for n in range(1, 300):
            alpha = factorize(n)
            primes = primes_up_to(300)
            assert math.prod(p**a for p, a in zip(primes, alpha)) == n

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)


class TestPrimes:
    def test_small(self):
        assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
        assert primes_up_to(1) == []

    def test_counts(self):
        assert len(primes_up_to(1000)) == 168


class TestBohrLift:
    def test_three_term_example(self):
        Q = DirichletPolynomial(6, {2: 2.0, 3: 3.0, 6: 6.0})
        lift = bohr_lift(Q)
        assert lift.primes == (2, 3, 5)
        assert lift.poly.parts[1].coeffs == {(1,): 2.0, (2,): 3.0}
        assert lift.poly.parts[2].coeffs == {(1, 2): 6.0}
        assert lift.monomial_map[6] == (1, 1, 0)

    def test_constant_only(self):
        lift = bohr_lift(DirichletPolynomial(1, {1: 3 - 1j}))
        assert lift.poly.a0 == 3 - 1j
        assert lift.poly.parts == {}

    def test_prime_power(self):
        lift = bohr_lift(DirichletPolynomial(4, {4: 1.0}))
        assert lift.poly.parts[2].coeffs == {(1, 1): 1.0}

    def test_degree_is_prime_multiplicity(self):
        # 8 = 2^3, 12 = 2^2*3, 30 = 2*3*5: each has three prime factors.
        Q = DirichletPolynomial(30, {8: 1.0, 12: 1.0, 30: 1.0, 9: 1.0})
        lift = bohr_lift(Q)
        assert sorted(lift.poly.parts) == [2, 3]  # 9 = 3^2 sits at degree 2
        assert sum(lift.monomial_map[8]) == 3
        assert sum(lift.monomial_map[12]) == 3
        assert sum(lift.monomial_map[30]) == 3
        assert sum(lift.monomial_map[9]) == 2

    def test_l1_transport_exact(self):
        rng = np.random.default_rng(7)
        for _ in range(60):
            N = int(rng.integers(2, 500))
            size = int(rng.integers(1, min(N, 25) + 1))
            support = rng.choice(np.arange(1, N + 1), size=size, replace=False)
            Q = DirichletPolynomial(
                N, {int(k): complex(rng.standard_normal(), rng.standard_normal()) for k in support}
            )
            assert majorant_sum(bohr_lift(Q).poly, 1.0) == dirichlet_l1(Q)

    def test_multiplicativity_on_small_cases(self):
        # lift(Q1 * Q2) evaluates as the product of the lifted evaluations
        # when no truncation occurs (N = N1 * N2).
        rng = np.random.default_rng(3)
        q1 = {1: 1.0, 2: 0.5 + 1j, 3: -0.25}
        q2 = {1: -1j, 2: 2.0}
        prod_coeffs: dict[int, complex] = {}
        for a, ca in q1.items():
            for b, cb in q2.items():
                prod_coeffs[a * b] = prod_coeffs.get(a * b, 0j) + ca * cb
        Q1, Q2 = DirichletPolynomial(3, q1), DirichletPolynomial(2, q2)
        Q12 = DirichletPolynomial(6, prod_coeffs)
        L1, L2, L12 = bohr_lift(Q1), bohr_lift(Q2), bohr_lift(Q12)
        for _ in range(10):
            z = np.exp(2j * math.pi * rng.random(L12.poly.n))
            lhs = evaluate(L12.poly, z)
            rhs = evaluate(L1.poly, z[: L1.poly.n]) * evaluate(L2.poly, z[: L2.poly.n])
            assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


class TestDirichletSup:
    def test_single_term(self):
        est = dirichlet_sup(DirichletPolynomial(2, {2: 1.0}), seed=0)
        assert est.lower == pytest.approx(1.0, abs=1e-12)

    def test_two_terms_align(self):
        est = dirichlet_sup(DirichletPolynomial(2, {1: 1.0, 2: 1.0}), seed=0)
        assert est.lower == pytest.approx(2.0, abs=1e-9)

    def test_three_independent_phases(self):
        est = dirichlet_sup(DirichletPolynomial(3, {1: 1.0, 2: 1.0, 3: 1.0}), seed=0)
        assert est.lower == pytest.approx(3.0, abs=1e-8)

    def test_line_scan_one_sided(self):
        # Kronecker direction: the line orbit lies in the torus closure, so a
        # finite scan of |Q(it)| can approach but never beat the torus sup.
        rng = np.random.default_rng(11)
        for case in range(8):
            N = int(rng.integers(2, 30))
            coeffs = {int(k): complex(rng.standard_normal(), rng.standard_normal())
                      for k in rng.choice(np.arange(1, N + 1), size=min(N, 6), replace=False)}
            Q = DirichletPolynomial(N, coeffs)
            est = dirichlet_sup(Q, seed=case)
            assert est.method["line_scan_max"] <= est.method["torus_ascent"] * (1 + 1e-6)
            assert est.lower >= est.method["torus_ascent"]
            # spot-check raw line values as well
            t = float(rng.uniform(0, 50))
            assert abs(evaluate_line(Q, t)) <= est.lower * (1 + 1e-9)


class TestSidonN:
    def test_S2_and_S3_are_one(self):
        assert sidon_N_bounds(2).lower == pytest.approx(1.0, abs=1e-3)
        assert sidon_N_bounds(3).lower == pytest.approx(1.0, abs=1e-3)

    def test_S4_exceeds_threshold(self):
        sb = sidon_N_bounds(4)
        assert sb.lower > 1.005
        assert sb.method["certified"]

    def test_known_witness_ratio(self):
        # Q = 1 + sqrt(2) i 2^{-s} + 4^{-s} has ratio (2 + sqrt 2)/sqrt 6.
        Q = DirichletPolynomial(4, {1: 1.0, 2: math.sqrt(2) * 1j, 4: 1.0})
        ratio = certified_ratio_small(Q, grid_points=1 << 14)
        assert ratio == pytest.approx((2 + math.sqrt(2)) / math.sqrt(6), rel=2e-3)

    def test_nondecreasing_in_N(self):
        values = [sidon_N_bounds(N, mag_points=4, phase_points=6).lower for N in (2, 3, 4, 5)]
        for a, b in zip(values, values[1:]):
            assert b >= a - 1e-12

    def test_heuristic_path_large_N(self):
        sb = sidon_N_bounds(20, budget=10, seed=1)
        assert sb.method["kind"] == "random-search-heuristic"
        assert sb.lower >= 1.0
        assert sb.asymptotic_sharp == pytest.approx(asymptotic_formula(20, -1 / math.sqrt(2)))

    def test_domain(self):
        with pytest.raises(ValueError):
            sidon_N_bounds(1)


class TestAsymptoticFormula:
    def test_frozen_value(self):
        assert asymptotic_formula(100, -1 / math.sqrt(2)) == pytest.approx(
            1.5332078308902644, rel=1e-12
        )

    def test_c_zero_is_sqrt(self):
        assert asymptotic_formula(100, 0.0) == pytest.approx(10.0)
        assert asymptotic_formula(400, 0.0) == pytest.approx(20.0)

    def test_monotone_in_c(self):
        for N in (16, 100, 10**6):
            assert asymptotic_formula(N, -1 / math.sqrt(2)) < asymptotic_formula(
                N, -1 / (2 * math.sqrt(2))
            )

    def test_out_of_domain(self):
        with pytest.raises(ValueError):
            asymptotic_formula(15, 0.0)


class TestBcqSum:
    def test_single_term_frozen(self):
        assert bcq_partial_sum({4: 1.0}, 1 / math.sqrt(2)) == pytest.approx(
            0.8046674531326952, rel=1e-12
        )

    def test_c_zero(self):
        Q = DirichletPolynomial(4, {1: 1.0, 2: 1.0, 4: 2.0})
        want = 1.0 + 1 / math.sqrt(2) + 2 / 2.0
        assert bcq_partial_sum(Q, 0.0) == pytest.approx(want, rel=1e-14)

    def test_zero_coefficients(self):
        assert bcq_partial_sum({}, 1.0) == 0.0

    def test_small_n_convention(self):
        # n < 3 never receives the exponential factor.
        val = bcq_partial_sum({1: 1.0, 2: 1.0}, 5.0)
        assert val == pytest.approx(1.0 + 1 / math.sqrt(2), rel=1e-14)

    def test_n_start_moves_threshold(self):
        with_factor = bcq_partial_sum({5: 1.0}, 1.0, n_start=3)
        without = bcq_partial_sum({5: 1.0}, 1.0, n_start=6)
        assert without == pytest.approx(5 ** (-0.5))
        assert with_factor > without


class TestJson:
    def test_wire_format(self):
        Q = DirichletPolynomial(6, {2: 1.0})
        assert to_json_dict(Q) == {"N": 6, "terms": [{"n": 2, "re": 1.0, "im": 0.0}]}

    def test_round_trip(self):
        Q = DirichletPolynomial(10, {1: 1j, 7: 2.0, 10: -1.5 + 0.5j})
        R = from_json_dict(json.loads(json.dumps(to_json_dict(Q))))
        assert R.N == Q.N and R.coeffs == Q.coeffs

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            DirichletPolynomial(5, {6: 1.0})
