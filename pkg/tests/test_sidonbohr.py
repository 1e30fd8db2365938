import math

import numpy as np
import pytest

from polybh.bhverify import bh_constant_hyper
from polybh.polyalgebra import (
    GeneralPolynomial,
    HomogeneousPolynomial,
    dimension_count,
    majorant_sum,
    random_homogeneous,
    scale,
)
from polybh.sidonbohr import (
    _moebius_truncated,
    bohr_certificate_value,
    bohr_estimate_small,
    bohr_lower,
    bohr_upper,
    check_wiener,
    sidon_crossover_n,
    sidon_lower_search,
    sidon_upper_hyper,
    sidon_upper_trivial,
)
from polybh.torusnorm import certified_upper


class TestSidonUpperBounds:
    def test_hyper_values(self):
        assert sidon_upper_hyper(2, 2) == pytest.approx(5.26429605180997, rel=1e-12)
        assert sidon_upper_hyper(2, 3) == pytest.approx(6.260338320293151, rel=1e-12)

    def test_hyper_is_constant_times_dimension_power(self):
        for m in (2, 3, 4):
            for n in (2, 5, 9):
                want = bh_constant_hyper(m) * dimension_count(m, n) ** ((m - 1) / (2 * m))
                assert sidon_upper_hyper(m, n) == pytest.approx(want, rel=1e-12)

    def test_trivial_values(self):
        assert sidon_upper_trivial(2, 2) == pytest.approx(math.sqrt(3), rel=1e-12)
        for n in (2, 5, 17):
            assert sidon_upper_trivial(1, n) == pytest.approx(math.sqrt(n), rel=1e-12)

    def test_domains(self):
        with pytest.raises(ValueError):
            sidon_upper_hyper(1, 5)
        with pytest.raises(ValueError):
            sidon_upper_trivial(0, 5)

    def test_crossover_frozen_values(self):
        assert sidon_crossover_n(2) == 23
        assert sidon_crossover_n(3) == 110
        assert sidon_crossover_n(4) == 397

    def test_crossover_needs_log_n_beyond_m(self):
        # The improved bound wins only for large n: crossover beyond e^m.
        for m in range(2, 7):
            assert sidon_crossover_n(m) > math.e**m

    def test_ratio_monotone_in_n(self):
        for m in (2, 3):
            ratios = [sidon_upper_hyper(m, n) / sidon_upper_trivial(m, n) for n in range(2, 200)]
            assert all(a >= b for a, b in zip(ratios, ratios[1:]))


class TestSidonSearch:
    def test_monomial_baseline(self):
        sb = sidon_lower_search(2, 2, budget=1, seed=0)
        assert sb.lower_search >= 1.0

    def test_sandwich_small(self):
        sb = sidon_lower_search(2, 2, budget=30, seed=1)
        assert 1.0 <= sb.lower_search <= math.sqrt(3) * (1 + 1e-9)
        assert sb.upper_best == pytest.approx(math.sqrt(3))

    @pytest.mark.parametrize("strategy", ["random-sign", "gaussian", "coordinate-ascent"])
    def test_strategies_respect_sandwich(self, strategy):
        sb = sidon_lower_search(3, 3, budget=20, seed=5, strategy=strategy)
        assert 1.0 <= sb.lower_search <= sb.upper_best * (1 + 1e-9)
        assert sb.witness.coeffs

    def test_certified_mode(self):
        sb = sidon_lower_search(2, 2, budget=20, seed=3, certified=True)
        assert sb.certified
        assert 1.0 <= sb.lower_search <= sb.upper_best * (1 + 1e-9)

    def test_deterministic(self):
        a = sidon_lower_search(2, 3, budget=10, seed=7)
        b = sidon_lower_search(2, 3, budget=10, seed=7)
        assert a.lower_search == b.lower_search
        assert a.witness.coeffs == b.witness.coeffs

    def test_signs_find_nontrivial_ratio(self):
        # Random signs beat the monomial baseline comfortably at (2, 6).
        sb = sidon_lower_search(2, 6, budget=30, seed=2)
        assert sb.lower_search > 1.2

    def test_validation(self):
        with pytest.raises(ValueError):
            sidon_lower_search(2, 2, budget=0)
        with pytest.raises(ValueError):
            sidon_lower_search(2, 2, strategy="anneal")


class TestWiener:
    def test_constant_polynomial(self):
        G = GeneralPolynomial(2, {}, a0=0.9)
        rep = check_wiener(G, supnorm_upper_P=0.9)
        assert rep.passed and rep.parts == ()

    def test_moebius_near_equality(self):
        # Truncated (a - z)/(1 - a z) at a = 1/2: the degree-1 part has sup
        # norm 1 - a^2 = 3/4 exactly, the Wiener bound with equality.
        P = _moebius_truncated(0.5, 10)
        s = certified_upper(P, target_correction=0.002) * (1 + 1e-9)
        P1 = scale(P, 1.0 / s)
        rep = check_wiener(P1, min(1.0, certified_upper(P1, target_correction=0.002)),
                           target_correction=0.001)
        assert rep.passed
        part1 = rep.parts[0]
        assert part1.degree == 1
        assert part1.sup_estimate == pytest.approx(0.75, abs=5e-3)
        assert part1.bound == pytest.approx(0.75, abs=5e-3)

    def test_random_campaign_n2(self):
        from polybh.cli import _random_general, case_seed

        for i in range(12):
            seed = case_seed(101, i)
            G = _random_general(2, 4, seed)
            s = certified_upper(G) * (1 + 1e-9)
            G1 = scale(G, 1.0 / s)
            rep = check_wiener(G1, min(1.0, certified_upper(G1)))
            assert rep.passed

    def test_precondition(self):
        G = GeneralPolynomial(2, {}, a0=2.0)
        with pytest.raises(ValueError):
            check_wiener(G, supnorm_upper_P=2.0)

    def test_ascent_mode(self):
        P = _moebius_truncated(0.3, 8)
        s = certified_upper(P) * (1 + 1e-9)
        rep = check_wiener(scale(P, 1 / s), 1.0, mode="ascent")
        assert rep.mode == "ascent"
        assert rep.passed


class TestBohrRadius:
    def test_certificate_reverifies(self):
        for n in (100, 10_000):
            rep = bohr_lower(n)
            assert rep.certificate_value <= 0.5 + 1e-12
            # Independent high-precision recomputation with exact binomials.
            assert bohr_certificate_value(n, rep.lower, rep.M_used) <= 0.5 + 1e-12

    def test_monotone_b_pair(self):
        assert bohr_lower(10**6).b_lower > bohr_lower(10**3).b_lower

    def test_sandwich(self):
        for n in (10, 1000, 10**6):
            rep = bohr_lower(n)
            assert rep.lower <= rep.upper

    def test_radius_maximality(self):
        # Slightly above the returned radius the certificate must fail.
        from polybh.sidonbohr import _certificate_terms

        rep = bohr_lower(1000)
        exceeds, _, _, _ = _certificate_terms(1000, rep.lower * (1 + 1e-6), rep.M_used)
        assert exceeds

    def test_upper_values(self):
        assert bohr_upper(2) == pytest.approx(1 / 3)
        assert bohr_upper(10**6) == pytest.approx(2 * math.sqrt(math.log(10**6) / 10**6), rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            bohr_lower(1)
        with pytest.raises(ValueError):
            bohr_upper(1)

    def test_certificate_lemma(self):
        # max_{0<=a<=1} a + c (1 - a^2) <= 1 iff c <= 1/2 (grid check).
        a = np.linspace(0, 1, 2001)
        assert float(np.max(a + 0.5 * (1 - a * a))) <= 1 + 1e-12
        assert float(np.max(a + 0.51 * (1 - a * a))) > 1


class TestK1Bracket:
    def test_bracket_contains_one_third(self):
        br = bohr_estimate_small()
        assert br.r_pass <= 1 / 3 <= br.r_fail
        assert br.r_fail - br.r_pass <= 0.02

    def test_bracket_is_tight_at_default_resolution(self):
        br = bohr_estimate_small()
        assert br.r_pass == pytest.approx(0.333, abs=1e-12)
        assert br.r_fail == pytest.approx(0.334, abs=1e-12)

    def test_closed_form_oracle(self):
        # Untruncated majorant: a + (1 - a^2) r / (1 - a r); the degree-50
        # truncation agrees to far better than grid resolution.
        for a in (0.3, 0.9, 0.99):
            P = _moebius_truncated(a, 50)
            for r in (0.2, 1 / 3, 0.34):
                oracle = a + (1 - a * a) * r / (1 - a * r)
                tail = (1 - a * a) * a**50 * r**51 / (1 - a * r)
                assert majorant_sum(P, r) == pytest.approx(oracle - tail, rel=1e-12)

    def test_violation_threshold_formula(self):
        # majorant <= 1 iff r <= 1/(1 + 2a): at r = 0.334 the violating a
        # exist (near 1), at r = 1/3 none do.
        P = _moebius_truncated(0.999, 50)
        assert majorant_sum(P, 0.334) > 1
        assert majorant_sum(P, 1 / 3) <= 1

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            bohr_estimate_small(degree=2)
