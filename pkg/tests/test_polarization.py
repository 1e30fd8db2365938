import math
from itertools import permutations

import numpy as np
import pytest

from polybh.indexcore import enumerate_J, multiplicity
from polybh.polarization import (
    SymmetricForm,
    check_harris,
    evaluate_form,
    harris_factor,
    polarize,
    restrict_diagonal,
)
from polybh.polyalgebra import HomogeneousPolynomial, evaluate, random_homogeneous

Z1Z2 = HomogeneousPolynomial(2, 2, {(1, 2): 1.0})


def random_torus_point(rng, n):
    return np.exp(2j * math.pi * rng.random(n)).tolist()


class TestPolarize:
    def test_mixed_monomial(self):
        B = polarize(Z1Z2)
        assert B.coeff((1, 2)) == pytest.approx(0.5)
        assert B.coeff((2, 1)) == pytest.approx(0.5)  # symmetry of access

    def test_pure_power(self):
        B = polarize(HomogeneousPolynomial(2, 2, {(1, 1): 1.0}))
        assert B.coeff((1, 1)) == pytest.approx(1.0)

    def test_triple(self):
        B = polarize(HomogeneousPolynomial(3, 2, {(1, 1, 2): 1.0}))
        assert B.coeff((1, 1, 2)) == pytest.approx(1 / 3)

    def test_round_trip_exact(self):
        for m in range(1, 5):
            for n in range(1, 5):
                P = random_homogeneous(m, n, "complex-gaussian", seed=10 * m + n)
                assert restrict_diagonal(polarize(P)).coeffs == P.coeffs

    def test_from_coefficients(self):
        B = SymmetricForm.from_coefficients(2, 2, {(1, 2): 0.5})
        P = restrict_diagonal(B)
        assert P.coeffs == {(1, 2): 1.0}

    def test_from_coefficients_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            SymmetricForm.from_coefficients(2, 2, {(1, 2): 0.5, (2, 1): 0.7})

    def test_zero_form(self):
        B = polarize(HomogeneousPolynomial(3, 3, {}))
        assert restrict_diagonal(B).coeffs == {}
        assert evaluate_form(B, [(1, 1, 1)] * 3) == 0


class TestEvaluateForm:
    def test_basis_points(self):
        B = polarize(Z1Z2)
        assert evaluate_form(B, [(1, 0), (0, 1)]) == pytest.approx(0.5)

    def test_diagonal_identity(self):
        rng = np.random.default_rng(3)
        for seed in range(6):
            m, n = 2 + seed % 3, 2 + seed % 2
            P = random_homogeneous(m, n, "complex-gaussian", seed=seed)
            z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            got = evaluate_form(polarize(P), [z] * m)
            want = evaluate(P, z)
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want))

    def test_symmetric_in_points(self):
        rng = np.random.default_rng(8)
        P = random_homogeneous(3, 3, "complex-gaussian", seed=5)
        B = polarize(P)
        points = [random_torus_point(rng, 3) for _ in range(3)]
        base = evaluate_form(B, points)
        for perm in permutations(range(3)):
            val = evaluate_form(B, [points[i] for i in perm])
            assert abs(val - base) <= 1e-12 * max(1.0, abs(base))

    def test_wrong_point_count(self):
        with pytest.raises(ValueError):
            evaluate_form(polarize(Z1Z2), [(1, 0)])

    def test_wrong_dimension(self):
        with pytest.raises(ValueError):
            evaluate_form(polarize(Z1Z2), [(1, 0, 0), (0, 1, 0)])

    def test_matches_dense_tensor_contraction(self):
        # Oracle: contract the dense b tensor against the point vectors.
        rng = np.random.default_rng(14)
        P = random_homogeneous(3, 3, "complex-gaussian", seed=21)
        B = polarize(P)
        T = B.to_dense()
        pts = [rng.standard_normal(3) + 1j * rng.standard_normal(3) for _ in range(3)]
        want = np.einsum("abc,a,b,c->", T, *pts)
        got = evaluate_form(B, pts)
        assert abs(got - want) <= 1e-11 * max(1.0, abs(want))


class TestPartialSubstitutionParseval:
    @pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)])
    def test_identity(self, m, n):
        # || B(z, ..., e^(d), ..., z) ||_2^2 == sum over classes |j'|^2 |b|^2,
        # checked through the dual-route report of check_proof_step.
        from polybh.bhverify import check_proof_step
        from polybh.torusnorm import certified_upper

        P = random_homogeneous(m, n, "complex-gaussian", seed=100 * m + n)
        rep = check_proof_step(P, 1, certified_upper(P))
        assert rep.parseval_max_rel_err <= 1e-12


class TestHarrisFactor:
    def test_values(self):
        assert harris_factor(2, (1, 1)) == pytest.approx(2.0)
        assert harris_factor(3, (2, 1)) == pytest.approx(2.25)

    def test_single_block_is_one(self):
        for m in (1, 2, 5, 9):
            assert harris_factor(m, (m,)) == pytest.approx(1.0)

    def test_zero_parts_allowed(self):
        assert harris_factor(3, (3, 0, 0)) == pytest.approx(1.0)
        assert harris_factor(2, (0, 1, 1)) == pytest.approx(2.0)

    def test_equals_theorem_constant_source(self):
        # Partition (m-1, 1) reproduces (1 + 1/(m-1))^{m-1}.
        for m in range(2, 9):
            want = (1 + 1 / (m - 1)) ** (m - 1)
            assert harris_factor(m, (m - 1, 1)) == pytest.approx(want, rel=1e-12)

    def test_bad_partition(self):
        with pytest.raises(ValueError):
            harris_factor(3, (2, 2))
        with pytest.raises(ValueError):
            harris_factor(3, (4, -1))


class TestCheckHarris:
    def test_hand_case(self):
        rep = check_harris(Z1Z2, (1, 1), [(1, 1), (1, -1)], supnorm_bound=1.0)
        assert rep.value == pytest.approx(0.0, abs=1e-15)
        assert rep.bound == pytest.approx(2.0)
        assert rep.passed

    def test_single_block_reduces_to_evaluation(self):
        rng = np.random.default_rng(4)
        P = random_homogeneous(3, 2, "complex-gaussian", seed=3)
        z = random_torus_point(rng, 2)
        from polybh.torusnorm import certified_upper

        rep = check_harris(P, (3,), [z], certified_upper(P))
        assert rep.factor == pytest.approx(1.0)
        assert rep.value == pytest.approx(abs(evaluate(P, z)), rel=1e-12)
        assert rep.passed

    def test_never_fails_with_certified_bound(self):
        from polybh.torusnorm import certified_upper

        rng = np.random.default_rng(77)
        for case in range(40):
            m = int(rng.integers(2, 5))
            n = int(rng.integers(2, 5))
            P = random_homogeneous(m, n, "complex-gaussian", seed=case)
            blocks = int(rng.integers(1, m + 1))
            partition = rng.multinomial(m, [1 / blocks] * blocks).tolist()
            points = [random_torus_point(rng, n) for _ in partition]
            rep = check_harris(P, partition, points, certified_upper(P))
            assert rep.passed, (m, n, partition, rep)

    def test_point_outside_polydisc_rejected(self):
        with pytest.raises(ValueError):
            check_harris(Z1Z2, (1, 1), [(1.1, 0), (0, 1)], 1.0)

    def test_partition_point_count_mismatch(self):
        with pytest.raises(ValueError):
            check_harris(Z1Z2, (1, 1), [(1, 0)], 1.0)


class TestFormJson:
    def test_round_trip_with_flag(self):
        import json

        from polybh.polarization import from_json_dict, to_json_dict

        P = HomogeneousPolynomial(2, 2, {(1, 2): 1.0, (1, 1): 2.0})
        data = to_json_dict(polarize(P))
        assert data["polarized"] is True
        B = from_json_dict(json.loads(json.dumps(data)))
        assert B.diagonal.coeffs == P.coeffs
        assert B.coeff((2, 1)) == pytest.approx(0.5)

    def test_flag_required(self):
        from polybh.polarization import from_json_dict
        from polybh.polyalgebra import to_json_dict as poly_to_json

        with pytest.raises(ValueError):
            from_json_dict(poly_to_json(Z1Z2))


class TestDenseTensor:
    def test_to_dense_symmetry_and_values(self):
        P = HomogeneousPolynomial(2, 2, {(1, 2): 1.0, (1, 1): 3.0})
        T = polarize(P).to_dense()
        assert T[0, 0] == pytest.approx(3.0)
        assert T[0, 1] == pytest.approx(0.5)
        assert T[1, 0] == pytest.approx(0.5)
        assert T[1, 1] == 0.0

    def test_dense_total_matches_class_sum(self):
        P = random_homogeneous(3, 3, "complex-gaussian", seed=9)
        B = polarize(P)
        T = B.to_dense()
        for j in enumerate_J(3, 3):
            want = B.coeff(j) * multiplicity(j)
            got = sum(T[tuple(v - 1 for v in i)] for i in set(permutations(j)))
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want))
