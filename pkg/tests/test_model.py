"""Tests for the problem-definition layer: potential, validation, enums."""

import math

import numpy as np
import pytest

from rspho.errors import DomainError
from rspho.model import (BranchSign, Convention, PotentialParams, QuantumNumbers,
                         SolveRequest, Symmetry, evaluate_potential, validate)


def _params(K=0.001, A=0.01, B=0.01, C=0.01):
    return PotentialParams(K=K, A=A, B=B, C=C)


class TestEvaluatePotential:
    def test_equator_value(self):
        # cos(pi/2) = 0 and sin(pi/2) = 1: harmonic + A + B
        assert evaluate_potential(_params(), 1.0, math.pi / 2) == pytest.approx(0.0205, abs=1e-15)

    def test_diagonal_value(self):
        # sin^2 = cos^2 = 1/2 at pi/4: ring terms double, C term survives whole
        assert evaluate_potential(_params(), 1.0, math.pi / 4) == pytest.approx(0.0405, abs=1e-14)

    @pytest.mark.parametrize("r", [0.0, -1.0])
    def test_radial_singularity(self, r):
        with pytest.raises(DomainError):
            evaluate_potential(_params(), r, math.pi / 2)

    @pytest.mark.parametrize("theta", [0.0, math.pi, -0.1, 3.2])
    def test_axis_singularity(self, theta):
        with pytest.raises(DomainError):
            evaluate_potential(_params(), 1.0, theta)

    def test_reflection_symmetry(self):
        p = _params(K=0.4, A=1.2, B=-0.3, C=0.7)
        for theta in np.linspace(0.1, math.pi / 2, 9):
            v1 = evaluate_potential(p, 1.7, theta)
            v2 = evaluate_potential(p, 1.7, math.pi - theta)
            assert v1 == pytest.approx(v2, rel=1e-13)

    def test_divergence_toward_origin(self):
        p = _params(A=2.0)
        radii = 1.0 / np.arange(1, 30)
        values = [evaluate_potential(p, float(r), math.pi / 2) for r in radii]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_divergence_toward_axis(self):
        p = _params(B=0.5, C=0.1)
        thetas = np.pi / np.arange(3, 40)
        values = [evaluate_potential(p, 1.0, float(t)) for t in thetas]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_array_broadcast_matches_scalar(self):
        p = _params(K=1.0, A=0.5, B=0.2, C=0.3)
        r = np.array([0.5, 1.0, 2.0])
        theta = np.array([0.4, 1.1, 2.2])
        grid = evaluate_potential(p, r, theta)
        for i in range(3):
            assert grid[i] == pytest.approx(
                evaluate_potential(p, float(r[i]), float(theta[i])), rel=1e-14)


class TestQuantumNumbers:
    def test_ntheta_defaults_to_nr(self):
        assert QuantumNumbers(n_r=2).n_theta == 2

    def test_explicit_ntheta_kept(self):
        assert QuantumNumbers(n_r=2, n_theta=0).n_theta == 0

    def test_default_m(self):
        assert QuantumNumbers(n_r=1).m == 0


class TestEnums:
    def test_coupling_signs(self):
        assert Symmetry.SPIN.coupling_sign == 1.0
        assert Symmetry.PSEUDOSPIN.coupling_sign == -1.0

    def test_branch_signs(self):
        assert BranchSign.PLUS.sign == 1.0
        assert BranchSign.MINUS.sign == -1.0

    def test_convention_coefficients(self):
        assert Convention.TABLE_CONSISTENT.coefficient == 1.0
        assert Convention.EQUATION_CONSISTENT.coefficient == 2.0

    def test_string_construction(self):
        assert Symmetry("spin") is Symmetry.SPIN
        assert BranchSign("minus") is BranchSign.MINUS
        assert Convention("equation") is Convention.EQUATION_CONSISTENT


def _request(K=5.0, A=6.0, B=-0.05, C=0.005, M=5.0, n_r=1, m=0,
             symmetry=Symmetry.SPIN):
    return SolveRequest(params=PotentialParams(K=K, A=A, B=B, C=C), M=M,
                        qn=QuantumNumbers(n_r=n_r, m=m), symmetry=symmetry)


class TestValidate:
    def test_reference_request_is_ok(self):
        assert validate(_request()) == []

    def test_spin_needs_positive_k(self):
        violations = validate(_request(K=-5.0))
        assert [v.code for v in violations] == ["k-sign-spin"]
        assert "positive" in violations[0].message

    def test_pseudospin_needs_negative_k(self):
        violations = validate(_request(K=5.0, symmetry=Symmetry.PSEUDOSPIN))
        assert [v.code for v in violations] == ["k-sign-pseudospin"]

    @pytest.mark.parametrize("mass", [0.0, -3.0, math.nan])
    def test_mass_must_be_positive(self, mass):
        assert "mass-positive" in [v.code for v in validate(_request(M=mass))]

    def test_negative_nr_flagged(self):
        assert "n-r-range" in [v.code for v in validate(_request(n_r=-1))]

    def test_nonfinite_param_flagged(self):
        assert "params-finite" in [v.code for v in validate(_request(A=math.inf))]

    def test_violations_accumulate(self):
        bad = SolveRequest(params=PotentialParams(K=-5.0, A=6.0, B=0.0, C=0.0),
                           M=-1.0, qn=QuantumNumbers(n_r=-2, m=0),
                           symmetry=Symmetry.SPIN)
        codes = {v.code for v in validate(bad)}
        assert {"k-sign-spin", "mass-positive", "n-r-range"} <= codes
