"""Tests for the energy solver and the non-relativistic closed form."""

import math

import pytest

from rspho.errors import DomainError, NoRootError
from rspho.model import (BranchSign, Convention, PotentialParams,
                         QuantumNumbers, SolveRequest, Symmetry)
from rspho.spectrum import (SolverOptions, energy_residual,
                            nonrelativistic_energy, solve_energy)

from table_data import PSEUDOSPIN_SET, SPIN_SET


def spin_request(n=1, m=0, A=6.0, convention=Convention.TABLE_CONSISTENT):
    params = PotentialParams(K=SPIN_SET["K"], A=A, B=SPIN_SET["B"], C=SPIN_SET["C"])
    return SolveRequest(params=params, M=SPIN_SET["M"],
                        qn=QuantumNumbers(n_r=n, m=m), symmetry=Symmetry.SPIN,
                        convention=convention)


def pseudospin_request(n=1, m=0, A=-5.0):
    params = PotentialParams(K=PSEUDOSPIN_SET["K"], A=A, B=PSEUDOSPIN_SET["B"],
                             C=PSEUDOSPIN_SET["C"])
    return SolveRequest(params=params, M=PSEUDOSPIN_SET["M"],
                        qn=QuantumNumbers(n_r=n, m=m), symmetry=Symmetry.PSEUDOSPIN)


class TestEnergyResidual:
    def test_small_at_spin_reference(self):
        assert abs(energy_residual(14.38516214, spin_request())) < 1e-6

    def test_small_at_pseudospin_reference(self):
        assert abs(energy_residual(12.12523736, pseudospin_request())) < 1e-6

    def test_negative_at_rest_mass(self):
        # LHS vanishes at E = M while the RHS is strictly positive
        assert energy_residual(SPIN_SET["M"], spin_request()) < 0.0

    def test_nonpositive_total_energy_rejected(self):
        with pytest.raises(DomainError, match=r"E \+ M"):
            energy_residual(-6.0, spin_request())

    def test_radial_radicand_failure_named(self):
        # drive delta' far negative with a large negative A under spin symmetry
        req = spin_request(A=-40.0)
        with pytest.raises(DomainError, match="radial radicand"):
            energy_residual(5.5, req)


class TestSolveEnergy:
    def test_spin_anchor(self):
        res = solve_energy(spin_request())
        assert res.E == pytest.approx(14.38516214, abs=1e-6)

    def test_pseudospin_anchors(self):
        assert solve_energy(pseudospin_request()).E == pytest.approx(12.12523736, abs=1e-6)
        assert solve_energy(pseudospin_request(n=3, m=2, A=-2.5)).E == pytest.approx(12.97434270, abs=1e-6)
        assert solve_energy(pseudospin_request(n=2, m=2, A=-5.0)).E == pytest.approx(13.34829750, abs=1e-6)

    def test_result_invariants(self):
        opts = SolverOptions()
        res = solve_energy(spin_request(n=2, m=1), opts)
        assert abs(res.residual) <= opts.abs_tol_E * max(1.0, abs(res.E))
        assert res.bracket[0] <= res.E <= res.bracket[1]
        assert res.E > SPIN_SET["M"]
        assert res.root_count_in_scan >= 1
        assert res.iterations > 0
        # delta solves delta*(delta+1) = delta' = 2*A*(E+M) + lambda under spin symmetry
        assert res.delta * (res.delta + 1.0) == pytest.approx(
            2.0 * 6.0 * (res.E + 5.0) + res.lam, rel=1e-9)

    def test_deterministic(self):
        first = solve_energy(spin_request(n=3, m=1, A=7.0))
        second = solve_energy(spin_request(n=3, m=1, A=7.0))
        assert first.E == second.E
        assert first.iterations == second.iterations

    def test_equation_convention_root_larger(self):
        e_table = solve_energy(spin_request()).E
        e_equation = solve_energy(spin_request(convention=Convention.EQUATION_CONSISTENT)).E
        assert e_equation > e_table + 1.0

    def test_monotone_trends(self):
        # increasing A raises E; increasing n raises E; larger |m| lowers E
        assert solve_energy(spin_request(A=6.5)).E > solve_energy(spin_request(A=6.0)).E
        assert solve_energy(spin_request(n=2)).E > solve_energy(spin_request(n=1)).E
        assert solve_energy(spin_request(m=1)).E < solve_energy(spin_request(m=0)).E
        # pseudospin set: E falls as A rises toward zero
        assert solve_energy(pseudospin_request(A=-4.5)).E < solve_energy(pseudospin_request(A=-5.0)).E

    def test_invalid_request_raises_domain_error(self):
        req = SolveRequest(params=PotentialParams(K=-5.0, A=6.0, B=-0.05, C=0.005),
                           M=5.0, qn=QuantumNumbers(n_r=1), symmetry=Symmetry.SPIN)
        with pytest.raises(DomainError, match="K must be positive"):
            solve_energy(req)

    def test_empty_validity_region(self):
        # B + C = 0 with |m| >= 1 leaves the angular radicand negative everywhere
        req = SolveRequest(params=PotentialParams(K=5.0, A=6.0, B=0.1, C=-0.1),
                           M=5.0, qn=QuantumNumbers(n_r=1, m=1), symmetry=Symmetry.SPIN)
        with pytest.raises(NoRootError):
            solve_energy(req)

    def test_scan_ceiling_too_low(self):
        with pytest.raises(NoRootError, match="no sign change"):
            solve_energy(spin_request(), SolverOptions(e_max_offset=0.1))

    def test_root_index_out_of_range(self):
        with pytest.raises(NoRootError, match="root index"):
            solve_energy(spin_request(), SolverOptions(root_index=5))

    def test_large_mass_converges(self):
        # exercises the relative tolerance floor far above the absolute one
        req = SolveRequest(params=PotentialParams(K=5.0, A=6.0, B=-0.05, C=0.005),
                           M=1e4, qn=QuantumNumbers(n_r=1), symmetry=Symmetry.SPIN)
        res = solve_energy(req)
        assert res.E > 1e4
        assert abs(res.residual) <= 1e-12 * res.E


class TestSolverOptions:
    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            SolverOptions(abs_tol_E=0.0)

    def test_rejects_bad_scan(self):
        with pytest.raises(ValueError):
            SolverOptions(scan_points=1)

    def test_rejects_negative_root_index(self):
        with pytest.raises(ValueError):
            SolverOptions(root_index=-1)


class TestNonrelativisticEnergy:
    def test_zero_coupling_closed_form(self):
        # bracket = 2n + 1 + sqrt(1/4 + lambda_NR) = 1 + sqrt(1.20710678...)
        params = PotentialParams(K=2.0, A=0.0, B=0.0, C=0.0)
        e = nonrelativistic_energy(params, 4.0, QuantumNumbers(n_r=0),
                                   convention=Convention.EQUATION_CONSISTENT)
        # sqrt(2K/mu) = 1 here, so the value is the bracket itself
        assert e == pytest.approx(2.0986841134678098, abs=1e-12)

    def test_table_convention_halves(self):
        params = PotentialParams(K=2.0, A=0.0, B=0.0, C=0.0)
        e1 = nonrelativistic_energy(params, 4.0, QuantumNumbers(n_r=0),
                                    convention=Convention.TABLE_CONSISTENT)
        e2 = nonrelativistic_energy(params, 4.0, QuantumNumbers(n_r=0),
                                    convention=Convention.EQUATION_CONSISTENT)
        assert e2 == pytest.approx(2.0 * e1, rel=1e-14)

    def test_reference_set_is_finite_positive(self):
        params = PotentialParams(K=5.0, A=6.0, B=-0.05, C=0.005)
        e = nonrelativistic_energy(params, 5.0, QuantumNumbers(n_r=1))
        assert math.isfinite(e) and e > 0.0

    def test_radicand_failure(self):
        params = PotentialParams(K=2.0, A=0.0, B=1.0, C=0.0)
        with pytest.raises(DomainError):
            nonrelativistic_energy(params, 1.0, QuantumNumbers(n_r=0))

    def test_nonpositive_mass_rejected(self):
        params = PotentialParams(K=2.0, A=0.0, B=0.0, C=0.0)
        with pytest.raises(DomainError):
            nonrelativistic_energy(params, 0.0, QuantumNumbers(n_r=0))

    def test_negative_k_rejected(self):
        params = PotentialParams(K=-2.0, A=0.0, B=0.0, C=0.0)
        with pytest.raises(DomainError, match="K > 0"):
            nonrelativistic_energy(params, 1.0, QuantumNumbers(n_r=0))
