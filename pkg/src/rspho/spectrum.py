"""Self-consistent energy solver and the non-relativistic closed form.

The bound-state energy satisfies an implicit relation

    E - M = c * sqrt(s*K/(E+M)) * (2*n_r + 1 + sqrt(1/4 + delta'(E)))

where delta'(E) = s*2*A*(E+M) + lambda(E) and lambda comes from the
angular sector (itself energy dependent).  s is +1 under spin symmetry
and -1 under pseudo-spin; c is the convention coefficient (see
model.Convention).  The relation is solved by scanning for sign changes
on the analytic validity interval and bisecting the selected bracket:
every radicand except the radial one is affine in E, so the interval
endpoints are available in closed form, and bisection is unconditionally
convergent inside a bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular import lambda_from_coupling, lambda_separation
from .errors import ConvergenceError, DomainError, NoRootError
from .model import (BranchSign, Convention, PotentialParams, QuantumNumbers,
                    SolveRequest, validate)
from .radial import radial_ansatz

__all__ = [
    "SolveResult",
    "SolverOptions",
    "energy_residual",
    "solve_energy",
    "nonrelativistic_energy",
]

_EPS = float(np.finfo(float).eps)
_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class SolveResult:
    """A converged bound-state energy with its diagnostics.

    ``bracket`` is the scan interval that contained the root;
    ``root_count_in_scan`` reports how many sign changes the scan saw in
    total, so callers can detect parameter regimes with several candidate
    roots.
    """

    E: float
    lam: float
    delta: float
    big_delta: float
    residual: float
    iterations: int
    bracket: tuple[float, float]
    root_count_in_scan: int


@dataclass(frozen=True)
class SolverOptions:
    """Tunables of the scan-and-bisect root finder.

    ``e_max_offset`` bounds the scan at M + offset; None means the default
    100*sqrt(|K|), generous against the oscillator level spacing.
    ``root_index`` selects among brackets in ascending energy order
    (0 = smallest root, the physical ground choice).
    """

    abs_tol_E: float = 1e-12
    scan_points: int = 512
    e_max_offset: float | None = None
    root_index: int = 0

    def __post_init__(self) -> None:
        if not self.abs_tol_E > 0.0:
            raise ValueError(f"abs_tol_E must be positive (got {self.abs_tol_E})")
        if self.scan_points < 2:
            raise ValueError(f"scan_points must be >= 2 (got {self.scan_points})")
        if self.root_index < 0:
            raise ValueError(f"root_index must be >= 0 (got {self.root_index})")


def energy_residual(E: float, request: SolveRequest) -> float:
    """f(E) = (E - M) - c*sqrt(s*K/(E+M))*(2*n_r + 1 + sqrt(1/4 + delta'(E))).

    Zero exactly at a bound-state energy.  Raises DomainError outside the
    validity region, naming the radicand that failed.
    """
    p = request.params
    M = request.M
    qn = request.qn
    s = request.symmetry.coupling_sign
    if E + M <= 0.0:
        raise DomainError(f"E + M must be positive (got {E + M})")
    lam = lambda_separation(E, M, p, qn.m, qn.n_theta, request.branch,
                            request.symmetry)
    delta_prime = s * 2.0 * p.A * (E + M) + lam
    radicand = 0.25 + delta_prime
    if radicand < 0.0:
        raise DomainError(f"radial radicand negative: 1/4 + delta' = {radicand}")
    stiff = s * p.K / (E + M)
    if stiff <= 0.0:
        raise DomainError(f"s*K/(E+M) = {stiff} must be positive")
    rhs = (request.convention.coefficient * math.sqrt(stiff)
           * (2.0 * qn.n_r + 1.0 + math.sqrt(radicand)))
    return (E - M) - rhs


def _validity_interval(request: SolveRequest, e_max: float) -> tuple[float, float]:
    """Closed-form scan interval from the affine-in-E radicand constraints.

    Constraints: E + M > 0, and the separation-constant radicand
    1/2 - s*2*(E+M)*(B+C) - m^2 >= 0, which is affine in E.  The radial
    radicand is not affine; the scan tolerates it pointwise instead.
    """
    p = request.params
    M = request.M
    m = request.qn.m
    s = request.symmetry.coupling_sign
    lo = -M
    hi = e_max
    slope = -s * 2.0 * (p.B + p.C)
    const = 0.5 - s * 2.0 * M * (p.B + p.C) - m * m
    if slope > 0.0:
        lo = max(lo, -const / slope)
    elif slope < 0.0:
        hi = min(hi, -const / slope)
    elif const < 0.0:
        raise NoRootError(
            f"separation-constant radicand is {const} for every energy; "
            "no bound state exists for these quantum numbers")
    return lo, hi


def solve_energy(request: SolveRequest,
                 options: SolverOptions | None = None) -> SolveResult:
    """Find a bound-state energy by bracketed bisection of the residual.

    Scans ``scan_points`` abscissae over the validity interval, records
    every sign change, then bisects the bracket selected by
    ``options.root_index`` down to ``abs_tol_E`` (plus a relative floor of
    a few ulps, so large energies converge too).
    """
    opts = options if options is not None else SolverOptions()
    violations = validate(request)
    if violations:
        raise DomainError("invalid request: "
                          + "; ".join(v.message for v in violations))
    offset = (opts.e_max_offset if opts.e_max_offset is not None
              else 100.0 * math.sqrt(abs(request.params.K)))
    lo, hi = _validity_interval(request, request.M + offset)
    if not hi > lo:
        raise NoRootError(
            f"empty scan interval: validity bounds give [{lo}, {hi}]")
    margin = 1e-9 * max(1.0, abs(lo), abs(hi))
    grid = np.linspace(lo + margin, hi - margin, opts.scan_points)
    values = np.empty_like(grid)
    for i, e in enumerate(grid):
        try:
            values[i] = energy_residual(float(e), request)
        except DomainError:
            values[i] = math.nan

    brackets: list[tuple[float, float, float]] = []
    for i in range(grid.size - 1):
        fa, fb = values[i], values[i + 1]
        if math.isnan(fa) or math.isnan(fb):
            continue
        if fa == 0.0:
            brackets.append((float(grid[i]), float(grid[i]), 0.0))
        elif fa * fb < 0.0:
            brackets.append((float(grid[i]), float(grid[i + 1]), float(fa)))
    if values[-1] == 0.0:
        brackets.append((float(grid[-1]), float(grid[-1]), 0.0))

    if not brackets:
        raise NoRootError(
            f"no sign change of the energy residual on [{grid[0]}, {grid[-1]}] "
            f"with {opts.scan_points} scan points")
    if opts.root_index >= len(brackets):
        raise NoRootError(
            f"root index {opts.root_index} requested but the scan found only "
            f"{len(brackets)} bracket(s)")

    a, b, fa = brackets[opts.root_index]
    bracket = (a, b)
    iterations = 0
    while (b - a) > opts.abs_tol_E + 4.0 * _EPS * abs(0.5 * (a + b)):
        iterations += 1
        if iterations > _MAX_BISECTIONS:
            raise ConvergenceError(
                f"bisection exceeded {_MAX_BISECTIONS} iterations; "
                f"interval [{a}, {b}]")
        mid = 0.5 * (a + b)
        fm = energy_residual(mid, request)
        if fm == 0.0:
            a = b = mid
            break
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm

    energy = 0.5 * (a + b)
    residual = energy_residual(energy, request)
    lam = lambda_separation(energy, request.M, request.params, request.qn.m,
                            request.qn.n_theta, request.branch,
                            request.symmetry)
    ansatz = radial_ansatz(energy, request.M, request.params.K,
                           request.params.A, lam, request.symmetry,
                           n_r=request.qn.n_r)
    return SolveResult(E=energy, lam=lam, delta=ansatz.delta,
                       big_delta=ansatz.big_delta, residual=residual,
                       iterations=iterations, bracket=bracket,
                       root_count_in_scan=len(brackets))


def nonrelativistic_energy(params: PotentialParams, mu: float,
                           qn: QuantumNumbers,
                           branch: BranchSign = BranchSign.PLUS,
                           convention: Convention = Convention.TABLE_CONSISTENT
                           ) -> float:
    """Explicit oscillator-limit energy for reduced mass mu (no root-finding).

    E_NR = (c/2) * sqrt(2K/mu) * (2*n_r + 1 + sqrt(1/4 + 4*A*mu + lambda_NR))

    with lambda_NR evaluated at the static ring coupling w = 4*mu*(B+C).
    Requires K > 0: the mapping descends from the spin-symmetric regime.
    """
    if mu <= 0.0:
        raise DomainError(f"reduced mass must be positive (got {mu})")
    if params.K <= 0.0:
        raise DomainError(
            f"non-relativistic limit requires K > 0 (got {params.K})")
    w = 4.0 * mu * (params.B + params.C)
    lam_nr = lambda_from_coupling(w, qn.m, qn.n_theta, branch)
    inner = 0.25 + 4.0 * params.A * mu + lam_nr
    if inner < 0.0:
        raise DomainError(f"radial radicand negative: 1/4 + 4*A*mu + lambda = {inner}")
    return (0.5 * convention.coefficient * math.sqrt(2.0 * params.K / mu)
            * (2.0 * qn.n_r + 1.0 + math.sqrt(inner)))
