"""Spectral thermodynamics: partition function and its analytic moments.

The partition sum runs over the non-relativistic ladder at fixed azimuthal
number m (no degeneracy weighting).  All derived quantities come from
term-wise moment sums of the same truncated series, never from numeric
differentiation (that is kept as a test oracle only):

    U = <E>,   C = k_B beta^2 (<E^2> - <E>^2),
    F = -N ln(Z)/beta,   S = N k_B (ln Z + beta U).

Energies are shifted by the ground level before exponentiation so large
beta cannot underflow the sums; the shift cancels identically in U, S, C
and is restored in F and Z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import count as _count

from .errors import ConvergenceError, DomainError
from .model import BranchSign, Convention, PotentialParams, QuantumNumbers
from .spectrum import nonrelativistic_energy

__all__ = [
    "ThermoPoint",
    "partition_function",
    "thermo_point",
    "nonrelativistic_levels",
]

_MAX_LEVELS = 10**6
_DEFAULT_TAIL_TOL = 1e-14


@dataclass(frozen=True)
class ThermoPoint:
    """Thermodynamic state at one temperature (k_B folded into beta)."""

    T: float
    beta: float
    Z: float
    F: float
    U: float
    S: float
    C: float
    levels_used: int


def _moments(levels, beta: float, rel_tail_tol: float,
             max_levels: int = _MAX_LEVELS):
    """Shifted Boltzmann moment sums over an ascending level sequence.

    Returns (E0, s0, s1, s2, used) with s_k = sum (E - E0)^k exp(-beta (E - E0)),
    truncated once a term drops below rel_tail_tol times the running s0.
    Raises ConvergenceError if max_levels levels never satisfy the tail test.
    """
    e0 = None
    prev = None
    s0 = s1 = s2 = 0.0
    used = 0
    for energy in levels:
        energy = float(energy)
        if prev is not None and energy <= prev:
            raise DomainError(
                f"levels must be strictly ascending (got {energy} after {prev})")
        prev = energy
        if e0 is None:
            e0 = energy
        x = energy - e0
        t = math.exp(-beta * x)
        s0 += t
        s1 += x * t
        s2 += x * x * t
        used += 1
        if t < rel_tail_tol * s0:
            break
        if used >= max_levels:
            raise ConvergenceError(
                f"partition sum failed the tail test after {max_levels} levels; "
                "the spectrum is growing too slowly for these inputs")
    if e0 is None:
        raise DomainError("level sequence is empty")
    return e0, s0, s1, s2, used


def partition_function(levels, beta: float,
                       rel_tail_tol: float = _DEFAULT_TAIL_TOL
                       ) -> tuple[float, int]:
    """Truncated Boltzmann sum Z = sum exp(-beta*E_n) and the level count used.

    ``levels`` may be any iterable of strictly ascending energies,
    including an unbounded generator such as nonrelativistic_levels.
    """
    if not beta > 0.0:
        raise DomainError(f"beta must be positive (got {beta})")
    e0, s0, _, _, used = _moments(levels, beta, rel_tail_tol)
    return math.exp(-beta * e0) * s0, used


def thermo_point(levels, T: float, N: int = 1, k_B: float = 1.0,
                 rel_tail_tol: float = _DEFAULT_TAIL_TOL) -> ThermoPoint:
    """All thermodynamic functions at temperature T from one truncated sum."""
    if not T > 0.0:
        raise DomainError(f"T must be positive (got {T})")
    if not k_B > 0.0:
        raise DomainError(f"k_B must be positive (got {k_B})")
    if N < 1:
        raise DomainError(f"N must be >= 1 (got {N})")
    beta = 1.0 / (k_B * T)
    e0, s0, s1, s2, used = _moments(levels, beta, rel_tail_tol)
    mean_shift = s1 / s0
    u = e0 + mean_shift
    c = k_B * beta**2 * (s2 / s0 - mean_shift**2)
    log_z = -beta * e0 + math.log(s0)
    f = -N * log_z / beta
    s = N * k_B * (math.log(s0) + beta * mean_shift)
    return ThermoPoint(T=T, beta=beta, Z=math.exp(log_z), F=f, U=u, S=s,
                       C=max(c, 0.0), levels_used=used)


def nonrelativistic_levels(params: PotentialParams, mu: float, m: int = 0,
                           branch: BranchSign = BranchSign.PLUS,
                           convention: Convention = Convention.TABLE_CONSISTENT):
    """Unbounded generator of the oscillator-limit ladder at fixed m.

    Yields E_NR(n) for n = 0, 1, 2, ... with n_theta locked to n, the same
    pairing used by the reference energy tables.
    """
    for n in _count():
        yield nonrelativistic_energy(params, mu, QuantumNumbers(n_r=n, m=m),
                                     branch, convention)
