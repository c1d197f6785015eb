"""Model parameters, the driven dot-cavity Hamiltonian, and its Lindblad generator.

Everything is dimensionless, measured in units of the dot decay rate (kept as
the explicit field ``gamma`` so absolute-rate users can carry their own unit).
In the frame rotating at the drive, the Hamiltonian assembled here is

    H = delta s+s- + delta_a a'a + g (s+ a + s- a') + E (a + a') + U (a^2 + a'^2),

with s+/- the dot raising/lowering operators, a the cavity mode, E the
one-photon drive and U the two-photon (parametric) drive inherited from the
pumped auxiliary mode; both drive amplitudes are taken real, their phases
absorbed into the field quadratures.  Dissipation enters as

    (kappa/2) (2 a rho a' - a'a rho - rho a'a)  +  (gamma/2) (...same with s-...),

i.e. plain photon decay at rate kappa and dot decay at rate gamma.

Superoperators use the column-stacking convention: vec() stacks columns, so
left multiplication is I (x) H and right multiplication is H^T (x) I.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fock_algebra import HilbertSpace, annihilation_op, dagger, qd_lowering_op

__all__ = [
    "ModelParams",
    "PumpParams",
    "bimode_limit",
    "build_hamiltonian",
    "build_liouvillian",
    "effective_gain",
    "jc_limit",
    "trace_vector",
    "unvec",
    "vec",
]


@dataclass(frozen=True)
class ModelParams:
    """Scalar parameters of the driven dot-cavity model, in units of gamma."""

    delta: float = 0.0      # dot-drive detuning
    delta_a: float = 0.0    # cavity-drive detuning
    g: float = 0.0          # dot-cavity coupling
    E: float = 0.0          # one-photon drive amplitude
    U: float = 0.0          # two-photon drive amplitude
    kappa: float = 1.0      # cavity decay rate
    gamma: float = 1.0      # dot decay rate (the unit)

    def __post_init__(self) -> None:
        if self.kappa < 0 or self.gamma < 0:
            raise ValueError("decay rates kappa, gamma must be nonnegative")
        if self.g < 0 or self.E < 0 or self.U < 0:
            raise ValueError("g, E, U must be nonnegative")

    @property
    def delta_prime(self) -> complex:
        """Complex dot detuning delta - i gamma/2 absorbing the dot linewidth."""
        return self.delta - 0.5j * self.gamma

    @property
    def delta_a_prime(self) -> complex:
        """Complex cavity detuning delta_a - i kappa/2 absorbing the cavity linewidth."""
        return self.delta_a - 0.5j * self.kappa


@dataclass(frozen=True)
class PumpParams:
    """Raw pump-side quantities behind the effective two-photon amplitude."""

    F: float        # pump drive on the auxiliary mode
    chi: float      # intermode nonlinear coupling
    delta_b: float  # auxiliary-mode detuning
    kappa_b: float  # auxiliary-mode decay rate

    def __post_init__(self) -> None:
        if self.kappa_b <= 0:
            raise ValueError("kappa_b must be positive")


def effective_gain(pump: PumpParams) -> float:
    """Two-photon amplitude left after adiabatic elimination of the pumped mode.

    U = F chi / sqrt(delta_b^2 + kappa_b^2 / 4); far detuning or heavy damping
    of the auxiliary mode suppresses it monotonically.
    """
    return pump.F * pump.chi / math.sqrt(pump.delta_b**2 + 0.25 * pump.kappa_b**2)


def jc_limit(params: ModelParams) -> ModelParams:
    """Same model with the two-photon drive switched off (U = 0)."""
    return dataclasses.replace(params, U=0.0)


def bimode_limit(params: ModelParams) -> ModelParams:
    """Same model with the dot decoupled (g = 0)."""
    return dataclasses.replace(params, g=0.0)


@lru_cache(maxsize=None)
def _hamiltonian_parts(space: HilbertSpace) -> tuple[np.ndarray, ...]:
    """Parameter-free operator blocks; H is a real linear combination of them."""
    a = annihilation_op(space)
    ad = dagger(a)
    sm = qd_lowering_op(space)
    sp = dagger(sm)
    return (sp @ sm, ad @ a, sp @ a + sm @ ad, a + ad, a @ a + ad @ ad)


def build_hamiltonian(params: ModelParams, space: HilbertSpace) -> np.ndarray:
    """Dense drive-frame Hamiltonian on the composite space (Hermitian)."""
    qd, cav, coupling, drive, squeeze = _hamiltonian_parts(space)
    return (params.delta * qd
            + params.delta_a * cav
            + params.g * coupling
            + params.E * drive
            + params.U * squeeze)


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    return np.asarray(rho).reshape(-1, order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vec`."""
    v = np.asarray(v)
    d = math.isqrt(v.size)
    if d * d != v.size:
        raise ValueError(f"vector of length {v.size} is not a stacked square matrix")
    return v.reshape((d, d), order="F")


def trace_vector(space: HilbertSpace) -> np.ndarray:
    """Row vector t with t @ vec(rho) = Tr(rho)."""
    return vec(np.eye(space.dim, dtype=complex))


def _dissipator(op: np.ndarray) -> np.ndarray:
    """Superoperator for 2 o rho o' - o'o rho - rho o'o (column stacking)."""
    d = op.shape[0]
    eye = np.eye(d, dtype=complex)
    nop = dagger(op) @ op
    return (2.0 * np.kron(op.conj(), op)
            - np.kron(eye, nop)
            - np.kron(nop.T, eye))


def build_liouvillian(params: ModelParams, space: HilbertSpace) -> np.ndarray:
    """Dense generator L with d vec(rho)/dt = L vec(rho).

    L = -i (I (x) H - H^T (x) I) + (kappa/2) D[a] + (gamma/2) D[s-], with D
    the doubled-rate dissipator of :func:`_dissipator`.  Rows sum against the
    trace functional to zero (trace preservation), so vec(I) is always a left
    null vector.
    """
    commutators, loss, decay = _superoperator_parts(space)
    weights = (params.delta, params.delta_a, params.g, params.E, params.U)
    liou = 0.5 * params.kappa * loss + 0.5 * params.gamma * decay
    for w, k in zip(weights, commutators):
        if w != 0.0:
            liou += w * k
    return liou


@lru_cache(maxsize=None)
def _superoperator_parts(
    space: HilbertSpace,
) -> tuple[tuple[np.ndarray, ...], np.ndarray, np.ndarray]:
    """Cached -i[H_k, .] blocks and the two unit-rate dissipators."""
    eye = np.eye(space.dim, dtype=complex)
    commutators = tuple(
        -1j * (np.kron(eye, h) - np.kron(h.T, eye)) for h in _hamiltonian_parts(space)
    )
    return commutators, _dissipator(annihilation_op(space)), _dissipator(qd_lowering_op(space))
