"""Momentum-tagged two-particle spin states and their Lorentz transformation.

Spin amplitudes are ordered ``|uu>, |ud>, |du>, |dd>`` with the first slot
belonging to the particle tagged ``momentum_plus`` (the +x mover for the pair
built by :func:`epr_singlet`). Momenta are sharp classical labels.
"""

from dataclasses import dataclass
import math

import numpy as np

from ._validation import DomainError, check_finite, check_positive
from .lorentz import (
    FourMomentum,
    LorentzMatrix,
    _context_of,
    apply,
    boost_z,
    extended_context,
    momentum_along,
)
from .spin import su2_from_rotation
from .wigner import required_dps, wigner_rotation

__all__ = [
    "TwoParticleState",
    "SINGLET",
    "TRIPLET_BASIS",
    "epr_singlet",
    "boost_state",
    "transform_general",
    "singlet_fraction",
    "reduced_density_matrix",
    "entanglement_entropy",
    "fidelity",
]

NORM_TOL = 1e-10

_S = 1.0 / math.sqrt(2.0)
SINGLET = np.array([0.0, _S, -_S, 0.0], dtype=complex)
# (|uu> + |dd>)/sqrt2, (|uu> - |dd>)/sqrt2, (|ud> + |du>)/sqrt2
TRIPLET_BASIS = np.array([
    [_S, 0.0, 0.0, _S],
    [_S, 0.0, 0.0, -_S],
    [0.0, _S, _S, 0.0],
], dtype=complex)


@dataclass(frozen=True, eq=False)
class TwoParticleState:
    amplitudes: np.ndarray
    momentum_plus: FourMomentum
    momentum_minus: FourMomentum

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (4,):
            raise DomainError(f"two-spin state needs 4 amplitudes, got shape {amps.shape}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise DomainError(f"state is not normalized (norm {norm!r})")
        if abs(float(self.momentum_plus.mass) - float(self.momentum_minus.mass)) > 1e-12 * float(self.momentum_plus.mass):
            raise DomainError("both particles must share one mass")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def mass(self):
        return float(self.momentum_plus.mass)

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))


def epr_singlet(xi, mass=1.0):
    """Spin singlet with the pair receding along +/-x at rapidity ``xi``.

    Raises:
        DomainError: for non-positive mass.
    """
    xi = check_finite(xi, "xi")
    mass = check_positive(mass, "mass")
    return TwoParticleState(
        SINGLET.copy(),
        momentum_along(xi, (1.0, 0.0, 0.0), mass),
        momentum_along(-xi, (1.0, 0.0, 0.0), mass),
    )


def _rapidity(p):
    return math.asinh(float(np.linalg.norm(p.spatial.astype(float))) / float(p.mass))


def transform_general(lam, s):
    """The state as seen after the Lorentz transformation ``lam``.

    Each spin is rotated by the SU(2) lift of its own Wigner rotation and the
    momentum tags are carried along. An ``lam`` built from mpmath numbers runs
    the Wigner products at that precision; the result is always float.
    """
    if not isinstance(lam, LorentzMatrix):
        raise DomainError("transform_general expects a LorentzMatrix")
    u_plus = su2_from_rotation(wigner_rotation(lam, s.momentum_plus)).matrix
    u_minus = su2_from_rotation(wigner_rotation(lam, s.momentum_minus)).matrix
    amps = np.kron(u_plus, u_minus) @ s.amplitudes
    amps = amps / np.linalg.norm(amps)
    if lam.is_extended():
        ctx = _context_of(lam.matrix)
        p_plus = apply(lam, s.momentum_plus.lift(ctx)).to_float()
        p_minus = apply(lam, s.momentum_minus.lift(ctx)).to_float()
    else:
        p_plus = apply(lam, s.momentum_plus)
        p_minus = apply(lam, s.momentum_minus)
    return TwoParticleState(amps, p_plus, p_minus)


def boost_state(chi, s):
    """The state seen by observers moving along +z with rapidity ``chi``.

    Uses float64 while the Wigner products stay accurate and an mpmath
    context beyond that, so very large rapidities still resolve.
    """
    chi = check_finite(chi, "chi")
    xi = max(_rapidity(s.momentum_plus), _rapidity(s.momentum_minus))
    dps = required_dps(xi, chi)
    if dps is None:
        return transform_general(boost_z(chi), s)
    ctx = extended_context(dps)
    return transform_general(boost_z(ctx.mpf(chi)), s)


def singlet_fraction(s):
    """Projections onto the singlet and the three triplet vectors.

    Returns:
        (singlet_amp, triplet_amps) where the triplet amplitudes follow
        :data:`TRIPLET_BASIS`: aligned-sum, aligned-difference, anti-aligned-sum.
    """
    amps = s.amplitudes
    return complex(SINGLET.conj() @ amps), TRIPLET_BASIS.conj() @ amps


def reduced_density_matrix(s, keep=0):
    psi = s.amplitudes.reshape(2, 2)
    if keep == 0:
        return psi @ psi.conj().T
    if keep == 1:
        return psi.T @ psi.conj()
    raise DomainError("keep must be 0 or 1")


def entanglement_entropy(s, base=2.0):
    """Von Neumann entropy of one spin's reduced state (bits by default)."""
    evals = np.linalg.eigvalsh(reduced_density_matrix(s))
    evals = evals[evals > 1e-300]
    return float(-np.sum(evals * np.log(evals)) / math.log(base))


def fidelity(a, b):
    """``|<a|b>|``, insensitive to global phase. Accepts states or amplitude arrays."""
    va = a.amplitudes if isinstance(a, TwoParticleState) else np.asarray(a, dtype=complex)
    vb = b.amplitudes if isinstance(b, TwoParticleState) else np.asarray(b, dtype=complex)
    return float(abs(np.vdot(va, vb)))
