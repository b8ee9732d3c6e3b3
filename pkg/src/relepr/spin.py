"""Spin-1/2 representation of rotations and spin observables.

Basis: ``|up> = (1, 0)``, ``|down> = (0, 1)`` (sigma_z eigenbasis). Observables
are ``n . sigma`` with outcomes +/-1.
"""

from dataclasses import dataclass
import math

import numpy as np

from ._validation import DomainError, as_unit_vector
from .wigner import Rotation3

__all__ = [
    "PAULI",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SpinHalfUnitary",
    "SpinObservable",
    "su2_from_axis_angle",
    "su2_from_rotation",
    "rotation_from_su2",
    "observable",
    "pauli_vector",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])

UNITARY_TOL = 1e-10


def pauli_vector(n):
    """``n . sigma`` for a real 3-vector ``n`` (not normalized)."""
    return np.tensordot(np.asarray(n, dtype=float), PAULI, axes=1)


@dataclass(frozen=True, eq=False)
class SpinHalfUnitary:
    """A 2x2 special unitary matrix acting on one spin."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.shape != (2, 2):
            raise DomainError(f"spin unitary must be 2x2, got shape {mat.shape}")
        if (np.max(np.abs(mat.conj().T @ mat - np.eye(2))) > UNITARY_TOL
                or abs(np.linalg.det(mat) - 1.0) > UNITARY_TOL):
            raise DomainError("matrix is not special unitary")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dagger(self):
        return SpinHalfUnitary(self.matrix.conj().T)

    def __matmul__(self, other):
        if isinstance(other, SpinHalfUnitary):
            return SpinHalfUnitary(self.matrix @ other.matrix)
        return self.matrix @ np.asarray(other)


@dataclass(frozen=True, eq=False)
class SpinObservable:
    direction: np.ndarray
    matrix: np.ndarray


def su2_from_axis_angle(axis, angle):
    """``cos(a/2) I - i sin(a/2) n.sigma``; a turn by 2 pi gives ``-I``."""
    n = as_unit_vector(axis, "axis")
    half = 0.5 * float(angle)
    return SpinHalfUnitary(math.cos(half) * np.eye(2) - 1j * math.sin(half) * pauli_vector(n))


def su2_from_rotation(r):
    """Lift a rotation to SU(2).

    Of the two preimages ``+/-U`` this returns the one reached continuously
    from the identity with angle in [0, pi]. Expectation values never see
    the sign.
    """
    if not isinstance(r, Rotation3):
        r = Rotation3.from_matrix(r)
    return su2_from_axis_angle(r.axis, r.angle)


def rotation_from_su2(u):
    """The SO(3) image ``R_kj = tr(sigma_k U sigma_j U^dagger) / 2`` of a spin unitary."""
    mat = u.matrix if isinstance(u, SpinHalfUnitary) else np.asarray(u, dtype=complex)
    adj = np.einsum("kab,bc,jcd,da->kj", PAULI, mat, PAULI, mat.conj().T)
    return Rotation3.from_matrix(0.5 * adj.real)


def observable(direction):
    """Spin observable ``n . sigma`` along ``direction`` (normalized here).

    Raises:
        DomainError: for a zero or non-finite direction.
    """
    n = as_unit_vector(direction)
    n.setflags(write=False)
    mat = pauli_vector(n)
    mat.setflags(write=False)
    return SpinObservable(n, mat)
