"""Wigner rotations: the residual spatial rotation ``L(Lp)^-1 L L(p)``.

The rotation is computed literally as a product of three Lorentz matrices and
cross-checked against the closed-form angle for a particle moving along x
seen by an observer moving along z.
"""

from dataclasses import dataclass
import math

import numpy as np

from ._validation import ConsistencyError, DomainError, as_unit_vector
from .lorentz import (
    FourMomentum,
    LorentzMatrix,
    _context_of,
    apply,
    boost_z,
    compose,
    extended_context,
    inverse,
    momentum_along,
    rodrigues,
    standard_boost,
)

__all__ = [
    "Rotation3",
    "WignerAngle",
    "wigner_matrix",
    "wigner_rotation",
    "wigner_angle",
    "wigner_angle_closed_form",
    "wigner_angle_from_matrix",
    "extract_axis_angle",
    "rotation_from_axis_angle",
    "required_dps",
]

# Deviation allowed in the time row/column of the 4x4 Wigner matrix.
BLOCK_TOL = 1e-8
ORTHO_TOL = 1e-8
# sin(angle) below this is treated as the identity branch when cos > 0.
_ZERO_ANGLE = 1e-15
# sin(angle) below this with cos < 0 switches to the symmetric-part axis.
_HALF_TURN = 1e-6


@dataclass(frozen=True, eq=False)
class Rotation3:
    """A proper 3x3 rotation with its axis-angle form.

    ``angle`` lies in [0, pi]; orientation is carried by the sign of ``axis``.
    """

    matrix: np.ndarray
    axis: np.ndarray
    angle: float

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.array(matrix, dtype=float)
        axis, angle = extract_axis_angle(matrix)
        matrix.setflags(write=False)
        axis.setflags(write=False)
        return cls(matrix, axis, angle)

    def signed_angle(self, about=(0.0, 1.0, 0.0)):
        """Angle with the sign of ``axis . about``.

        For rotations about +/- ``about`` this is the usual signed angle.
        """
        proj = float(self.axis @ as_unit_vector(about, "about"))
        return self.angle if proj >= 0 else -self.angle

    def __matmul__(self, other):
        if isinstance(other, Rotation3):
            return Rotation3.from_matrix(self.matrix @ other.matrix)
        return self.matrix @ np.asarray(other, dtype=float)


@dataclass(frozen=True)
class WignerAngle:
    delta: float
    xi: float
    chi: float


def rotation_from_axis_angle(axis, angle):
    return Rotation3.from_matrix(rodrigues(axis, angle))


def extract_axis_angle(r, tol=ORTHO_TOL):
    """Axis and angle of a proper rotation matrix.

    The angle comes from ``atan2(sin, cos)`` with ``cos = (tr R - 1) / 2`` and
    ``sin`` from the antisymmetric part. This agrees with ``arccos`` but keeps
    full relative accuracy for tiny angles, where ``arccos`` of a number
    rounded to 1 returns 0.

    Args:
        r: 3x3 array.
        tol: allowed deviation from orthogonality and unit determinant.

    Returns:
        (axis, angle) with ``axis`` a unit 3-vector and ``angle`` in [0, pi].
        For the identity the axis is +z by convention.

    Raises:
        DomainError: if ``r`` is not a proper orthogonal matrix.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3):
        raise DomainError(f"rotation must be 3x3, got shape {r.shape}")
    if (np.max(np.abs(r.T @ r - np.eye(3))) > tol
            or abs(np.linalg.det(r) - 1.0) > tol):
        raise DomainError("matrix is not a proper rotation")
    vee = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    sin_a = 0.5 * np.linalg.norm(vee)
    cos_a = 0.5 * (np.trace(r) - 1.0)
    angle = math.atan2(sin_a, cos_a)
    if cos_a > 0 and sin_a < _ZERO_ANGLE:
        return np.array([0.0, 0.0, 1.0]), angle
    if cos_a < 0 and sin_a < _HALF_TURN:
        # sym(R) - cos I = (1 - cos) n n^T; take the best-conditioned column.
        sym = 0.5 * (r + r.T) - cos_a * np.eye(3)
        col = sym[:, int(np.argmax(np.diag(sym)))]
        axis = col / np.linalg.norm(col)
        if axis @ vee < 0:
            axis = -axis
        return axis, angle
    return vee / np.linalg.norm(vee), angle


def wigner_matrix(lam, p):
    """The 4x4 product ``L(lam p)^-1 lam L(p)``, in the precision of the inputs."""
    return compose(compose(inverse(standard_boost(apply(lam, p))), lam), standard_boost(p)).matrix


def wigner_rotation(lam, p):
    """Wigner rotation of momentum ``p`` under the transformation ``lam``.

    If ``lam`` carries mpmath entries, ``p`` is lifted into the same context
    with its energy rebuilt on shell, so the whole product runs at extended
    precision.

    Raises:
        ConsistencyError: if the product is not block diagonal, which would
            mean the standard boost does not map rest momentum to ``p``.
    """
    if not isinstance(lam, LorentzMatrix) or not isinstance(p, FourMomentum):
        raise DomainError("wigner_rotation expects a LorentzMatrix and a FourMomentum")
    if lam.is_extended() and not p.is_extended():
        p = p.lift(_context_of(lam.matrix))
    w = wigner_matrix(lam, p)
    time_dev = max(
        float(abs(w[0, 0] - 1)),
        float(np.max(np.abs(w[0, 1:]))),
        float(np.max(np.abs(w[1:, 0]))),
    )
    if time_dev > BLOCK_TOL:
        raise ConsistencyError(
            f"Wigner matrix is not block diagonal (deviation {time_dev:.3e}); "
            "increase the working precision"
        )
    return Rotation3.from_matrix(np.asarray(w[1:, 1:]).astype(float))


def required_dps(*rapidities):
    """Decimal digits needed to run the matrix product to ~1e-15, or None for float64.

    The product cancels terms of size ~exp(2 * sum|rapidity|) down to O(1).
    Float64 is kept while that loses fewer than about three digits.
    """
    total = sum(abs(float(r)) for r in rapidities)
    if total <= 6.0:
        return None
    return 20 + math.ceil(2.0 * total / math.log(10.0))


def wigner_angle(xi, chi):
    """Closed-form Wigner angle (radians) for an x-moving particle and z-moving observer.

    Vectorizes over numpy inputs.
    """
    xi = np.asarray(xi, dtype=float)
    chi = np.asarray(chi, dtype=float)
    out = np.arctan2(np.sinh(xi) * np.sinh(chi), np.cosh(xi) + np.cosh(chi))
    return float(out) if out.ndim == 0 else out


def wigner_angle_closed_form(xi, chi):
    return WignerAngle(wigner_angle(xi, chi), float(xi), float(chi))


def wigner_angle_from_matrix(xi, chi, mass=1.0):
    """Signed y-rotation angle from the explicit matrix product, same geometry.

    Switches to extended precision automatically at large rapidities.
    """
    dps = required_dps(xi, chi)
    if dps is None:
        rot = wigner_rotation(boost_z(chi), momentum_along(xi, mass=mass))
    else:
        ctx = extended_context(dps)
        rot = wigner_rotation(boost_z(ctx.mpf(chi)), momentum_along(ctx.mpf(xi), mass=mass))
    return rot.signed_angle()
