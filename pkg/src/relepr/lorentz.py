"""Four-momenta and proper orthochronous Lorentz matrices.

Units are c = 1 and the metric signature is (+, -, -, -). Matrices are stored
with the row index as the upper index and the column index as the lower one,
so ``L @ k`` is the contraction ``L^mu_nu k^nu``.

Every constructor accepts either plain floats or ``mpmath`` numbers. Feeding
mpmath numbers produces object arrays carrying that context's precision, which
is how the Wigner-rotation product is evaluated at large rapidities where the
float64 cancellation would leave nothing but rounding noise.
"""

from dataclasses import dataclass
import math

import mpmath
import numpy as np

from ._validation import DomainError, as_unit_vector, check_finite, check_positive

__all__ = [
    "METRIC",
    "DEFAULT_TOL",
    "FourMomentum",
    "LorentzMatrix",
    "rest_momentum",
    "momentum_from_spatial",
    "momentum_along",
    "identity",
    "standard_boost",
    "boost_x",
    "boost_z",
    "boost_along",
    "spatial_rotation",
    "rodrigues",
    "compose",
    "inverse",
    "apply",
    "extended_context",
    "metric_residual",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
DEFAULT_TOL = 1e-10

# Below this |p| / M the (gamma - 1) p p^T / |p|^2 block is replaced by its limit 0.
_REST_THRESHOLD = 1e-12
# Float64 LU determinants of boosts lose their sign beyond this entry size.
_DET_RELIABLE_SCALE = 1e6


def extended_context(dps):
    """Return a fresh mpmath context working at ``dps`` decimal digits.

    A private context (rather than the global ``mpmath.mp``) keeps callers on
    different threads from trampling each other's precision.
    """
    ctx = mpmath.MPContext()
    ctx.dps = int(dps)
    return ctx


def _is_mp(value):
    # Private contexts subclass their own mpf; mpnumeric is the shared base.
    return isinstance(value, mpmath.ctx_mp_python.mpnumeric)


def _context_of(values):
    for value in np.ravel(np.asarray(values, dtype=object)):
        if _is_mp(value):
            return value.context
    return None


def _lib(*values):
    """Pick the elementary-function namespace matching the inputs."""
    for value in values:
        ctx = _context_of(value)
        if ctx is not None:
            return ctx
    return math


def _as_array(values):
    arr = np.asarray(values)
    if arr.dtype == object:
        if _context_of(arr) is None:
            arr = arr.astype(float)
    else:
        arr = arr.astype(float)
    if arr.dtype == float and not np.all(np.isfinite(arr)):
        raise DomainError("entries must be finite")
    arr.setflags(write=False)
    return arr


def _to_float(arr):
    return np.array(np.asarray(arr).astype(float), dtype=float)


def _scale(arr):
    return max(1.0, float(np.max(np.abs(arr))))


@dataclass(frozen=True, eq=False)
class FourMomentum:
    """A timelike, future-pointing four-momentum on the mass shell.

    The mass-shell test is relative to the energy squared, because at large
    rapidity the rounding in ``E**2 - |p|**2`` grows like ``E**2``.
    """

    components: np.ndarray
    mass: float = 1.0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        comps = _as_array(self.components)
        if comps.shape != (4,):
            raise DomainError(f"four-momentum needs 4 components, got shape {comps.shape}")
        if not _is_mp(self.mass):
            object.__setattr__(self, "mass", check_positive(self.mass, "mass"))
        elif self.mass <= 0:
            raise DomainError("mass must be positive")
        object.__setattr__(self, "components", comps)
        energy = comps[0]
        if energy <= 0:
            raise DomainError(f"energy must be positive, got {float(energy)!r}")
        residual = float(abs(energy**2 - comps[1:] @ comps[1:] - self.mass**2))
        if residual > self.tol * max(float(self.mass) ** 2, float(energy) ** 2):
            raise DomainError(
                f"momentum is off the mass shell for M={float(self.mass)} "
                f"(residual {residual:.3e})"
            )

    @property
    def energy(self):
        return self.components[0]

    @property
    def spatial(self):
        return self.components[1:]

    @property
    def gamma(self):
        return self.components[0] / self.mass

    def invariant_mass_squared(self):
        comps = self.components
        return comps[0] ** 2 - comps[1:] @ comps[1:]

    def is_extended(self):
        return self.components.dtype == object

    def to_float(self):
        if not self.is_extended():
            return self
        return FourMomentum(_to_float(self.components), float(self.mass), self.tol)

    def lift(self, ctx):
        """Re-express this momentum in ``ctx``, recomputing the energy on shell.

        The spatial part converts exactly; only the energy is rebuilt, so the
        lifted momentum sits on the mass shell to the context's precision.
        """
        spatial = [ctx.mpf(c if _is_mp(c) else float(c)) for c in self.spatial]
        mass = ctx.mpf(self.mass if _is_mp(self.mass) else float(self.mass))
        return momentum_from_spatial(spatial, mass, tol=self.tol)

    def __repr__(self):
        comps = ", ".join(f"{float(c):.12g}" for c in self.components)
        return f"FourMomentum(({comps}), mass={float(self.mass):.12g})"


@dataclass(frozen=True, eq=False)
class LorentzMatrix:
    """A real 4x4 proper orthochronous Lorentz transformation.

    Validation scales the tolerance with the largest entry: ``M^T eta M`` sums
    products of entries, so its rounding error grows with their square.
    """

    matrix: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        mat = _as_array(self.matrix)
        if mat.shape != (4, 4):
            raise DomainError(f"Lorentz matrix must be 4x4, got shape {mat.shape}")
        object.__setattr__(self, "matrix", mat)
        scale = _scale(mat)
        residual = metric_residual(mat)
        if residual > self.tol * scale**2:
            raise DomainError(f"matrix does not preserve the metric (residual {residual:.3e})")
        if float(mat[0, 0]) < 1.0 - self.tol * scale:
            raise DomainError("matrix is not orthochronous")
        ctx = _context_of(mat)
        if ctx is not None:
            det = ctx.det(ctx.matrix(mat.tolist()))
        elif scale <= _DET_RELIABLE_SCALE:
            det = np.linalg.det(mat)
        else:
            det = 1.0
        if det <= 0:
            raise DomainError("matrix is not proper (det <= 0)")

    def __matmul__(self, other):
        if isinstance(other, LorentzMatrix):
            return compose(self, other)
        if isinstance(other, FourMomentum):
            return apply(self, other)
        return NotImplemented

    def is_extended(self):
        return self.matrix.dtype == object

    def to_float(self):
        return self if not self.is_extended() else LorentzMatrix(_to_float(self.matrix), self.tol)

    def __repr__(self):
        return f"LorentzMatrix(\n{np.array2string(_to_float(self.matrix), precision=6)})"


def metric_residual(matrix):
    """Largest entry of ``M^T eta M - eta`` as a float."""
    mat = np.asarray(matrix)
    return float(np.max(np.abs(mat.T @ METRIC @ mat - METRIC)))


def rest_momentum(mass=1.0):
    """Four-momentum ``(M, 0, 0, 0)`` of a particle at rest."""
    if _is_mp(mass):
        zero = mass.context.mpf(0)
        return FourMomentum(np.array([mass, zero, zero, zero], dtype=object), mass)
    mass = check_positive(mass, "mass")
    return FourMomentum(np.array([mass, 0.0, 0.0, 0.0]), mass)


def momentum_from_spatial(spatial, mass=1.0, tol=DEFAULT_TOL):
    """On-shell four-momentum with the given spatial part."""
    lib = _lib(spatial, mass)
    spatial = list(spatial)
    if len(spatial) != 3:
        raise DomainError("spatial momentum must have 3 components")
    energy = lib.sqrt(sum(c * c for c in spatial) + mass * mass)
    dtype = object if lib is not math else float
    return FourMomentum(np.array([energy, *spatial], dtype=dtype), mass, tol)


def momentum_along(rapidity, direction=(1.0, 0.0, 0.0), mass=1.0):
    """Momentum ``M (cosh r, sinh r n)`` for rapidity ``r`` along unit ``n``."""
    lib = _lib(rapidity)
    if lib is math:
        rapidity = check_finite(rapidity, "rapidity")
        mass = check_positive(mass, "mass")
    else:
        mass = lib.mpf(mass)
    n = as_unit_vector(direction)
    sh = lib.sinh(rapidity)
    spatial = [mass * sh * c for c in n]
    dtype = object if lib is not math else float
    return FourMomentum(np.array([mass * lib.cosh(rapidity), *spatial], dtype=dtype), mass)


def identity():
    return LorentzMatrix(np.eye(4))


def standard_boost(p):
    """The pure boost ``L(p)`` carrying ``rest_momentum(p.mass)`` to ``p``.

    Raises:
        DomainError: if ``p`` is not a valid on-shell momentum.
    """
    if not isinstance(p, FourMomentum):
        raise DomainError("standard_boost expects a FourMomentum")
    comps, mass = p.components, p.mass
    gamma = comps[0] / mass
    v = comps[1:]
    n2 = v @ v
    extended = p.is_extended()
    out = np.empty((4, 4), dtype=object if extended else float)
    out[0, 0] = gamma
    out[0, 1:] = v / mass
    out[1:, 0] = v / mass
    if n2 < (_REST_THRESHOLD * mass) ** 2:
        out[1:, 1:] = _eye3(_context_of(v))
    else:
        out[1:, 1:] = _eye3(_context_of(v)) + (gamma - 1) * np.outer(v, v) / n2
    return LorentzMatrix(out)


def _eye3(ctx=None):
    if ctx is None:
        return np.eye(3)
    eye = np.empty((3, 3), dtype=object)
    for i in range(3):
        for j in range(3):
            eye[i, j] = ctx.mpf(1 if i == j else 0)
    return eye


def boost_along(rapidity, direction):
    """Active boost of rapidity ``rapidity`` along the unit vector ``direction``.

    It maps the rest momentum to ``M (cosh r, sinh r n)``.
    """
    lib = _lib(rapidity)
    if lib is math:
        rapidity = check_finite(rapidity, "rapidity")
    n = as_unit_vector(direction)
    ch, sh = lib.cosh(rapidity), lib.sinh(rapidity)
    out = np.empty((4, 4), dtype=object if lib is not math else float)
    out[0, 0] = ch
    out[0, 1:] = [sh * c for c in n]
    out[1:, 0] = [sh * c for c in n]
    out[1:, 1:] = _eye3(None if lib is math else lib) + (ch - 1) * np.outer(n, n)
    return LorentzMatrix(out)


def boost_x(xi):
    """Boost of rapidity ``xi`` along +x: the standard boost of ``(cosh xi, sinh xi, 0, 0)``."""
    return boost_along(xi, (1.0, 0.0, 0.0))


def boost_z(chi):
    """Transformation to an observer moving along +z with rapidity ``chi``.

    The observer sees everything recede along -z, hence the ``-sinh`` entries.
    """
    return boost_along(-chi, (0.0, 0.0, 1.0))


def rodrigues(axis, angle):
    """3x3 rotation by ``angle`` (right-handed) about the unit vector ``axis``."""
    n = as_unit_vector(axis, "axis")
    k = np.array([[0.0, -n[2], n[1]],
                  [n[2], 0.0, -n[0]],
                  [-n[1], n[0], 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def spatial_rotation(axis, angle):
    """Pure spatial rotation embedded as a Lorentz matrix."""
    out = np.eye(4)
    out[1:, 1:] = rodrigues(axis, check_finite(angle, "angle"))
    return LorentzMatrix(out)


def compose(a, b):
    """Matrix product ``a @ b`` (apply ``b`` first)."""
    return LorentzMatrix(a.matrix @ b.matrix, a.tol)


def inverse(a):
    """Inverse via metric conjugation, ``eta a^T eta``; exact up to rounding of signs."""
    return LorentzMatrix(METRIC @ a.matrix.T @ METRIC, a.tol)


def apply(a, p):
    """Transform momentum ``p`` by ``a``."""
    return FourMomentum(a.matrix @ p.components, p.mass, p.tol)
