"""Joint spin correlations, CHSH evaluation and compensated measurement axes."""

from dataclasses import dataclass
import math

import numpy as np

from ._validation import as_unit_vector, check_finite
from .lorentz import rodrigues
from .spin import observable
from .state import TwoParticleState

__all__ = [
    "TSIRELSON",
    "ChshSetting",
    "CorrelationReport",
    "STANDARD_SETTING",
    "correlation",
    "joint_probabilities",
    "chsh",
    "compensated_directions",
    "compensated_chsh_setting",
    "sample_outcomes",
]

TSIRELSON = 2.0 * math.sqrt(2.0)
_Y_AXIS = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True, eq=False)
class ChshSetting:
    """Measurement axes: ``q``, ``r`` on particle 1 and ``s``, ``t`` on particle 2."""

    q: np.ndarray
    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        for name in ("q", "r", "s", "t"):
            vec = as_unit_vector(getattr(self, name), name)
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)


@dataclass(frozen=True)
class CorrelationReport:
    e_qs: float
    e_rs: float
    e_rt: float
    e_qt: float
    chsh: float

    @property
    def e_values(self):
        return (self.e_qs, self.e_rs, self.e_rt, self.e_qt)


_R = 1.0 / math.sqrt(2.0)
STANDARD_SETTING = ChshSetting(
    q=(0.0, 0.0, 1.0),
    r=(0.0, 1.0, 0.0),
    s=(0.0, -_R, -_R),
    t=(0.0, -_R, _R),
)


def _amplitudes(state):
    return state.amplitudes if isinstance(state, TwoParticleState) else np.asarray(state, dtype=complex)


def correlation(state, a, b):
    """``<psi| (a.sigma) x (b.sigma) |psi>`` for unit directions ``a`` and ``b``."""
    psi = _amplitudes(state)
    op = np.kron(observable(a).matrix, observable(b).matrix)
    return float(np.real(np.vdot(psi, op @ psi)))


def _projectors(direction):
    obs = observable(direction).matrix
    eye = np.eye(2)
    return 0.5 * (eye + obs), 0.5 * (eye - obs)


def joint_probabilities(state, a, b):
    """Outcome probabilities ordered ``(+,+), (+,-), (-,+), (-,-)``."""
    psi = _amplitudes(state)
    pa, pb = _projectors(a), _projectors(b)
    probs = np.array([
        np.real(np.vdot(psi, np.kron(pa[i], pb[j]) @ psi))
        for i in (0, 1) for j in (0, 1)
    ])
    return probs


def chsh(state, setting=STANDARD_SETTING):
    """CHSH combination ``<QS> + <RS> + <RT> - <QT>``."""
    e_qs = correlation(state, setting.q, setting.s)
    e_rs = correlation(state, setting.r, setting.s)
    e_rt = correlation(state, setting.r, setting.t)
    e_qt = correlation(state, setting.q, setting.t)
    return CorrelationReport(e_qs, e_rs, e_rt, e_qt, e_qs + e_rs + e_rt - e_qt)


def _rotate_y(vec, angle):
    return rodrigues(_Y_AXIS, angle) @ vec


def compensated_directions(n, delta):
    """Rotate ``n`` about y by ``+delta`` for particle 1 and ``-delta`` for particle 2.

    Measuring along these axes undoes the opposite Wigner rotations of the two
    spins, restoring perfect anti-correlation.
    """
    n = as_unit_vector(n, "n")
    delta = check_finite(delta, "delta")
    return _rotate_y(n, delta), _rotate_y(n, -delta)


def compensated_chsh_setting(setting, delta):
    delta = check_finite(delta, "delta")
    return ChshSetting(
        q=_rotate_y(setting.q, delta),
        r=_rotate_y(setting.r, delta),
        s=_rotate_y(setting.s, -delta),
        t=_rotate_y(setting.t, -delta),
    )


def sample_outcomes(state, a, b, shots, rng=None):
    """Simulated measurement counts for ``(+,+), (+,-), (-,+), (-,-)``.

    Only a demonstration aid; every correctness check uses exact expectations.

    Returns:
        (counts, estimated_correlation)
    """
    rng = np.random.default_rng(rng)
    probs = np.clip(joint_probabilities(state, a, b), 0.0, None)
    counts = rng.multinomial(int(shots), probs / probs.sum())
    estimate = float((counts[0] - counts[1] - counts[2] + counts[3]) / max(int(shots), 1))
    return counts, estimate
