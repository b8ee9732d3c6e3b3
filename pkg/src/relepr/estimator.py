"""scikit-learn transformer mapping rapidity pairs to spin-correlation features.

Each input row is ``(xi, chi)``: the particle rapidity along +/-x and the
observers' rapidity along +z. The transformer is stateless; ``fit`` only
validates the input shape, so it drops into pipelines and grid tools.
"""

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from ._validation import check_positive
from .correlation import STANDARD_SETTING, chsh, compensated_chsh_setting, correlation
from .state import boost_state, epr_singlet, singlet_fraction
from .wigner import wigner_angle, wigner_angle_from_matrix

__all__ = ["FEATURE_NAMES", "evaluate_point", "EPRCorrelationTransformer"]

FEATURE_NAMES = ("delta", "e_zz", "e_yy", "chsh_naive", "chsh_compensated")

_Z = (0.0, 0.0, 1.0)
_Y = (0.0, 1.0, 0.0)


def evaluate_point(xi, chi, mass=1.0, setting=STANDARD_SETTING):
    """Run the whole pipeline at one rapidity pair.

    Returns a dict with the closed-form and matrix-product Wigner angles, the
    observer-frame state and its singlet/triplet projections, the z and y
    correlations, and naive and compensated CHSH values.
    """
    delta = wigner_angle(xi, chi)
    state = boost_state(chi, epr_singlet(xi, mass))
    singlet_amp, triplet_amps = singlet_fraction(state)
    naive = chsh(state, setting)
    compensated = chsh(state, compensated_chsh_setting(setting, delta))
    return {
        "xi": float(xi),
        "chi": float(chi),
        "delta": delta,
        "delta_matrix": wigner_angle_from_matrix(xi, chi, mass),
        "state": state,
        "singlet_amp": singlet_amp,
        "triplet_amps": triplet_amps,
        "e_zz": correlation(state, _Z, _Z),
        "e_yy": correlation(state, _Y, _Y),
        "chsh_naive": naive.chsh,
        "chsh_compensated": compensated.chsh,
    }


def _features(xi, chi, mass, setting):
    row = evaluate_point(xi, chi, mass, setting)
    return [row[name] for name in FEATURE_NAMES]


class EPRCorrelationTransformer(TransformerMixin, BaseEstimator):
    """Compute Wigner angle and spin correlations for rows of ``(xi, chi)``.

    Parameters
    ----------
    mass : float, default=1.0
        Particle mass (c = 1). The spin results do not depend on it; it only
        sets the momentum tags.
    setting : ChshSetting or None
        CHSH measurement axes. ``None`` uses z, y for particle 1 and
        (0, -1, -1)/sqrt2, (0, -1, 1)/sqrt2 for particle 2.
    n_jobs : int or None
        Rows are independent; ``n_jobs`` is passed to joblib. Output order
        always matches input order.
    """

    def __init__(self, mass=1.0, setting=None, n_jobs=None):
        self.mass = mass
        self.setting = setting
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        check_positive(self.mass, "mass")
        X = validate_data(self, X, reset=True, dtype=np.float64)
        if X.shape[1] != 2:
            raise ValueError(f"expected 2 columns (xi, chi), got {X.shape[1]}")
        self.setting_ = STANDARD_SETTING if self.setting is None else self.setting
        return self

    def transform(self, X):
        check_is_fitted(self, "setting_")
        X = validate_data(self, X, reset=False, dtype=np.float64)
        mass = float(self.mass)
        if self.n_jobs in (None, 1):
            rows = [_features(xi, chi, mass, self.setting_) for xi, chi in X]
        else:
            rows = Parallel(n_jobs=self.n_jobs)(
                delayed(_features)(xi, chi, mass, self.setting_) for xi, chi in X
            )
        return np.asarray(rows, dtype=float).reshape(len(X), len(FEATURE_NAMES))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURE_NAMES, dtype=object)

