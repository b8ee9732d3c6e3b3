"""Independent reference computations used by several test modules."""

import math

import numpy as np


def sl2c_rotation(lam_rapidity_axis, p):
    """Spin rotation from 2x2 SL(2,C) products; independent of the 4x4 route.

    ``lam_rapidity_axis`` is ``(r, n)`` for an active boost of rapidity ``r``
    along ``n``. For Hermitian boosts ``A(p) = sqrt(p.sigma / M)`` and
    ``A(p) = (P + I) / sqrt(tr P + 2)`` for ``P = p.sigma / M`` with det 1.
    """
    pauli = np.array([[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])

    def herm_boost(comps, mass):
        big_p = (comps[0] * np.eye(2) + np.tensordot(comps[1:], pauli, axes=1)) / mass
        return (big_p + np.eye(2)) / math.sqrt(np.trace(big_p).real + 2.0)

    r, n = lam_rapidity_axis
    n = np.asarray(n, float) / np.linalg.norm(n)
    a_lam = math.cosh(r / 2) * np.eye(2) + math.sinh(r / 2) * np.tensordot(n, pauli, axes=1)
    comps = np.asarray(p.components, float)
    lam4 = np.eye(4)
    lam4[0, 0] = math.cosh(r)
    lam4[0, 1:] = lam4[1:, 0] = math.sinh(r) * n
    lam4[1:, 1:] += (math.cosh(r) - 1) * np.outer(n, n)
    lp = lam4 @ comps
    mass = float(p.mass)
    return np.linalg.inv(herm_boost(lp, mass)) @ a_lam @ herm_boost(comps, mass)
