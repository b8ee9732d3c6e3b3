"""Exceptions and small input-validation helpers shared across the package."""

import math

import numpy as np


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


class ConsistencyError(RuntimeError):
    """Raised when an internal numerical identity fails to hold."""


def check_positive(value, name="value"):
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return value


def check_finite(value, name="value"):
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def as_unit_vector(direction, name="direction"):
    """Return ``direction`` as a normalized float array of shape (3,).

    Raises:
        DomainError: if the vector has the wrong shape, is not finite, or is
            too short to normalize.
    """
    vec = np.asarray(direction, dtype=float)
    if vec.shape != (3,):
        raise DomainError(f"{name} must have shape (3,), got {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise DomainError(f"{name} must be finite")
    norm = np.linalg.norm(vec)
    if norm < 1e-300:
        raise DomainError(f"{name} must be non-zero")
    return vec / norm
