"""Relativistic EPR spin correlations seen by moving observers.

Lorentz boosts and Wigner rotations, their spin-1/2 lift, the transformed
singlet pair, CHSH values and the compensated measurement axes.
"""

from ._validation import ConsistencyError, DomainError
from .correlation import (
    STANDARD_SETTING,
    TSIRELSON,
    ChshSetting,
    CorrelationReport,
    chsh,
    compensated_chsh_setting,
    compensated_directions,
    correlation,
    joint_probabilities,
    sample_outcomes,
)
from .estimator import EPRCorrelationTransformer, evaluate_point
from .lorentz import (
    FourMomentum,
    LorentzMatrix,
    apply,
    boost_x,
    boost_z,
    compose,
    inverse,
    rest_momentum,
    standard_boost,
)
from .spin import SpinHalfUnitary, SpinObservable, observable, su2_from_axis_angle, su2_from_rotation
from .state import (
    TwoParticleState,
    boost_state,
    entanglement_entropy,
    epr_singlet,
    singlet_fraction,
    transform_general,
)
from .wigner import (
    Rotation3,
    WignerAngle,
    extract_axis_angle,
    wigner_angle,
    wigner_angle_closed_form,
    wigner_rotation,
)

__version__ = "0.1.0"
