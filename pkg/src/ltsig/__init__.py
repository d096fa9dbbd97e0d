"""Certified Levine-Tristram signatures of knots and of knotted tori."""
from .exact import RotationNumber
from .seifert import (
    alexander_polynomial,
    branched_cover_h1_order,
    connected_sum,
    from_matrix,
    mirror,
    torus_knot,
)
from .signature import averaged_sigma, profile, signature_at
from .torus import (
    CassonInput,
    TwistSpinInput,
    circle_bundle_sigma,
    echeverria_example,
    equivariant_casson,
    fo_conjecture_rhs,
    product_sigma,
    twist_spin_sigma,
)

__version__ = "0.1.0"
