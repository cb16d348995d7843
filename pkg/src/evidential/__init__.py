"""Dempster-Shafer evidential reasoning on finite frames.

Mass functions and their belief, plausibility, commonality and doubt views;
Dempster's orthogonal sum; discounting; and closed forms for discounting
before versus after combination.
"""

from .closed_form import (
    OrderComparison,
    compare_orders,
    discounted_sum_belief_formula,
    discounted_sum_eval,
    discounted_sum_mass,
    discounted_sum_mass_n,
    sum_of_discounted_belief_formula,
    sum_of_discounted_eval,
    sum_of_discounted_mass,
    sum_of_discounted_normalization,
)
from .combine import (
    CombinationResult,
    conflict,
    dempster_n,
    dempster_pair,
    dempster_via_commonality,
)
from .discount import compose_rates, discount_mass, discount_view
from . import errors
from .evidence import (
    DiscountRate,
    EvidentialView,
    Kind,
    MassFunction,
    categorical,
    focal_elements,
    from_view,
    make_mass,
    to_view,
    vacuous,
)
from .frame import Frame, SubsetKey, complement, intersect, make_frame, subset_from_elements
from .oracle import oracle_dempster, oracle_discount, oracle_transform

__version__ = "0.1.0"
