"""Geometric crystals on Schubert-cell coordinate tori and their tropicalizations.

Exact arithmetic throughout: chart formulas evaluate over positive rationals
and over max-plus integers from one code path, and every identity is checked
against an independent oracle (matrix models, signed recursions, signature
rules, explicit max-plus maps).
"""

from .cartan import (
    CartanMatrix,
    RootVector,
    alpha_superscripts,
    beta_sequence,
    is_reduced,
    rank2_class,
    reflect,
    simple_root,
)
from .errors import GeomCrystalError
from .geometric import (
    GeometricPoint,
    TorusElement,
    alpha_eval,
    concat,
    e_act,
    e_act_recursive,
    e_string,
    gamma,
    phi,
    product_split,
    symmetric_chart,
    symmetric_chart_values,
    uw_chart_coords,
    x_act_raw,
)
from .kashiwara import (
    BtildeElement,
    TensorCrystalElement,
    btilde_e,
    e_kashiwara,
    e_pow,
    epsilon,
    ud_bridge,
    varphi,
    weight,
)
from .braid import (
    BraidMoveSpec,
    apply_move,
    available_moves,
    braid_a2,
    braid_b2,
    braid_g2,
    connect_words,
    tropical_braid,
)
from .semifield import RAT, TROP, TropArray, TropInt, semiring_named, ud_matches
from .sln import (
    ExactMatrix,
    chi,
    gen_alpha_vee,
    gen_sbar,
    gen_x,
    gen_y,
    pi_minus,
    point_to_matrix,
    uw_to_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
