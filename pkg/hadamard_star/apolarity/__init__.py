from .forms import HomogeneousForm, diff_apply, monomials
from .perp import (
    PerpComponent,
    catalecticant,
    catalecticant_rank,
    perp_component,
    vanishing_component,
)
from .waring import is_apolar_points, power_matrix, waring_coefficients, waring_reconstruct

__all__ = [
    "forms",
    "perp",
    "waring",
    "HomogeneousForm",
    "PerpComponent",
    "catalecticant",
    "catalecticant_rank",
    "diff_apply",
    "is_apolar_points",
    "monomials",
    "perp_component",
    "power_matrix",
    "vanishing_component",
    "waring_coefficients",
    "waring_reconstruct",
]
