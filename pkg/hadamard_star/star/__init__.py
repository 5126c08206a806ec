from .configuration import (
    Classification,
    Flat,
    HSCWitness,
    StarConfig,
    Verdict,
    build_star_config,
    classify,
    generally_linear,
    hsc_witness,
    reciprocal_matrix,
    whsc_from_data,
)
from .power import (
    PointSet,
    hsc_power_pipeline,
    line_avoids_delta,
    line_power_condition,
    line_power_determinants,
    line_power_form,
    squarefree_power,
)

__all__ = [
    "configuration",
    "power",
    "Classification",
    "Flat",
    "HSCWitness",
    "PointSet",
    "StarConfig",
    "Verdict",
    "build_star_config",
    "classify",
    "generally_linear",
    "hsc_power_pipeline",
    "hsc_witness",
    "line_avoids_delta",
    "line_power_condition",
    "line_power_determinants",
    "line_power_form",
    "squarefree_power",
    "reciprocal_matrix",
    "whsc_from_data",
]
