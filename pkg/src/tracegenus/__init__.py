"""Exact computations around the trisection genus of knot traces."""

from .catalog import instantiate, load_catalog, realized_framings, self_check
from .errors import TranscriptionRequired, ValidationError
from .knots import KnotSpec, parse_knot
from .oracle import GenusResult, boundary_classify, lower_bound, trace_genus, upper_bound
from .params import (
    Page,
    TrisectionType,
    admissible_types,
    euler_char,
    genus_lower_bound_from_heegaard,
    max_boundary_heegaard,
)
from .surfaces import (
    CurveClass,
    CurveSystemH,
    RelTrisDiagramH,
    SurfaceModel,
    dehn_twist,
    diagram_validate,
    pairing,
    slide,
    standardness_check,
)
from .threemanifolds import (
    AbelianGroup,
    LensSpace,
    LinkingMatrix,
    ThreeManifoldClass,
    chain_to_lens,
    classify_M,
    h1_from_linking,
    lens_from_surgery,
    lens_homeo,
    smith_normal_form,
)

__version__ = "0.1.0"
