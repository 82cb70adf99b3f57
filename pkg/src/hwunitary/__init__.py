"""Exact unitarity tests for highest weight modules of SO(2,n), E6(-14) and E7(-25)."""

from .classify import (
    InfCharReport,
    Status,
    UnitarityVerdict,
    classify_inf_char,
    classify_lambda,
    inf_char_report,
)
from .closed_form import NotCoveredError, closed_form_conjugates_so
from .dirac import DiracOutcome, DiracStatus, basic_dirac, dirac_scalar_form
from .root_system import (
    E6,
    E7,
    Family,
    Kind,
    RootSystemSpec,
    build,
    inner,
    is_g_dominant,
    is_k_dominant,
    is_k_dominant_regular,
    is_k_integral,
    make_weight,
)
from .theta import ThetaType, discrete_point_bridge, minimal_type, pi_types
from .weyl import (
    NotGDominantError,
    OrbitEnumeration,
    k_dominant_conjugates,
    k_dominant_representative,
    reflect,
)

__all__ = [
    "E6",
    "E7",
    "DiracOutcome",
    "DiracStatus",
    "Family",
    "InfCharReport",
    "Kind",
    "NotCoveredError",
    "NotGDominantError",
    "OrbitEnumeration",
    "RootSystemSpec",
    "Status",
    "ThetaType",
    "UnitarityVerdict",
    "basic_dirac",
    "build",
    "classify_inf_char",
    "classify_lambda",
    "closed_form_conjugates_so",
    "dirac_scalar_form",
    "discrete_point_bridge",
    "inf_char_report",
    "inner",
    "is_g_dominant",
    "is_k_dominant",
    "is_k_dominant_regular",
    "is_k_integral",
    "k_dominant_conjugates",
    "k_dominant_representative",
    "make_weight",
    "minimal_type",
    "pi_types",
    "reflect",
]
