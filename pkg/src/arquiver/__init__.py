"""String calculus and component classification over normal-form quivers."""

from .classify import (
    ComponentId,
    band_family,
    census,
    central_band,
    classify,
    classify_band,
    edge,
    enumerate_bands,
    fragment,
    special_component_maps,
)
from .complexes import (
    BandComplexDescriptor,
    StringComplex,
    band_ar_triangle,
    build_string_complex,
    iso_normalize,
    shift,
    verify_d_squared,
)
from .direct import crosscheck, omega_plus_direct
from .quiver import (
    Parameters,
    Quiver,
    apply_labels,
    build_normal_form,
    normalize_parameters,
    quiver_from_spec,
    validate_gentle,
)
from .strings import (
    HomotopyString,
    Letter,
    Theta,
    canonical_band,
    compose,
    concat,
    enumerate_strings,
    is_band,
    parse,
    rotations,
    theta,
)
from .triangles import (
    ARTriangle,
    ar_triangle_ending,
    ar_triangle_starting,
    diagonal,
    m_doubleprime,
    m_prime,
    omega_minus,
    omega_minus_upper,
    omega_plus,
    omega_plus_lower,
    tau,
    tau_inverse,
)
from .walks import (
    BaseType,
    WalkKind,
    is_central,
    left_admissible_reduction,
    reduce_once,
    reduce_to_base,
    right_admissible_reduction,
    walk,
    walk_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
