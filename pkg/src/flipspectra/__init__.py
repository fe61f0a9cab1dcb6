"""Flip graphs of convex polygon triangulations: spectra, censuses, bounds."""

from .triangulations import (
    Triangulation,
    DualTree,
    catalan,
    crosses,
    dual_tree,
    ear_count,
    enumerate_triangulations,
    fan_triangulation,
    flip,
    neighbors,
    polygon_regions,
    triangles_of,
)
from .flipgraph import (
    Graph,
    box_product,
    build_associahedron,
    diagonal_slice,
    from_edges,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    validate_regular,
)
from .spectra import (
    SpectralResult,
    Spectrum,
    box_spectrum_min,
    cycle_spectrum,
    dense_spectrum,
    lambda_2,
    lambda_min,
    quadratic_form_check,
)

__version__ = "0.1.0"
