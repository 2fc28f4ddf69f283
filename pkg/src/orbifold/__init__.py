"""Symmetry and curvature toolkit.

Parses and classifies orbifold signatures, enumerates the 17 plane
symmetry types (and spherical/hyperbolic families) by exact cost
arithmetic, replicates drawings under any of the 17 groups, verifies the
angle-defect formula on polyhedral meshes, projects sphere cuts to the
plane, measures and tiles the hyperbolic plane, and manipulates knot
diagrams given by signed crossing codes.
"""

from .notation import (
    MirrorBoundary,
    OrbifoldSignature,
    SignatureError,
    canonicalize,
    parse,
    signature,
    to_string,
)
from .euler import (
    ConwayName,
    GeometryClass,
    WeightedMapCensus,
    classify,
    cone_cost,
    conway_name,
    corner_cost,
    cost,
    enumerate_by_chi,
    enumerate_euclidean,
    enumerate_spherical,
    euler_characteristic,
    group_order,
    is_bad,
    square_billiard_census,
    weighted_euler,
)
from .isometry import (
    EUCLIDEAN_SIGNATURES,
    Isometry2,
    Viewport,
    WallpaperGroup,
    group_for,
    orbit_isometries,
    replicate,
)
from .polyhedron import (
    BUILTIN_NAMES,
    DefectReport,
    MeshError,
    PolyhedralSurface,
    angle_defect,
    builtin,
    dual_map,
    dump_off,
    euler_number,
    gauss_image_area,
    load_off,
    surface_from_convex_hull,
    torus_grid,
    total_defect,
)
from .projection import (
    INFINITY,
    PlaneCut,
    PlanePoint,
    PointAtInfinity,
    ProjectedCircle,
    ProjectedLine,
    SpherePoint,
    cut_points,
    image_of_cut,
    project,
    project_tangent,
    spherical_triangle_area,
    unproject,
)
from .hyperbolic import (
    DiskArc,
    DiskPoint,
    DiskTriangle,
    Diameter,
    Semicircle,
    UhpPoint,
    VerticalLine,
    disjoint_parallels,
    disk_distance,
    disk_geodesic_through,
    disk_line_to_uhp,
    disk_to_uhp,
    distance,
    geodesic_through,
    intersection,
    line_contains,
    reflect,
    render_tiling_svg,
    triangle_angles,
    triangle_side_lengths,
    triangle_tiling,
    uhp_line_to_disk,
    uhp_to_disk,
)
from .knots import (
    CatalogEntry,
    FaceColoring,
    GaussCode,
    KnotDiagram,
    KnotError,
    all_diagrams,
    alternating_diagrams,
    catalog,
    checkerboard,
    descending_diagram,
    faces,
    mirror,
    parse_code,
    parse_diagram,
    planar_signing,
    relabel,
    reverse,
    tricolor_count,
    tricolor_count_bruteforce,
    validate,
)

__version__ = "0.1.0"
