"""Trisections of triangulated 4-manifolds and the Davis manifold."""
from .algebra import (
    H1,
    GroupPresentation,
    betti2_from_duality,
    homology_h1,
    pi1_presentation,
)
from .bounds import (
    BoundReport,
    InconsistentInvariants,
    InvariantSet,
    cover_bounds,
    einstein_bound,
    genus_bounds,
    hyperbolic_bounds,
    lower_bounds,
    stable_records,
    upper_bound_sigma,
)
from .colouring import (
    Colouring,
    find_colouring,
    move_2_4,
    pair_doubles,
    run_pipeline,
    verify_colouring,
)
from .coxeter import H4_DIAGRAM, CosetTable, CoxeterPresentation, coset_enumerate
from .davis import build_120cell, davis_colouring, davis_construction, davis_identify
from .io import read_colouring, read_triangulation, write_colouring, write_triangulation
from .snf import SmithForm, smith_form, sparse_smith_form
from .standard import boundary_5simplex, double_pentachoron
from .triangulation import (
    Triangulation,
    TriangulationError,
    dual_graph,
    f_vector,
    face_classes,
    orientability,
    validate,
)
from .trisection import central_surface, spine_graph, trisection_report

__version__ = "0.1.0"
