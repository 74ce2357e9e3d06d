"""Exact-arithmetic toolkit for toric contact manifolds of Reeb type.

A compact toric contact manifold whose Reeb field comes from the torus is
classified by a labeled rational polytope sitting in the characteristic
hyperplane of its moment map.  This package represents that data exactly,
computes the combinatorial invariants attached to it (isotropy algebras,
leaf holonomy, regular versus quasi-regular), and synthesizes and verifies
the presentation of the manifold as a contact reduction of an odd sphere.
"""

from .classify import (
    ClassificationReport,
    FaceInvariants,
    ToricContactDatum,
    classify,
    holonomy,
    isotropy_algebra,
    perturb_reeb,
    rescale,
    validate_datum,
)
from .lattice import (
    FiniteAbelianGroup,
    det,
    hnf,
    kernel_lattice_basis,
    primitive,
    quotient_group,
    saturate,
    snf,
)
from .polytope import (
    LabeledFacet,
    LabeledPolytope,
    MomentCone,
    Vertex,
    cone_over,
    contains,
    faces_containing,
    is_rational,
    is_simple,
    slice_cone,
    vertices,
)
from .reduction import (
    SpherePresentation,
    VerificationReport,
    build_beta,
    deformation_vector,
    kernel_torus_weights,
    reduced_polytope,
    synthesize,
    verify_presentation,
)
from .spheres import (
    SampleReport,
    WeightVector,
    convexity_sample_check,
    moment_eval,
    reeb_orbit_order,
    weighted_simplex,
)

__version__ = "0.1.0"
