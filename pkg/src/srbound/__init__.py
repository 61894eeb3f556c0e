"""Lower bounds on the number of (binomial, A-homogeneous) equations needed to
define a lattice ideal up to radical, computed exactly from its cone."""

from .cone import ConeModel, RelintWitness, extreme_rays, in_positive_hull
from .errors import (
    ComponentTooLarge,
    InvalidInput,
    NotPositive,
    NotStronglyConvex,
    PointOutsideCone,
    ResourceLimit,
    SRBoundError,
)
from .exact import hermite_normal_form, smith_normal_form, solve_integer
from .family import (
    AnSpec,
    ExpectedCounts,
    InvalidN,
    an_config,
    binomial_generators,
    homogeneous_generators,
    prop53_binomials,
    prop55_polys,
    verify_an,
)
from .graph import BoundsReport, SigmaGraph, bound_b, bound_c, build_graph, to_dot
from .groebner import groebner_basis, groebner_member
from .kernel import HAVE_COMPILED, get_backend, set_backend
from .lattice import (
    Lattice,
    VectorConfig,
    binomial_in_ideal,
    height,
    is_positive,
    kernel_lattice,
    quotient_config,
    saturate,
)
from .lp import LPOutcome, LPProblem, Status, lp_solve
from .poly import (
    CoverReport,
    Poly,
    a_degree,
    check_cover,
    cone_trace,
    homogeneous_components,
    parse_an_poly,
    poly_subgraph,
)
from .report import analyze, verify_report
from .stanley_reisner import FaceLattice, SRGenerator, minimal_nonfaces, sr_generator_count_formula_An

__version__ = "0.1.0"
