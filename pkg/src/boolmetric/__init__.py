"""Boolean metric spaces over finite Boolean rings and CFG-rings GF(p)^omega."""

from .boolean_ring import BoolElem, bool_arith, bool_complement, ideal_generator, is_partition
from .cfg_ring import RingElem, RingSpec, embed, idempotent_of, ring_arith, scalar_act, unit_inverse
from .contractive_maps import (
    RefMap,
    compose,
    evaluate,
    extend_to_ambient,
    intersect_subspaces,
    is_contractive_table,
    kernel_map,
    orthogonal_sum,
    preimage_subspace,
    zero_set,
)
from .errors import *  # noqa: F403
from .metric import Point, PointedSpace, blend, convex_combination, dist, distance, is_orthogonal, norm, scale, star
from .polynomials import (
    Polynomial,
    e_polynomial,
    eval_poly,
    interp_map,
    interp_multi,
    interp_on_variety,
    interp_unary,
    polys_from_space,
    space_from_polys,
)
from .span import (
    Base,
    InvariantSeq,
    Referential,
    alpha_invariants,
    alpha_invariants_by_definition,
    build_base,
    classify_isometric,
    contains,
    coordinates,
    orthogonal_complement,
    orthogonalize,
    reconstruct,
    weierstrass_argmax,
)

__version__ = "0.1.0"
