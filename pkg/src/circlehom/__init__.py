"""Exact star arithmetic, circle S-distances, and shell boundary certificates.

The package decides whether 1-shells over the dense circular-order
structures bound, emits explicit re-verified witness 2-chains, searches for
chain-walk certificates, and realizes the canonical epimorphism from the
desk-scale translation group onto the circle group of homology classes.
"""

from .basis import IrrationalBasis, basis_from_entries, load_basis
from .circle import (EnClass, Point, PointContext, Translation, classify_en,
                     independent, lascar_equivalent, point_at, point_before,
                     rotate, s_relation, sd, u_eq, u_less)
from .errors import (CirclehomError, ConfigurationError, EndpointMismatchError,
                     MalformedWalkError, PreconditionError, UsageError,
                     VerificationError)
from .mtwo import cut_interval, s_prime_k
from .shells import (H1Element, Representation, bracket, bracket_shell,
                     compose_shells, e_relation, equalize_shells, is_boundary,
                     literal_representation, make_shell, psi, reduced_holonomy,
                     rep_with_endpoints, representation_equiv, revertex_shell,
                     revertex_witness, shell_class, shell_holonomy,
                     witness_boundary)
from .simplices import (Chain, Edge1, Shell1, Simplex2, Vertex0,
                        apply_automorphism, boundary, boundary_i, chain_of,
                        is_shell, make_simplex2, shell_from_chain,
                        translate_shell)
from .star import (EXACT, MINUS_EPS, PLUS_EPS, RealValue, StarValue, equiv_z,
                   equiv_zero, in_z_star, in_zero_star, minus_star,
                   mod_z_reduce, neg_star, plus_star, rational, star_compare,
                   star_lt, star_sort, sum_star, symbol, times_star,
                   to_real_mod_z)
from .suite import CheckResult, RunConfig, run_checks
from .walks import (ChainWalk, WalkRepresentation, d_e_upper_bound,
                    search_walk, verify_chain_walk, walk_parameter,
                    walk_representation, witness_subwalk)

__version__ = "0.1.0"
