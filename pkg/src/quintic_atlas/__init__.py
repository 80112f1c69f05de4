"""quintic_atlas: an exact workbench for projective varieties of degree 5.

Construct the catalogue members (hypersurfaces, rational normal curves and
scrolls, the Pluecker-embedded G(1,4) and its linear sections, quintics
linked to a linear space by a (2,3) complete intersection, cones), compute
their invariants (dimension, degree, Delta-genus, sectional genus), test
smoothness, perform liaison, and classify arbitrary degree-5 ideals.
"""

from .poly import (GF, QQ, Block, Field, GrevLex, Lex, Monomial, MonomialOrder,
                   ParseError, Polynomial, PrimeField, QuinticAtlasError,
                   Rationals, Ring, format_polynomial, parse_field_spec,
                   parse_polynomial, ring)
from .groebner import (BuchbergerStats, GroebnerBasis, buchberger,
                       groebner_basis, normal_form, s_polynomial)
from .ideal_ops import (GenericityError, Ideal, eliminate, exact_divide,
                        homogeneous_components, hyperplane_slice,
                        ideal_colon, ideal_intersect, ideal_sum,
                        irrelevant_ideal, linear_change, principal,
                        random_invertible_matrix, saturate)
from .invariants import (BudgetExceededError, CohomologyBoundsReport,
                         HilbertData, VarietyInvariants,
                         check_cohomology_bounds, compute_invariants,
                         hilbert_function, hilbert_function_macaulay,
                         hilbert_polynomial)
from .geometry import (CharTwoError, LinkageReport, QuadricInfo, cone_over,
                       is_linear_space, is_smooth, link_residual,
                       minimal_generators, quadric_info, singular_locus,
                       unique_quadric, verify_linkage)
from .constructors import (Cone, ConstructionRecipe, CorpusEntry,
                           ExampleLinkedQuintic, Grassmannian14, LinearSection,
                           LinkedQuintic, QuinticHypersurface,
                           RationalNormalCurve, Scroll, build, corpus)
from .classifier import (ClassificationInputError, ClassificationReport,
                         CrossCheckMismatch, CrossCheckSummary, classify,
                         cross_check_theorem, decide_signature)

__version__ = "0.1.0"
