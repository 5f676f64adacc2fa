"""Young-diagram calculus for Cohen-Macaulay monomial multiple structures on
codimension-two linear subspaces of projective space."""

__version__ = "0.1.0"

from .diagram import (  # noqa: E402
    Diagram,
    Partition,
    box_weight,
    diagonal_profile,
    diagram_intersection,
    diagram_to_partition,
    diagram_union,
    inner_corners,
    outer_corners,
    partition_sum,
    partition_to_diagram,
    three_dim_diagram,
    thicken,
    truncate_at_diagonal,
)
from .families import (  # noqa: E402
    FamilySetup,
    binomial_identity_check,
    flatness_check,
    generic_fiber_ideal,
    intersection_structure,
    special_fiber_ideal,
)
from .hilbert import (  # noqa: E402
    ZERO,
    R_equivalent,
    algebra_multiply,
    b_poly,
    hilbert_equivalent,
    hilbert_function,
    hilbert_polynomial,
    multiplicity,
    structure_decomposition,
)
from .ideal import (  # noqa: E402
    MonomialIdeal,
    VariableList,
    diagram_from_ideal,
    filtration_layers,
    ideal_from_diagram,
    ideal_intersection,
    ideal_sum,
    infinitesimal_neighbourhood,
    is_cm_structure,
    minimalize,
    product_with_support_ideal,
    s1_filtration,
)
from .polynomial import ExactPolynomial  # noqa: E402
from .resolution import (  # noqa: E402
    DegreePair,
    degree_pair,
    hilbert_scheme_dimension,
    r_equivalent,
    reduce_pair,
    resolution_equivalent,
    same_component,
    staircase_from_pair,
    validate_pair,
)
