"""Computational checks for a family of (p,n)-gonal Riemann surfaces with
automorphism group D_p x D_p."""

__version__ = "0.1.0"

from gonalkit.group_engine import (
    FiniteGroup,
    GroupElement,
    Subgroup,
    are_conjugate,
    build_dihedral_product,
    element_order,
    generated_subgroup,
    multiply,
    subgroups_of_prime_order,
)
from gonalkit.signature_rh import (
    Signature,
    TheoremParams,
    cs_unique_pn,
    reduced_area,
    rh_genus,
    teichmuller_dimension,
    theorem_params,
)
from gonalkit.action import (
    GeneratingVector,
    fiber_isotropy,
    gonal_census,
    induced_signature,
    paper_epimorphism,
    quotient_genus,
    validate_surface_kernel,
    verify_theorem,
)
from gonalkit.search import classify_up_to_conjugation, enumerate_generating_vectors
