"""Workbench for intersecting set families with prescribed shadow degree.

Exact primitives (shadow, co-degree, matching, transversal, traces),
deterministic generators for the named extremal families, arbitrary
precision bound and threshold formulas, an exact branch-and-bound solver
with isomorph rejection, and executable verifications of the structural
facts those objects satisfy.
"""

from .core import (
    CapacityError,
    DomainError,
    FamilyError,
    SetFamily,
    SunflowerWitness,
    UniformityError,
    codegree,
    elements_of,
    find_sunflower,
    is_intersecting,
    is_support,
    level,
    link,
    mask_of,
    matching_number,
    min_member_size,
    rank,
    shadow,
    shadow_degree,
    trace,
    transversal_number,
)
from .famio import ParseError, format_family, parse_family, read_family, write_family
from .constructions import (
    complete_on,
    design_2_6_3_2,
    ell_family,
    ell_family_on,
    hilton_milner,
    star,
)
from .bounds import (
    BoundValue,
    ChainAuditReport,
    ChainStep,
    audit_inequality_chain,
    binomial,
    blp_threshold,
    ekr_bound,
    ell_size,
    evaluate_formula,
    formula_ids,
    hm_bound,
    katona_style_bound,
    main_threshold,
    separation_count,
    tuza_bound,
)
from .search import (
    CanonicalForm,
    SearchProblem,
    SearchReport,
    canonical_form,
    enumerate_extremal,
    is_isomorphic,
    max_family_size,
    relabel,
    solve,
)

__version__ = "0.1.0"
