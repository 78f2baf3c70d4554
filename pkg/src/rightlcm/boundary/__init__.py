"""
Core structure, foundation sets and the quotient-diagram bookkeeping.
"""

from .diagram import DiagramReport, Fact, diagram_report
from .foundation import (
    BoundExceededError,
    FoundationSet,
    accurate_refine,
    check_core_translates,
    check_product_accuracy,
    foundation_witness,
    generate_pool,
    is_accurate,
    is_accurate_indexed,
    is_foundation,
    is_proper,
    is_refinement,
    product_sets,
)
from .homs import HomSpec, IllDefinedMapError, hom_check
from .searches import (
    check_terminating,
    check_translate_factorization,
    longest_chain,
    search_proper_translates,
    search_unfactorizable,
)
from .structure import (
    CoreFactorization,
    check_complement_identity,
    core_by_search,
    core_factorize,
    core_witness,
    is_core,
    is_core_irreducible,
)
