"""Discrepancy calculus over smooth and cyclic quotient surface germs."""

from .blowups import Center, InvalidSequenceError, blowup_sequence_discrepancy, blowup_trace
from .branches import (LINE, NODE, TAC, TRI, X, Y, Branch, Valuation, cusp_a, cusp_b,
                       is_primitive, tangent, valuation_order)
from .classify import Classification, ClassificationGapError, classify_phi_i, classify_two2
from .families import (FAMILIES, LT, BoundResult, CoeffCap, FamilyRecord, Window, family_by_name,
                       region_cuts, sharp_epsilon_bound, verify_extraction)
from .pairs import DegeneratePairError, GermPair, check_nondegenerate, growth, toric_discrepancy
from .search import (DeltaResult, MLDResult, UncertifiedSearchError, delta_count,
                     divisors_below, min_discrepancy_search)
