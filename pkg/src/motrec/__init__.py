"""k-to-k substitution of a letter power on infinite words, with empirical
and closed-form complexity."""

from .analysis import (
    ComplexityProfile,
    check_modulo_recurrence,
    count_factors,
    special_factors,
    stabilize,
    window_complexity,
)
from .formulas import (
    BranchedValue,
    SourceComplexity,
    compare,
    corollary_check,
    eval_general,
    eval_sturmian,
    internal_stabilization,
)
from .generators import (
    MorphismSpec,
    SturmianSpec,
    champernowne_prefix,
    morphic_prefix,
    parse_source,
    periodic_prefix,
    sturmian_prefix,
)
from .transforms import SubstitutionSpec, TransformedSource, origin_lengths, substitute
from .words import Alphabet, FiniteWord, WordSource, occurrences, prefix

__version__ = "0.1.0"
