"""Lexical tableaux and the lexical / dual lexical bases of NSym and QSym."""

from .compositions import Composition, Partition, coarsenings, compositions_of, lex_compare, sort_to_partition
from .errors import DomainError, LextabError, SizeLimitError
from .hopf import (
    FormalSeries,
    antipode_lexical_two_row,
    antipode_nsym,
    convert,
    lexical_two_row_in_H,
    multiply_nsym,
    pairing,
    transition_matrix,
)
from .tableaux import Tableau, count_J, count_K, enumerate_tableaux, standard_count

__all__ = [
    "Composition", "Partition", "coarsenings", "compositions_of", "lex_compare", "sort_to_partition",
    "DomainError", "LextabError", "SizeLimitError",
    "FormalSeries", "antipode_lexical_two_row", "antipode_nsym", "convert", "lexical_two_row_in_H",
    "multiply_nsym", "pairing", "transition_matrix",
    "Tableau", "count_J", "count_K", "enumerate_tableaux", "standard_count",
]
