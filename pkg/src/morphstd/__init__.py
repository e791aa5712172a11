"""Standard forms of morphisms and symbolic sequences, with morphic-sequence tools."""

from .canonical import (StandardizationResult, equivalent_morphisms, equivalent_sequences,
                        standardize_morphism, standardize_sequence)
from .core import (Morphism, Relabeling, apply_morphism, format_morphism, parse_morphism,
                   permuted_version, relabel_sequence, relabel_word)
from .errors import (AlphabetMismatchError, CapacityError, IncompleteAlphabetError, MorphismError,
                     NotProlongableError, NotRotatableError, NotSymbolicError, ParseError)
from .generate import MorphicSequence, complexity, factors, fixed_point_seeds, iterate, prefix
from .golden import GoldenNumber, beatty_a, e_seq, g_seq, increment_a, verify_identities
from .transform import BlockCoding, LetterMap, block_morphism, merge_equal_images, project, rotate

__version__ = "0.1.0"
