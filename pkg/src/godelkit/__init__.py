"""Gödel coding, arithmetised syntax and diagonal fixed points for PA.

The subpackages are layered: ``syntax`` and ``grammar`` give the language,
``coding`` numbers it, ``registry`` holds the defined symbols with their
oracles, ``kernel`` checks and searches Hilbert proofs, ``evaluator`` decides
what it can in the standard model, ``diagonal`` builds fixed points, and
``gallery`` and ``finite_lab`` hold the paradox constructions.
"""

from .classify import classify, classify_delta0, classify_sigma1
from .coding import godel_decode, godel_encode, meta_neg, meta_subs, num_code, seq_decode, seq_encode
from .diagonal import DiagonalResult, diagonalize, verify_fixed_point
from .evaluator import eval_formula, evaluate
from .grammar import parse, parse_term, render
from .kernel import check_proof, search_proof
from .syntax import numeral, substitute
from .truth import FALSE, TRUE, UNKNOWN, TruthValue3

__version__ = "0.1.0"
