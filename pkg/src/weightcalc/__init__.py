"""Weight sequences, associated weight functions and weight matrices,
with growth-condition checks and a harness for the equivalences between
them."""
from ._verdict import EXACT, GROWING, PLATEAU, ConditionVerdict
from .conditions import growth_index, has_mg, genmg, omega_conditions
from .matrix import matrix_of
from .seqcore import LogSequence, SequenceError, TruncationError, from_quotients, gevrey, qgevrey
from .theorems import THEOREMS, TheoremReport, run_all, run_theorem
from .weightfun import DomainError, LogPL, lower_legendre, omega_of, reconstruct, young_conjugate

__version__ = "0.1.0"

__all__ = [
    "EXACT", "GROWING", "PLATEAU", "ConditionVerdict", "DomainError", "LogPL", "LogSequence",
    "SequenceError", "THEOREMS", "TheoremReport", "TruncationError", "from_quotients", "genmg",
    "gevrey", "growth_index", "has_mg", "lower_legendre", "matrix_of", "omega_conditions",
    "omega_of", "qgevrey", "reconstruct", "run_all", "run_theorem", "young_conjugate",
]
