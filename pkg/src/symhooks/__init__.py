"""Hook lengths, cores and quotients of partitions, beta-sets and d-symbols."""

from .beta_sets import BetaHook, BetaSet
from .formats import ParseError, parse_object
from .hook_functions import DataTuple, LengthMultiset
from .partitions import Node, Partition
from .symbols import DSymbol, SymbolHook

__all__ = [
    "BetaHook", "BetaSet", "DataTuple", "DSymbol", "LengthMultiset", "Node",
    "ParseError", "Partition", "SymbolHook", "parse_object",
]
__version__ = "0.1.0"
