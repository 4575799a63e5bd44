"""Sequence BDDs (original and relaxed) for phrasal template extraction."""
from .config import RunConfig
from .errors import (
    CapacityError,
    InputError,
    ParseError,
    SeqBDDError,
    StructuralError,
    TracingError,
    UsageError,
)
from .extract import SLOT, ExtractConfig, Template, extract
from .ingest import TaggedPhrase, read_tagged
from .kernels import DEFAULT_BACKEND
from .lexicon import WordTable, attach_words
from .relaxed import construct_relaxed, get_node_relaxed, reaches
from .store import ONE, ZERO, Mode, Store, construct
from .symbols import Symbol

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "InputError", "ParseError", "SeqBDDError", "StructuralError",
    "TracingError", "UsageError", "SLOT", "ExtractConfig", "Template", "extract",
    "TaggedPhrase", "read_tagged", "DEFAULT_BACKEND", "WordTable", "attach_words",
    "construct_relaxed", "get_node_relaxed", "reaches", "ONE", "ZERO", "Mode", "Store",
    "construct", "Symbol", "RunConfig",
]
