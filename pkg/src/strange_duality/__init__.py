"""Arnold's strange duality and its extension: exact catalog, lattices,
Frame shapes, weighted magic squares and eta products."""

from .catalog import Catalog, SingularityRecord, default_catalog, dual_of, lookup
from .checks import Check
from .frameshape import FrameShape, format_frame, parse_frame, saito_dual
from .weights import WeightSystem, milnor_number, monodromy_frame

__all__ = [
    "Catalog",
    "Check",
    "FrameShape",
    "SingularityRecord",
    "WeightSystem",
    "default_catalog",
    "dual_of",
    "format_frame",
    "lookup",
    "milnor_number",
    "monodromy_frame",
    "parse_frame",
    "saito_dual",
]

__version__ = "0.1.0"
