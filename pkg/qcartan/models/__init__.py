from qcartan.models.cache import CACHE_VERSION, DecompositionDocument
from qcartan.models.outputs import (
    BlockDeterminantOut,
    CartanOut,
    ComparisonOut,
    ConjectureOut,
    DecompositionEntry,
    DecompositionOut,
    DeltaOut,
    GlaisherOut,
    HAbacusOut,
    PartitionListing,
    PolyOut,
    ProductFormOut,
    SeriesCheckOut,
    SeriesIdentityOut,
    SnfOut,
    WeightEntry,
    WeightListing
)
from qcartan.models.reports import Timing, Verdict, VerificationReport

__all__ = [
    "CACHE_VERSION", "DecompositionDocument",
    "BlockDeterminantOut", "CartanOut", "ComparisonOut", "ConjectureOut", "DecompositionEntry",
    "DecompositionOut", "DeltaOut", "GlaisherOut", "HAbacusOut", "PartitionListing", "PolyOut",
    "ProductFormOut", "SeriesCheckOut", "SeriesIdentityOut", "SnfOut", "WeightEntry", "WeightListing",
    "Timing", "Verdict", "VerificationReport"
]
