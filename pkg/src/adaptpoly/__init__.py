"""Adaptive univariate polynomial multiplication over word-sized prime fields.

Dense, sparse, chunky, equal-spaced, and combined representations with
cost-model-driven conversion, plus operation-count instrumentation for
verifying the never-worse guarantees on real instances.
"""

from adaptpoly.adaptive import STRATEGIES, MultiplyReport, explain, multiply
from adaptpoly.chunky import (
    ChunkyPoly,
    GapProfile,
    chunk_cost,
    chunk_size_search,
    chunky_convert,
    chunky_model_cost,
    chunky_mul,
    chunky_to_output,
    gap_profile,
    optimal_chunk_size,
)
from adaptpoly.combined import (
    ChunkedSpacedPoly,
    combined_convert,
    combined_model_cost,
    combined_mul,
    from_chunky,
    space_chunks,
)
from adaptpoly.cost import INF_COST, CostModel, validate_model
from adaptpoly.eqspaced import (
    EqualSpacedPoly,
    es_convert,
    es_model_cost,
    es_mul,
    es_to_dense,
    k_bound,
)
from adaptpoly.errors import CapacityError, ParseError
from adaptpoly.poly import (
    DensePoly,
    SparsePoly,
    dense_mul,
    kronecker_pack,
    kronecker_unpack,
    sparse_mul,
    to_dense,
    to_sparse,
)
from adaptpoly.ring import CountedPrimeField, OpCounter, PrimeField, counted, make_field
from adaptpoly.textio import parse_poly, read_poly_file, serialize_poly, write_poly_file

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ChunkedSpacedPoly",
    "ChunkyPoly",
    "CostModel",
    "CountedPrimeField",
    "DensePoly",
    "EqualSpacedPoly",
    "GapProfile",
    "INF_COST",
    "MultiplyReport",
    "OpCounter",
    "ParseError",
    "PrimeField",
    "STRATEGIES",
    "SparsePoly",
    "chunk_cost",
    "chunk_size_search",
    "chunky_convert",
    "chunky_model_cost",
    "chunky_mul",
    "chunky_to_output",
    "combined_convert",
    "combined_model_cost",
    "combined_mul",
    "counted",
    "dense_mul",
    "es_convert",
    "es_model_cost",
    "es_mul",
    "es_to_dense",
    "explain",
    "from_chunky",
    "gap_profile",
    "k_bound",
    "kronecker_pack",
    "kronecker_unpack",
    "make_field",
    "multiply",
    "optimal_chunk_size",
    "parse_poly",
    "read_poly_file",
    "serialize_poly",
    "space_chunks",
    "sparse_mul",
    "to_dense",
    "to_sparse",
    "validate_model",
    "write_poly_file",
]
