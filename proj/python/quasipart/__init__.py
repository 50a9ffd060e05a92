"""Random quasipartitions of planar digraphs."""

from ._core import (
    Error,
    InputError,
    ParameterError,
    ParseError,
    PlanarDigraph,
    PreconditionError,
    SizeError,
    StructureError,
    __version__,
    all_pairs_distances,
    check_axioms,
    check_bounded,
    distance,
    estimate_lipschitz,
    generate,
    partition,
    related,
    sample_shock,
    sample_wave,
)

__all__ = [
    "Error",
    "InputError",
    "ParameterError",
    "ParseError",
    "PlanarDigraph",
    "PreconditionError",
    "SizeError",
    "StructureError",
    "__version__",
    "all_pairs_distances",
    "check_axioms",
    "check_bounded",
    "distance",
    "estimate_lipschitz",
    "generate",
    "partition",
    "related",
    "sample_shock",
    "sample_wave",
]
