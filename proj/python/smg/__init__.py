"""Spherical matchstick graphs: constructions, verification and discharging audit."""

from ._core import (
    ConstructionError,
    ConstructionResult,
    DegenerateGeometry,
    EmbeddingError,
    Error,
    FormatError,
    Graph,
    InvalidInput,
    SolverError,
    VerificationReport,
    audit,
    charge,
    construct,
    construction_names,
    dumps,
    export,
    is_centrally_symmetric,
    loads,
    read_graph,
    verify,
    write_graph,
)

__version__ = "0.1.0"
