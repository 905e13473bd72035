"""Certifying circular-arc and Helly circular-arc recognition for split
graphs: verified arc models on YES, named minimal forbidden induced
subgraphs on NO."""

from .auxiliary import (
    AuxiliaryGraph,
    NotAClique,
    NotSimplicial,
    NotSplitGraph,
    SKPartition,
    SplitPartition,
    build_auxiliary,
    build_H,
    split_partition,
)
from .catalog import FamilyId, ParamOutOfRange, generate
from .graph import (
    Graph,
    GraphError,
    complement,
    find_induced_embedding,
    induced_subgraph,
    is_isomorphic,
    make_graph,
)
from .intervals import CliquePath, clique_path, is_chordal, minimal_non_interval
from .models import (
    ArcModel,
    IntervalModel,
    ModelError,
    flip,
    parse_model,
    serialize_model,
    unflip,
    verify_condition1,
    verify_condition2,
    verify_helly,
    verify_normalized,
    verify_realizes,
)
from .oracle import (
    OracleTooLarge,
    enumerate_split_graphs,
    oracle_is_ca,
    oracle_is_interval,
    random_split_graph,
)
from .recognizer import (
    Certificate,
    UnclassifiedMinimalGraph,
    decide_condition2,
    extract_no_certificate,
    is_circular_arc,
    is_helly_circular_arc,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
