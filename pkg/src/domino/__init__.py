"""Online dominating set laboratory for the vertex-arrival model."""

from ._backend import BACKEND
from .adversaries import AdversaryTranscript, tree_adversary, two_layer_adversary
from .algorithms import (
    FirstParent,
    GreedyIDS,
    OnlineAlgorithm,
    OnlineSession,
    Parent,
    EvenLayer,
    make_algorithm,
    run_online,
)
from .constructions import FamilySpec, generate
from .domination import SolutionChain, Variant, components_of, is_feasible, is_valid_chain
from .graph import (
    ArrivalSequence,
    build_graph,
    classify,
    format_instance,
    layers,
    parse_instance,
)
from .solvers import enumerate_chains, opt_inc, opt_off, solve
from .transforms import connectify, incremental_connectify, tree_incremental_from_set

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AdversaryTranscript",
    "ArrivalSequence",
    "EvenLayer",
    "FamilySpec",
    "FirstParent",
    "GreedyIDS",
    "OnlineAlgorithm",
    "OnlineSession",
    "Parent",
    "SolutionChain",
    "Variant",
    "build_graph",
    "classify",
    "components_of",
    "connectify",
    "enumerate_chains",
    "format_instance",
    "generate",
    "incremental_connectify",
    "is_feasible",
    "is_valid_chain",
    "layers",
    "make_algorithm",
    "opt_inc",
    "opt_off",
    "parse_instance",
    "run_online",
    "solve",
    "tree_adversary",
    "tree_incremental_from_set",
    "two_layer_adversary",
]
