"""Interval spectra of edge labelings: interval vertices, bound checks and
extremal search on regular graphs."""

from .bounds import (
    BoundReport,
    HypothesisError,
    PropositionVerdict,
    SurrSubgraph,
    check_proposition,
    check_theorem,
    corollary_bound,
    surr,
    theorem_bound,
)
from .generators import GeneratorSpec, generate, parse_family, parse_spec
from .graph import (
    ComponentPartition,
    Graph,
    GraphError,
    build_graph,
    components,
    distance,
    distance_to_set,
    induced,
    is_path_forest,
    min_degree,
    regularity,
)
from .labeling import (
    EdgeLabeling,
    LabelingError,
    SpectrumUndefinedError,
    interval_vertices,
    is_interval,
    make_labeling,
    reflect,
    spectrum,
)
from .search import (
    CounterexampleError,
    SearchConfig,
    SearchError,
    SearchOutcome,
    anneal_max,
    exhaustive_max,
    sweep,
)

__version__ = "0.1.0"
