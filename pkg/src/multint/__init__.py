"""Maximum weighted clique algorithms and representation constructions for
multiple interval graphs (t-interval, t-track and their circular variants)."""

from .errors import (
    BadSubdivisionArityError,
    DuplicateLabelError,
    EmptyEdgeSetError,
    LabelSetMismatchError,
    MultintError,
    NotBipartitePartitionError,
    NotCoBipartiteError,
    OracleSizeExceededError,
    RepresentationError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownLabelError,
    WrongKindError,
)
from .graph import (
    EdgeIndex,
    Graph,
    Label,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_clique,
    is_independent_set,
    max_independent_set_bruteforce,
    path_graph,
    subdivide,
)
from .representation import (
    Kind,
    Piece,
    Representation,
    VerificationReport,
    intersection_graph,
    is_unit,
    pieces_intersect,
    restrict_representation,
    verify_representation,
)
from .solvers import (
    CliqueResult,
    CoBipartitePartition,
    max_weight_clique_bruteforce,
    max_weight_clique_cobipartite,
    max_weight_independent_set_bipartite,
)
from .approx import (
    ColoredOrientation,
    StabPoint,
    approx_clique_t,
    exact_clique_2track,
    orient_and_color,
    stab_weight_scan,
)
from .constructions import (
    k5_unit_2circular_track,
    rep_co_subd2_2circular_track,
    rep_co_subd2_3track,
    rep_co_subd2_unit2circular_interval,
    rep_co_subd2_unit3interval,
    rep_co_subd2_unit4track,
    rep_co_subd4_2interval,
)
from .gadgets import QParams, build_q, rep_co_q_unit2interval, rep_co_q_unit3track

__version__ = "0.1.0"
