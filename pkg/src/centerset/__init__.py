"""Center, radius and achievable center sizes of finite simple graphs."""

from .codec import dot_export, edge_list_export, edge_list_parse, graph6_decode, graph6_encode
from .constructions import (
    Case,
    ValidationReport,
    WitnessRecipe,
    broom,
    g1,
    g2,
    g3,
    g4,
    g5,
    join_family,
    lollipop,
    validate_witness,
    witness,
)
from .graph import (
    Graph,
    build_graph,
    complete,
    cycle,
    empty,
    identify,
    is_connected,
    join,
    path,
    standard,
)
from .metrics import MetricProfile, bfs_distances, diametral_path, metric_profile
from .omega import gap, has_gap, omega_contains, omega_set, ratio_witness

__version__ = "0.1.0"
