"""Lines of graph metric spaces: line systems of finite connected graphs,
graph-class predicates, and exhaustive verification sweeps over small
graphs."""

from .graph import (
    CanonicalForm,
    DisconnectedError,
    Graph,
    GraphFormatError,
    NAMED_GRAPHS,
    bitmask,
    bits,
    canonical_form,
    canonical_graph,
    canonical_graph6,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    is_isomorphic,
    matched_cliques,
    named_graph,
    parse_adjacency_text,
    parse_graph6,
    path_graph,
    permute,
    to_graph6,
)
from .metric import DistanceMatrix, apsp, between, diameter
from .lines import (
    Diam2Partition,
    Diam3Partition,
    Line,
    LineSystem,
    Pencil,
    chen_chvatal_holds,
    diam2_partition,
    diam3_partition,
    has_universal_line,
    is_universal,
    line,
    line_system,
    pencil,
)
from .classes import (
    FaceSet,
    RotationSystem,
    bridges,
    embedded_corpus,
    is_biconnected,
    is_chordal,
    is_connected,
    is_lc_member,
    is_locally_connected,
    is_module,
    locally_connected_by_embedding,
    parse_rotation,
    rotation_from_positions,
    trace_faces,
    wheel_graph,
)
from .verify import (
    GraphStream,
    NoSamplesError,
    SweepReport,
    TheoremVerdict,
    VerificationReport,
    check_properties,
    enumerate_connected,
    run_property_sweep,
    sample_lc,
    stream_from_graph6_file,
    stream_generated,
    stream_random_lc,
    verify_claims,
    verify_conclusion_families,
    verify_prop_diam3,
    verify_theorem_class_examples,
    verify_theorem_main,
)

__version__ = "0.1.0"
