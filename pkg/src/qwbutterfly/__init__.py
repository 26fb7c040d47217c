"""Coined quantum walks on butterfly graphs.

Build butterfly (and arbitrary simple connected) graphs, evolve a
discrete-time Grover-coined walk between a marked sender and receiver,
and measure state-transfer fidelity and l1 coherence with or without
non-Markovian noise channels.
"""

from .graphs import (
    Graph,
    bfs_distances,
    bipartition,
    build_butterfly,
    build_path,
    diameter,
    distance,
    is_connected,
    read_edge_list,
    write_edge_list,
)
from .metrics import (
    average_fidelity,
    coherence_l1,
    fidelity_mixed,
    fidelity_pure,
    fidelity_with_pure,
)
from .noise import (
    KrausSet,
    NoiseDomainError,
    NoiseSpec,
    apply_channel,
    apply_channel_mixed,
    identity_kraus,
    nmad_damping,
    nmad_kraus,
    oun_decay,
    oun_kraus,
    rtn_kraus,
    rtn_modulation,
    validate_cptp,
    weyl,
)
from .runner import (
    ConfigError,
    ReferenceTable,
    REFERENCE_TABLES,
    RunSummary,
    ScenarioConfig,
    ScenarioResult,
    evaluate_reference_tables,
    export,
    export_sweep,
    run_scenario,
    summarize,
    sweep_placements,
)
from .walk import (
    ArcBasis,
    WalkOperator,
    assemble_coin,
    assemble_shift,
    evolve,
    grover_coin,
    receiver_state,
    sender_state,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "bfs_distances", "bipartition", "build_butterfly", "build_path",
    "diameter", "distance", "is_connected", "read_edge_list", "write_edge_list",
    "average_fidelity", "coherence_l1", "fidelity_mixed", "fidelity_pure",
    "fidelity_with_pure",
    "KrausSet", "NoiseDomainError", "NoiseSpec", "apply_channel",
    "apply_channel_mixed", "identity_kraus", "nmad_damping", "nmad_kraus",
    "oun_decay", "oun_kraus", "rtn_kraus", "rtn_modulation", "validate_cptp", "weyl",
    "ConfigError", "ReferenceTable", "REFERENCE_TABLES", "RunSummary",
    "ScenarioConfig", "ScenarioResult", "evaluate_reference_tables", "export",
    "export_sweep", "run_scenario", "summarize", "sweep_placements",
    "ArcBasis", "WalkOperator", "assemble_coin", "assemble_shift", "evolve",
    "grover_coin", "receiver_state", "sender_state",
    "__version__",
]
