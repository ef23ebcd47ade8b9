"""Independent-set plus forest partitions of plane graphs without certain cycles.

The package checks class membership, finds reducible configurations,
builds (I, F) partitions and weak 2-degeneracy certificates, and audits
the discharging argument behind them on concrete graphs.
"""

from .configurations import find_any_config, local_structure, reduction_schedule
from .cover import IFPartition, partition_IF, validate_partition
from .cycles import DEFAULT_SPEC, CycleSpec, enumerate_cycles, in_class
from .discharging import apply_rules, audit, check_lemma_rule, check_lemma_s, initial_charges
from .plane_graph import PlaneGraph, build
from .weak_degeneracy import certify_weakly_2_degenerate, weak_degeneracy

__version__ = "0.1.0"

__all__ = [
    "CycleSpec", "DEFAULT_SPEC", "IFPartition", "PlaneGraph", "apply_rules", "audit", "build",
    "certify_weakly_2_degenerate", "check_lemma_rule", "check_lemma_s", "enumerate_cycles",
    "find_any_config", "in_class", "initial_charges", "local_structure", "partition_IF",
    "reduction_schedule", "validate_partition", "weak_degeneracy",
]
