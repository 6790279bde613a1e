"""Hardness gadgets built from CNF formulas and graphs, with witness conversions in both directions."""

from perfect_forests.reductions.cnf import CnfInstance
from perfect_forests.reductions.common import GadgetInstance
from perfect_forests.reductions.containing_edge import (
    ContainingEdgeGadget,
    containing_edge_instance,
)
from perfect_forests.reductions.indset import (
    IndsetGadget,
    IndsetWitness,
    WitnessKind,
    indset_equivalence_witnesses,
    indset_gadget,
)
from perfect_forests.reductions.induced_cycle import (
    InducedCycleGadget,
    induced_cycle_gadget,
)
from perfect_forests.reductions.nae import (
    NaeGadget,
    nae_assignment_from_forest,
    nae_forest_from_assignment,
    nae_gadget,
)

__all__ = [
    "CnfInstance",
    "ContainingEdgeGadget",
    "GadgetInstance",
    "IndsetGadget",
    "IndsetWitness",
    "InducedCycleGadget",
    "NaeGadget",
    "WitnessKind",
    "containing_edge_instance",
    "indset_equivalence_witnesses",
    "indset_gadget",
    "induced_cycle_gadget",
    "nae_assignment_from_forest",
    "nae_forest_from_assignment",
    "nae_gadget",
]
