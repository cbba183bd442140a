"""Prime, asymmetric and flow event structures: semantics, hp-bisimilarity and folding."""

from esfold.aesfold import (AesFoldingPlan, fold_aes, is_combinable_aes, is_similar, strict_causes,
                            weak_predecessors)
from esfold.document import DocumentError, load, parse, save, serialize
from esfold.dot import to_dot
from esfold.fesfold import FesFoldingPlan, check_mcons_lemma, fold_fes, is_combinable_fes
from esfold.folding import FoldingError, FoldingMap
from esfold.generate import GenParams, generate_random_pes
from esfold.hpbisim import HpWitness, hp_bisimilar, verify_witness
from esfold.isomorphism import fingerprint, isomorphic
from esfold.reduce import all_minimal_forms, enumerate_candidates, minimize
from esfold.semantics import (Configuration, configurations, histories, is_configuration,
                              maximal_configurations, mcons, semantic_conflict_fes)
from esfold.structures import (Aes, CapacityError, EventStructure, Fes, KindMismatch, Pes,
                               StructureError, ValidationReport, pes_to_aes, pes_to_fes, validate,
                               validate_aes, validate_fes, validate_pes)

__all__ = [
    "Aes", "AesFoldingPlan", "CapacityError", "Configuration", "DocumentError", "EventStructure",
    "Fes", "FesFoldingPlan", "FoldingError", "FoldingMap", "GenParams", "HpWitness", "KindMismatch",
    "Pes", "StructureError", "ValidationReport", "all_minimal_forms", "check_mcons_lemma",
    "configurations", "enumerate_candidates", "fingerprint", "fold_aes", "fold_fes",
    "generate_random_pes", "histories", "hp_bisimilar", "is_combinable_aes", "is_combinable_fes",
    "is_configuration", "is_similar", "isomorphic", "load", "maximal_configurations", "mcons",
    "minimize", "parse", "pes_to_aes", "pes_to_fes", "save", "semantic_conflict_fes", "serialize",
    "strict_causes", "to_dot", "validate", "validate_aes", "validate_fes", "validate_pes",
    "verify_witness", "weak_predecessors",
]
