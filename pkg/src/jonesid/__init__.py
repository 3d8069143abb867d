"""Identities and Green's structure of the Jones monoids J_n, with J_5 as the main target."""
from .checker import Verdict, Violation, check_identity_j4, check_identity_j5, check_subset_conditions, explain
from .diagram import (
    Diagram,
    MonoidTable,
    catalan,
    compose,
    enumerate_jones,
    eval_generator_word,
    generator,
    identity_diagram,
    is_noncrossing,
    wire_profile,
)
from .oracle import OracleVerdict, equivalence_harness, evaluate_word, holds, search_separating
from .structure import eggbox_report, green_classes, idempotents, is_aperiodic, jclass_label_j5
from .words import Identity, content, occurs, parse_identity, restrict

__version__ = "0.1.0"
