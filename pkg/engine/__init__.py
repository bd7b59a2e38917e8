# Inicialização do pacote engine
"""
Mecânica do jogo e busca exaustiva exata.
"""

from .fools import METHODS, fools_number, is_dead, terminal_states, upper_bound_check
from .models import (
    Config,
    FoolsReport,
    Jump,
    JumpSequence,
    SolvabilityProfile,
    UpperBoundReport,
    WeakHypothesisReport,
    as_triples,
    complement,
    from_triples,
    holes_config,
    single_hole,
)
from .moves import apply_jump, check_jump, legal_jumps
from .search import (
    PegSolver,
    neighbor_hole_solvable,
    reachable_to_single_peg,
    require_playable,
    solvability_profile,
    weak_product_hypothesis,
)

__all__ = [
    "Config",
    "Jump",
    "JumpSequence",
    "FoolsReport",
    "SolvabilityProfile",
    "UpperBoundReport",
    "WeakHypothesisReport",
    "METHODS",
    "as_triples",
    "from_triples",
    "complement",
    "holes_config",
    "single_hole",
    "legal_jumps",
    "apply_jump",
    "check_jump",
    "PegSolver",
    "require_playable",
    "reachable_to_single_peg",
    "solvability_profile",
    "neighbor_hole_solvable",
    "weak_product_hypothesis",
    "fools_number",
    "terminal_states",
    "upper_bound_check",
    "is_dead",
]
