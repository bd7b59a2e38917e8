# Inicialização do pacote strategies
"""
Geradores construtivos de estados terminais com certificados verificáveis.
"""

from .cartesian import cartesian_kk_solve
from .certificates import Claim, StrategyCertificate, certify, check_certificate, load_certificate, replay
from .complete import ChoiceOption, ChoiceSet, clique_solve, kk_solve_with_target, p2k3_clear
from .hampath import hampath_solve, product_path_solve
from .joins import solve_join
from .products import FINISH_MODES, product_compose

STRATEGY_KINDS = ("join", "cartesian", "hampath", "product", "paths")

__all__ = [
    "Claim",
    "StrategyCertificate",
    "ChoiceOption",
    "ChoiceSet",
    "STRATEGY_KINDS",
    "FINISH_MODES",
    "certify",
    "check_certificate",
    "load_certificate",
    "replay",
    "clique_solve",
    "kk_solve_with_target",
    "p2k3_clear",
    "cartesian_kk_solve",
    "solve_join",
    "hampath_solve",
    "product_path_solve",
    "product_compose",
]
