"""Refining quasi-automatic group dictionaries toward asynchronous automaticity.

Modules:

* :mod:`qagroups.automata` -- epsilon-free finite automata
* :mod:`qagroups.bimorphism` -- rational relations in Nivat form
* :mod:`qagroups.groups` -- word-problem oracles
* :mod:`qagroups.structure` -- quasi-automatic structures and their validation
* :mod:`qagroups.pruning` -- silent-circuit pruning of a dictionary
* :mod:`qagroups.departure` -- length-ratio bound and departure functions
* :mod:`qagroups.geometry` -- Cayley-graph Lipschitz checks
* :mod:`qagroups.pipeline`, :mod:`qagroups.cli` -- end-to-end runs
"""

from .automata import Alphabet, Dfa, Nfa
from .bimorphism import FIRST, SECOND, NivatBimorphism, TapeLetter
from .builtins import BUILTINS, builtin
from .groups import FiniteTableGroup, FreeAbelianGroup, FreeGroup, GroupOracle, TrivialGroup
from .pipeline import prove
from .pruning import PruningResult, prune, prune_structure
from .structure import EPS, QuasiAutomaticStructure

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Dfa", "Nfa", "FIRST", "SECOND", "NivatBimorphism", "TapeLetter",
    "BUILTINS", "builtin", "FiniteTableGroup", "FreeAbelianGroup", "FreeGroup",
    "GroupOracle", "TrivialGroup", "prove", "PruningResult", "prune", "prune_structure",
    "EPS", "QuasiAutomaticStructure",
]
