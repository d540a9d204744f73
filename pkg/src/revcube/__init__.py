"""Group-theoretic model of 4x4x4 cube assemblies.

The package answers three questions about a cube taken apart and
reassembled at random: whether a given assembly can be solved by turns,
how many visibly distinct assemblies there are, and with what
probability a uniform random assembly is solvable.  Two regimes are
supported throughout: ``marked`` distinguishes the two stickers of an
edge pair, ``mechanical`` ignores edge flips altogether.
"""

from .counting import (
    estimate_probability,
    exact_probability,
    num_assemblies,
    num_classes_marked,
    num_classes_mechanical,
    num_licit,
    num_mechanical_assemblies,
    num_relabelings,
)
from .cube import (
    CubeState,
    Move,
    StateClass,
    all_generators,
    apply_word,
    characteristic,
    classify,
    classify_mechanical,
    format_state,
    generator,
    identity_state,
    is_licit,
    is_relabeling,
    is_solvable,
    is_solvable_mechanical,
    parse_state,
    preserves_marking,
    random_assembly,
    random_mechanical_assembly,
    random_relabeling,
    relabeling_generators,
    representative,
    StateFileError,
)
from .wreath import WreathElem

__version__ = "0.1.0"

__all__ = [
    "CubeState",
    "Move",
    "StateClass",
    "StateFileError",
    "WreathElem",
    "all_generators",
    "apply_word",
    "characteristic",
    "classify",
    "classify_mechanical",
    "estimate_probability",
    "exact_probability",
    "format_state",
    "generator",
    "identity_state",
    "is_licit",
    "is_relabeling",
    "is_solvable",
    "is_solvable_mechanical",
    "num_assemblies",
    "num_classes_marked",
    "num_classes_mechanical",
    "num_licit",
    "num_mechanical_assemblies",
    "num_relabelings",
    "parse_state",
    "preserves_marking",
    "random_assembly",
    "random_mechanical_assembly",
    "random_relabeling",
    "relabeling_generators",
    "representative",
]
