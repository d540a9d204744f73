"""Assemblies of the 4x4x4 cube and the slice-move group.

An assembly is what a (possibly incorrectly) reassembled cube looks like,
recorded relative to the solved assembly: a flip-and-permutation of the 24
edge pieces, a twist-and-permutation of the 8 corners, and a permutation of
the 24 face centers.  Assemblies multiply like transformations (right factor
acts first), so the type doubles as the group the analysis runs in.

Three subgroups drive everything:
  - marking-preserving elements: all edge flips zero.  Assemblies of that
    shape are exactly the mechanically buildable ones, since an edge piece
    only fits its slot one way;
  - licit elements: generated by the twelve slice moves.  Inside the
    marking-preserving elements they are cut out by two conditions, total
    corner twist 0 mod 3 and corner permutation sign equal to center
    permutation sign (the `characteristic` pair);
  - relabelings: elements that swap identically-colored pieces in place,
    which no observer can see.  Swapping an edge pair flips both members,
    centers move freely inside their face, corners stay put.

Solvability of an assembly means a relabeling followed by a licit element
reaches it.  In closed form: every edge pair has equal flip bits and the
corner twists sum to 0 mod 3.  The closed form is not trusted here by
fiat: the oracle module checks it exhaustively on miniature models.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import geometry
from . import perm as pm
from .wreath import WreathElem

NUM_EDGES = geometry.NUM_EDGES
NUM_EDGE_PAIRS = geometry.NUM_EDGE_PAIRS
NUM_CORNERS = geometry.NUM_CORNERS
NUM_CENTERS = geometry.NUM_CENTERS
NUM_CENTER_BLOCKS = geometry.NUM_CENTER_BLOCKS


@dataclass(frozen=True)
class CubeState:
    """Assembly relative to the solved cube, in wreath coordinates."""

    edges: WreathElem
    corners: WreathElem
    centers: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.edges.k != 2 or self.edges.degree != NUM_EDGES:
            raise ValueError("edge component must be 24 flip-permutation pairs")
        if self.corners.k != 3 or self.corners.degree != NUM_CORNERS:
            raise ValueError("corner component must be 8 twist-permutation pairs")
        pm.check_perm(self.centers)
        if len(self.centers) != NUM_CENTERS:
            raise ValueError("center component must permute 24 pieces")

    def __mul__(self, other: "CubeState") -> "CubeState":
        return CubeState(
            self.edges * other.edges,
            self.corners * other.corners,
            pm.compose(self.centers, other.centers),
        )

    def inverse(self) -> "CubeState":
        return CubeState(
            self.edges.inverse(),
            self.corners.inverse(),
            pm.inverse(self.centers),
        )


def identity_state() -> CubeState:
    return CubeState(
        WreathElem.identity(2, NUM_EDGES),
        WreathElem.identity(3, NUM_CORNERS),
        pm.identity(NUM_CENTERS),
    )


class Move(enum.Enum):
    """The twelve slab quarter-turns, outer faces and inner slices."""

    B = "B"
    MB = "MB"
    MF = "MF"
    F = "F"
    L = "L"
    ML = "ML"
    MR = "MR"
    R = "R"
    D = "D"
    MD = "MD"
    MU = "MU"
    U = "U"


_GENERATORS: dict[Move, CubeState] = {}


def generator(move: Move) -> CubeState:
    """The assembly reached from solved by one slice quarter-turn."""
    cached = _GENERATORS.get(move)
    if cached is None:
        etw, ep, ctw, cp, zp = geometry.move_components(
            *geometry.MOVE_SLABS[move.value]
        )
        cached = CubeState(WreathElem(2, etw, ep), WreathElem(3, ctw, cp), zp)
        _GENERATORS[move] = cached
    return cached


def all_generators() -> tuple[CubeState, ...]:
    return tuple(generator(m) for m in Move)


def apply_word(word: Iterable[Move], start: CubeState | None = None) -> CubeState:
    """Apply moves left to right, starting from `start` (default solved)."""
    out = identity_state() if start is None else start
    for m in word:
        out = out * generator(m)
    return out


# ---------------------------------------------------------------------------
# subgroup membership


def preserves_marking(t: CubeState) -> bool:
    """No edge piece is flipped relative to its slot marking.

    These are exactly the assemblies a physical cube can be put into, so
    "mechanically admissible" means the same thing.
    """
    return all(b == 0 for b in t.edges.twists)


def characteristic(t: CubeState) -> tuple[int, int]:
    """(total corner twist mod 3, corner sign times center sign).

    Defined on marking-preserving assemblies; a homomorphism onto
    C_3 x {+1,-1} whose kernel is exactly the licit group.
    """
    if not preserves_marking(t):
        raise ValueError("characteristic is defined on flip-free assemblies only")
    return (t.corners.twist_sum(), pm.sign(t.corners.perm) * pm.sign(t.centers))


def is_licit(t: CubeState) -> bool:
    """Reachable from solved by slice moves alone."""
    return preserves_marking(t) and characteristic(t) == (0, 1)


def is_relabeling(t: CubeState) -> bool:
    """Permutes identically-colored pieces in place, invisible on a solved
    cube: every edge pair is either fixed bit-free or swapped with both
    members flipped, corners untouched, centers stay inside their face."""
    if t.corners != WreathElem.identity(3, NUM_CORNERS):
        return False
    ep, eb = t.edges.perm, t.edges.twists
    for k in range(NUM_EDGE_PAIRS):
        a, b = 2 * k, 2 * k + 1
        if ep[a] == a and ep[b] == b:
            if eb[a] != 0 or eb[b] != 0:
                return False
        elif ep[a] == b and ep[b] == a:
            if eb[a] != 1 or eb[b] != 1:
                return False
        else:
            return False
    for k in range(NUM_CENTER_BLOCKS):
        block = range(4 * k, 4 * k + 4)
        if any(t.centers[i] not in block for i in block):
            return False
    return True


def solvable_by_invariants(edges: WreathElem, corners: WreathElem) -> bool:
    """Closed form of solvability, any number of pairs and corners: both
    members of each edge pair carry the same flip bit and the corner twists
    sum to 0 mod 3.  Checked against exhaustive search in the oracle module."""
    bits = edges.twists
    if any(bits[2 * k] != bits[2 * k + 1] for k in range(len(bits) // 2)):
        return False
    return corners.twist_sum() == 0


def is_solvable(t: CubeState) -> bool:
    """A relabeling followed by a licit element reaches t."""
    return solvable_by_invariants(t.edges, t.corners)


def is_solvable_mechanical(t: CubeState) -> bool:
    """Solvability for an assembly built from real pieces (no flips).

    Reduces to the corner twist sum; raises ValueError off the flip-free
    domain.
    """
    if not preserves_marking(t):
        raise ValueError("mechanical solvability needs a flip-free assembly")
    return t.corners.twist_sum() == 0


# ---------------------------------------------------------------------------
# class invariants

# how one edge pair's flip bits classify under pair relabeling: (0,0) and
# (1,1) merge (label 0), (0,1) and (1,0) stay separate (labels 1, 2)
_PAIR_LABEL = {(0, 0): 0, (1, 1): 0, (0, 1): 1, (1, 0): 2}
_PAIR_BITS = {0: (0, 0), 1: (0, 1), 2: (1, 0)}


@dataclass(frozen=True)
class StateClass:
    """Complete invariant of an assembly modulo relabelings and licit moves:
    one label per edge pair plus the total corner twist."""

    pair_labels: tuple[int, ...]
    twist: int

    def __post_init__(self) -> None:
        if len(self.pair_labels) != NUM_EDGE_PAIRS or not all(
            l in (0, 1, 2) for l in self.pair_labels
        ):
            raise ValueError("need 12 pair labels in {0,1,2}")
        if self.twist not in (0, 1, 2):
            raise ValueError("twist must lie in {0,1,2}")

    def to_string(self) -> str:
        return "".join(str(l) for l in self.pair_labels) + f":{self.twist}"

    @classmethod
    def from_string(cls, s: str) -> "StateClass":
        if not re.fullmatch(r"[012]{12}:[012]", s):
            raise ValueError(f"malformed class string {s!r}")
        return cls(tuple(int(c) for c in s[:12]), int(s[13]))


def classify(t: CubeState) -> StateClass:
    """Invariant of the double class of t: unchanged under relabelings on
    the left and licit elements on the right, and distinct classes get
    distinct values."""
    bits = t.edges.twists
    labels = tuple(
        _PAIR_LABEL[(bits[2 * k], bits[2 * k + 1])] for k in range(NUM_EDGE_PAIRS)
    )
    return StateClass(labels, t.corners.twist_sum())


def classify_mechanical(t: CubeState) -> int:
    """Total corner twist, the complete invariant for flip-free assemblies."""
    if not preserves_marking(t):
        raise ValueError("mechanical classification needs a flip-free assembly")
    return t.corners.twist_sum()


def representative(cls: StateClass) -> CubeState:
    """Canonical assembly in a class: identity permutations, pair bits from
    the labels, all twist on corner 0."""
    bits: list[int] = []
    for l in cls.pair_labels:
        bits.extend(_PAIR_BITS[l])
    twists = (cls.twist,) + (0,) * (NUM_CORNERS - 1)
    return CubeState(
        WreathElem(2, tuple(bits), pm.identity(NUM_EDGES)),
        WreathElem(3, twists, pm.identity(NUM_CORNERS)),
        pm.identity(NUM_CENTERS),
    )


# ---------------------------------------------------------------------------
# relabeling generators and random sampling


def relabeling_generators() -> tuple[CubeState, ...]:
    """Generators of the relabeling group: one pair swap with both bits
    flipped per edge pair, a 4-cycle and a transposition per center block."""
    gens = []
    for k in range(NUM_EDGE_PAIRS):
        bits = [0] * NUM_EDGES
        bits[2 * k] = bits[2 * k + 1] = 1
        gens.append(
            CubeState(
                WreathElem(
                    2,
                    tuple(bits),
                    pm.transposition(NUM_EDGES, 2 * k, 2 * k + 1),
                ),
                WreathElem.identity(3, NUM_CORNERS),
                pm.identity(NUM_CENTERS),
            )
        )
    for k in range(NUM_CENTER_BLOCKS):
        base = 4 * k
        for cyc in ((base, base + 1, base + 2, base + 3), (base, base + 1)):
            gens.append(
                CubeState(
                    WreathElem.identity(2, NUM_EDGES),
                    WreathElem.identity(3, NUM_CORNERS),
                    pm.from_cycles(NUM_CENTERS, [cyc]),
                )
            )
    return tuple(gens)


def random_assembly(rng: np.random.Generator) -> CubeState:
    """Uniform over all assemblies.  Draw order: edge bits, edge
    permutation, corner twists, corner permutation, center permutation."""
    ebits = tuple(int(x) for x in rng.integers(0, 2, size=NUM_EDGES))
    eperm = pm.random_perm(NUM_EDGES, rng)
    ctw = tuple(int(x) for x in rng.integers(0, 3, size=NUM_CORNERS))
    cperm = pm.random_perm(NUM_CORNERS, rng)
    zperm = pm.random_perm(NUM_CENTERS, rng)
    return CubeState(WreathElem(2, ebits, eperm), WreathElem(3, ctw, cperm), zperm)


def random_mechanical_assembly(rng: np.random.Generator) -> CubeState:
    """Uniform over flip-free assemblies; same draw order minus the bits."""
    eperm = pm.random_perm(NUM_EDGES, rng)
    ctw = tuple(int(x) for x in rng.integers(0, 3, size=NUM_CORNERS))
    cperm = pm.random_perm(NUM_CORNERS, rng)
    zperm = pm.random_perm(NUM_CENTERS, rng)
    return CubeState(
        WreathElem(2, (0,) * NUM_EDGES, eperm),
        WreathElem(3, ctw, cperm),
        zperm,
    )


def random_relabeling(rng: np.random.Generator) -> CubeState:
    """Uniform over relabelings: independent pair swaps and block shuffles."""
    bits = [0] * NUM_EDGES
    eperm = list(range(NUM_EDGES))
    for k in range(NUM_EDGE_PAIRS):
        if int(rng.integers(0, 2)):
            a, b = 2 * k, 2 * k + 1
            bits[a] = bits[b] = 1
            eperm[a], eperm[b] = b, a
    zperm = list(range(NUM_CENTERS))
    for k in range(NUM_CENTER_BLOCKS):
        block = pm.random_perm(4, rng)
        for i, x in enumerate(block):
            zperm[4 * k + i] = 4 * k + x
    return CubeState(
        WreathElem(2, tuple(bits), tuple(eperm)),
        WreathElem.identity(3, NUM_CORNERS),
        tuple(zperm),
    )


# ---------------------------------------------------------------------------
# state files

_STATE_LINES = (
    ("edges_flip", NUM_EDGES, 2),
    ("edges_perm", NUM_EDGES, None),
    ("corners_twist", NUM_CORNERS, 3),
    ("corners_perm", NUM_CORNERS, None),
    ("centers_perm", NUM_CENTERS, None),
)


class StateFileError(ValueError):
    """Parse failure with the offending line and token recorded (1-based;
    token 0 means the line itself is malformed)."""

    def __init__(self, line: int, token: int, msg: str):
        super().__init__(f"line {line}, token {token}: {msg}")
        self.line = line
        self.token = token


def format_state(t: CubeState) -> str:
    rows = (
        t.edges.twists,
        t.edges.perm,
        t.corners.twists,
        t.corners.perm,
        t.centers,
    )
    return "".join(
        f"{label}: " + " ".join(str(x) for x in row) + "\n"
        for (label, _, _), row in zip(_STATE_LINES, rows)
    )


def parse_state(text: str) -> CubeState:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != len(_STATE_LINES):
        raise StateFileError(
            len(lines) + 1, 0, f"expected {len(_STATE_LINES)} lines, got {len(lines)}"
        )
    rows: list[tuple[int, ...]] = []
    for lineno, (raw, (label, count, modulus)) in enumerate(
        zip(lines, _STATE_LINES), start=1
    ):
        head, sep, rest = raw.partition(":")
        if not sep or head.strip() != label:
            raise StateFileError(lineno, 0, f"expected '{label}:'")
        tokens = rest.split()
        if len(tokens) != count:
            raise StateFileError(
                lineno, len(tokens) + 1, f"expected {count} values, got {len(tokens)}"
            )
        values = []
        for pos, tok in enumerate(tokens, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise StateFileError(lineno, pos, f"not an integer: {tok!r}") from None
            if modulus is not None and not 0 <= v < modulus:
                raise StateFileError(
                    lineno, pos, f"value {v} out of range 0..{modulus - 1}"
                )
            if modulus is None and not 0 <= v < count:
                raise StateFileError(
                    lineno, pos, f"value {v} out of range 0..{count - 1}"
                )
            values.append(v)
        if modulus is None and not pm.is_perm(values):
            raise StateFileError(lineno, 0, f"'{label}' is not a permutation")
        rows.append(tuple(values))
    return CubeState(
        WreathElem(2, rows[0], rows[1]),
        WreathElem(3, rows[2], rows[3]),
        rows[4],
    )
