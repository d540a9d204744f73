"""Exact counts and probabilities for cube assemblies.

All arithmetic is exact: orders are Python integers, probabilities are
fractions in lowest terms.  The class counts are assembled from the orbit
enumerations in the oracle module rather than written down as constants, so
a wrong orbit table breaks them loudly.

The solvability probability is the ratio

    (relabelings * licit / their intersection) / all assemblies,

the size of a product set of two subgroups.  Solvable classes do not all
have the same number of assemblies, so 1 / class count is NOT the marked
probability; in the flip-free (mechanical) world every class has equal size
and the shortcut happens to hold.  Both facts are covered by tests.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from . import cube, oracle

MODES = ("marked", "mechanical")

STREAM_SIZE = 1 << 16


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")


def num_assemblies() -> int:
    """All ways to reassemble the pieces, markings included:
    flips * edge placements * twists * corner placements * center placements."""
    return (
        2**cube.NUM_EDGES
        * math.factorial(cube.NUM_EDGES)
        * 3**cube.NUM_CORNERS
        * math.factorial(cube.NUM_CORNERS)
        * math.factorial(cube.NUM_CENTERS)
    )


def num_mechanical_assemblies() -> int:
    """Assemblies with no edge flips, the physically buildable ones."""
    return num_assemblies() >> cube.NUM_EDGES


def num_licit() -> int:
    """Order of the slice-move group: the characteristic pair (twist sum,
    sign agreement) maps the flip-free group onto a 6-element group, and the
    licit elements are its kernel."""
    return num_mechanical_assemblies() // 6


def num_relabelings() -> int:
    """Order of the relabeling group: 2 choices per edge pair, 24 placements
    per center block."""
    return 2**cube.NUM_EDGE_PAIRS * 24**cube.NUM_CENTER_BLOCKS


def num_relabelings_licit() -> int:
    """Relabelings that are also licit: flip-free forces every pair choice
    to 'fix', and sign agreement keeps only even center relabelings, half."""
    return 24**cube.NUM_CENTER_BLOCKS // 2


def num_relabelings_mechanical() -> int:
    """Flip-free relabelings: the pair choices collapse, blocks are free."""
    return 24**cube.NUM_CENTER_BLOCKS


def num_classes_marked() -> int:
    """Visibly distinct unsolvable-or-solvable assembly classes: one label
    per edge pair from the pair-flip orbits, times the surviving twist
    classes.  3^12 * 3 once the orbit tables are in."""
    return edge_pair_class_count() * len(oracle.twist_sign_orbits())


def edge_pair_class_count() -> int:
    """Classes of edge-flip patterns alone: (pair orbit count)^pairs."""
    return len(oracle.pair_orbits()) ** cube.NUM_EDGE_PAIRS


def num_classes_mechanical() -> int:
    """Distinct classes among flip-free assemblies: only the twist survives."""
    return len(oracle.twist_sign_orbits())


def exact_probability(mode: str = "marked") -> Fraction:
    """Chance that a uniformly random (re)assembly is solvable."""
    _check_mode(mode)
    if mode == "marked":
        solvable = num_relabelings() * num_licit() // num_relabelings_licit()
        return Fraction(solvable, num_assemblies())
    solvable = num_relabelings_mechanical() * num_licit() // num_relabelings_licit()
    return Fraction(solvable, num_mechanical_assemblies())


# ---------------------------------------------------------------------------
# Monte Carlo estimation
#
# Samples are split into fixed-size streams; stream i is seeded from
# (seed, spawn_key=(i,)) independently of how streams are scheduled, so the
# estimate depends on (mode, n, seed) only, never on the worker count.  Each
# stream draws the same uniform law as the scalar samplers in cube.py:
# flip bits, edge placement, corner twists, corner placement, center
# placement, all via PCG64 (numpy Generator; shuffles are Fisher-Yates).


def _stream_hits(mode: str, seed: int, index: int, count: int) -> int:
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
    )
    if mode == "marked":
        bits = rng.integers(0, 2, size=(count, cube.NUM_EDGES), dtype=np.int8)
    rng.permuted(
        np.broadcast_to(
            np.arange(cube.NUM_EDGES, dtype=np.int8), (count, cube.NUM_EDGES)
        ).copy(),
        axis=1,
    )
    twists = rng.integers(0, 3, size=(count, cube.NUM_CORNERS), dtype=np.int8)
    rng.permuted(
        np.broadcast_to(
            np.arange(cube.NUM_CORNERS, dtype=np.int8), (count, cube.NUM_CORNERS)
        ).copy(),
        axis=1,
    )
    rng.permuted(
        np.broadcast_to(
            np.arange(cube.NUM_CENTERS, dtype=np.int8), (count, cube.NUM_CENTERS)
        ).copy(),
        axis=1,
    )
    ok = twists.sum(axis=1, dtype=np.int64) % 3 == 0
    if mode == "marked":
        ok &= (bits[:, 0::2] == bits[:, 1::2]).all(axis=1)
    return int(ok.sum())


def estimate_probability(
    mode: str, n: int, seed: int, workers: int = 1
) -> tuple[Fraction, float]:
    """(hit fraction, standard error) over n uniform samples.

    Deterministic given (mode, n, seed); the worker count only schedules
    streams.  The standard error is sqrt(p(1-p)/n) at the estimate.
    """
    _check_mode(mode)
    if n < 1:
        raise ValueError("need at least one sample")
    if workers < 1:
        raise ValueError("need at least one worker")
    sizes = [
        min(STREAM_SIZE, n - start) for start in range(0, n, STREAM_SIZE)
    ]
    if workers == 1:
        hits = sum(
            _stream_hits(mode, seed, i, cnt) for i, cnt in enumerate(sizes)
        )
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(
                pool.map(
                    lambda ic: _stream_hits(mode, seed, ic[0], ic[1]),
                    enumerate(sizes),
                )
            )
    p = Fraction(hits, n)
    stderr = math.sqrt(float(p) * (1.0 - float(p)) / n)
    return p, stderr
