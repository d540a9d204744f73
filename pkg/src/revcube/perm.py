"""Permutations of {0, ..., n-1} stored as image tables.

A permutation p of degree n is a tuple (p(0), ..., p(n-1)).  Composition is
right to left throughout the package: compose(p, q) applies q first, so
compose(p, q)(i) == p(q(i)).  Indices are 0-based everywhere.

Uniform sampling is an explicit Fisher-Yates swap shuffle driven by a numpy
Generator, so a fixed seed reproduces the same permutation.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation of degree n.

    >>> identity(3)
    (0, 1, 2)
    """
    return tuple(range(n))


def is_perm(p: Sequence[int]) -> bool:
    """True when p is a bijective image table of {0, ..., len(p)-1}."""
    n = len(p)
    seen = [False] * n
    for x in p:
        if not isinstance(x, (int, np.integer)) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def check_perm(p: Sequence[int]) -> Perm:
    """Return p as a tuple, raising ValueError when it is not a permutation."""
    if not is_perm(p):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p!r}")
    return tuple(int(x) for x in p)


def compose(p: Perm, q: Perm) -> Perm:
    """Right-to-left composition: q acts first.

    >>> compose((1, 0, 2), (0, 2, 1))
    (1, 2, 0)
    """
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((1, 2, 3, 0))
    (3, 0, 1, 2)
    """
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition, fixed points omitted, each cycle
    starting at its smallest element, cycles sorted by that element."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Sorted lengths of the nontrivial cycles, longest first."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(n: int, cyclist: Iterable[Sequence[int]]) -> Perm:
    """Build a degree-n permutation from disjoint cycles.

    >>> from_cycles(4, [(0, 1, 2)])
    (1, 2, 0, 3)
    """
    out = list(range(n))
    touched = set()
    for cyc in cyclist:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            if a in touched:
                raise ValueError(f"cycles not disjoint at {a}")
            touched.add(a)
            out[a] = b
    return check_perm(out)


def transposition(n: int, a: int, b: int) -> Perm:
    """The degree-n transposition swapping a and b."""
    return from_cycles(n, [(a, b)])


def sign(p: Perm) -> int:
    """Parity of the permutation: +1 even, -1 odd.

    Computed as (-1)**(n - number of cycles including fixed points).
    """
    n = len(p)
    seen = [False] * n
    ncyc = 0
    for start in range(n):
        if seen[start]:
            continue
        ncyc += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
    return 1 if (n - ncyc) % 2 == 0 else -1


def random_perm(n: int, rng: np.random.Generator) -> Perm:
    """Uniform random permutation via the Fisher-Yates swap shuffle.

    Exactly uniform over all n! permutations and deterministic given the
    generator state; the loop consumes one bounded integer per step.
    """
    out = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        out[i], out[j] = out[j], out[i]
    return tuple(out)
