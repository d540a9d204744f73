"""Deterministic strong generating sets for permutation groups.

Classical Schreier-Sims: a base (points whose pointwise stabilizers form a
descending chain), per level the strong generators fixing the earlier base
points and a transversal of coset representatives for the orbit of the
level's base point.  The group order is the product of the orbit sizes, and
membership testing is sifting: divide off one representative per level and
see whether the identity remains.

The construction is fully deterministic: no random elements, base points
chosen as the smallest point moved when a new level is needed, transversals
extended incrementally so that a coset representative, once chosen, never
changes.  That last property lets each Schreier generator be processed
exactly once (they are in bijection with (orbit point, generator) pairs).

The 96-point representation of cube assemblies lives here too: edge sticker
points 0..47, corner sticker points 48..71, center points 72..95.  It is a
faithful homomorphism, so subgroup questions transfer verbatim.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from . import perm as pm
from .cube import CubeState

Perm = pm.Perm

EDGE_POINT_BASE = 0
CORNER_POINT_BASE = 48
CENTER_POINT_BASE = 72
DEGREE = 96


def embed(t: CubeState) -> Perm:
    """Faithful 96-point permutation of an assembly."""
    out = list(t.edges.to_point_perm())
    out.extend(CORNER_POINT_BASE + x for x in t.corners.to_point_perm())
    out.extend(CENTER_POINT_BASE + x for x in t.centers)
    return tuple(out)


class StrongGenSet:
    """Base, strong generators and transversals of a permutation group."""

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.gens: list[list[Perm]] = []
        self.transversal: list[dict[int, Perm]] = []
        self.inv_transversal: list[dict[int, Perm]] = []
        self._identity = pm.identity(degree)
        self._done: list[set[tuple[int, int]]] = []

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        """Product of the orbit sizes along the stabilizer chain."""
        return math.prod(len(t) for t in self.transversal)

    def sift(self, p: Perm, start: int = 0) -> tuple[Perm, int]:
        """Divide off coset representatives level by level.

        Returns the residue and the level reached: (identity, depth) exactly
        for members of the group (of the start-th stabilizer when start>0).
        """
        for lev in range(start, len(self.base)):
            x = p[self.base[lev]]
            ui = self.inv_transversal[lev].get(x)
            if ui is None:
                return p, lev
            p = pm.compose(ui, p)
        return p, len(self.base)

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        residue, _ = self.sift(p)
        return residue == self._identity

    # -- construction ---------------------------------------------------------

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.gens.append([])
        self.transversal.append({point: self._identity})
        self.inv_transversal.append({point: self._identity})
        self._done.append(set())

    def _fixed_prefix(self, g: Perm) -> int:
        lev = 0
        while lev < len(self.base) and g[self.base[lev]] == self.base[lev]:
            lev += 1
        return lev

    def _register(self, g: Perm, min_level: int) -> int:
        """Add a strong generator at levels min_level..j, where j is the
        deepest level whose base prefix g fixes; extend the base when g
        fixes every current base point.  Returns j."""
        j = self._fixed_prefix(g)
        if j == len(self.base):
            self._add_level(min(x for x in range(self.degree) if g[x] != x))
        for k in range(min_level, j + 1):
            self.gens[k].append(g)
        return j

    def _extend_transversal(self, lev: int) -> None:
        """Grow the orbit of base[lev] without touching existing
        representatives."""
        t = self.transversal[lev]
        ti = self.inv_transversal[lev]
        gens = self.gens[lev]
        changed = True
        while changed:
            changed = False
            for pt in list(t.keys()):
                u = t[pt]
                for g in gens:
                    q = g[pt]
                    if q not in t:
                        v = pm.compose(g, u)
                        t[q] = v
                        ti[q] = pm.inverse(v)
                        changed = True

    def _complete_level(self, lev: int) -> None:
        """Establish the Schreier condition at one level, assuming deeper
        levels already satisfy it."""
        while True:
            self._extend_transversal(lev)
            t = self.transversal[lev]
            done = self._done[lev]
            progressed = False
            for pt in list(t.keys()):
                u = t[pt]
                for gi in range(len(self.gens[lev])):
                    if (pt, gi) in done:
                        continue
                    g = self.gens[lev][gi]
                    q = g[pt]
                    ui = self.inv_transversal[lev].get(q)
                    if ui is None:
                        # orbit grew since the snapshot; restart the scan
                        progressed = True
                        break
                    done.add((pt, gi))
                    sg = pm.compose(ui, pm.compose(g, u))
                    if sg == self._identity:
                        continue
                    residue, stop = self.sift(sg, lev + 1)
                    if residue != self._identity:
                        j = self._register(residue, lev + 1)
                        for k in range(j, lev, -1):
                            self._complete_level(k)
                        progressed = True
                else:
                    continue
                break
            if not progressed:
                return

    def check_structure(self) -> None:
        """Internal consistency: generators fix their prefix, representatives
        hit their orbit point, inverses match."""
        for lev in range(len(self.base)):
            for g in self.gens[lev]:
                for b in self.base[:lev]:
                    if g[b] != b:
                        raise AssertionError(f"level {lev} generator moves base")
            for pt, u in self.transversal[lev].items():
                if u[self.base[lev]] != pt:
                    raise AssertionError(f"representative for {pt} is wrong")
                if pm.compose(self.inv_transversal[lev][pt], u) != self._identity:
                    raise AssertionError(f"inverse representative for {pt} is wrong")


def build_bsgs(generators: Iterable[Sequence[int]]) -> StrongGenSet:
    """Strong generating set of the group the generators span.

    Deterministic; the resulting order never depends on generator order.
    """
    gens = [pm.check_perm(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator (identity is fine)")
    degrees = {len(g) for g in gens}
    if len(degrees) != 1:
        raise ValueError(f"mixed degrees {sorted(degrees)}")
    sgs = StrongGenSet(degrees.pop())
    for g in gens:
        if g != sgs._identity:
            sgs._register(g, 0)
    for lev in range(len(sgs.base) - 1, -1, -1):
        sgs._complete_level(lev)
    return sgs
