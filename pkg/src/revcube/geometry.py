"""Geometric model of the 4x4x4 cube and its twelve slice moves.

Pieces live on the surface shell of the cube, at integer coordinates in
{-3, -1, 1, 3}^3: corners have three coordinates of magnitude 3, edge pieces
two, face centers one.  That gives 8 + 24 + 24 = 56 pieces.  A sticker is an
outward unit normal of a piece, one per face of magnitude 3.

Indexing (all 0-based, fixed once):
  - faces: +x, -x, +y, -y, +z, -z are 0..5; the solved coloring gives face f
    the color f;
  - corners: the 8 positions in lexicographic order;
  - edges: the 12 cube edges sorted by (major axes, major signs); the two
    pieces of edge pair k get indices 2k (minor coordinate +1) and 2k+1
    (minor coordinate -1), so pieces with identical sticker colors are
    exactly {2k, 2k+1};
  - centers: face f owns indices 4f..4f+3, its positions in lexicographic
    order, so same-color centers are exactly {4k, ..., 4k+3}.

Orientation bookkeeping:
  - each edge piece has a marked sticker, chosen by chirality: mark the
    normal u with det[u, v, w] > 0, where v is the other sticker normal and
    w points along the minor axis, away from the pair's midline.  det is
    invariant under rotations, so every slice move sends marked stickers to
    marked stickers, and w changes sign between the two pieces of a pair, so
    their marked stickers sit on different faces (hence different colors);
  - each corner piece is marked on its up/down sticker (axis y); the three
    stickers are numbered 0, 1, 2 by repeated one-third turns of the piece
    about its diagonal toward the cube center (right-hand rule), which
    cycles the local axes one way or the other depending on the octant.

A slice move is a quarter turn of one slab {p : p[axis] == layer}, layer in
{3, 1, -1, -3}, turned clockwise as seen from outside the nearest face, i.e.
right-handed sense -sign(layer) about the axis.  The induced (twists, perm)
coordinates are read off by following stickers and certified against the
full sticker map.
"""

from __future__ import annotations

import itertools
from functools import cache

Vec = tuple[int, int, int]


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


def _unit(axis: int, s: int) -> Vec:
    v = [0, 0, 0]
    v[axis] = s
    return tuple(v)  # type: ignore[return-value]


def _det(u: Vec, v: Vec, w: Vec) -> int:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def rotate(v: Vec, axis: int, sense: int) -> Vec:
    """Quarter turn of a vector about a coordinate axis.

    sense +1 is the right-handed turn about +axis (it sends the next axis in
    cyclic x->y->z order to the one after), sense -1 the inverse.
    """
    b, c = (axis + 1) % 3, (axis + 2) % 3
    out = list(v)
    if sense > 0:
        out[c] = v[b]
        out[b] = -v[c]
    else:
        out[b] = v[c]
        out[c] = -v[b]
    return tuple(out)  # type: ignore[return-value]


FACE_NORMALS: tuple[Vec, ...] = (
    (1, 0, 0),
    (-1, 0, 0),
    (0, 1, 0),
    (0, -1, 0),
    (0, 0, 1),
    (0, 0, -1),
)
FACE_OF: dict[Vec, int] = {n: i for i, n in enumerate(FACE_NORMALS)}

NUM_CORNERS = 8
NUM_EDGES = 24
NUM_EDGE_PAIRS = 12
NUM_CENTERS = 24
NUM_CENTER_BLOCKS = 6


def _major_axes(p: Vec) -> tuple[int, ...]:
    return tuple(i for i in range(3) if abs(p[i]) == 3)


def _build_positions() -> tuple[tuple[Vec, ...], tuple[Vec, ...], tuple[Vec, ...]]:
    corners, edges, centers = [], [], []
    for p in itertools.product((-3, -1, 1, 3), repeat=3):
        nmaj = len(_major_axes(p))
        if nmaj == 3:
            corners.append(p)
        elif nmaj == 2:
            edges.append(p)
        elif nmaj == 1:
            centers.append(p)
    corners.sort()

    def edge_key(p: Vec) -> tuple:
        i, j = _major_axes(p)
        (m,) = (a for a in range(3) if abs(p[a]) == 1)
        # pair identity first, then minor +1 before minor -1
        return (i, j, _sgn(p[i]), _sgn(p[j]), -_sgn(p[m]))

    edges.sort(key=edge_key)

    def center_key(p: Vec) -> tuple:
        (a,) = _major_axes(p)
        return (2 * a + (0 if p[a] > 0 else 1), p)

    centers.sort(key=center_key)
    return tuple(corners), tuple(edges), tuple(centers)


CORNER_POSITIONS, EDGE_POSITIONS, CENTER_POSITIONS = _build_positions()
_CORNER_INDEX = {p: i for i, p in enumerate(CORNER_POSITIONS)}
_EDGE_INDEX = {p: i for i, p in enumerate(EDGE_POSITIONS)}
_CENTER_INDEX = {p: i for i, p in enumerate(CENTER_POSITIONS)}


def _edge_stickers(p: Vec) -> tuple[Vec, Vec]:
    """(marked, other) sticker normals of an edge piece, chirality rule."""
    i, j = _major_axes(p)
    (m,) = (a for a in range(3) if abs(p[a]) == 1)
    u = _unit(i, _sgn(p[i]))
    v = _unit(j, _sgn(p[j]))
    w = _unit(m, _sgn(p[m]))
    return (u, v) if _det(u, v, w) > 0 else (v, u)


def _corner_stickers(p: Vec) -> tuple[Vec, Vec, Vec]:
    """Sticker normals of a corner in fibre order 0, 1, 2.

    Order 0 is the up/down sticker; applying the one-third turn about the
    piece diagonal toward the center (right-hand rule) sends sticker b to
    where sticker b+1 sits.  The turn cycles the local axes 0->2->1 when the
    octant sign product is positive and 0->1->2 otherwise (sign of the
    triple product of the sticker normals against the turn axis).
    """
    prod = _sgn(p[0]) * _sgn(p[1]) * _sgn(p[2])
    nxt = {0: 2, 2: 1, 1: 0} if prod > 0 else {0: 1, 1: 2, 2: 0}
    a = 1
    seq = (a, nxt[a], nxt[nxt[a]])
    return tuple(_unit(ax, _sgn(p[ax])) for ax in seq)  # type: ignore[return-value]


EDGE_STICKERS: tuple[tuple[Vec, Vec], ...] = tuple(
    _edge_stickers(p) for p in EDGE_POSITIONS
)
CORNER_STICKERS: tuple[tuple[Vec, Vec, Vec], ...] = tuple(
    _corner_stickers(p) for p in CORNER_POSITIONS
)
def _center_sticker(p: Vec) -> Vec:
    (a,) = _major_axes(p)
    return _unit(a, _sgn(p[a]))


CENTER_STICKERS: tuple[Vec, ...] = tuple(
    _center_sticker(p) for p in CENTER_POSITIONS
)

# slab of every move: (axis, layer); layer 3 is the outer face the move is
# named after, 1 and -1 the inner slabs, -3 the opposite outer face
MOVE_SLABS: dict[str, tuple[int, int]] = {
    "R": (0, 3),
    "MR": (0, 1),
    "ML": (0, -1),
    "L": (0, -3),
    "U": (1, 3),
    "MU": (1, 1),
    "MD": (1, -1),
    "D": (1, -3),
    "F": (2, 3),
    "MF": (2, 1),
    "MB": (2, -1),
    "B": (2, -3),
}


class GeometryError(RuntimeError):
    """The geometric model failed one of its construction certificates."""


@cache
def move_components(
    axis: int, layer: int
) -> tuple[
    tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]
]:
    """(edge twists, edge perm, corner twists, corner perm, center perm) of
    one slab quarter-turn.

    perm[i] is the slot the piece in slot i moves to; the twist is stored at
    the destination slot.  Certified: every sticker of a moved piece must
    land with the same fibre offset, otherwise the move would not have
    wreath coordinates at all.
    """
    sense = -1 if layer > 0 else 1

    def rot(v: Vec) -> Vec:
        return rotate(v, axis, sense)

    edge_perm = list(range(NUM_EDGES))
    edge_tw = [0] * NUM_EDGES
    for i, p in enumerate(EDGE_POSITIONS):
        if p[axis] != layer:
            continue
        j = _EDGE_INDEX[rot(p)]
        edge_perm[i] = j
        src, dst = EDGE_STICKERS[i], EDGE_STICKERS[j]
        off = dst.index(rot(src[0]))
        for b in range(2):
            if rot(src[b]) != dst[(b + off) % 2]:
                raise GeometryError(f"edge sticker map not a twist at {p}")
        edge_tw[j] = off

    corner_perm = list(range(NUM_CORNERS))
    corner_tw = [0] * NUM_CORNERS
    for i, p in enumerate(CORNER_POSITIONS):
        if p[axis] != layer:
            continue
        j = _CORNER_INDEX[rot(p)]
        corner_perm[i] = j
        src, dst = CORNER_STICKERS[i], CORNER_STICKERS[j]
        off = dst.index(rot(src[0]))
        for b in range(3):
            if rot(src[b]) != dst[(b + off) % 3]:
                raise GeometryError(f"corner sticker map not a twist at {p}")
        corner_tw[j] = off

    center_perm = list(range(NUM_CENTERS))
    for i, p in enumerate(CENTER_POSITIONS):
        if p[axis] != layer:
            continue
        center_perm[i] = _CENTER_INDEX[rot(p)]

    return (
        tuple(edge_tw),
        tuple(edge_perm),
        tuple(corner_tw),
        tuple(corner_perm),
        tuple(center_perm),
    )


def sticker_color(normal: Vec) -> int:
    """Color of a sticker in the solved assembly: the face it lies on."""
    return FACE_OF[normal]


def validate_geometry() -> list[tuple[str, bool, str]]:
    """Certificates of the piece model.  Returns (name, ok, detail) rows."""
    checks: list[tuple[str, bool, str]] = []

    ok = (
        len(set(CORNER_POSITIONS)) == NUM_CORNERS
        and len(set(EDGE_POSITIONS)) == NUM_EDGES
        and len(set(CENTER_POSITIONS)) == NUM_CENTERS
    )
    checks.append(("piece counts 8/24/24", ok, ""))

    # the two pieces of a pair carry the same color set; distinct pairs differ
    pair_colors = []
    ok = True
    for k in range(NUM_EDGE_PAIRS):
        a = frozenset(sticker_color(s) for s in EDGE_STICKERS[2 * k])
        b = frozenset(sticker_color(s) for s in EDGE_STICKERS[2 * k + 1])
        ok = ok and a == b and len(a) == 2
        pair_colors.append(a)
    ok = ok and len(set(pair_colors)) == NUM_EDGE_PAIRS
    checks.append(("edge pairs {2k,2k+1} share colors, pairwise distinct", ok, ""))

    ok = True
    for k in range(NUM_CENTER_BLOCKS):
        cols = {sticker_color(CENTER_STICKERS[i]) for i in range(4 * k, 4 * k + 4)}
        ok = ok and cols == {k}
    checks.append(("center blocks {4k..4k+3} monochrome per face", ok, ""))

    # marked stickers of a pair must land on different faces in the solved
    # coloring, otherwise relabeling the pair would be visible
    bad = [
        k
        for k in range(NUM_EDGE_PAIRS)
        if sticker_color(EDGE_STICKERS[2 * k][0])
        == sticker_color(EDGE_STICKERS[2 * k + 1][0])
    ]
    checks.append(
        ("edge marking distinguishes each pair", not bad, f"pairs {bad}" if bad else "")
    )

    ok = True
    detail = ""
    for name, (axis, layer) in MOVE_SLABS.items():
        try:
            etw, ep, ctw, cp, zp = move_components(axis, layer)
        except GeometryError as e:
            ok, detail = False, f"{name}: {e}"
            break
        slab_e = {i for i, p in enumerate(EDGE_POSITIONS) if p[axis] == layer}
        slab_c = {i for i, p in enumerate(CORNER_POSITIONS) if p[axis] == layer}
        slab_z = {i for i, p in enumerate(CENTER_POSITIONS) if p[axis] == layer}
        ok = ok and {ep[i] for i in slab_e} == slab_e
        ok = ok and all(ep[i] == i for i in range(NUM_EDGES) if i not in slab_e)
        ok = ok and {cp[i] for i in slab_c} == slab_c
        ok = ok and all(cp[i] == i for i in range(NUM_CORNERS) if i not in slab_c)
        ok = ok and {zp[i] for i in slab_z} == slab_z
        ok = ok and all(zp[i] == i for i in range(NUM_CENTERS) if i not in slab_z)
        if not ok:
            detail = f"{name}: slab not stable"
            break
    checks.append(("slice moves permute their slab only", ok, detail))

    return checks
