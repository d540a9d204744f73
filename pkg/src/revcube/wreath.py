"""Twisted permutations: one factor C_k wr S_n of the assembly group.

An element is a pair (twists, perm): perm moves n pieces, twists[j] says how
the piece arriving at slot j is turned, in units of 1/k turns.  The product
stores the twist at the destination slot, which gives the composition law

    (r, s) * (t, u) == (r + s.t, s u)      with (s.t)[s(i)] == t[i],

the inverse (-(s^-1).r, s^-1), and the left action (r, s).c == r + s.c on
twist vectors c.  Only k == 2 (flips) and k == 3 (thirds of a turn) occur.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm as pm


@dataclass(frozen=True)
class WreathElem:
    """Element of C_k wr S_n in (twists, perm) coordinates."""

    k: int
    twists: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k not in (2, 3):
            raise ValueError(f"unsupported twist modulus k={self.k}")
        if len(self.twists) != len(self.perm):
            raise ValueError(
                f"degree mismatch: {len(self.twists)} twists vs "
                f"{len(self.perm)} permutation entries"
            )
        if not all(isinstance(t, int) and 0 <= t < self.k for t in self.twists):
            raise ValueError(f"twists must lie in 0..{self.k - 1}: {self.twists!r}")
        pm.check_perm(self.perm)

    @classmethod
    def identity(cls, k: int, n: int) -> "WreathElem":
        return cls(k, (0,) * n, pm.identity(n))

    @property
    def degree(self) -> int:
        return len(self.perm)

    def _require_compatible(self, other: "WreathElem") -> None:
        if self.k != other.k:
            raise ValueError(f"modulus mismatch: {self.k} vs {other.k}")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __mul__(self, other: "WreathElem") -> "WreathElem":
        """Group product; other acts first."""
        self._require_compatible(other)
        tw = list(self.twists)
        for i, j in enumerate(self.perm):
            tw[j] = (self.twists[j] + other.twists[i]) % self.k
        return WreathElem(self.k, tuple(tw), pm.compose(self.perm, other.perm))

    def inverse(self) -> "WreathElem":
        inv = pm.inverse(self.perm)
        # (s^-1 . r)[j] == r[s(j)], negated mod k
        tw = tuple((-self.twists[self.perm[j]]) % self.k for j in range(self.degree))
        return WreathElem(self.k, tw, inv)

    def act(self, vector: tuple[int, ...]) -> tuple[int, ...]:
        """Left action on a twist vector: permute entries, then add twists."""
        if len(vector) != self.degree:
            raise ValueError(f"degree mismatch: {len(vector)} vs {self.degree}")
        out = [0] * self.degree
        for i, j in enumerate(self.perm):
            out[j] = (self.twists[j] + vector[i]) % self.k
        return tuple(out)

    def twist_sum(self) -> int:
        """Total twist mod k.  A homomorphism to C_k: the permutation part
        only reindexes the summands."""
        return sum(self.twists) % self.k

    def to_point_perm(self) -> tuple[int, ...]:
        """Faithful permutation of the n*k sticker points.

        Point i*k + b is sticker b of piece i; it maps to perm[i]*k + (b +
        twists[perm[i]]) mod k.  This is an injective homomorphism, so group
        facts can be checked on plain permutations.
        """
        k = self.k
        out = [0] * (self.degree * k)
        for i, j in enumerate(self.perm):
            t = self.twists[j]
            for b in range(k):
                out[i * k + b] = j * k + (b + t) % k
        return tuple(out)
