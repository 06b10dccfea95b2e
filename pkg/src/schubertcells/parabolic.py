"""Standard parabolic subgroups of a Weyl group and coset combinatorics.

A ParabolicIndexSet names a standard parabolic W_J by the set of OMITTED
simple indices: omitted = {i} gives the maximal parabolic W_i generated by
all s_k with k != i, omitted = {i, j} gives W_i intersect W_j, and the empty
set gives the whole group. Minimal-length left coset representatives are
characterized by having no inversions among the parabolic's positive roots,
and are computed by stripping right descents that lie in the parabolic.

factorize_uzv produces the unique factorization w = u * z * v with u of
minimal length in u*W_j, z of minimal length in z*W_{i,j} inside W_j, and v
in W_{i,j}; lengths add up, and z is also a minimal coset representative
with respect to W_i. The thickness of the (i, j) incidence structure of the
Schubert cell of w is q raised to the length of z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotNested, SystemMismatch
from .rootsys import (
    Root,
    RootSystem,
    WeylElement,
    render_word,
    weyl_identity,
    weyl_mul,
    weyl_simple,
)


@dataclass(frozen=True)
class ParabolicIndexSet:
    """A standard parabolic subgroup, named by its omitted simple indices."""

    rs: RootSystem
    omitted: frozenset[int]

    def __post_init__(self):
        for i in self.omitted:
            self.rs.check_index(i)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rs.rank + 1) if i not in self.omitted)

    def __str__(self):
        omitted = ",".join(str(i) for i in sorted(self.omitted)) or "-"
        return f"W[{self.rs.label} omit {omitted}]"


def parabolic(rs: RootSystem, *omitted: int) -> ParabolicIndexSet:
    return ParabolicIndexSet(rs, frozenset(omitted))


def positive_roots_of(pi: ParabolicIndexSet) -> tuple[Root, ...]:
    """Positive roots supported on the non-omitted simple roots."""
    return tuple(
        root
        for root in pi.rs.positive_roots
        if all(root[i - 1] == 0 for i in pi.omitted)
    )


def contains(pi: ParabolicIndexSet, w: WeylElement) -> bool:
    """Whether w lies in W_J; true exactly when its word avoids omitted letters."""
    return all(i not in pi.omitted for i in w.word)


def _right_descent_in(w: WeylElement, generators) -> int | None:
    # i is a right descent of w exactly when column i of the action is negative
    rank = w.rs.rank
    for i in generators:
        if any(w.action[r][i - 1] < 0 for r in range(rank)):
            return i
    return None


def min_coset_rep(w: WeylElement, pi: ParabolicIndexSet) -> tuple[WeylElement, WeylElement]:
    """Split w = u * y with u minimal in u*W_J and y in W_J, lengths adding."""
    if w.rs != pi.rs:
        raise SystemMismatch(f"{w.rs} element against {pi.rs} parabolic")
    u = w
    y = weyl_identity(w.rs)
    gens = pi.generators
    while True:
        k = _right_descent_in(u, gens)
        if k is None:
            return u, y
        s = weyl_simple(w.rs, k)
        u = weyl_mul(u, s)
        y = weyl_mul(s, y)


def enumerate_parabolic(pi: ParabolicIndexSet) -> tuple[WeylElement, ...]:
    """All elements of W_J, ordered by length then word."""
    seen = {}
    e = weyl_identity(pi.rs)
    seen[e.action] = e
    frontier = [e]
    simples = [weyl_simple(pi.rs, i) for i in pi.generators]
    while frontier:
        fresh = []
        for w in frontier:
            for s in simples:
                ws = weyl_mul(w, s)
                if ws.action not in seen:
                    seen[ws.action] = ws
                    fresh.append(ws)
        frontier = fresh
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def quotient_reps(pi_big: ParabolicIndexSet, pi_small: ParabolicIndexSet) -> tuple[WeylElement, ...]:
    """Minimal-length representatives of the cosets w*W_small inside W_big."""
    if pi_big.rs != pi_small.rs:
        raise SystemMismatch(f"{pi_big} against {pi_small}")
    if not pi_big.omitted <= pi_small.omitted:
        raise NotNested(f"{pi_small} is not contained in {pi_big}")
    small_gens = tuple(i for i in pi_small.generators)
    rank = pi_big.rs.rank
    out = []
    for w in enumerate_parabolic(pi_big):
        # minimal in w*W_small iff no generator of W_small is a right descent
        if all(
            not any(w.action[r][i - 1] < 0 for r in range(rank))
            for i in small_gens
        ):
            out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class ParabolicFactorization:
    """The triple w = u * z * v attached to an ordered pair (i, j)."""

    u: WeylElement
    z: WeylElement
    v: WeylElement
    i: int
    j: int

    @property
    def w(self) -> WeylElement:
        return weyl_mul(weyl_mul(self.u, self.z), self.v)

    @property
    def length_z(self) -> int:
        return self.z.length

    def to_json(self) -> dict:
        return {
            "u": render_word(self.u.word),
            "z": render_word(self.z.word),
            "v": render_word(self.v.word),
            "i": self.i,
            "j": self.j,
            "length_z": self.length_z,
        }


def factorize_uzv(w: WeylElement, i: int, j: int) -> ParabolicFactorization:
    """The unique factorization w = u * z * v for the ordered pair (i, j)."""
    rs = w.rs
    rs.check_index(i)
    rs.check_index(j)
    if i == j:
        raise IndexOutOfRange(f"need two distinct parabolic indices, got i = j = {i}")
    u, y = min_coset_rep(w, parabolic(rs, j))
    z, v = min_coset_rep(y, parabolic(rs, i, j))
    return ParabolicFactorization(u, z, v, i, j)
