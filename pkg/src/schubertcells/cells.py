"""Schubert cells of GL_n(F_q) and their incidence structures.

The Bruhat cell BwB decomposes into q^l(w) cosets kB, one per parameter
tuple (c_1, ..., c_l) along a fixed reduced word of w, with representative
x_{i_1}(c_1) n_{i_1}^{-1} ... x_{i_l}(c_l) n_{i_l}^{-1}. Projecting a cell
to G/P_i and G/P_j yields an incidence structure whose points are the
i-coset keys, lines the j-coset keys, and whose incidences are the pairs
realized by a common coset of the cell.

Thickness (the number of points incident with each line) admits a closed
form: factor w = u * z * v for the ordered pair (i, j); every line of the
structure carries exactly q^l(z) points. Everything here computes both
sides: the closed form at the Weyl-group level for any root-system type,
and the brute-force enumeration for type A, where matrices are available.

Cell enumeration always walks w's canonical reduced word; fiber and
representative computations walk the concatenation u-word + z-word +
v-word, which is again reduced since the lengths add.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .chevalley import (
    FlagCanonical,
    MatrixGF,
    SubspaceCanonical,
    coset_key_borel,
    coset_key_parabolic,
    is_in_borel,
    n_simple_inv,
    x_root,
)
from .errors import (
    CellTooLarge,
    IndexOutOfRange,
    InvalidQ,
    KeyNotFound,
    LineNotInStructure,
    SystemMismatch,
)
from .gf import FieldElement, FieldSpec, enumerate_field, factor_prime_power
from .incidence import IncidenceStructure
from .parabolic import factorize_uzv, parabolic, quotient_reps
from .rootsys import RootSystem, WeylElement, render_word, weyl_enumerate

CELL_GUARD = 10**7


@dataclass(frozen=True)
class CellPoint:
    """One coset kB of the cell: its parameters, representative matrix and
    flag key. Distinct parameters always give distinct flags."""

    params: tuple[FieldElement, ...]
    matrix: MatrixGF
    borel_key: FlagCanonical


def _check_type_a(w: WeylElement, spec: FieldSpec, n: int) -> None:
    if w.rs.letter != "A" or w.rs.rank != n - 1:
        raise SystemMismatch(
            f"matrix enumeration needs a type A element of rank {n - 1}, got {w.rs.label}"
        )
    if n < 2:
        raise SystemMismatch("matrix enumeration needs n >= 2")


def _letter_factors(spec: FieldSpec, n: int, word) -> list[dict]:
    """Per-letter maps c -> x_i(c) n_i^{-1}, shared along the product walk."""
    cache: dict[int, dict] = {}
    out = []
    for i in word:
        if i not in cache:
            ninv = n_simple_inv(spec, n, i)
            cache[i] = {
                c: x_root(spec, n, i, i + 1, c) @ ninv for c in enumerate_field(spec)
            }
        out.append(cache[i])
    return out


def _word_products(spec: FieldSpec, n: int, word):
    """Yield (params, matrix) for every parameter tuple along the word, in
    lexicographic parameter order, reusing prefix products."""
    factors = _letter_factors(spec, n, word)
    elems = enumerate_field(spec)
    start = MatrixGF.identity(spec, n)

    def walk(depth: int, acc: MatrixGF, params: tuple):
        if depth == len(word):
            yield params, acc
            return
        for c in elems:
            yield from walk(depth + 1, acc @ factors[depth][c], params + (c,))

    yield from walk(0, start, ())


@lru_cache(maxsize=None)
def _cell_points(w: WeylElement, spec: FieldSpec, n: int) -> tuple[CellPoint, ...]:
    return tuple(
        CellPoint(params, m, coset_key_borel(m))
        for params, m in _word_products(spec, n, w.word)
    )


def enumerate_cell(
    w: WeylElement, spec: FieldSpec, n: int, guard: int = CELL_GUARD
) -> tuple[CellPoint, ...]:
    """All q^l(w) cosets of B in BwB, in lexicographic parameter order."""
    _check_type_a(w, spec, n)
    size = spec.q ** w.length
    if size > guard:
        raise CellTooLarge(f"cell has {size} points, guard is {guard}")
    return _cell_points(w, spec, n)


@dataclass
class SchubertIncidence:
    """The (i, j) incidence structure of one Schubert cell."""

    w: WeylElement
    i: int
    j: int
    structure: IncidenceStructure
    per_line_counts: dict

    @property
    def spec(self) -> FieldSpec:
        return self.structure.points[0].spec

    @property
    def n(self) -> int:
        return self.structure.points[0].n


def _pair_indices(w: WeylElement, i: int, j: int) -> None:
    w.rs.check_index(i)
    w.rs.check_index(j)
    if i == j:
        raise IndexOutOfRange(f"need two distinct parabolic indices, got i = j = {i}")


def build_incidence(
    w: WeylElement, i: int, j: int, spec: FieldSpec, n: int, guard: int = CELL_GUARD
) -> SchubertIncidence:
    """Project the cell to G/P_i (points) and G/P_j (lines); incidence is
    existential, one pair per coset of the cell, deduplicated."""
    _pair_indices(w, i, j)
    cell = enumerate_cell(w, spec, n, guard)
    pairs = {(pt.borel_key.steps[i - 1], pt.borel_key.steps[j - 1]) for pt in cell}
    points = tuple(sorted({p for p, _ in pairs}, key=lambda s: s.sort_key))
    lines = tuple(sorted({l for _, l in pairs}, key=lambda s: s.sort_key))
    counts: dict = {l: 0 for l in lines}
    for _, l in pairs:
        counts[l] += 1
    structure = IncidenceStructure(points, lines, frozenset(pairs))
    return SchubertIncidence(w, i, j, structure, counts)


def thickness_formula(w: WeylElement, i: int, j: int, q: int) -> int:
    """Points per line of the (i, j) structure: q^l(z) where w = u * z * v.

    Works at the Weyl-group level for every supported root-system type; no
    matrix model is involved.
    """
    try:
        factor_prime_power(q)
    except ValueError as exc:
        raise InvalidQ(str(exc)) from None
    f = factorize_uzv(w, i, j)
    return q ** f.length_z


@dataclass
class TheoremReport:
    """Formula-against-enumeration comparison for one (w, i, j, q, n)."""

    w: WeylElement
    i: int
    j: int
    q: int
    n: int
    formula: int
    points: int
    observed: tuple[int, ...]
    all_agree: bool
    violations: tuple

    def to_json(self) -> dict:
        return {
            "w": render_word(self.w.word),
            "i": self.i,
            "j": self.j,
            "q": self.q,
            "n": self.n,
            "formula": self.formula,
            "lines": len(self.observed),
            "points": self.points,
            "all_agree": self.all_agree,
            "violations": [l.to_json() for l in self.violations],
        }


def verify_theorem(
    w: WeylElement, i: int, j: int, spec: FieldSpec, n: int, guard: int = CELL_GUARD
) -> TheoremReport:
    """Compare the closed-form thickness with the enumerated per-line
    counts; agreement means every line carries exactly q^l(z) points."""
    inc = build_incidence(w, i, j, spec, n, guard)
    formula = thickness_formula(w, i, j, spec.q)
    violations = tuple(
        l for l in inc.structure.lines if inc.per_line_counts[l] != formula
    )
    observed = tuple(inc.per_line_counts[l] for l in inc.structure.lines)
    return TheoremReport(
        w, i, j, spec.q, n, formula, len(inc.structure.points), observed,
        not violations, violations,
    )


@lru_cache(maxsize=None)
def _coset_rep_table(spec: FieldSpec, n: int, i: int):
    """Canonical representative per coset of P_i: for each minimal-length
    coset representative u' and parameter tuple, the product along u'-word,
    keyed by the coset's subspace key. Covers all of G/P_i."""
    from .rootsys import rootsystem_make

    rs = rootsystem_make("A", n - 1)
    table: dict[SubspaceCanonical, tuple] = {}
    for u in quotient_reps(parabolic(rs), parabolic(rs, i)):
        for params, m in _word_products(spec, n, u.word):
            key = coset_key_parabolic(m, i)
            table[key] = (u, params, m)
    return table


def fiber_parameterization(
    line_key: SubspaceCanonical, w: WeylElement, i: int, j: int, spec: FieldSpec, n: int
) -> dict:
    """Map each parameter tuple d in F^l(z) to the point key of
    rep(line) * x_{k_1}(d_1) n_{k_1}^{-1} ... mod P_i. The map is injective,
    so the fiber over the line has exactly q^l(z) points."""
    _check_type_a(w, spec, n)
    _pair_indices(w, i, j)
    f = factorize_uzv(w, i, j)
    table = _coset_rep_table(spec, n, j)
    entry = table.get(line_key)
    if entry is None or entry[0] != f.u:
        raise LineNotInStructure(
            f"{line_key} is not a line of the ({i}, {j}) structure of w = {w}"
        )
    base = entry[2]
    return {
        params: coset_key_parabolic(base @ m, i)
        for params, m in _word_products(spec, n, f.z.word)
    }


def fiber_points(
    line_key: SubspaceCanonical, w: WeylElement, i: int, j: int, spec: FieldSpec, n: int
) -> frozenset:
    """The set of points incident with the given line."""
    return frozenset(fiber_parameterization(line_key, w, i, j, spec, n).values())


def incidence_ratio_test(
    point_key: SubspaceCanonical, line_key: SubspaceCanonical, inc: SchubertIncidence
) -> bool:
    """Shortcut incidence test g h^{-1} in B, where g and h are the
    canonical coset representatives of the point and the line."""
    if point_key not in set(inc.structure.points):
        raise KeyNotFound(f"point {point_key} not in the structure")
    if line_key not in set(inc.structure.lines):
        raise KeyNotFound(f"line {line_key} not in the structure")
    spec, n = inc.spec, inc.n
    g = _coset_rep_table(spec, n, inc.i)[point_key][2]
    h = _coset_rep_table(spec, n, inc.j)[line_key][2]
    return is_in_borel(g @ h.inverse())


def thin_census(rs: RootSystem, q: int, guard: int = 10**6):
    """All triples (w, i, j) whose (i, j) structure is thin (at most two
    points per line): thickness q^l(z) is at most 2 exactly when z is the
    identity, or z = s_i with q = 2."""
    try:
        factor_prime_power(q)
    except ValueError as exc:
        raise InvalidQ(str(exc)) from None
    out = []
    for w in weyl_enumerate(rs, guard):
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                if i == j:
                    continue
                f = factorize_uzv(w, i, j)
                if f.length_z == 0 or (q == 2 and f.length_z == 1):
                    out.append((w, i, j))
    out.sort(key=lambda t: (t[0].length, t[0].word, t[1], t[2]))
    return tuple(out)
