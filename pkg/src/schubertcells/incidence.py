"""Finite geometry: subspace lattices of F_q^n, lattice axiom checks,
projective incidence structures and the ovoid conditions.

The subspace lattice is fully materialized (desk scale), with elements
keyed by their canonical echelon bases. Axiom checkers work against a small
lattice protocol (elements, leq, meet, join, rank_of), so they run equally
on hand-built finite lattices such as the pentagon N5, the canonical
non-modular example.

An ovoid is a point set that is thin (O1: no line carries three of its
points) and maximal (O2: at each of its points the tangent lines sweep out
exactly a hyperplane). The search enumerates thin sets by backtracking,
pruning on O1 (which is hereditary), and reports every nonempty candidate
that also passes O2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .chevalley import SubspaceCanonical, rref, right_kernel
from .errors import PointNotInSet, SpecMismatch, TooLarge
from .gf import FieldSpec, field_make

LATTICE_GUARD = 10**7


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for t in range(k):
        num *= q ** (n - t) - 1
        den *= q ** (t + 1) - 1
    assert num % den == 0
    return num // den


def _check_compatible(a: SubspaceCanonical, b: SubspaceCanonical) -> None:
    if a.spec != b.spec or a.n != b.n:
        raise SpecMismatch("subspaces of different ambient spaces")


def join(a: SubspaceCanonical, b: SubspaceCanonical) -> SubspaceCanonical:
    """Span of the union."""
    _check_compatible(a, b)
    basis, _ = rref(a.spec, list(a.basis) + list(b.basis))
    return SubspaceCanonical(a.spec, a.n, len(basis), basis)


def meet(a: SubspaceCanonical, b: SubspaceCanonical) -> SubspaceCanonical:
    """Intersection, via the left kernel of the stacked bases."""
    _check_compatible(a, b)
    spec, n = a.spec, a.n
    stacked = list(a.basis) + list(b.basis)
    if not a.basis or not b.basis:
        return SubspaceCanonical(spec, n, 0, ())
    m = len(stacked)
    transposed = [tuple(stacked[t][r] for t in range(m)) for r in range(n)]
    combos = []
    for x in right_kernel(spec, transposed, m):
        vec = [0] * n
        for t, coeff in enumerate(x[: len(a.basis)]):
            if coeff:
                vec = [
                    spec.add_ix(v, spec.mul_ix(coeff, w))
                    for v, w in zip(vec, a.basis[t])
                ]
        combos.append(tuple(vec))
    basis, _ = rref(spec, combos) if combos else ((), ())
    return SubspaceCanonical(spec, n, len(basis), basis)


def _echelon_bases(spec: FieldSpec, n: int, k: int):
    """All reduced-echelon bases of k-dimensional subspaces of F_q^n."""
    if k == 0:
        yield ()
        return
    indices = range(spec.q)
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivot_set
        ]
        for fill in product(indices, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), value in zip(free, fill):
                rows[r][c] = value
            yield tuple(tuple(r) for r in rows)


class SubspaceLattice:
    """All subspaces of F_q^n under inclusion, materialized."""

    def __init__(self, spec: FieldSpec, n: int, elements):
        self.spec = spec
        self.n = n
        self.elements = tuple(elements)
        self._meet_cache: dict = {}
        self._join_cache: dict = {}
        self._leq_cache: dict = {}
        self._points_on_cache: dict = {}
        self._pair_line_cache: dict = {}
        self._hyperplane_sets = None

    # lattice protocol

    def leq(self, a: SubspaceCanonical, b: SubspaceCanonical) -> bool:
        key = (a, b)
        try:
            return self._leq_cache[key]
        except KeyError:
            out = a.is_subspace_of(b)
            self._leq_cache[key] = out
            return out

    def meet(self, a, b):
        key = (a, b)
        try:
            return self._meet_cache[key]
        except KeyError:
            out = meet(a, b)
            self._meet_cache[key] = out
            return out

    def join(self, a, b):
        key = (a, b)
        try:
            return self._join_cache[key]
        except KeyError:
            out = join(a, b)
            self._join_cache[key] = out
            return out

    def rank_of(self, a: SubspaceCanonical) -> int:
        return a.dim

    # geometry helpers

    def by_dim(self, d: int) -> tuple[SubspaceCanonical, ...]:
        return tuple(e for e in self.elements if e.dim == d)

    def bottom(self) -> SubspaceCanonical:
        return self.by_dim(0)[0]

    def top(self) -> SubspaceCanonical:
        return self.by_dim(self.n)[0]

    def points(self) -> tuple[SubspaceCanonical, ...]:
        return self.by_dim(1)

    def lines(self) -> tuple[SubspaceCanonical, ...]:
        return self.by_dim(2)

    def hyperplanes(self) -> tuple[SubspaceCanonical, ...]:
        return self.by_dim(self.n - 1)

    def points_on(self, sub: SubspaceCanonical) -> frozenset[SubspaceCanonical]:
        """The 1-dimensional subspaces contained in sub."""
        try:
            return self._points_on_cache[sub]
        except KeyError:
            pass
        spec = self.spec
        seen = set()
        for coeffs in product(range(spec.q), repeat=sub.dim):
            if not any(coeffs):
                continue
            vec = [0] * self.n
            for c, row in zip(coeffs, sub.basis):
                if c:
                    vec = [spec.add_ix(v, spec.mul_ix(c, w)) for v, w in zip(vec, row)]
            lead = next(i for i, x in enumerate(vec) if x)
            inv = spec.inv_ix(vec[lead])
            seen.add(tuple(spec.mul_ix(inv, x) for x in vec))
        out = frozenset(
            SubspaceCanonical(spec, self.n, 1, (row,)) for row in seen
        )
        self._points_on_cache[sub] = out
        return out

    def line_through(self, p: SubspaceCanonical, q: SubspaceCanonical) -> SubspaceCanonical:
        key = (p, q)
        try:
            return self._pair_line_cache[key]
        except KeyError:
            out = self.join(p, q)
            self._pair_line_cache[key] = out
            return out

    def hyperplane_point_sets(self) -> dict:
        if self._hyperplane_sets is None:
            self._hyperplane_sets = {
                self.points_on(h): h for h in self.hyperplanes()
            }
        return self._hyperplane_sets

    def rank12_structure(self) -> "IncidenceStructure":
        """Points and lines of the lattice with inherited incidence."""
        points = tuple(sorted(self.points(), key=lambda s: s.sort_key))
        lines = tuple(sorted(self.lines(), key=lambda s: s.sort_key))
        incidence = frozenset(
            (p, l) for l in lines for p in self.points_on(l)
        )
        return IncidenceStructure(points, lines, incidence)

    def __len__(self):
        return len(self.elements)


def lattice_make(spec: FieldSpec, n: int, guard: int = LATTICE_GUARD) -> SubspaceLattice:
    """Materialize the subspace lattice of F_q^n by echelon enumeration."""
    if n < 0:
        raise ValueError(f"dimension must be nonnegative, got {n}")
    total = sum(gaussian_binomial(n, k, spec.q) for k in range(n + 1))
    if total > guard:
        raise TooLarge(f"lattice would hold {total} subspaces, guard is {guard}")
    elements = []
    for k in range(n + 1):
        for basis in _echelon_bases(spec, n, k):
            elements.append(SubspaceCanonical(spec, n, k, basis))
    elements.sort(key=lambda s: s.sort_key)
    assert len(elements) == total
    return SubspaceLattice(spec, n, elements)


class TableLattice:
    """Finite lattice built from an explicit order relation; raises if meets
    or joins are missing (the input is then not a lattice)."""

    def __init__(self, elements, leq_fn):
        self.elements = tuple(elements)
        order = {}
        for a in self.elements:
            for b in self.elements:
                order[(a, b)] = bool(leq_fn(a, b)) or a == b
        for a in self.elements:
            for b in self.elements:
                if a != b and order[(a, b)] and order[(b, a)]:
                    raise ValueError(f"order not antisymmetric at {a!r}, {b!r}")
                for c in self.elements:
                    if order[(a, b)] and order[(b, c)] and not order[(a, c)]:
                        raise ValueError("order not transitive")
        self._order = order
        self._meet = {}
        self._join = {}
        for a in self.elements:
            for b in self.elements:
                lower = [c for c in self.elements if order[(c, a)] and order[(c, b)]]
                infs = [c for c in lower if all(order[(d, c)] for d in lower)]
                upper = [c for c in self.elements if order[(a, c)] and order[(b, c)]]
                sups = [c for c in upper if all(order[(c, d)] for d in upper)]
                if len(infs) != 1 or len(sups) != 1:
                    raise ValueError(f"not a lattice at pair {a!r}, {b!r}")
                self._meet[(a, b)] = infs[0]
                self._join[(a, b)] = sups[0]

    def leq(self, a, b) -> bool:
        return self._order[(a, b)]

    def meet(self, a, b):
        return self._meet[(a, b)]

    def join(self, a, b):
        return self._join[(a, b)]

    def rank_of(self, a) -> int:
        return _heights(self)[a]


def _heights(lat) -> dict:
    """Longest-chain height of each element above the bottom."""
    elements = list(lat.elements)
    below = {a: [b for b in elements if b != a and lat.leq(b, a)] for a in elements}
    heights = {}
    for a in sorted(elements, key=lambda e: len(below[e])):
        heights[a] = max((heights[b] + 1 for b in below[a]), default=0)
    return heights


def _covers(lat):
    elements = list(lat.elements)
    out = []
    for a in elements:
        ups = [b for b in elements if b != a and lat.leq(a, b)]
        for b in ups:
            if not any(c != b and lat.leq(c, b) for c in ups):
                out.append((a, b))
    return out


def check_modular(lat, samples: int | None = None, seed: int = 0):
    """Modular law x v (y ^ z) = (x v y) ^ z for x <= z; exhaustive by
    default, sampled when a sample count is given. Returns (ok, witness)."""
    elements = list(lat.elements)
    if samples is None:
        triples = (
            (x, y, z)
            for z in elements
            for x in elements
            if lat.leq(x, z)
            for y in elements
        )
    else:
        rng = random.Random(seed)
        below = {z: [x for x in elements if lat.leq(x, z)] for z in elements}
        triples = (
            (rng.choice(below[z]), rng.choice(elements), z)
            for z in (rng.choice(elements) for _ in range(samples))
        )
    for x, y, z in triples:
        if lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), z):
            return False, (x, y, z)
    return True, None


def check_atomic(lat):
    """Every element is a join of atoms. Returns (ok, witness)."""
    elements = list(lat.elements)
    heights = _heights(lat)
    bottom = next(e for e in elements if heights[e] == 0)
    atoms = [a for a in elements if not any(
        b != a and b != bottom and lat.leq(b, a) for b in elements
    ) and a != bottom]
    for e in elements:
        acc = bottom
        for a in atoms:
            if lat.leq(a, e):
                acc = lat.join(acc, a)
        if acc != e:
            return False, e
    return True, None


def check_ranked(lat):
    """All maximal chains have equal length, i.e. every covering step raises
    the longest-chain height by exactly one. Returns (ok, witness)."""
    heights = _heights(lat)
    for a, b in _covers(lat):
        if heights[b] != heights[a] + 1:
            return False, (a, b)
    return True, None


def check_grassmann(lat, samples: int | None = None, seed: int = 0):
    """rank(x v y) + rank(x ^ y) = rank(x) + rank(y). Returns (ok, witness)."""
    elements = list(lat.elements)
    if samples is None:
        pairs = ((x, y) for x in elements for y in elements)
    else:
        rng = random.Random(seed)
        pairs = (
            (rng.choice(elements), rng.choice(elements)) for _ in range(samples)
        )
    for x, y in pairs:
        if lat.rank_of(lat.join(x, y)) + lat.rank_of(lat.meet(x, y)) != lat.rank_of(
            x
        ) + lat.rank_of(y):
            return False, (x, y)
    return True, None


@dataclass(frozen=True)
class IncidenceStructure:
    """Finite incidence structure: point keys, line keys, incidence pairs."""

    points: tuple
    lines: tuple
    incidence: frozenset

    def __post_init__(self):
        points = set(self.points)
        lines = set(self.lines)
        for p, l in self.incidence:
            if p not in points or l not in lines:
                raise ValueError("incidence pair outside points x lines")

    def points_of(self, line) -> frozenset:
        return frozenset(p for p, l in self.incidence if l == line)


@dataclass
class AxiomCheck:
    ok: bool
    witness: tuple | None = None

    def to_json(self):
        return {"pass": self.ok, "witness": _render_witness(self.witness)}


def _render_witness(w):
    if w is None:
        return None
    if isinstance(w, tuple):
        return [_render_witness(x) for x in w]
    if isinstance(w, SubspaceCanonical):
        return w.to_json()
    return str(w)


@dataclass
class ProjectiveAxiomsReport:
    unique_joining_line: AxiomCheck   # (a)
    veblen_young: AxiomCheck          # (b)
    thick_lines: AxiomCheck           # (c)
    noncollinear_exists: AxiomCheck   # (d)
    finite_chains: AxiomCheck         # (e)

    def all_pass(self) -> bool:
        return all(
            c.ok
            for c in (
                self.unique_joining_line,
                self.veblen_young,
                self.thick_lines,
                self.noncollinear_exists,
                self.finite_chains,
            )
        )

    def to_json(self):
        return {
            "a_unique_joining_line": self.unique_joining_line.to_json(),
            "b_veblen_young": self.veblen_young.to_json(),
            "c_thick_lines": self.thick_lines.to_json(),
            "d_noncollinear_exists": self.noncollinear_exists.to_json(),
            "e_finite_chains": self.finite_chains.to_json(),
        }


def check_projective_axioms(inc: IncidenceStructure) -> ProjectiveAxiomsReport:
    """Evaluate the projective-geometry axioms, with a witness per failure."""
    line_pts: dict = {l: set() for l in inc.lines}
    for p, l in inc.incidence:
        line_pts[l].add(p)
    pair_lines: dict = {}
    for l, pts in line_pts.items():
        for p1, p2 in combinations(sorted(pts, key=_point_order), 2):
            pair_lines.setdefault((p1, p2), []).append(l)

    def joining_lines(p1, p2):
        key = (p1, p2) if _point_order(p1) <= _point_order(p2) else (p2, p1)
        return pair_lines.get(key, [])

    # (a) two distinct points lie on exactly one common line
    axiom_a = AxiomCheck(True)
    for p1, p2 in combinations(sorted(inc.points, key=_point_order), 2):
        count = len(joining_lines(p1, p2))
        if count != 1:
            axiom_a = AxiomCheck(False, (p1, p2, count))
            break

    def collinear(p1, p2, p3):
        return any(p3 in line_pts[l] for l in joining_lines(p1, p2))

    # (d) three noncollinear points exist
    noncollinear = None
    for p1, p2, p3 in combinations(sorted(inc.points, key=_point_order), 3):
        if not collinear(p1, p2, p3):
            noncollinear = (p1, p2, p3)
            break
    axiom_d = AxiomCheck(noncollinear is not None)

    # (b) a line meeting two sides of a triangle away from their common
    # vertex also meets the third side; evaluated on triples whose sides
    # are unique so the check stays independent of an (a) failure
    axiom_b = AxiomCheck(True)
    done = False
    for p1, p2, p3 in combinations(sorted(inc.points, key=_point_order), 3):
        if done:
            break
        if collinear(p1, p2, p3):
            continue
        sides13 = joining_lines(p1, p3)
        sides23 = joining_lines(p2, p3)
        sides12 = joining_lines(p1, p2)
        if len(sides13) != 1 or len(sides23) != 1 or len(sides12) != 1:
            continue
        pts12 = line_pts[sides12[0]]
        for a in line_pts[sides13[0]]:
            if a == p3 or done:
                continue
            for b in line_pts[sides23[0]]:
                if b == p3 or b == a:
                    continue
                crossing = joining_lines(a, b)
                if any(line_pts[l] & pts12 for l in crossing):
                    continue
                axiom_b = AxiomCheck(False, (p1, p2, p3, a, b))
                done = True
                break

    # (c) every line carries at least three points
    axiom_c = AxiomCheck(True)
    for l in inc.lines:
        if len(line_pts[l]) < 3:
            axiom_c = AxiomCheck(False, (l, len(line_pts[l])))
            break

    # (e) chains of subspaces are finite; automatic for finite structures
    axiom_e = AxiomCheck(True)

    return ProjectiveAxiomsReport(axiom_a, axiom_b, axiom_c, axiom_d, axiom_e)


def _point_order(p):
    return p.sort_key if isinstance(p, SubspaceCanonical) else (0, repr(p))


def tangent_lines(points_o, p: SubspaceCanonical, lat: SubspaceLattice):
    """Lines through p meeting the point set exactly in {p}."""
    o = frozenset(points_o)
    if p not in o:
        raise PointNotInSet(f"{p} is not a point of the set")
    out = [
        l
        for l in lat.lines()
        if p in lat.points_on(l) and lat.points_on(l) & o == {p}
    ]
    return tuple(sorted(out, key=lambda s: s.sort_key))


@dataclass
class OvoidReport:
    thin_ok: bool                 # O1
    thin_witness: SubspaceCanonical | None
    maximal_ok: bool              # O2
    maximal_witness: SubspaceCanonical | None
    size: int

    def all_pass(self) -> bool:
        return self.thin_ok and self.maximal_ok

    def to_json(self):
        return {
            "O1": {
                "pass": self.thin_ok,
                "witness": None if self.thin_witness is None else self.thin_witness.to_json(),
            },
            "O2": {
                "pass": self.maximal_ok,
                "witness": None if self.maximal_witness is None else self.maximal_witness.to_json(),
            },
            "size": self.size,
        }


def check_ovoid(points_o, lat: SubspaceLattice) -> OvoidReport:
    """O1: every line meets the set in at most two points. O2: for each of
    its points, the tangent lines through it sweep out exactly the point set
    of one hyperplane."""
    o = frozenset(points_o)
    thin_ok, thin_witness = True, None
    for l in lat.lines():
        if len(lat.points_on(l) & o) > 2:
            thin_ok, thin_witness = False, l
            break
    maximal_ok, maximal_witness = True, None
    hyperplane_sets = lat.hyperplane_point_sets()
    for p in sorted(o, key=lambda s: s.sort_key):
        union = set()
        for l in lat.lines():
            pts = lat.points_on(l)
            if p in pts and pts & o == {p}:
                union |= pts
        if frozenset(union) not in hyperplane_sets:
            maximal_ok, maximal_witness = False, p
            break
    return OvoidReport(thin_ok, thin_witness, maximal_ok, maximal_witness, len(o))


def ovoid_search(lat: SubspaceLattice, max_results: int | None = None):
    """Backtracking search for ovoids: O1 prunes the tree (a third point on
    a line is never added), O2 is verified on every nonempty candidate."""
    points = sorted(lat.points(), key=lambda s: s.sort_key)
    lines = lat.lines()
    line_pts = {l: lat.points_on(l) for l in lines}
    lines_by_pt: dict = {p: [] for p in points}
    for l in lines:
        for p in line_pts[l]:
            lines_by_pt[p].append(l)
    hyperplane_sets = lat.hyperplane_point_sets()
    counts = {l: 0 for l in lines}
    current: list = []
    found: list = []

    def passes_maximality() -> bool:
        chosen = set(current)
        for p in current:
            union = set()
            for l in lines_by_pt[p]:
                if counts[l] == 1:  # tangent: p is its only chosen point
                    union |= line_pts[l]
            if frozenset(union) not in hyperplane_sets:
                return False
        return True

    def extend(start: int) -> None:
        if max_results is not None and len(found) >= max_results:
            return
        if current and passes_maximality():
            found.append(frozenset(current))
            if max_results is not None and len(found) >= max_results:
                return
        for idx in range(start, len(points)):
            p = points[idx]
            touched = lines_by_pt[p]
            if any(counts[l] >= 2 for l in touched):
                continue
            for l in touched:
                counts[l] += 1
            current.append(p)
            extend(idx + 1)
            current.pop()
            for l in touched:
                counts[l] -= 1

    extend(0)
    return tuple(found)


# point-set file format

def parse_point_set(doc: dict):
    """Parse {"field": {"p": .., "k": ..}, "n": .., "points": [[..], ..]}
    into (spec, n, points); raises ValueError on malformed input."""
    if not isinstance(doc, dict):
        raise ValueError("point-set document must be a JSON object")
    try:
        fld = doc["field"]
        p = int(fld["p"])
        k = int(fld.get("k", 1))
        n = int(doc["n"])
        vectors = doc["points"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed point-set document: {exc}") from None
    spec = field_make(p, k)
    if not isinstance(vectors, list):
        raise ValueError("points must be a list of coordinate vectors")
    points = []
    for vec in vectors:
        if not isinstance(vec, list) or len(vec) != n:
            raise ValueError(f"point {vec!r} is not a length-{n} vector")
        row = []
        for e in vec:
            if isinstance(e, list):
                row.append(spec.from_coeffs(e).ix)
            elif spec.k == 1:
                row.append(spec.from_int(int(e)).ix)
            else:
                row.append(spec.from_index(int(e)).ix)
        sub = SubspaceCanonical.from_vectors(spec, n, [row])
        if sub.dim != 1:
            raise ValueError(f"point {vec!r} does not span a 1-dimensional subspace")
        points.append(sub)
    return spec, n, tuple(dict.fromkeys(points))


def render_point_set(spec: FieldSpec, n: int, points) -> dict:
    """Inverse of parse_point_set, using canonical spanning vectors."""
    from .gf import FieldElement

    out = []
    for p in sorted(points, key=lambda s: s.sort_key):
        row = p.basis[0]
        if spec.k == 1:
            out.append([int(x) for x in row])
        else:
            out.append([list(FieldElement(spec, x).coeffs) for x in row])
    return {"field": {"p": spec.p, "k": spec.k}, "n": n, "points": out}
