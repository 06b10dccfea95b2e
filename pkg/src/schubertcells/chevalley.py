"""The concrete type-A Chevalley group GL_n(F_q).

Matrices store their entries as field-element indices (see gf), which keeps
values hashable and arithmetic cheap; the FieldElement view is recovered
through accessors. Generator constructors take 1-based row/column labels
matching the usual notation x_{e_i - e_j}(c) = I + c E_{ij}; raw entry
access is 0-based.

Cosets g*P_i and g*B are canonicalized geometrically: g*P_i maps to the
reduced row echelon basis of the span of the first i columns of g (unique
per subspace, hence a perfect coset key), and g*B to the chain of those
keys for i = 1 .. n-1, i.e. the flag g maps the standard flag to.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, IndexOutOfRange, SpecMismatch
from .gf import FieldElement, FieldSpec

Rows = tuple[tuple[int, ...], ...]


# echelon-form linear algebra on index rows

def rref(spec: FieldSpec, rows) -> tuple[Rows, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        src = next((r for r in range(rank, m) if mat[r][col]), None)
        if src is None:
            continue
        mat[rank], mat[src] = mat[src], mat[rank]
        inv = spec.inv_ix(mat[rank][col])
        mat[rank] = [spec.mul_ix(inv, x) for x in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [
                    spec.sub_ix(x, spec.mul_ix(f, y)) for x, y in zip(mat[r], mat[rank])
                ]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return tuple(tuple(r) for r in mat[:rank]), tuple(pivots)


def reduce_vector(spec: FieldSpec, basis: Rows, pivots, vec) -> tuple[int, ...]:
    """Residual of vec after elimination against an echelon basis."""
    v = list(vec)
    for row, col in zip(basis, pivots):
        c = v[col]
        if c:
            v = [spec.sub_ix(x, spec.mul_ix(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def right_kernel(spec: FieldSpec, rows, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Basis of {v : rows @ v = 0}, one vector per free column."""
    basis, pivots = rref(spec, rows) if rows else ((), ())
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, col in zip(basis, pivots):
            v[col] = spec.neg_ix(row[free])
        out.append(tuple(v))
    return tuple(out)


@dataclass(frozen=True)
class MatrixGF:
    """Immutable n x n matrix over GF(q); rows hold element indices."""

    spec: FieldSpec
    n: int
    rows: Rows

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixGF":
        return cls(spec, n, tuple(tuple(int(r == c) for c in range(n)) for r in range(n)))

    @classmethod
    def from_elements(cls, spec: FieldSpec, entries) -> "MatrixGF":
        rows = []
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, FieldElement):
                    if e.spec != spec:
                        raise SpecMismatch(f"entry from {e.spec} in a {spec} matrix")
                    out.append(e.ix)
                else:
                    out.append(int(e) % spec.q if spec.k == 1 else int(e))
            rows.append(tuple(out))
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(spec, n, tuple(rows))

    def entry(self, r: int, c: int) -> FieldElement:
        return FieldElement(self.spec, self.rows[r][c])

    @property
    def entries(self) -> tuple[tuple[FieldElement, ...], ...]:
        return tuple(tuple(FieldElement(self.spec, x) for x in row) for row in self.rows)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} matrix times {other.spec} matrix")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")
        spec, n = self.spec, self.n
        a, b = self.rows, other.rows
        if spec.k == 1:
            p = spec.p
            rows = tuple(
                tuple(sum(a[r][t] * b[t][c] for t in range(n)) % p for c in range(n))
                for r in range(n)
            )
        else:
            add, mul = spec.add_ix, spec.mul_ix
            rows = []
            for r in range(n):
                row = []
                for c in range(n):
                    acc = 0
                    for t in range(n):
                        acc = add(acc, mul(a[r][t], b[t][c]))
                    row.append(acc)
                rows.append(tuple(row))
            rows = tuple(rows)
        return MatrixGF(spec, n, rows)

    def det(self) -> FieldElement:
        """Determinant by exact Gaussian elimination over the field."""
        spec, n = self.spec, self.n
        mat = [list(r) for r in self.rows]
        det = 1
        for col in range(n):
            src = next((r for r in range(col, n) if mat[r][col]), None)
            if src is None:
                return spec.zero()
            if src != col:
                mat[col], mat[src] = mat[src], mat[col]
                det = spec.neg_ix(det)
            det = spec.mul_ix(det, mat[col][col])
            inv = spec.inv_ix(mat[col][col])
            for r in range(col + 1, n):
                if mat[r][col]:
                    f = spec.mul_ix(mat[r][col], inv)
                    mat[r] = [
                        spec.sub_ix(x, spec.mul_ix(f, y))
                        for x, y in zip(mat[r], mat[col])
                    ]
        return FieldElement(spec, det)

    def inverse(self) -> "MatrixGF":
        spec, n = self.spec, self.n
        aug = [list(row) + [int(r == c) for c in range(n)] for r, row in enumerate(self.rows)]
        basis, pivots = rref(spec, aug)
        if pivots != tuple(range(n)):
            raise ValueError("matrix is not invertible")
        return MatrixGF(spec, n, tuple(tuple(row[n:]) for row in basis))

    def is_identity(self) -> bool:
        return self == MatrixGF.identity(self.spec, self.n)

    def to_json(self) -> list[list[str]]:
        return [[str(FieldElement(self.spec, x)) for x in row] for row in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(FieldElement(self.spec, x)) for x in row) for row in self.rows)


def _check_root_indices(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"row/column labels must lie in 1..{n}, got ({i}, {j})")
    if i == j:
        raise IndexOutOfRange("root subgroup labels need i != j")


def x_root(spec: FieldSpec, n: int, i: int, j: int, c: FieldElement) -> MatrixGF:
    """Elementary unipotent I + c E_{ij} (1-based labels, i != j)."""
    _check_root_indices(n, i, j)
    if c.spec != spec:
        raise SpecMismatch(f"parameter from {c.spec} for a {spec} matrix")
    rows = [[int(r == s) for s in range(n)] for r in range(n)]
    rows[i - 1][j - 1] = c.ix
    return MatrixGF(spec, n, tuple(tuple(r) for r in rows))


def n_simple(spec: FieldSpec, n: int, i: int) -> MatrixGF:
    """The Weyl representative x_i(1) x_{-i}(-1) x_i(1) for the i-th simple root.

    Equals the identity outside rows/columns (i, i+1), where it is the block
    [[0, 1], [-1, 0]].
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"simple index {i} out of range 1..{n - 1}")
    one = spec.one()
    return (
        x_root(spec, n, i, i + 1, one)
        @ x_root(spec, n, i + 1, i, -one)
        @ x_root(spec, n, i, i + 1, one)
    )


def n_simple_inv(spec: FieldSpec, n: int, i: int) -> MatrixGF:
    """Inverse of n_simple, as the reversed product of inverted factors."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"simple index {i} out of range 1..{n - 1}")
    one = spec.one()
    return (
        x_root(spec, n, i, i + 1, -one)
        @ x_root(spec, n, i + 1, i, one)
        @ x_root(spec, n, i, i + 1, -one)
    )


def h_torus(spec: FieldSpec, n: int, weights, d: FieldElement) -> MatrixGF:
    """Diagonal torus element diag(d^w1, ..., d^wn) for integer weights."""
    weights = list(weights)
    if len(weights) != n:
        raise ValueError(f"need {n} weights, got {len(weights)}")
    if d.is_zero():
        raise DivisionByZero("torus parameter must be invertible")
    rows = [[0] * n for _ in range(n)]
    for r, w in enumerate(weights):
        rows[r][r] = spec.pow_ix(d.ix, w)
    return MatrixGF(spec, n, tuple(tuple(r) for r in rows))


def is_in_borel(g: MatrixGF) -> bool:
    """Upper triangular test; B is the stabilizer of the standard flag."""
    return all(g.rows[r][c] == 0 for r in range(g.n) for c in range(r))


def is_in_parabolic(g: MatrixGF, i: int) -> bool:
    """Block upper triangular test for P_i = Stab(span{e_1..e_i})."""
    if not 1 <= i <= g.n:
        raise IndexOutOfRange(f"parabolic index {i} out of range 1..{g.n}")
    return all(g.rows[r][c] == 0 for r in range(i, g.n) for c in range(i))


@dataclass(frozen=True)
class SubspaceCanonical:
    """A subspace of F_q^n as its unique reduced-echelon basis (a coset key
    for g*P_dim)."""

    spec: FieldSpec
    n: int
    dim: int
    basis: Rows

    @classmethod
    def from_vectors(cls, spec: FieldSpec, n: int, vectors) -> "SubspaceCanonical":
        rows = []
        for vec in vectors:
            row = [
                (e.ix if isinstance(e, FieldElement) else int(e) % spec.p if spec.k == 1 else int(e))
                for e in vec
            ]
            if len(row) != n:
                raise ValueError(f"vector length {len(row)} != {n}")
            rows.append(row)
        basis, _ = rref(spec, rows)
        return cls(spec, n, len(basis), basis)

    @property
    def sort_key(self):
        return (self.dim, self.basis)

    def contains_vector(self, vec) -> bool:
        pivots = tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)
        residual = reduce_vector(self.spec, self.basis, pivots, vec)
        return not any(residual)

    def is_subspace_of(self, other: "SubspaceCanonical") -> bool:
        if other.spec != self.spec or other.n != self.n:
            raise SpecMismatch("subspaces of different ambient spaces")
        return all(other.contains_vector(row) for row in self.basis)

    def to_json(self) -> list[list[str]]:
        return [[str(FieldElement(self.spec, x)) for x in row] for row in self.basis]

    def __str__(self):
        rows = ["(" + " ".join(str(FieldElement(self.spec, x)) for x in row) + ")" for row in self.basis]
        return "span{" + ", ".join(rows) + "}"


@dataclass(frozen=True)
class FlagCanonical:
    """The full flag g maps the standard flag to; a coset key for g*B."""

    steps: tuple[SubspaceCanonical, ...]

    def to_json(self) -> list[list[list[str]]]:
        return [s.to_json() for s in self.steps]


def coset_key_parabolic(g: MatrixGF, i: int) -> SubspaceCanonical:
    """Echelon basis of the span of the first i columns of g; constant on
    right P_i-cosets and distinct across them."""
    if not 1 <= i <= g.n:
        raise IndexOutOfRange(f"parabolic index {i} out of range 1..{g.n}")
    cols = [tuple(g.rows[r][c] for r in range(g.n)) for c in range(i)]
    basis, _ = rref(g.spec, cols)
    if len(basis) != i:
        raise ValueError("matrix is not invertible: dependent leading columns")
    return SubspaceCanonical(g.spec, g.n, i, basis)


def coset_key_borel(g: MatrixGF) -> FlagCanonical:
    """Chain of parabolic keys for i = 1 .. n-1; constant on right B-cosets."""
    return FlagCanonical(tuple(coset_key_parabolic(g, i) for i in range(1, g.n)))
