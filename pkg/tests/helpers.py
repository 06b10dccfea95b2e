"""Independent oracles for the test suite.

The permutation model gives type A Weyl facts (lengths, descents, reduced
words) without touching the root-system code, and the brute-force span
enumeration counts subspaces without echelon patterns. Values frozen into
tests were computed with these oracles.
"""

from itertools import combinations

from schubertcells.chevalley import MatrixGF, rref
from schubertcells.gf import FieldSpec


# permutations in one-line notation: p[x-1] is the image of x (1-based values)

def identity_perm(n):
    return tuple(range(1, n + 1))


def compose(a, b):
    """(a o b)(x) = a(b(x))."""
    return tuple(a[b[x] - 1] for x in range(len(a)))


def simple_perm(i, n):
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def word_to_perm(word, n):
    p = identity_perm(n)
    for i in word:
        p = compose(p, simple_perm(i, n))
    return p


def inversions(p):
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def left_descents(p):
    """Indices i with length(s_i p) < length(p): value i sits after i+1."""
    n = len(p)
    pos = {v: x for x, v in enumerate(p)}
    return [i for i in range(1, n) if pos[i] > pos[i + 1]]


def all_reduced_words(p):
    """Every reduced word of p, via left-descent recursion."""
    if inversions(p) == 0:
        yield ()
        return
    n = len(p)
    for i in left_descents(p):
        for rest in all_reduced_words(compose(simple_perm(i, n), p)):
            yield (i,) + rest


# small matrix utilities over GF(q)

def random_matrix(spec, n, rng):
    return MatrixGF(
        spec, n, tuple(tuple(rng.randrange(spec.q) for _ in range(n)) for _ in range(n))
    )


def random_invertible(spec, n, rng):
    while True:
        m = random_matrix(spec, n, rng)
        if not m.det().is_zero():
            return m


def random_upper_triangular(spec, n, rng):
    rows = [[0] * n for _ in range(n)]
    for r in range(n):
        rows[r][r] = rng.randrange(1, spec.q)
        for c in range(r + 1, n):
            rows[r][c] = rng.randrange(spec.q)
    return MatrixGF(spec, n, tuple(tuple(r) for r in rows))


def random_parabolic_element(spec, n, i, rng):
    """Random element of P_i: invertible diagonal blocks, free upper block."""
    top = random_invertible(spec, i, rng)
    bottom = random_invertible(spec, n - i, rng)
    rows = [[0] * n for _ in range(n)]
    for r in range(i):
        for c in range(i):
            rows[r][c] = top.rows[r][c]
        for c in range(i, n):
            rows[r][c] = rng.randrange(spec.q)
    for r in range(i, n):
        for c in range(i, n):
            rows[r][c] = bottom.rows[r - i][c - i]
    return MatrixGF(spec, n, tuple(tuple(r) for r in rows))


def all_vectors(spec: FieldSpec, n):
    out = [()]
    for _ in range(n):
        out = [v + (c,) for v in out for c in range(spec.q)]
    return out


def brute_subspace_count(spec: FieldSpec, n) -> int:
    """Number of distinct spans of vector subsets of size at most n."""
    vectors = all_vectors(spec, n)
    spans = set()
    for size in range(n + 1):
        for subset in combinations(vectors, size):
            basis, _ = rref(spec, list(subset)) if subset else ((), ())
            spans.add(basis)
    return len(spans)


def q_factorial(n, q):
    out = 1
    for m in range(1, n + 1):
        out *= (q**m - 1) // (q - 1)
    return out
