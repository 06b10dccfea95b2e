"""Crystallographic root systems and their Weyl groups.

Roots are stored as integer coordinate vectors in the simple-root basis, so
a root is positive exactly when all of its coordinates are nonnegative.
The Cartan matrix convention is C[i][j] = <alpha_j, alpha_i^vee>, i.e. the
simple reflection acts by s_i(alpha_j) = alpha_j - C[i][j] alpha_i.

A Weyl element is identified by its action matrix (column c is the image of
the simple root alpha_{c+1} in simple-root coordinates). Each element also
carries its canonical reduced word, defined as the lexicographically
smallest reduced word; it is computed greedily, one smallest left descent
at a time, which provably minimizes the word in dictionary order because
the possible first letters of reduced words of w are exactly its left
descents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupTooLarge, IndexOutOfRange, SystemMismatch, UnsupportedType

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

WEYL_GUARD = 10**6


def _imatmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(n)) for c in range(n))
        for r in range(n)
    )


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def _apply(action: Matrix, root: Root) -> Root:
    n = len(action)
    return tuple(sum(action[r][c] * root[c] for c in range(n)) for r in range(n))


def _cartan_matrix(letter: str, rank: int) -> Matrix:
    chain = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)]
             for i in range(rank)]
    if letter == "A":
        pass
    elif letter == "B" and rank >= 2:
        # last simple root short: s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n
        chain[rank - 1][rank - 2] = -2
    elif letter == "C" and rank >= 2:
        chain[rank - 2][rank - 1] = -2
    elif letter in ("B", "C"):
        pass  # B1 = C1 = A1
    elif letter == "D":
        if rank < 2:
            raise UnsupportedType("type D needs rank >= 2")
        chain = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i in range(rank - 2):
            chain[i][i + 1] = chain[i + 1][i] = -1
        if rank >= 3:
            chain[rank - 3][rank - 1] = chain[rank - 1][rank - 3] = -1
    elif letter == "G2":
        if rank != 2:
            raise UnsupportedType("type G2 has rank 2")
        chain = [[2, -1], [-3, 2]]
    elif letter == "F4":
        if rank != 4:
            raise UnsupportedType("type F4 has rank 4")
        chain = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    else:
        raise UnsupportedType(f"unsupported type {letter!r}")
    return tuple(tuple(row) for row in chain)


@dataclass(frozen=True)
class RootSystem:
    """Cartan data plus the materialized set of positive roots."""

    letter: str
    rank: int
    cartan: Matrix
    positive_roots: tuple[Root, ...] = field(compare=False)
    reflections: tuple[Matrix, ...] = field(compare=False, repr=False)

    @property
    def label(self) -> str:
        return self.letter if self.letter in ("G2", "F4") else f"{self.letter}{self.rank}"

    def simple_root(self, i: int) -> Root:
        self.check_index(i)
        return tuple(int(c == i - 1) for c in range(self.rank))

    def reflection(self, i: int) -> Matrix:
        self.check_index(i)
        return self.reflections[i - 1]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i} out of range 1..{self.rank}")

    def __str__(self):
        return f"RootSystem({self.label})"


def rootsystem_make(type_label: str, rank: int) -> RootSystem:
    """Build a root system of the given type by closing the simple roots
    under the simple reflections."""
    letter = str(type_label).upper()
    if letter in ("G", "G2"):
        letter = "G2"
        rank = rank or 2
    elif letter in ("F", "F4"):
        letter = "F4"
        rank = rank or 4
    if rank < 1:
        raise UnsupportedType(f"rank must be >= 1, got {rank}")
    cartan = _cartan_matrix(letter, rank)
    refl = tuple(
        tuple(
            tuple(int(r == c) - (cartan[i][c] if r == i else 0) for c in range(rank))
            for r in range(rank)
        )
        for i in range(rank)
    )
    simples = [tuple(int(c == i) for c in range(rank)) for i in range(rank)]
    positive = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for root in frontier:
            for m in refl:
                image = _apply(m, root)
                if all(c >= 0 for c in image) and image not in positive:
                    positive.add(image)
                    fresh.append(image)
        frontier = fresh
    ordered = tuple(sorted(positive, key=lambda r: (sum(r), r)))
    if letter == "A":
        # GL_{rank+1} has rank*(rank+1)/2 positive roots
        assert len(ordered) == rank * (rank + 1) // 2
    return RootSystem(letter, rank, cartan, ordered, refl)


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element; equality and hashing use the action matrix only."""

    rs: RootSystem
    action: Matrix
    inv_action: Matrix = field(compare=False, repr=False)
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __str__(self):
        return render_word(self.word) or "e"


def _lexmin_word(rs: RootSystem, inv_action: Matrix) -> tuple[int, ...]:
    # Left descents of x are the right descents of x^{-1}; a right descent i
    # of g is visible as a negated column: g(alpha_i) lands in -R^+.
    word = []
    cur = inv_action
    rank = rs.rank
    while True:
        for i in range(rank):
            if any(cur[r][i] < 0 for r in range(rank)):
                word.append(i + 1)
                cur = _imatmul(cur, rs.reflections[i])
                break
        else:
            return tuple(word)


def _make_element(rs: RootSystem, action: Matrix, inv_action: Matrix) -> WeylElement:
    return WeylElement(rs, action, inv_action, _lexmin_word(rs, inv_action))


def weyl_identity(rs: RootSystem) -> WeylElement:
    eye = _identity_matrix(rs.rank)
    return WeylElement(rs, eye, eye, ())


def weyl_simple(rs: RootSystem, i: int) -> WeylElement:
    m = rs.reflection(i)
    return WeylElement(rs, m, m, (i,))


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rs != b.rs:
        raise SystemMismatch(f"elements of {a.rs} and {b.rs}")
    return _make_element(a.rs, _imatmul(a.action, b.action), _imatmul(b.inv_action, a.inv_action))


def weyl_inverse(w: WeylElement) -> WeylElement:
    return _make_element(w.rs, w.inv_action, w.action)


def word_to_element(rs: RootSystem, word) -> WeylElement:
    out = weyl_identity(rs)
    for i in word:
        out = weyl_mul(out, weyl_simple(rs, i))
    return out


def inversion_set(w: WeylElement) -> tuple[Root, ...]:
    """Positive roots sent to negative roots by w, in root order."""
    out = []
    for root in w.rs.positive_roots:
        image = _apply(w.action, root)
        if any(c < 0 for c in image):
            out.append(root)
    return tuple(out)


def weyl_length(w: WeylElement) -> int:
    return len(w.word)


def canonical_reduced_word(w: WeylElement) -> tuple[int, ...]:
    """The lexicographically smallest reduced word of w."""
    return w.word


def weyl_order(rs: RootSystem) -> int:
    """Order of the Weyl group, by the classical product formulas."""
    import math

    n = rs.rank
    if rs.letter == "A":
        return math.factorial(n + 1)
    if rs.letter in ("B", "C"):
        return 2**n * math.factorial(n)
    if rs.letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if rs.letter == "G2":
        return 12
    if rs.letter == "F4":
        return 1152
    raise UnsupportedType(rs.letter)


def weyl_enumerate(rs: RootSystem, guard: int = WEYL_GUARD) -> tuple[WeylElement, ...]:
    """Every Weyl element exactly once, ordered by length then by word."""
    order = weyl_order(rs)
    if order > guard:
        raise GroupTooLarge(f"|W| = {order} exceeds the guard {guard}")
    seen: dict[Matrix, WeylElement] = {}
    e = weyl_identity(rs)
    seen[e.action] = e
    frontier = [e]
    simples = [weyl_simple(rs, i) for i in range(1, rs.rank + 1)]
    while frontier:
        fresh = []
        for w in frontier:
            for s in simples:
                ws = weyl_mul(w, s)
                if ws.action not in seen:
                    seen[ws.action] = ws
                    fresh.append(ws)
        frontier = fresh
    assert len(seen) == order
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def render_word(word) -> str:
    """Space-separated simple indices; the identity renders as ''."""
    return " ".join(str(i) for i in word)


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    """Parse '1 3 2' into (1, 3, 2), reporting bad tokens by position."""
    out = []
    for pos, token in enumerate(text.split(), start=1):
        try:
            i = int(token)
        except ValueError:
            raise ValueError(f"word position {pos}: {token!r} is not an integer") from None
        if not 1 <= i <= rank:
            raise ValueError(f"word position {pos}: index {i} out of range 1..{rank}")
        out.append(i)
    return tuple(out)
