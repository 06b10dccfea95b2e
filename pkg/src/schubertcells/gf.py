"""Exact arithmetic in small finite fields GF(p^k).

A FieldSpec fixes the field model: characteristic p, extension degree k and
a monic irreducible modulus polynomial (coefficients low degree first).
Moduli for the small extensions used here (q in {4, 8, 9, 16, 25, 27, 32})
are built in so that output is bit-reproducible; callers may supply their
own modulus instead.

Elements are immutable values tied to their spec; mixing elements of two
different specs raises SpecMismatch, never an implicit coercion. Element
order is part of the public contract: the element with coefficient vector
(c0, ..., c_{k-1}) sits at index c0 + c1*p + ... + c_{k-1}*p^(k-1), and
enumerate_field walks indices 0 .. q-1, so enumeration always starts at 0.

>>> F4 = field_make(2, 2)
>>> [str(e) for e in enumerate_field(F4)]
['0', '1', 't', '1+t']
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    NonPrimeCharacteristic,
    SpecMismatch,
    TooLarge,
    UnsupportedExtension,
)

MAX_Q = 1 << 16
_MUL_TABLE_LIMIT = 512

# Monic irreducible moduli, low degree first.
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),           # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),        # t^3 + t + 1
    (2, 4): (1, 1, 0, 0, 1),     # t^4 + t + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # t^5 + t^2 + 1
    (3, 2): (2, 2, 1),           # t^2 + 2t + 2
    (3, 3): (1, 2, 0, 1),        # t^3 + 2t + 1
    (5, 2): (2, 4, 1),           # t^2 + 4t + 2
}


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q as p^k with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


# polynomial helpers on low-first integer coefficient lists mod p

def _poly_divmod(p: int, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    lead_inv = pow(den[dn], p - 2, p)
    quot = [0] * max(len(num) - dn, 1)
    for i in range(len(num) - 1 - dn, -1, -1):
        c = (num[i + dn] * lead_inv) % p
        if c == 0:
            continue
        quot[i] = c
        for j in range(dn + 1):
            num[i + j] = (num[i + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _poly_is_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    k = len(modulus) - 1
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        # trial division by every monic polynomial of this degree
        for ix in range(p ** deg):
            div = _index_to_coeffs(ix, p, deg) + [1]
            _, rem = _poly_divmod(p, list(modulus), div)
            if rem == [0]:
                return False
    return True


def _index_to_coeffs(ix: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        ix, c = divmod(ix, p)
        out.append(c)
    return out


def _coeffs_to_index(coeffs, p: int) -> int:
    ix = 0
    for c in reversed(list(coeffs)):
        ix = ix * p + c
    return ix


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of GF(p^k); shareable across threads."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrimeCharacteristic(f"{self.p} is not prime")
        if self.k < 1:
            raise UnsupportedExtension(f"extension degree must be >= 1, got {self.k}")
        if self.p ** self.k > MAX_Q:
            raise TooLarge(f"q = {self.p}^{self.k} exceeds the guard {MAX_Q}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise UnsupportedExtension(
                f"modulus must be monic of degree {self.k}, got {self.modulus}"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise UnsupportedExtension("modulus coefficients must be reduced mod p")
        if not _poly_is_irreducible(self.p, self.modulus):
            raise UnsupportedExtension(f"modulus {self.modulus} is reducible mod {self.p}")

    @property
    def q(self) -> int:
        return self.p ** self.k

    def __str__(self):
        return f"GF({self.q})"

    # index-level arithmetic; indices are the canonical element encoding

    def add_ix(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        ca, cb = _index_to_coeffs(a, self.p, self.k), _index_to_coeffs(b, self.p, self.k)
        return _coeffs_to_index([(x + y) % self.p for x, y in zip(ca, cb)], self.p)

    def neg_ix(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        ca = _index_to_coeffs(a, self.p, self.k)
        return _coeffs_to_index([(-x) % self.p for x in ca], self.p)

    def sub_ix(self, a: int, b: int) -> int:
        return self.add_ix(a, self.neg_ix(b))

    def mul_ix(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        table = _mul_table(self)
        if table is not None:
            return table[a][b]
        return self._mul_ix_poly(a, b)

    def _mul_ix_poly(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        ca, cb = _index_to_coeffs(a, p, k), _index_to_coeffs(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.modulus[j]) % p
        return _coeffs_to_index(prod[:k], p)

    def inv_ix(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_ix(a, self.q - 2)

    def pow_ix(self, a: int, m: int) -> int:
        if m < 0:
            return self.pow_ix(self.inv_ix(a), -m)
        out, base = 1, a  # the unit element always has index 1
        while m:
            if m & 1:
                out = self.mul_ix(out, base)
            base = self.mul_ix(base, base)
            m >>= 1
        return out

    # element constructors

    def from_index(self, ix: int) -> "FieldElement":
        if not 0 <= ix < self.q:
            raise ValueError(f"element index {ix} out of range for {self}")
        return FieldElement(self, ix)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, _coeffs_to_index(coeffs, self.p))

    def from_int(self, m: int) -> "FieldElement":
        """Image of the integer m under the prime-subfield embedding."""
        return self.from_coeffs([m] + [0] * (self.k - 1))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


_MUL_TABLES: dict[FieldSpec, tuple | None] = {}


def _mul_table(spec: FieldSpec):
    try:
        return _MUL_TABLES[spec]
    except KeyError:
        pass
    if spec.q > _MUL_TABLE_LIMIT:
        _MUL_TABLES[spec] = None
    else:
        _MUL_TABLES[spec] = tuple(
            tuple(spec._mul_ix_poly(a, b) for b in range(spec.q)) for a in range(spec.q)
        )
    return _MUL_TABLES[spec]


class FieldElement:
    """A value in GF(p^k), hashable and totally ordered within its spec."""

    __slots__ = ("spec", "ix")

    def __init__(self, spec: FieldSpec, ix: int):
        self.spec = spec
        self.ix = ix

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_index_to_coeffs(self.ix, self.spec.p, self.spec.k))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"mixed field specs: {self.spec} vs {other.spec}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.add_ix(self.ix, other.ix))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.sub_ix(self.ix, other.ix))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.mul_ix(self.ix, other.ix))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.mul_ix(self.ix, self.spec.inv_ix(other.ix)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_ix(self.ix))

    def __pow__(self, m: int):
        return FieldElement(self.spec, self.spec.pow_ix(self.ix, m))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_ix(self.ix))

    def is_zero(self) -> bool:
        return self.ix == 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.spec == self.spec
            and other.ix == self.ix
        )

    def __hash__(self):
        return hash((self.spec, self.ix))

    def __lt__(self, other):
        self._check(other)
        return self.ix < other.ix

    def __str__(self):
        if self.spec.k == 1:
            return str(self.ix)
        terms = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if m == 0:
                terms.append(str(c))
            else:
                var = "t" if m == 1 else f"t^{m}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"{self.spec}:{self}"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def field_make(p: int, k: int, modulus=None) -> FieldSpec:
    """Build GF(p^k), using a built-in modulus unless one is supplied.

    >>> field_make(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 1:
        raise UnsupportedExtension(f"extension degree must be >= 1, got {k}")
    if modulus is not None:
        return FieldSpec(p, k, tuple(int(c) % p for c in modulus))
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    try:
        return FieldSpec(p, k, BUILTIN_MODULI[(p, k)])
    except KeyError:
        raise UnsupportedExtension(
            f"no built-in modulus for GF({p}^{k}); supply one explicitly"
        ) from None


def enumerate_field(spec: FieldSpec) -> tuple[FieldElement, ...]:
    """All q elements in index order, starting at zero."""
    return tuple(FieldElement(spec, ix) for ix in range(spec.q))
