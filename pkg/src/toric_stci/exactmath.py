"""Exact arithmetic and integer linear algebra.

Integers are plain Python ``int`` (arbitrary precision).  Rationals are
``fractions.Fraction``, which already keeps itself reduced with a positive
denominator.  Prime fields are small (p < 2**31) so that residue products fit
comfortably in machine words and full-field enumeration stays cheap.

The linear algebra here is the integer kind needed to pass from a monomial
parametrization to its relation lattice: rank over Q, and a saturated basis of
the integer kernel of a matrix, extracted from a row-style Hermite normal
form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Trial-division primality check; fine for moduli below 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """Descriptor for Q; elements are ``fractions.Fraction``."""

    label = "Q"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def from_ratio(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational-field")


QQ = RationalField()


class PrimeFieldElement:
    """A residue in F_p.  Immutable; arithmetic never leaves the field."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: "PrimeField"):
        self.residue = residue % field.p
        self.field = field

    def _check(self, other) -> "PrimeFieldElement":
        if not isinstance(other, PrimeFieldElement):
            raise TypeError(f"expected a prime-field element, got {other!r}")
        if other.field.p != self.field.p:
            raise ValueError(f"field mismatch: F_{self.field.p} vs F_{other.field.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.residue + other.residue, self.field)

    def __sub__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.residue - other.residue, self.field)

    def __mul__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.residue * other.residue, self.field)

    def __truediv__(self, other):
        other = self._check(other)
        if other.residue == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.field.p}")
        inv = pow(other.residue, -1, self.field.p)
        return PrimeFieldElement(self.residue * inv, self.field)

    def __pow__(self, exponent: int):
        if exponent < 0:
            if self.residue == 0:
                raise ZeroDivisionError(f"inverting zero in F_{self.field.p}")
        return PrimeFieldElement(pow(self.residue, exponent, self.field.p), self.field)

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.field)

    def __abs__(self):
        return self

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeFieldElement):
            return NotImplemented
        return self.residue == other.residue and self.field.p == other.field.p

    def __hash__(self) -> int:
        return hash((self.residue, self.field.p))

    def __repr__(self) -> str:
        return f"F{self.field.p}({self.residue})"


class PrimeField:
    """Descriptor for F_p, p prime and below 2**31 (checked at construction)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not (2 <= p < MAX_MODULUS):
            raise ValueError(f"modulus must be an integer in [2, 2^31): {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus is not prime: {p}")
        self.p = p
        self.label = f"Fp:{p}"

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise ValueError(f"field mismatch: F_{self.p} vs F_{value.field.p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def from_ratio(self, num: int, den: int) -> PrimeFieldElement:
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in F_{self.p}")
        return PrimeFieldElement(num * pow(den, -1, self.p), self)

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self)

    def elements(self) -> Iterator[PrimeFieldElement]:
        for r in range(self.p):
            yield PrimeFieldElement(r, self)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime-field", self.p))


def field_from_label(label: str):
    """Inverse of ``field.label``: "Q" or "Fp:<p>"."""
    if label == "Q":
        return QQ
    if label.startswith("Fp:"):
        return PrimeField(int(label[3:]))
    raise ValueError(f"unknown field label {label!r}")


def dth_roots(c: PrimeFieldElement, d: int) -> set:
    """All r in F_p with r**d == c, by full enumeration of the field."""
    if d < 1:
        raise ValueError(f"root degree must be >= 1: {d}")
    field = c.field
    p = field.p
    target = c.residue
    return {PrimeFieldElement(r, field) for r in range(p) if pow(r, d, p) == target}


class IntegerMatrix:
    """Rectangular matrix of Python ints; immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be at least 1x1")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows have unequal lengths")
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, u: Sequence[int]) -> tuple:
        """Matrix-vector product A*u, exact."""
        if len(u) != self.cols:
            raise ValueError(f"vector length {len(u)} != {self.cols} columns")
        return tuple(sum(row[j] * u[j] for j in range(self.cols)) for row in self.entries)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntegerMatrix":
        mat = cls(obj["entries"])
        if mat.rows != obj["rows"] or mat.cols != obj["cols"]:
            raise ValueError("matrix JSON dimensions disagree with entries")
        return mat

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self.entries]})"


def _xgcd(a: int, b: int) -> tuple:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple:
    """Row-style Hermite normal form via unimodular row operations.

    Returns (H, pivot_cols).  Pivots are positive, entries above a pivot are
    reduced into [0, pivot), zero rows sink to the bottom.  The row lattice is
    preserved exactly, which is what makes the kernel extraction below yield a
    saturated basis.
    """
    H = [list(map(int, r)) for r in rows]
    if not H:
        return [], []
    ncols = len(H[0])
    m = len(H)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            if H[r][c] == 0:
                H[r], H[i] = H[i], H[r]
                continue
            g, x, y = _xgcd(H[r][c], H[i][c])
            a, b = H[r][c] // g, H[i][c] // g
            H[r], H[i] = (
                [x * u + y * v for u, v in zip(H[r], H[i])],
                [-b * u + a * v for u, v in zip(H[r], H[i])],
            )
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-u for u in H[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[r])]
        pivots.append(c)
        r += 1
    return H, pivots


def rank(A: IntegerMatrix) -> int:
    """Rank of A over Q (unimodular row reduction does not change it)."""
    _, pivots = hermite_normal_form(A.entries)
    return len(pivots)


class LatticeBasis:
    """A basis of an integer lattice inside Z^k, stored as row vectors."""

    __slots__ = ("vectors", "dimension")

    def __init__(self, vectors: Iterable[Sequence[int]], dimension: int):
        self.vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        self.dimension = dimension
        if any(len(v) != dimension for v in self.vectors):
            raise ValueError("basis vectors have inconsistent length")

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __repr__(self) -> str:
        return f"LatticeBasis({[list(v) for v in self.vectors]})"

    def contains(self, v: Sequence[int]) -> bool:
        """Is v an integer combination of the basis?  Hermite back-substitution."""
        if len(v) != self.dimension:
            raise ValueError(f"vector length {len(v)} != lattice dimension {self.dimension}")
        if not self.vectors:
            return all(x == 0 for x in v)
        H, pivots = hermite_normal_form(self.vectors)
        work = list(map(int, v))
        for row, c in zip(H, pivots):
            q, rem = divmod(work[c], row[c])
            if rem:
                return False
            if q:
                work = [u - q * w for u, w in zip(work, row)]
        return all(x == 0 for x in work)


def kernel_lattice(A: IntegerMatrix) -> LatticeBasis:
    """Basis of {u in Z^k : A*u = 0}, saturated (it spans the full integer
    kernel, not a finite-index sublattice).

    Works on the transpose augmented with an identity block: unimodular row
    operations drive the A^T part to Hermite form, and the identity part of
    every row whose A^T part became zero is a kernel vector.
    """
    m, k = A.rows, A.cols
    aug = []
    for i in range(k):
        row = [A.entries[r][i] for r in range(m)]
        row.extend(1 if j == i else 0 for j in range(k))
        aug.append(row)
    H, _ = hermite_normal_form(aug)
    vectors = [row[m:] for row in H if all(x == 0 for x in row[:m])]
    return LatticeBasis(vectors, k)
