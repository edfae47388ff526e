"""Exact field arithmetic and dense linear algebra over Q and GF(p).

Field elements are plain Python ``int`` in ``range(p)`` for prime fields and
``gmpy2.mpq`` for the rationals.  Nothing here ever rounds.

Row reduction is fully deterministic: columns are scanned left to right and the
topmost row with a nonzero entry in the current column becomes the pivot.  Two
subspaces are therefore equal exactly when their reduced bases are equal
entry-wise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from gmpy2 import mpq
from sympy import Poly, Symbol

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Matrix",
    "Subspace",
    "UniPoly",
    "SingularMatrix",
    "Inconsistent",
    "ZeroPolynomial",
    "rank",
    "rref",
    "kernel",
    "solve",
    "inverse",
    "det",
    "random_invertible",
    "poly_gcd",
    "rational_roots",
    "interpolate",
]

MAX_PRIME = 2**31
_X = Symbol("x")


class SingularMatrix(ValueError):
    pass


class Inconsistent(ValueError):
    """The linear system has no solution."""


class ZeroPolynomial(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``kind="Q"``) or a prime field (``kind="Fp"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise ValueError(f"modulus must be an integer, got {self.p!r}")
            if self.p > MAX_PRIME:
                raise ValueError(f"modulus {self.p} exceeds 2^31")
            if not _is_prime(self.p):
                raise ValueError(f"modulus {self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def from_name(cls, name: str) -> "Field":
        """Parse ``"Q"``, ``"F5"``, ``"GF5"`` or ``"GF(5)"``."""
        s = name.strip()
        if s.upper() in ("Q", "QQ"):
            return QQ
        for prefix in ("GF(", "GF", "F"):
            if s.upper().startswith(prefix):
                body = s[len(prefix):].rstrip(")")
                if body.isdigit():
                    return cls("Fp", int(body))
        raise ValueError(f"cannot parse field name {name!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def zero(self):
        return 0 if self.kind == "Fp" else mpq(0)

    @property
    def one(self):
        return 1 if self.kind == "Fp" else mpq(1)

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or string like ``"-3/4"`` into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "Q":
            if isinstance(x, float):
                raise TypeError("floats are not exact field elements")
            return mpq(x)
        p = self.p
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            num, den = x.numerator, x.denominator
        elif type(x).__name__ == "mpq":
            num, den = int(x.numerator), int(x.denominator)
        else:
            raise TypeError(f"cannot coerce {type(x).__name__} into {self}")
        if den % p == 0:
            raise ValueError(f"denominator {den} vanishes in {self}")
        return num * pow(den, -1, p) % p

    def parse(self, s: str):
        text = s.strip()
        if "/" in text:
            a, b = text.split("/", 1)
            num, den = int(a), int(b)
            if den == 0:
                raise ValueError(f"zero denominator in {s!r}")
            return self(Fraction(num, den))
        return self(int(text))

    def format(self, a) -> str:
        return str(a)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        return 1 / a

    def elements(self) -> range:
        if self.kind != "Fp":
            raise ValueError("the rationals are not enumerable")
        return range(self.p)

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.kind == "Q" else {"kind": "Fp", "p": self.p}

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    def __repr__(self) -> str:
        return f"Field({str(self)})"


QQ = Field("Q")


def GF(p: int) -> Field:
    return Field("Fp", p)


# ---------------------------------------------------------------------------
# list-level kernels used by everything below
# ---------------------------------------------------------------------------


def _rref_lists(rows: list[list], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of ``rows`` (mutated).  Returns nonzero rows and pivots."""
    p = field.p
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if p:
            prow = [x * inv % p for x in rows[r]]
        else:
            prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                if p:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
                else:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rank_lists(rows: list[list], ncols: int, field: Field) -> int:
    """Rank by forward elimination only (rows are mutated)."""
    p = field.p
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = field.inv(prow[c])
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                f = f * inv
                if p:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
                else:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        r += 1
    return r


def _det_lists(rows: list[list], field: Field):
    p = field.p
    n = len(rows)
    d = field.one
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            return field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        prow = rows[c]
        d = d * prow[c]
        inv = field.inv(prow[c])
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                if p:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
                else:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    return d % p if p else d


def _nullspace_lists(rref_rows: list[list], pivots: list[int], ncols: int, field: Field) -> list[list]:
    """Basis of the kernel read off an RREF, one vector per free column."""
    pivset = set(pivots)
    zero, one = field.zero, field.one
    p = field.p
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(rref_rows, pivots):
            a = row[f]
            if a:
                v[pc] = (-a) % p if p else -a
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(field(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def _trusted(cls, field: Field, rows: Sequence[Sequence], cols: int) -> "Matrix":
        return cls(field, len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def lists(self) -> list[list]:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zeros(self.field, self.cols, 0)
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self.entries)))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            if self.field != other.field:
                raise ValueError("field mismatch")
            p = self.field.p
            z = self.field.zero
            ocols = other.transpose().entries if other.rows else tuple(() for _ in range(other.cols))
            out = []
            for r in self.entries:
                row = []
                for c in ocols:
                    s = z
                    for a, b in zip(r, c):
                        if a and b:
                            s += a * b
                    row.append(s % p if p else s)
                out.append(tuple(row))
            return Matrix(self.field, self.rows, other.cols, tuple(out))
        return NotImplemented

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        p = self.field.p
        z = self.field.zero
        out = []
        for r in self.entries:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(s % p if p else s)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        p = self.field.p
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            tuple(tuple(((a + b) % p if p else a + b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        p = self.field.p
        return Matrix(self.field, self.rows, self.cols, tuple(tuple((c * a % p if p else c * a) for a in r) for r in self.entries))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix<{self.field} {self.rows}x{self.cols}>[{body}]"


def rank(M: Matrix) -> int:
    return _rank_lists(M.lists(), M.cols, M.field)


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and the pivot columns."""
    rows, pivots = _rref_lists(M.lists(), M.cols, M.field)
    return Matrix._trusted(M.field, rows, M.cols), tuple(pivots)


def kernel(M: Matrix) -> "Subspace":
    rows, pivots = _rref_lists(M.lists(), M.cols, M.field)
    null = _nullspace_lists(rows, pivots, M.cols, M.field)
    return Subspace.span(M.field, M.cols, null)


def solve(M: Matrix, b: Sequence):
    """One solution x of M x = b (free variables set to zero)."""
    F = M.field
    aug = [list(r) + [F(x)] for r, x in zip(M.entries, b)]
    rows, pivots = _rref_lists(aug, M.cols + 1, F)
    if pivots and pivots[-1] == M.cols:
        raise Inconsistent("system has no solution")
    x = [F.zero] * M.cols
    for row, pc in zip(rows, pivots):
        x[pc] = row[-1]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise SingularMatrix("non-square matrix")
    F, n = M.field, M.rows
    z, o = F.zero, F.one
    aug = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(M.entries)]
    rows, pivots = _rref_lists(aug, 2 * n, F)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrix("matrix is not invertible")
    return Matrix._trusted(F, [r[n:] for r in rows], n)


def det(M: Matrix):
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    return _det_lists(M.lists(), M.field)


def random_invertible(n: int, field: Field, seed: int) -> Matrix:
    """Seeded random invertible n x n matrix.

    Uses ``random.Random(seed)`` (Mersenne Twister, stable across CPython
    versions for integer seeds).  Over Q entries are integers in [-9, 9].
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    while True:
        if field.is_finite:
            rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[mpq(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        if _rank_lists([r[:] for r in rows], n, field) == n:
            return Matrix._trusted(field, rows, n)


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored as its RREF basis (no zero rows)."""

    basis: Matrix

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[field(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, _ = _rref_lists(rows, ambient_dim, field)
        return cls(Matrix._trusted(field, red, ambient_dim))

    @classmethod
    def _from_field_vectors(cls, field: Field, ambient_dim: int, rows: list[list]) -> "Subspace":
        red, _ = _rref_lists(rows, ambient_dim, field)
        return cls(Matrix._trusted(field, red, ambient_dim))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(Matrix.zeros(field, 0, n))

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(Matrix.identity(field, n))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def ambient_dim(self) -> int:
        return self.basis.cols

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple[tuple, ...]:
        return self.basis.entries

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for r in self.basis.entries:
            for j, x in enumerate(r):
                if x:
                    out.append(j)
                    break
        return tuple(out)

    def reduce(self, v: Sequence) -> list:
        """Normal form of v modulo the subspace (zero on every pivot column)."""
        p = self.field.p
        w = list(v)
        for row, pc in zip(self.basis.entries, self.pivots):
            f = w[pc]
            if f:
                if p:
                    w = [(a - f * b) % p for a, b in zip(w, row)]
                else:
                    w = [a - f * b for a, b in zip(w, row)]
        return w

    def __contains__(self, v) -> bool:
        return not any(self.reduce(self.field_vector(v)))

    def field_vector(self, v: Sequence) -> list:
        return [self.field(x) for x in v]

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of v (assumed in the subspace) along the RREF basis."""
        return tuple(v[pc] for pc in self.pivots)

    def issubspace(self, other: "Subspace") -> bool:
        return all(not any(other.reduce(r)) for r in self.basis.entries)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        rows = [list(r) for r in self.basis.entries] + [list(r) for r in other.basis.entries]
        return Subspace._from_field_vectors(self.field, self.ambient_dim, rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-free: solve a·A = b·B via the kernel of [A; -B]^T."""
        F, n = self.field, self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(F, n)
        p = F.p
        A, B = self.basis.entries, other.basis.entries
        cols = [list(r) for r in A] + [[(-x) % p if p else -x for x in r] for r in B]
        system = Matrix._trusted(F, [list(c) for c in zip(*cols)], len(cols))
        ker = kernel(system)
        vecs = []
        for coeffs in ker.vectors:
            v = [F.zero] * n
            for c, r in zip(coeffs[: len(A)], A):
                if c:
                    v = [x + c * y for x, y in zip(v, r)]
            vecs.append([x % p for x in v] if p else v)
        return Subspace._from_field_vectors(F, n, vecs)

    def complement_indices(self) -> tuple[int, ...]:
        """Standard basis indices (0-based) not pivotal for this subspace, in order."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def __repr__(self) -> str:
        return f"Subspace<{self.field} dim {self.dim} in {self.ambient_dim}>"


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        c = [self.field(x) for x in self.coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __call__(self, t):
        t = self.field(t)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc % self.field.p if self.field.p else acc

    def _norm(self, c):
        p = self.field.p
        return [x % p for x in c] if p else c

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = list(self.coeffs), list(other.coeffs)
        n = max(len(a), len(b))
        a += [self.field.zero] * (n - len(a))
        b += [self.field.zero] * (n - len(b))
        return UniPoly(self.field, tuple(self._norm([x + y for x, y in zip(a, b)])))

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, tuple(self._norm([-x for x in self.coeffs])))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(self.field, tuple(self._norm(out)))

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(F, ()), self
        quot = [F.zero] * (dq + 1)
        inv = F.inv(other.lead)
        p = F.p
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv
            if p:
                c %= p
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
                    if p:
                        rem[k + j] %= p
        return UniPoly(F, tuple(quot)), UniPoly(F, tuple(rem[: len(other.coeffs) - 1]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return UniPoly(self.field, tuple(self._norm([c * inv for c in self.coeffs])))

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, tuple(self._norm([i * c for i, c in enumerate(self.coeffs)][1:])))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = [f"{c}*x^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms))


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p') in characteristic zero."""
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def rational_roots(p: UniPoly) -> list:
    """Distinct rational roots in ascending order.

    The polynomial is cleared to a primitive integer polynomial and factored
    over Z; every linear factor gives a candidate, which is then checked by
    exact evaluation.  This is the rational-root theorem without enumerating
    divisor pairs, which is hopeless once coefficients reach 30 digits.
    """
    if p.field.kind != "Q":
        raise ValueError("rational_roots needs a polynomial over Q")
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has every number as a root")
    if p.degree == 0:
        return []
    den = 1
    for c in p.coeffs:
        den = lcm(den, int(c.denominator))
    ints = [int(c * den) for c in p.coeffs]
    _, factors = Poly(ints[::-1], _X, domain="ZZ").factor_list()
    roots = set()
    for f, _mult in factors:
        if f.degree() == 1:
            a, b = (int(c) for c in f.all_coeffs())
            r = mpq(-b, a)
            if p(r):
                raise ArithmeticError("factorisation produced a non-root")
            roots.add(r)
    return sorted(roots)


def interpolate(field: Field, xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton interpolation through the points (xs[i], ys[i]) with distinct xs."""
    xs = [field(x) for x in xs]
    coef = [field(y) for y in ys]
    n = len(xs)
    p = field.p
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = coef[i] - coef[i - 1]
            d = field.inv((xs[i] - xs[i - j]) % p if p else xs[i] - xs[i - j])
            coef[i] = num * d % p if p else num * d
    poly = UniPoly(field, (coef[-1],))
    for i in range(n - 2, -1, -1):
        poly = poly * UniPoly(field, (-xs[i], 1)) + UniPoly(field, (coef[i],))
    return poly
