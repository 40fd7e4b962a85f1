"""Exact dense linear algebra over the rationals and prime fields.

Scalars are plain Python objects: ``Fraction`` over Q and ``int`` residues in
``[0, p)`` over F_p.  A :class:`Field` coerces and normalizes them, so every
kernel below is written once and runs over both kinds of field.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Vector = tuple


class FieldMismatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The ground field: ``Field("Q")`` or ``Field("Fp", p)``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def Q(cls) -> "Field":
        return cls("Q")

    @classmethod
    def Fp(cls, p: int) -> "Field":
        return cls("Fp", p)

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or a string like ``"3/7"``) into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into F_{self.p}")
        return x % self.p

    def norm(self, x):
        return x if self.kind == "Q" else x % self.p

    def inv(self, x):
        if self.kind == "Q":
            return 1 / Fraction(x)
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(x, -1, self.p)

    def fmt(self, x) -> str:
        return str(x)

    def vec(self, xs: Iterable) -> Vector:
        return tuple(self(x) for x in xs)

    def zeros(self, n: int) -> Vector:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> Vector:
        v = [self.zero] * n
        v[i] = self.one
        return tuple(v)

    def elements(self) -> range:
        if not self.is_finite:
            raise ValueError("the rational field cannot be enumerated")
        return range(self.p)

    def count_vectors(self, n: int) -> int:
        if not self.is_finite:
            raise ValueError("the rational field cannot be enumerated")
        return self.p ** n

    def all_vectors(self, n: int) -> Iterator[Vector]:
        """All vectors of F_p^n in lexicographic order."""
        return itertools.product(self.elements(), repeat=n)

    def projective_vectors(self, n: int) -> Iterator[Vector]:
        """Nonzero vectors of F_p^n whose first nonzero entry is 1 (one per line)."""
        for lead in range(n):
            for tail in itertools.product(self.elements(), repeat=n - lead - 1):
                yield (0,) * lead + (1,) + tail

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F_{self.p}"


# vector helpers ------------------------------------------------------------

def vadd(F: Field, u: Sequence, v: Sequence) -> Vector:
    return tuple(F.norm(a + b) for a, b in zip(u, v))


def vsub(F: Field, u: Sequence, v: Sequence) -> Vector:
    return tuple(F.norm(a - b) for a, b in zip(u, v))


def vscale(F: Field, c, v: Sequence) -> Vector:
    return tuple(F.norm(c * a) for a in v)


def dot(F: Field, u: Sequence, v: Sequence):
    return F.norm(sum((a * b for a, b in zip(u, v)), F.zero))


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def lincomb(F: Field, coeffs: Sequence, vectors: Sequence[Sequence], length: int) -> Vector:
    out = [F.zero] * length
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x != 0:
                out[k] += c * x
    return tuple(F.norm(x) for x in out)


def kron(F: Field, u: Sequence, v: Sequence) -> Vector:
    """Flattened tensor ``u (x) v`` with index ``i * len(v) + j``."""
    return tuple(F.norm(a * b) for a in u for b in v)


# matrices ------------------------------------------------------------------

@dataclass(frozen=True)
class Mat:
    field: Field
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        data = tuple(field.vec(r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = [tuple(c) for c in columns]
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(field, rows, len(cols), data)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, tuple(field.zeros(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, n, n, tuple(field.unit_vector(n, i) for i in range(n)))

    @classmethod
    def from_flat(cls, field: Field, rows: int, cols: int, flat: Sequence) -> "Mat":
        flat = tuple(flat)
        return cls(field, rows, cols, tuple(flat[r * cols:(r + 1) * cols] for r in range(rows)))

    def __getitem__(self, idx):
        return self.entries[idx]

    def flat(self) -> Vector:
        return tuple(x for row in self.entries for x in row)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    @property
    def T(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def _check(self, other: "Mat"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix sum")
        F = self.field
        return Mat(F, self.rows, self.cols,
                   tuple(vadd(F, a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix difference")
        F = self.field
        return Mat(F, self.rows, self.cols,
                   tuple(vsub(F, a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Mat":
        F = self.field
        return Mat(F, self.rows, self.cols, tuple(vscale(F, c, r) for r in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            F = self.field
            ocols = other.T.entries
            return Mat(F, self.rows, other.cols,
                       tuple(tuple(dot(F, r, c) for c in ocols) for r in self.entries))
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        F = self.field
        return tuple(dot(F, r, v) for r in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def rank(self) -> int:
        return len(_rref_rows(self.field, [list(r) for r in self.entries], self.cols)[0])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Mat[{self.field}]({self.rows}x{self.cols}: {body})"


def _rref_rows(F: Field, rows: list[list], ncols: int):
    """In-place reduction of a list of mutable rows; returns (nonzero rows, pivots)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = F.inv(prow[c])
        if prow[c] != 1:
            for k in range(c, ncols):
                prow[k] = F.norm(prow[k] * inv)
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            for k in range(c, ncols):
                if prow[k] != 0:
                    row[k] = F.norm(row[k] - f * prow[k])
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Mat) -> Mat:
    """Reduced row-echelon form; zero rows are kept at the bottom so the shape is preserved."""
    F = m.field
    for row in m.entries:
        for x in row:
            if F.kind == "Q" and not isinstance(x, Fraction):
                raise FieldMismatch(f"entry {x!r} is not a rational")
            if F.kind == "Fp" and (isinstance(x, Fraction) or not 0 <= x < F.p):
                raise FieldMismatch(f"entry {x!r} is not a residue mod {F.p}")
    red, _ = _rref_rows(F, [list(r) for r in m.entries], m.cols)
    data = [tuple(r) for r in red] + [F.zeros(m.cols)] * (m.rows - len(red))
    return Mat(F, m.rows, m.cols, tuple(data))


def rank(m: Mat) -> int:
    return m.rank()


def nullspace(m: Mat) -> "Subspace":
    """Right kernel ``{v : m v = 0}``."""
    F = m.field
    red, pivots = _rref_rows(F, [list(r) for r in m.entries], m.cols)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [F.zero] * m.cols
        v[free] = F.one
        for row, pc in zip(red, pivots):
            if row[free] != 0:
                v[pc] = F.norm(-row[free])
        basis.append(v)
    return Subspace.span(F, m.cols, basis)


def left_nullspace(m: Mat) -> "Subspace":
    """``{w : w m = 0}``."""
    return nullspace(m.T)


def solve(m: Mat, b: Sequence) -> Vector | None:
    """One solution ``x`` of ``m x = b``, or None if the system is inconsistent."""
    F = m.field
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    aug = [list(r) + [F(x) if not isinstance(x, (int, Fraction)) else F.norm(x)] for r, x in zip(m.entries, b)]
    red, pivots = _rref_rows(F, aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [F.zero] * m.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[m.cols]
    return tuple(x)


def inverse(m: Mat) -> Mat | None:
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices have inverses")
    F = m.field
    n = m.rows
    aug = [list(r) + list(F.unit_vector(n, i)) for i, r in enumerate(m.entries)]
    red, pivots = _rref_rows(F, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return Mat(F, n, n, tuple(tuple(r[n:]) for r in red))


# subspaces -----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient_dim stored by its reduced echelon basis."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a {ambient_dim}-dimensional space")
            rows.append(list(v))
        red, pivots = _rref_rows(field, rows, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in red), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim,
                   tuple(field.unit_vector(ambient_dim, i) for i in range(ambient_dim)),
                   tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Residue of ``v`` after clearing the pivot coordinates."""
        F = self.field
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c != 0:
                for k, x in enumerate(row):
                    if x != 0:
                        w[k] = F.norm(w[k] - c * x)
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return is_zero_vector(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the echelon basis; raises if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def from_coords(self, c: Sequence) -> Vector:
        return lincomb(self.field, c, self.basis, self.ambient_dim)

    def complement_indices(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def quotient_coords(self, v: Sequence) -> Vector:
        """Coordinates of ``v + self`` on the non-pivot standard basis."""
        w = self.reduce(v)
        return tuple(w[i] for i in self.complement_indices())

    def issubset(self, other: "Subspace") -> bool:
        _check_pair(self, other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def intersection(self, other: "Subspace") -> "Subspace":
        _check_pair(self, other)
        F = self.field
        # x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0
        cols = list(self.basis) + [vscale(F, F.norm(-F.one), w) for w in other.basis]
        if not cols:
            return Subspace.zero(F, self.ambient_dim)
        m = Mat.from_columns(F, cols, self.ambient_dim)
        k = len(self.basis)
        vecs = [lincomb(F, sol[:k], self.basis, self.ambient_dim) for sol in nullspace(m).basis]
        return Subspace.span(F, self.ambient_dim, vecs)

    def annihilator(self) -> "Subspace":
        """Functionals (as vectors) vanishing on the subspace."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        return nullspace(Mat(self.field, len(self.basis), self.ambient_dim, self.basis))

    def basis_matrix(self) -> Mat:
        return Mat(self.field, len(self.basis), self.ambient_dim, self.basis)

    def image(self, m: Mat) -> "Subspace":
        return Subspace.span(self.field, m.rows, [m.apply(b) for b in self.basis])


def _check_pair(a: Subspace, b: Subspace):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_pair(a, b)
    if not b.basis:
        return a
    if not a.basis:
        return b
    return Subspace.span(a.field, a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def subspace_eq(a: Subspace, b: Subspace) -> bool:
    _check_pair(a, b)
    return a.basis == b.basis


def column_space(m: Mat) -> Subspace:
    return Subspace.span(m.field, m.rows, m.T.entries)


def row_space(m: Mat) -> Subspace:
    return Subspace.span(m.field, m.cols, m.entries)


class SpanBuilder:
    """Incrementally grown echelon basis.

    Rows are kept fully reduced against each other, so ``snapshot()`` is already
    canonical.  ``add`` returns True when the rank grew.
    """

    def __init__(self, field: Field, ambient_dim: int):
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def residue(self, v: Sequence) -> list:
        F = self.field
        w = list(v)
        for pc, row in self._rows.items():
            c = w[pc]
            if c != 0:
                for k in range(len(w)):
                    x = row[k]
                    if x != 0:
                        w[k] = F.norm(w[k] - c * x)
        return w

    def add(self, v: Sequence) -> bool:
        F = self.field
        w = self.residue(v)
        pc = next((k for k, x in enumerate(w) if x != 0), None)
        if pc is None:
            return False
        inv = F.inv(w[pc])
        w = [F.norm(x * inv) for x in w]
        for row in self._rows.values():
            c = row[pc]
            if c != 0:
                for k in range(len(row)):
                    if w[k] != 0:
                        row[k] = F.norm(row[k] - c * w[k])
        self._rows[pc] = w
        return True

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.residue(v))

    def snapshot(self) -> Subspace:
        pivots = tuple(sorted(self._rows))
        return Subspace(self.field, self.ambient_dim,
                        tuple(tuple(self._rows[p]) for p in pivots), pivots)


# polynomials (coefficient lists, lowest degree first) ----------------------

def minimal_polynomial(m: Mat) -> list:
    """Monic minimal polynomial of a square matrix, via the Krylov sequence of powers."""
    F = m.field
    n = m.rows
    powers = [Mat.identity(F, n)]
    while True:
        nxt = powers[-1] @ m
        cols = [p.flat() for p in powers]
        sol = solve(Mat.from_columns(F, cols, n * n), nxt.flat())
        if sol is not None:
            return [F.norm(-c) for c in sol] + [F.one]
        powers.append(nxt)


def poly_eval_matrix(coeffs: Sequence, m: Mat) -> Mat:
    F = m.field
    out = Mat.zero(F, m.rows, m.cols)
    for c in reversed(coeffs):
        out = (out @ m) + Mat.identity(F, m.rows).scale(c)
    return out


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def poly_roots(coeffs: Sequence, field: Field) -> list:
    """Distinct roots in the ground field of a nonzero polynomial."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("the zero polynomial has every element as a root")

    def ev(x):
        acc = field.zero
        for c in reversed(coeffs):
            acc = field.norm(acc * x + c)
        return acc

    if field.is_finite:
        return [x for x in field.elements() if ev(x) == 0]
    roots = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) == 1:
        return roots
    lcm = 1
    for c in coeffs:
        d = Fraction(c).denominator
        lcm = lcm * d // _gcd(lcm, d)
    ints = [int(Fraction(c) * lcm) for c in coeffs]
    for num in _int_divisors(ints[0]):
        for den in _int_divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and ev(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def poly_factor(coeffs: Sequence, field: Field) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities, lowest degree first in each list."""
    import sympy

    x = sympy.Symbol("x")
    high_first = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) if field.kind == "Q" else int(c)
                  for c in reversed(list(coeffs))]
    if field.kind == "Q":
        poly = sympy.Poly(high_first, x, domain=sympy.QQ)
    else:
        poly = sympy.Poly(high_first, x, modulus=field.p)
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = [field(Fraction(int(sympy.numer(c)), int(sympy.denom(c)))) if field.kind == "Q" else field(int(c))
              for c in reversed(fac.all_coeffs())]
        lead_inv = field.inv(cs[-1])
        out.append(([field.norm(c * lead_inv) for c in cs], mult))
    out.sort(key=lambda t: (len(t[0]), [str(c) for c in t[0]]))
    return out


def poly_mul(F: Field, a: Sequence, b: Sequence) -> list:
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.norm(out[i + j] + x * y)
    return out


def kron_mat(a: Mat, b: Mat) -> Mat:
    F = a.field
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(F.norm(x * y) for x in ra for y in rb))
    return Mat(F, a.rows * b.rows, a.cols * b.cols, tuple(rows))


def block_diag(a: Mat, b: Mat) -> Mat:
    F = a.field
    rows = [tuple(r) + F.zeros(b.cols) for r in a.entries] + [F.zeros(a.cols) + tuple(r) for r in b.entries]
    return Mat(F, a.rows + b.rows, a.cols + b.cols, tuple(rows))


def solve_many(m: Mat, rhs: Sequence[Sequence]) -> list[Vector | None]:
    """Solutions of ``m x = b`` for every ``b`` in ``rhs`` from a single reduction."""
    F = m.field
    k = len(rhs)
    aug = [list(m.entries[r]) + [b[r] for b in rhs] for r in range(m.rows)]
    red, pivots = _rref_rows(F, aug, m.cols + k)
    coef_pivots = [(row, pc) for row, pc in zip(red, pivots) if pc < m.cols]
    consistent_rows = [row for row, pc in zip(red, pivots) if pc >= m.cols]
    out = []
    for t in range(k):
        col = m.cols + t
        # an inconsistent system has a pivot in the right-hand block whose row is zero on the left
        if any(row[col] != 0 and all(x == 0 for x in row[:m.cols]) for row in consistent_rows):
            out.append(None)
            continue
        x = [F.zero] * m.cols
        for row, pc in coef_pivots:
            x[pc] = row[col]
        out.append(tuple(x))
    return out
