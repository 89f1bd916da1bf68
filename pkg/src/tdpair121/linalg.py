"""Dense exact linear algebra on the 4-dimensional column space.

Matrices are immutable grids of :class:`~tdpair121.fields.FieldElement`.
Subspaces are kept in a canonical echelon form so that equality of
subspaces is equality of representations.  Eigenvalues are found by
factoring the characteristic polynomial over the base field: trial over
all residues for GF(p), rational-root search for the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .fields import Field, FieldElement


class SingularMatrixError(ValueError):
    pass


Vector = tuple  # tuple of FieldElement


def vec_is_zero(v) -> bool:
    return all(x.is_zero for x in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


class Matrix:
    """Immutable matrix over an exact field; rows of FieldElements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        ncols = {len(r) for r in self.rows}
        if len(self.rows) == 0 or len(ncols) != 1 or ncols == {0}:
            raise ValueError("matrix needs a rectangular, nonempty grid")

    @classmethod
    def _raw(cls, field, rows) -> Matrix:
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        o, z = field.one, field.zero
        return cls._raw(field, tuple(
            tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls._raw(field, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def from_columns(cls, field: Field, columns) -> Matrix:
        cols = [tuple(field(x) for x in c) for c in columns]
        return cls._raw(field, tuple(zip(*cols)))

    @classmethod
    def diagonal(cls, field: Field, entries) -> Matrix:
        ds = [field(x) for x in entries]
        z = field.zero
        return cls._raw(field, tuple(
            tuple(ds[i] if i == j else z for j in range(len(ds))) for i in range(len(ds))))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix._raw(self.field, tuple(zip(*self.rows)))

    def __mul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise ValueError("field mismatch in matrix product")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        bt = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(tuple(
                _dot(row, bcol) for bcol in bt))
        return Matrix._raw(self.field, tuple(out))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        return tuple(_dot(row, v) for row in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix._raw(self.field, tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix._raw(self.field, tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> Matrix:
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c: FieldElement) -> Matrix:
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows))

    def shift(self, c: FieldElement) -> Matrix:
        """self - c*I."""
        c = self.field(c)
        return self - Matrix.identity(self.field, self.nrows).scale(c)

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for r in self.rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def rank(self) -> int:
        work = [list(r) for r in self.rows]
        _, pivots = _rref(work)
        return len(pivots)

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _det_rows([list(r) for r in self.rows], self.field)

    def invert(self) -> Matrix:
        """Exact inverse; raises SingularMatrixError if rank < n."""
        n = self.nrows
        if n != self.ncols:
            raise SingularMatrixError("cannot invert a non-square matrix")
        work = [list(r) + list(Matrix.identity(self.field, n).rows[i])
                for i, r in enumerate(self.rows)]
        _, pivots = _rref(work)
        if pivots != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix._raw(self.field, tuple(tuple(row[n:]) for row in work))

    def kernel(self):
        """Basis of the null space, as a list of vectors."""
        work = [list(r) for r in self.rows]
        rows, pivots = _rref(work)
        n = self.ncols
        z, o = self.field.zero, self.field.one
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            v = [z] * n
            v[f] = o
            for i, pj in enumerate(pivots):
                v[pj] = -rows[i][f]
            basis.append(tuple(v))
        return basis

    def to_json(self):
        return [[str(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, field: Field, data) -> Matrix:
        return cls(field, [[field.parse(s) for s in row] for row in data])


def _dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def _rref(work):
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not work[i][c].is_zero:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and not work[i][c].is_zero:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def _det_rows(work, field):
    n = len(work)
    det = field.one
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not work[i][c].is_zero:
                pivot = i
                break
        if pivot is None:
            return field.zero
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        det = det * work[c][c]
        inv = work[c][c].inverse()
        for i in range(c + 1, n):
            if not work[i][c].is_zero:
                f = work[i][c] * inv
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return det


class Subspace:
    """Subspace of F^n with a canonical echelon basis.

    The basis vectors are the rows of the reduced row echelon form of any
    generating set, so two equal subspaces have identical representations.
    """

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: Field, ambient: int, vectors=()):
        self.field = field
        self.ambient = ambient
        work = [[field(x) for x in v] for v in vectors]
        for v in work:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        if work:
            rows, pivots = _rref(work)
            self.basis = tuple(tuple(rows[i]) for i in range(len(pivots)))
        else:
            self.basis = ()

    @classmethod
    def zero(cls, field: Field, ambient: int) -> Subspace:
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> Subspace:
        return cls(field, ambient, Matrix.identity(field, ambient).rows)

    @classmethod
    def column_space(cls, m: Matrix) -> Subspace:
        return cls(m.field, m.nrows, m.columns())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of a matrix."""
        if not self.basis:
            raise ValueError("the zero subspace has no basis matrix")
        return Matrix.from_columns(self.field, self.basis)

    def contains(self, v) -> bool:
        v = [self.field(x) for x in v]
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if not x.is_zero)
            if not v[lead].is_zero:
                c = v[lead]
                v = [a - c * b for a, b in zip(v, row)]
        return all(x.is_zero for x in v)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: Subspace) -> Subspace:
        self._compat(other)
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        """Intersection via Zassenhaus elimination on stacked blocks."""
        self._compat(other)
        n = self.ambient
        z = self.field.zero
        work = [list(v) + list(v) for v in self.basis]
        work += [list(v) + [z] * n for v in other.basis]
        if not work:
            return Subspace.zero(self.field, n)
        rows, pivots = _rref(work)
        inter = []
        # rows whose left block vanished carry an intersection vector on the right
        for row in rows[: len(pivots)]:
            if all(x.is_zero for x in row[:n]):
                inter.append(tuple(row[n:]))
        return Subspace(self.field, n, inter)

    def _compat(self, other: Subspace) -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def image(self, m: Matrix) -> Subspace:
        """The subspace m(self)."""
        return Subspace(self.field, m.nrows, [m.apply(v) for v in self.basis])

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(m.apply(v)) for v in self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[tuple(str(x) for x in v) for v in self.basis]})"

    def to_json(self):
        return [[str(x) for x in v] for v in self.basis]


def subspace_sum(parts) -> Subspace:
    parts = list(parts)
    acc = parts[0]
    for s in parts[1:]:
        acc = acc + s
    return acc


def subspace_intersection(parts) -> Subspace:
    parts = list(parts)
    acc = parts[0]
    for s in parts[1:]:
        acc = acc & s
    return acc


def subspace_combine(parts, op: str) -> Subspace:
    if op == "sum":
        return subspace_sum(parts)
    if op == "intersect":
        return subspace_intersection(parts)
    raise ValueError(f"unknown subspace operation {op!r}")


# -- polynomials (dense coefficient lists, low degree first) ----------------

def _p_trim(cs):
    while cs and cs[-1].is_zero:
        cs.pop()
    return cs

def _p_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return _p_trim(out)


def _p_mul(field, a, b):
    if not a or not b:
        return []
    z = field.zero
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _p_trim(out)


def _p_eval(cs, x):
    acc = x.field.zero
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _p_div_linear(cs, r):
    """Divide by (x - r); returns (quotient, remainder)."""
    out = []
    acc = r.field.zero
    for c in reversed(cs):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    out.reverse()
    return _p_trim(out), rem


def _p_divmod(field, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            r[d + i] = r[d + i] - c * x
        _p_trim(r)
        if not r:
            break
    return _p_trim(q), r


def _p_gcd(field, a, b):
    a, b = list(a), list(b)
    while b:
        _, rem = _p_divmod(field, a, b)
        a, b = b, rem
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


_PARITY4 = {p: (1 if sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0 else -1)
            for p in permutations(range(4))}


def charpoly(m: Matrix):
    """Coefficients of det(xI - M), low degree first, monic."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    field = m.field
    one, z = field.one, field.zero
    entries = [[[-m.rows[i][j], one] if i == j else ([] if m.rows[i][j].is_zero else [-m.rows[i][j]])
                for j in range(n)] for i in range(n)]
    acc = []
    for perm in permutations(range(n)):
        term = [one]
        for i in range(n):
            term = _p_mul(field, term, entries[i][perm[i]])
            if not term:
                break
        if not term:
            continue
        if n == 4:
            sign = _PARITY4[perm]
        else:
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            sign = 1 if inv % 2 == 0 else -1
        if sign < 0:
            term = [-c for c in term]
        acc = _p_add(acc, term)
    out = [z] * (n + 1)
    for i, c in enumerate(acc):
        out[i] = c
    return out


def _int_divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_roots(field: Field, coeffs):
    """Roots in the field with multiplicities, as a list of (root, mult)."""
    cs = _p_trim([field(c) for c in coeffs])
    if not cs:
        raise ValueError("the zero polynomial has every element as a root")
    found = []
    if field.p:
        candidates = field.elements()
    else:
        # rational root theorem on the integer-cleared polynomial
        lcm = 1
        for c in cs:
            lcm = lcm * c.val.denominator // math.gcd(lcm, c.val.denominator)
        ints = [int(c.val * lcm) for c in cs]
        k = 0
        while ints[k] == 0:
            k += 1
        candidates = [field.zero] if k else []
        a0, an = ints[k], ints[-1]
        seen = set()
        for pnum in _int_divisors(a0):
            for qden in _int_divisors(an):
                for s in (1, -1):
                    fr = Fraction(s * pnum, qden)
                    if fr not in seen:
                        seen.add(fr)
                        candidates.append(field(fr))
    for cand in candidates:
        if _p_eval(cs, cand).is_zero:
            mult = 0
            while True:
                q, rem = _p_div_linear(cs, cand)
                if not rem.is_zero:
                    break
                cs = q
                mult += 1
            found.append((cand, mult))
    found.sort(key=lambda t: t[0].val)
    return found


@dataclass(frozen=True)
class EigenData:
    eigenvalues: tuple
    multiplicities: tuple
    eigenspaces: tuple
    diagonalizable: bool


def eigen_data(m: Matrix) -> EigenData:
    """Eigenvalues in the base field, their eigenspaces, diagonalizability.

    The matrix is diagonalizable over its field exactly when the geometric
    dimensions add up to the size, which is also when the minimal
    polynomial splits into distinct linear factors.
    """
    roots = poly_roots(m.field, charpoly(m))
    values, mults, spaces = [], [], []
    for val, mult in roots:
        values.append(val)
        mults.append(mult)
        spaces.append(Subspace(m.field, m.nrows, m.shift(val).kernel()))
    diag = sum(s.dim for s in spaces) == m.nrows
    return EigenData(tuple(values), tuple(mults), tuple(spaces), diag)


def primitive_idempotents(m: Matrix, eigenvalues):
    """Projections onto the eigenspaces along each other.

    E_i is the product of (M - e_j I)/(e_i - e_j) over j != i.  Requires m
    diagonalizable with exactly the given eigenvalues; this is validated
    through the projector identities (sum E_i = I, E_i E_j = delta E_i,
    each E_i nonzero).
    """
    field = m.field
    evs = [field(e) for e in eigenvalues]
    for i, a in enumerate(evs):
        for b in evs[i + 1:]:
            if a == b:
                raise ValueError("repeated eigenvalue supplied")
    out = []
    for i, ei in enumerate(evs):
        acc = Matrix.identity(field, m.nrows)
        for j, ej in enumerate(evs):
            if i == j:
                continue
            acc = acc * m.shift(ej).scale((ei - ej).inverse())
        out.append(acc)
    total = out[0]
    for e in out[1:]:
        total = total + e
    if total != Matrix.identity(field, m.nrows) or any(e.is_zero for e in out):
        raise ValueError("matrix is not diagonalizable with exactly these eigenvalues")
    for i, ei in enumerate(out):
        for j, ej in enumerate(out):
            prod = ei * ej
            if (prod != ei if i == j else not prod.is_zero):
                raise ValueError("matrix is not diagonalizable with exactly these eigenvalues")
    return out
