"""Exact integer linear algebra over Z.

All arithmetic is done with Python's arbitrary-precision integers; numpy
arrays with dtype=object serve purely as containers, so fixed-width
overflow cannot occur.  Normal-form routines pick the smallest available
pivot, which keeps intermediate entries modest on the structured matrices
produced elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

import numpy as np


def _eye(n):
    a = np.zeros((n, n), dtype=object)
    for i in range(n):
        a[i, i] = 1
    return a


def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class IntMatrix:
    """Immutable integer matrix with exact entries.

    Entries are stored row-major as Python ints.  The shape is kept
    explicitly so that matrices with zero rows or zero columns are legal
    and behave like any other matrix.
    """

    __slots__ = ("_data", "_cols")

    def __init__(self, rows, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise ValueError("explicit column count contradicts row data")
        else:
            width = 0 if cols is None else int(cols)
        self._data = data
        self._cols = width

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows=None):
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if cols:
            height = len(cols[0])
            if any(len(c) != height for c in cols):
                raise ValueError("columns have unequal lengths")
        else:
            if rows is None:
                raise ValueError("empty column list needs an explicit row count")
            height = rows
        return cls([[c[i] for c in cols] for i in range(height)], cols=len(cols))

    @classmethod
    def from_array(cls, a):
        if not hasattr(a, "shape"):
            return cls(a)
        r, c = a.shape
        return cls([[int(a[i, j]) for j in range(c)] for i in range(r)], cols=c)

    def to_array(self):
        a = np.empty((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self._data):
            for j, x in enumerate(row):
                a[i, j] = x
        return a

    @property
    def rows(self):
        return len(self._data)

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return (self.rows, self._cols)

    @property
    def entries(self):
        """All entries, row-major."""
        return tuple(x for row in self._data for x in row)

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(row[j] for row in self._data)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def to_rows(self):
        return [list(row) for row in self._data]

    def transpose(self):
        return IntMatrix.from_columns(self._data, rows=self._cols)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.shape} @ {other.shape}"
            )
        out = [[sum(a * b for a, b in zip(row, col)) for col in zip(*other._data)]
               for row in self._data]
        if not out or self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix(out, cols=other.cols)

    def apply(self, vector):
        """Matrix times column vector, returned as a tuple."""
        vec = tuple(int(x) for x in vector)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} against {self.shape}")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)],
            cols=self._cols,
        )

    def __sub__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self._data], cols=self._cols)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self._cols == other._cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self._data, self._cols))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"IntMatrix.zeros({self.rows}, {self.cols})"
        return f"IntMatrix({self.to_rows()})"


@dataclass(frozen=True)
class SmithDecomposition:
    """Smith normal form S = U @ A @ V with |det U| = |det V| = 1.

    S is diagonal with nonnegative entries, each dividing the next, and
    zeros trailing.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self):
        n = min(self.s.rows, self.s.cols)
        return tuple(self.s[i, i] for i in range(n))


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group in invariant-factor form.

    Z^free_rank x Z/d1 x ... x Z/dk with every di >= 2 and di | d(i+1).
    Equal groups always have equal field values.
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        """Group order, or None for infinite groups."""
        if self.free_rank:
            return None
        return prod(self.torsion) if self.torsion else 1

    def direct_sum(self, other):
        """Canonical form of the direct sum, recombining invariant factors."""
        buckets = {}
        for d in self.torsion + other.torsion:
            for p, e in _factorize(d).items():
                buckets.setdefault(p, []).append(e)
        depth = max((len(v) for v in buckets.values()), default=0)
        factors = []
        for i in range(depth):
            f = 1
            for p, exps in buckets.items():
                exps_sorted = sorted(exps, reverse=True)
                if i < len(exps_sorted):
                    f *= p ** exps_sorted[i]
            factors.append(f)
        factors.reverse()
        return FinAbGroup(self.free_rank + other.free_rank, tuple(factors))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _find_pivot(s, k):
    m, n = s.shape
    best = None
    where = None
    for i in range(k, m):
        row = s[i]
        for j in range(k, n):
            x = row[j]
            if x:
                if x < 0:
                    x = -x
                if best is None or x < best:
                    best = x
                    where = (i, j)
                    if x == 1:
                        return where
    return where


def _smith(a, want_u=False, want_v=False):
    """Diagonalize a copy of `a` by unimodular row/column operations.

    Returns (s, u, v) with u @ a @ v == s; u and v are None unless
    requested.  The diagonal is nonnegative, satisfies the divisibility
    chain and has its zeros trailing.
    """
    m, n = a.shape
    s = a.copy()
    u = _eye(m) if want_u else None
    v = _eye(n) if want_v else None
    limit = min(m, n)
    k = 0
    while k < limit:
        if _find_pivot(s, k) is None:
            break
        while True:
            # re-select the smallest pivot every pass; this is what keeps
            # intermediate entries from exploding
            i, j = _find_pivot(s, k)
            if i != k:
                s[[k, i], :] = s[[i, k], :]
                if u is not None:
                    u[[k, i], :] = u[[i, k], :]
            if j != k:
                s[:, [k, j]] = s[:, [j, k]]
                if v is not None:
                    v[:, [k, j]] = v[:, [j, k]]
            clear = True
            for r in range(k + 1, m):
                if s[r, k] == 0:
                    continue
                q = s[r, k] // s[k, k]
                if q:
                    s[r, k:] -= q * s[k, k:]
                    if u is not None:
                        u[r, :] -= q * u[k, :]
                if s[r, k]:
                    clear = False
            for c in range(k + 1, n):
                if s[k, c] == 0:
                    continue
                q = s[k, c] // s[k, k]
                if q:
                    s[:, c] -= q * s[:, k]
                    if v is not None:
                        v[:, c] -= q * v[:, k]
                if s[k, c]:
                    clear = False
            if clear:
                break
        k += 1
    rank = k
    for i in range(rank):
        if s[i, i] < 0:
            s[i, i] = -s[i, i]
            if v is not None:
                v[:, i] = -v[:, i]
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            d0, d1 = s[i, i], s[i + 1, i + 1]
            if d1 % d0 == 0:
                continue
            changed = True
            j = i + 1
            g, x, y = _xgcd(d0, d1)
            lcm = d0 // g * d1
            if v is not None:
                v[:, i] += v[:, j]
                v[:, j] -= (y * d1 // g) * v[:, i]
            if u is not None:
                ui = u[i, :].copy()
                uj = u[j, :].copy()
                u[i, :] = x * ui + y * uj
                u[j, :] = (-(d1 // g)) * ui + (d0 // g) * uj
            s[i, i] = g
            s[j, j] = lcm
    return s, u, v


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form of m, with both transform matrices.

    Returns SmithDecomposition(u, s, v) satisfying u @ m @ v == s.
    """
    s, u, v = _smith(m.to_array(), want_u=True, want_v=True)
    return SmithDecomposition(
        u=IntMatrix.from_array(u),
        s=IntMatrix.from_array(s),
        v=IntMatrix.from_array(v),
    )


def _nonredundant_rows(a):
    """Drop zero rows and rows equal (up to sign) to an earlier row.

    Only safe when the row span's solution set is what matters, as in
    kernel computations.
    """
    seen = set()
    keep = []
    for i in range(a.shape[0]):
        t = tuple(a[i])
        if not any(t):
            continue
        if t in seen:
            continue
        seen.add(t)
        seen.add(tuple(-x for x in t))
        keep.append(i)
    if len(keep) == a.shape[0]:
        return a
    return a[keep, :]


def _column_reduce(a, track=False):
    """Unimodular column reduction of `a` (m x n), column-major layout.

    Returns (ct, vt, pivot_cols, free_cols) where ct[j] holds column j of
    the reduced matrix, vt (when tracked) holds the accumulated column
    transform the same way, pivot_cols lists columns that received a pivot
    in processing order and free_cols the columns that reduced to zero.
    """
    m, n = a.shape
    ct = a.T.copy() if n else np.empty((0, m), dtype=object)
    vt = _eye(n) if track else None
    active = list(range(n))
    pivot_cols = []
    for i in range(m):
        if not active:
            break
        while True:
            nz = [j for j in active if ct[j, i] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda j: (abs(ct[j, i]), j))
            done = True
            for j in nz:
                if j == p:
                    continue
                q = ct[j, i] // ct[p, i]
                if q:
                    ct[j, i:] -= q * ct[p, i:]
                    if track:
                        vt[j, :] -= q * vt[p, :]
                if ct[j, i]:
                    done = False
            if done:
                break
        if nz:
            j = nz[0] if len(nz) == 1 else p
            active.remove(j)
            pivot_cols.append(j)
    return ct, vt, pivot_cols, active


def _kernel_array(a):
    """Basis of {x : a @ x == 0} as the columns of an (n x k) array."""
    m, n = a.shape
    if n == 0:
        return np.empty((0, 0), dtype=object)
    reduced = _nonredundant_rows(a) if m else a
    _, vt, _, free = _column_reduce(reduced, track=True)
    k = len(free)
    out = np.empty((n, k), dtype=object)
    for t, j in enumerate(sorted(free)):
        out[:, t] = vt[j, :]
    return out


def _lattice_basis(a):
    """Basis of the lattice spanned by the columns of `a` (m x r array)."""
    m, _ = a.shape
    ct, _, pivots, _ = _column_reduce(a, track=False)
    out = np.empty((m, len(pivots)), dtype=object)
    for t, j in enumerate(pivots):
        out[:, t] = ct[j, :]
    return out


def _rank(a):
    _, _, pivots, _ = _column_reduce(a, track=False)
    return len(pivots)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel of m, as matrix columns.

    The kernel of an integer matrix is automatically saturated, so the
    returned columns extend to a basis of Z^cols.
    """
    arr = _kernel_array(m.to_array())
    return IntMatrix.from_array(arr)


def _cokernel_array(a) -> FinAbGroup:
    s, _, _ = _smith(a)
    diag = [s[i, i] for i in range(min(a.shape))]
    nonzero = [d for d in diag if d]
    return FinAbGroup(
        free_rank=a.shape[0] - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )


def cokernel(m: IntMatrix) -> FinAbGroup:
    """Z^rows modulo the column span of m, in invariant-factor form."""
    return _cokernel_array(m.to_array())


def solve_integer(m: IntMatrix, b):
    """One integer solution x of m @ x == b, or None when there is none."""
    vec = tuple(int(x) for x in b)
    if len(vec) != m.rows:
        raise ValueError(f"right-hand side of length {len(vec)} against {m.shape}")
    s, u, v = _smith(m.to_array(), want_u=True, want_v=True)
    c = [sum(u[i, j] * vec[j] for j in range(m.rows)) for i in range(m.rows)]
    n = m.cols
    y = [0] * n
    for i in range(min(m.rows, n)):
        d = s[i, i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    for i in range(min(m.rows, n), m.rows):
        if c[i]:
            return None
    return tuple(sum(v[i, j] * y[j] for j in range(n)) for i in range(n))


def _matmul(a, b):
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    return a @ b


def _unimodular_inverse(a):
    """Exact inverse of a unimodular integer matrix, as an object array."""
    m, n = a.shape
    if m != n:
        raise ValueError("only square matrices can be unimodular")
    s, u, v = _smith(a, want_u=True, want_v=True)
    if any(s[i, i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    return _matmul(v, u)


def _coords_in_basis(basis, targets):
    """Solve basis @ Y == targets over Z, columnwise.

    `basis` (m x k) must have independent columns and every column of
    `targets` (m x t) must lie in the integer column lattice of `basis`;
    both conditions are verified.  Returns Y as a (k x t) array.
    """
    m, k = basis.shape
    mt, t = targets.shape
    if m != mt:
        raise ValueError("basis and targets have different heights")
    if t == 0:
        return np.empty((k, 0), dtype=object)
    if k == 0:
        if any(targets[i, j] for i in range(m) for j in range(t)):
            raise ValueError("nonzero target in an empty lattice")
        return np.empty((0, t), dtype=object)
    aug = np.concatenate([basis, targets], axis=1)
    ker = _kernel_array(aug)
    if ker.shape[1] != t:
        raise ValueError("targets do not all lie in the span of the basis")
    top = ker[:k, :]
    bottom = ker[k:, :]
    try:
        inv = _unimodular_inverse(bottom)
    except ValueError:
        raise ValueError("a target lies outside the integer column lattice") from None
    return -_matmul(top, inv)


def _det(m: IntMatrix) -> int:
    """Determinant via fraction-free (Bareiss) elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _is_unimodular(m: IntMatrix) -> bool:
    return m.rows == m.cols and _det(m) in (1, -1)


def _content(vector) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in vector:
        g = gcd(g, abs(int(x)))
    return g
