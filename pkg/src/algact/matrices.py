"""Exact dense matrices and the integer normal forms the rest of the package
lives on: Hermite form, Smith form, characteristic polynomials, invariant
factors over Q[z].

Entries are ints or Fractions.  Matrices are immutable and hashable so that
lattices can be deduplicated by their canonical basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import xgcd
from .polynomials import Poly, _scalar


class Matrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        rows = tuple(tuple(_scalar(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_e", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, r: int, c: int | None = None) -> "Matrix":
        c = r if c is None else c
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def diagonal(cls, diag) -> "Matrix":
        diag = list(diag)
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, r: int, c: int, flat) -> "Matrix":
        flat = list(flat)
        if len(flat) != r * c:
            raise ValueError(f"expected {r * c} entries, got {len(flat)}")
        return cls([flat[i * c : (i + 1) * c] for i in range(r)])

    @classmethod
    def companion(cls, f: Poly) -> "Matrix":
        """Companion matrix: column j holds the coordinates of z * z^j mod f."""
        if not f.is_monic() or f.degree < 1:
            raise ValueError("companion matrix needs a monic non-constant polynomial")
        n = f.degree
        cols = [[0] * n for _ in range(n)]
        for j in range(n - 1):
            cols[j][j + 1] = 1
        for i in range(n):
            cols[n - 1][i] = -f[i]
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    # -- access ----------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def entries(self) -> tuple:
        return self._e

    def flat(self) -> list:
        return [x for row in self._e for x in row]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self._e for x in row)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self._e])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Matrix([[x * other for x in row] for row in self._e])
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        bt = list(zip(*other._e))
        return Matrix(
            [[_dot(row, col) for col in bt] for row in self._e]
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def apply(self, vec) -> tuple:
        """Matrix times column vector, returned as a tuple."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(row, vec) for row in self._e)

    def apply_row(self, vec) -> tuple:
        """Row vector times matrix."""
        vec = tuple(vec)
        if len(vec) != self.rows:
            raise ValueError("vector length mismatch")
        return tuple(_dot(vec, col) for col in zip(*self._e))

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._e)))

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self._e[i][i] for i in range(self.rows))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Matrix.identity(self.rows)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def det(self):
        """Exact determinant (Bareiss on integer input, Gaussian otherwise)."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        if self.is_integral():
            return _det_bareiss([list(r) for r in self._e])
        return _det_fraction([list(map(Fraction, r)) for r in self._e])

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self._e)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def adjugate(self) -> "Matrix":
        """det(M) * M^{-1}, exact and integral for integral input."""
        d = self.det()
        if d == 0:
            raise ValueError("adjugate via inverse needs a nonsingular matrix")
        return self.inverse() * d

    def denominator_lcm(self) -> int:
        out = 1
        for row in self._e:
            for x in row:
                if isinstance(x, Fraction):
                    out = out * x.denominator // gcd(out, x.denominator)
        return out

    def stack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return Matrix(list(self._e) + list(other._e))

    # -- plumbing -------------------------------------------------------------

    def _check_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._e)
        return f"Matrix[{body}]"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _det_bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(a: list[list[Fraction]]) -> Fraction | int:
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for r in range(k + 1, n):
            if a[r][k]:
                f = a[r][k] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return _scalar(det)


# --------------------------------------------------------------------------
# Integer normal forms
# --------------------------------------------------------------------------


def hnf(m: Matrix) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns (H, U) with U unimodular, U*M = H, H in the canonical row form:
    pivot entries positive, each pivot strictly right of the one above,
    entries above a pivot reduced into [0, pivot), zero rows at the bottom.
    """
    if not m.is_integral():
        raise ValueError("Hermite form needs integer entries")
    h = [list(row) for row in m.entries()]
    nrows, ncols = m.rows, m.cols
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if h[i][c]), None)
        if piv is None:
            continue
        h[r], h[piv] = h[piv], h[r]
        u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, nrows):
            while h[i][c]:
                a, b = h[r][c], h[i][c]
                g, s, t = xgcd(a, b)
                # [[s, t], [-b//g, a//g]] is unimodular and maps (a, b) to (g, 0).
                ra, ri = h[r], h[i]
                h[r] = [s * x + t * y for x, y in zip(ra, ri)]
                h[i] = [(-b // g) * x + (a // g) * y for x, y in zip(ra, ri)]
                ua, ui = u[r], u[i]
                u[r] = [s * x + t * y for x, y in zip(ua, ui)]
                u[i] = [(-b // g) * x + (a // g) * y for x, y in zip(ua, ui)]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == nrows:
            break
    return Matrix(h), Matrix(u)


def snf(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form.

    Returns (S, U, V) with U, V unimodular, U*M*V = S, S diagonal with
    nonnegative entries satisfying d1 | d2 | ... .
    """
    if not m.is_integral():
        raise ValueError("Smith form needs integer entries")
    a = [list(row) for row in m.entries()]
    nrows, ncols = m.rows, m.cols
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    t = 0
    while t < min(nrows, ncols):
        piv = _smallest_nonzero(a, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # Clear column t with unimodular row combinations.
            for i in range(t + 1, nrows):
                while a[i][t]:
                    g, s, w = xgcd(a[t][t], a[i][t])
                    b0, b1 = a[t][t], a[i][t]
                    ra, ri = a[t], a[i]
                    a[t] = [s * x + w * y for x, y in zip(ra, ri)]
                    a[i] = [(-b1 // g) * x + (b0 // g) * y for x, y in zip(ra, ri)]
                    ua, ui = u[t], u[i]
                    u[t] = [s * x + w * y for x, y in zip(ua, ui)]
                    u[i] = [(-b1 // g) * x + (b0 // g) * y for x, y in zip(ua, ui)]
            # Clear row t with unimodular column combinations.
            row_cleared = True
            for j in range(t + 1, ncols):
                while a[t][j]:
                    g, s, w = xgcd(a[t][t], a[t][j])
                    b0, b1 = a[t][t], a[t][j]
                    for row in a:
                        x, y = row[t], row[j]
                        row[t] = s * x + w * y
                        row[j] = (-b1 // g) * x + (b0 // g) * y
                    for row in v:
                        x, y = row[t], row[j]
                        row[t] = s * x + w * y
                        row[j] = (-b1 // g) * x + (b0 // g) * y
                    row_cleared = False
            if row_cleared and all(a[i][t] == 0 for i in range(t + 1, nrows)):
                # Pivot must divide the remaining block, or fold a bad row in.
                offender = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if a[i][j] % a[t][t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[offender])]
                u[t] = [x + y for x, y in zip(u[t], u[offender])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return Matrix(a), Matrix(u), Matrix(v)


def _smallest_nonzero(a, t):
    best = None
    best_abs = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            x = a[i][j]
            if x and (best_abs is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def left_kernel_int(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the lattice {u in Z^rows : u * M = 0}."""
    h, u = hnf(m)
    out = []
    for i in range(m.rows):
        if all(x == 0 for x in h.row(i)):
            out.append(u.row(i))
    return out


def right_kernel_int(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the lattice {x in Z^cols : M * x = 0}."""
    return left_kernel_int(m.transpose())


def kernel_q(m: Matrix) -> list[tuple]:
    """Basis of the rational nullspace {x : M x = 0}."""
    nrows, ncols = m.rows, m.cols
    a = [[Fraction(x) for x in row] for row in m.entries()]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -a[ri][fc]
        basis.append(tuple(_scalar(x) for x in vec))
    return basis


def rank_q(m: Matrix) -> int:
    return m.cols - len(kernel_q(m))


# --------------------------------------------------------------------------
# Characteristic polynomial and conjugacy invariants
# --------------------------------------------------------------------------


def charpoly(m: Matrix) -> Poly:
    """Characteristic polynomial det(z*I - M) by the Faddeev-LeVerrier scheme."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    a = m
    c = -Fraction(a.trace())
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        a = m * (a + Matrix.identity(n) * c)
        c = -Fraction(a.trace()) / k
        coeffs[n - k] = c
    return Poly(coeffs)


def poly_eval_matrix(p: Poly, m: Matrix) -> Matrix:
    out = Matrix.zero(m.rows, m.cols)
    for c in reversed(p.coeffs):
        out = out * m + Matrix.identity(m.rows) * c
    return out


def poly_invariant_factors(m: Matrix) -> list[Poly]:
    """Invariant factors of z*I - M over Q[z]: monic, each dividing the next.

    Computed by Smith reduction over the polynomial ring; the non-unit
    diagonal entries are the complete conjugacy invariant over Q.
    """
    if not m.is_square:
        raise ValueError("invariant factors of a non-square matrix")
    n = m.rows
    a = [
        [Poly((-m[i, j],)) + (Poly((0, 1)) if i == j else Poly()) for j in range(n)]
        for i in range(n)
    ]
    for t in range(n):
        while True:
            piv = _min_degree_entry(a, t)
            if piv is None:
                break
            pi, pj = piv
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            dirty = False
            for i in range(t + 1, n):
                if not a[i][t].is_zero():
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if not a[i][t].is_zero():
                        dirty = True
            for j in range(t + 1, n):
                if not a[t][j].is_zero():
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] = row[j] - q * row[t]
                    if not a[t][j].is_zero():
                        dirty = True
            if dirty:
                continue
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if not (a[i][j] % a[t][t]).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
    factors = [a[i][i].monic() for i in range(n) if a[i][i].degree >= 1]
    return factors


def _min_degree_entry(a, t):
    best = None
    best_deg = None
    n = len(a)
    for i in range(t, n):
        for j in range(t, n):
            e = a[i][j]
            if not e.is_zero() and (best_deg is None or e.degree < best_deg):
                best, best_deg = (i, j), e.degree
    return best


def is_companion(m: Matrix) -> bool:
    if not m.is_square or not m.is_integral():
        return False
    n = m.rows
    if n == 1:
        return True
    for j in range(n - 1):
        for i in range(n):
            want = 1 if i == j + 1 else 0
            if m[i, j] != want:
                return False
    return True
