"""Exact dense linear algebra over cyclotomic fields."""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CyclotomicNumber, cyclo

__all__ = ["ExactMatrix", "LinearSolution", "solve_linear"]


def _c(v):
    return v if isinstance(v, CyclotomicNumber) else cyclo(Fraction(v))


class ExactMatrix:
    """Row-major dense matrix of CyclotomicNumber."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [cyclo(0)] * (rows * cols)
        else:
            entries = [_c(e) for e in entries]
            assert len(entries) == rows * cols
            self.entries = entries

    @staticmethod
    def from_rows(rows_data) -> "ExactMatrix":
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        return ExactMatrix(rows, cols, [e for row in rows_data for e in row])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix(n, n)
        for i in range(n):
            m[i, i] = cyclo(1)
        return m

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def __setitem__(self, key, value):
        i, j = key
        self.entries[i * self.cols + j] = _c(value)

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            assert self.cols == other.rows
            out = ExactMatrix(self.rows, other.cols)
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    s = cyclo(0)
                    for k, a in enumerate(ri):
                        if not a.is_zero():
                            b = other[k, j]
                            if not b.is_zero():
                                s = s + a * b
                    out[i, j] = s
            return out
        out = ExactMatrix(self.rows, self.cols, [e * other for e in self.entries])
        return out

    __rmul__ = __mul__

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (other * cyclo(-1))

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and all(a == b for a, b in zip(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def transpose(self) -> "ExactMatrix":
        out = ExactMatrix(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j, i] = self[i, j]
        return out

    def conjugate_transpose(self) -> "ExactMatrix":
        out = ExactMatrix(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j, i] = self[i, j].conjugate()
        return out

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def trace(self):
        assert self.rows == self.cols
        t = cyclo(0)
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    def __repr__(self):
        body = "\n".join("  [" + ", ".join(repr(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols},\n{body})"

    def rref(self):
        """Return (reduced matrix, pivot column list) without mutating self."""
        mat = [self.row(i) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, self.rows) if not mat[i][c].is_zero()), None)
            if p is None:
                continue
            mat[r], mat[p] = mat[p], mat[r]
            inv = mat[r][c].inverse()
            mat[r] = [x * inv for x in mat[r]]
            for i in range(self.rows):
                if i != r and not mat[i][c].is_zero():
                    f = mat[i][c]
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix.from_rows(mat), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "ExactMatrix":
        assert self.rows == self.cols
        aug = ExactMatrix(self.rows, 2 * self.rows)
        for i in range(self.rows):
            for j in range(self.rows):
                aug[i, j] = self[i, j]
            aug[i, self.rows + i] = cyclo(1)
        red, piv = aug.rref()
        assert piv[: self.rows] == list(range(self.rows)), "matrix is singular"
        out = ExactMatrix(self.rows, self.rows)
        for i in range(self.rows):
            for j in range(self.rows):
                out[i, j] = red[i, self.rows + j]
        return out


class LinearSolution:
    """Outcome of an exact linear solve: particular solution + kernel basis."""

    def __init__(self, consistent, particular, kernel):
        self.consistent = consistent
        self.particular = particular   # list of CyclotomicNumber, or None
        self.kernel = kernel           # list of vectors (each canonical)

    def __bool__(self):
        return self.consistent


def solve_linear(M: ExactMatrix, rhs) -> LinearSolution:
    """Solve M x = rhs exactly.

    `rhs` may be a column ExactMatrix or a list.  Kernel basis vectors are in
    reduced echelon form (leading entry 1, echelon order).
    """
    if isinstance(rhs, ExactMatrix):
        assert rhs.cols == 1
        b = rhs.col(0)
    else:
        b = [_c(x) for x in rhs]
    assert len(b) == M.rows
    aug = ExactMatrix(M.rows, M.cols + 1)
    for i in range(M.rows):
        for j in range(M.cols):
            aug[i, j] = M[i, j]
        aug[i, M.cols] = b[i]
    red, piv = aug.rref()
    piv_main = [c for c in piv if c < M.cols]
    if len(piv_main) != len(piv):
        return LinearSolution(False, None, [])
    particular = [cyclo(0)] * M.cols
    for r, c in enumerate(piv_main):
        particular[c] = red[r, M.cols]
    free = [c for c in range(M.cols) if c not in piv_main]
    kernel = []
    for f in free:
        v = [cyclo(0)] * M.cols
        v[f] = cyclo(1)
        for r, c in enumerate(piv_main):
            v[c] = red[r, f] * cyclo(-1)
        # canonical form: leading entry 1
        lead = next((x for x in v if not x.is_zero()), None)
        if lead is not None and not lead.is_one():
            inv = lead.inverse()
            v = [x * inv for x in v]
        kernel.append(v)
    return LinearSolution(True, particular, kernel)


def nullspace(M: ExactMatrix):
    return solve_linear(M, [cyclo(0)] * M.rows).kernel
