"""Smith normal form over the integers with unimodular transform tracking.

The implementation is the classical elementary-operation algorithm with a
deterministic pivot rule (smallest nonzero absolute value, ties broken by
lowest (row, col)), which keeps entry growth tame at desk scale and makes
outputs reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass


class IntMatrix:
    """A dense integer matrix; entries are arbitrary-precision ints."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries):
        data = [list(map(int, row)) for row in entries]
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(row) != width for row in data):
            raise ValueError("ragged or empty rows")
        self.rows = len(data)
        self.cols = width
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"IntMatrix({self.data!r})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.data[i]
            for k in range(self.cols):
                aik = row[k]
                if aik:
                    orow = other.data[k]
                    orow_out = out[i]
                    for j in range(other.cols):
                        orow_out[j] += aik * orow[j]
        return IntMatrix(out)

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(row[j] * v[j] for j in range(self.cols)) for row in self.data]

    def diagonal(self):
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


def _pivot(D: IntMatrix, t: int):
    """Smallest nonzero |entry| in the trailing submatrix, lowest (row, col)."""
    best = None
    for i in range(t, D.rows):
        row = D.data[i]
        for j in range(t, D.cols):
            v = abs(row[j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
                if v == 1:
                    return best
    return best


def _swap_rows(M: IntMatrix, i: int, j: int):
    M.data[i], M.data[j] = M.data[j], M.data[i]


def _swap_cols(M: IntMatrix, i: int, j: int):
    for row in M.data:
        row[i], row[j] = row[j], row[i]


def _add_row(M: IntMatrix, dst: int, src: int, q: int):
    if q:
        drow, srow = M.data[dst], M.data[src]
        for j in range(M.cols):
            drow[j] += q * srow[j]


def _add_col(M: IntMatrix, dst: int, src: int, q: int):
    if q:
        for row in M.data:
            row[dst] += q * row[src]


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Smith normal form with transforms.

    D is diagonal with nonnegative entries, each dividing the next nonzero
    one; U and V have determinant +-1; U @ A @ V == D exactly.
    """
    D = A.copy()
    U = IntMatrix.identity(A.rows)
    V = IntMatrix.identity(A.cols)

    def promote(t):
        """Move the current best pivot of the trailing submatrix to (t, t)."""
        found = _pivot(D, t)
        if found is None:
            return False
        _, pi, pj = found
        if pi != t:
            _swap_rows(D, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(D, t, pj)
            _swap_cols(V, t, pj)
        return True

    t = 0
    limit = min(A.rows, A.cols)
    while t < limit:
        if not promote(t):
            break

        while True:
            # Kill the pivot column, then the pivot row.  Any nonzero
            # remainder is strictly smaller than the pivot, so re-promoting
            # and repeating terminates.
            for i in range(t + 1, D.rows):
                q = -(D.data[i][t] // D.data[t][t])
                _add_row(D, i, t, q)
                _add_row(U, i, t, q)
            if any(D.data[i][t] for i in range(t + 1, D.rows)):
                promote(t)
                continue
            for j in range(t + 1, D.cols):
                q = -(D.data[t][j] // D.data[t][t])
                _add_col(D, j, t, q)
                _add_col(V, j, t, q)
            if any(D.data[t][j] for j in range(t + 1, D.cols)):
                promote(t)
                continue
            break

        # Divisibility: the pivot must divide every later entry.  Folding an
        # offending row into row t strictly shrinks the achievable pivot gcd,
        # so this terminates.
        offender = None
        p = D.data[t][t]
        for i in range(t + 1, D.rows):
            row = D.data[i]
            for j in range(t + 1, D.cols):
                if row[j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)
            continue
        t += 1

    for i in range(limit):
        if D.data[i][i] < 0:
            for j in range(D.cols):
                D.data[i][j] = -D.data[i][j]
            for j in range(U.cols):
                U.data[i][j] = -U.data[i][j]
    return SNFResult(U, D, V)


def invariant_factors(A: IntMatrix) -> tuple[list[int], int]:
    """Invariant factors > 1 of coker(rows of A in Z^cols), plus its free rank.

    Returns (factors, free_rank) where factors drops trivial entries and
    free_rank = cols - rank counts the zero diagonal entries of the padded
    Smith form.
    """
    D = smith_normal_form(A).D
    diag = D.diagonal()
    rank = sum(1 for d in diag if d != 0)
    factors = [d for d in diag if d not in (0, 1)]
    return factors, A.cols - rank


def kernel_basis(A: IntMatrix) -> list[list[int]]:
    """Basis of the integer (right) kernel of A.

    Each vector is primitive (content 1, guaranteed by the unimodularity of
    V) with its first nonzero entry positive.
    """
    res = smith_normal_form(A)
    diag = res.D.diagonal()
    rank = sum(1 for d in diag if d != 0)
    basis = []
    for j in range(rank, A.cols):
        v = [res.V.data[i][j] for i in range(A.cols)]
        lead = next((x for x in v if x != 0), 0)
        if lead < 0:
            v = [-x for x in v]
        basis.append(v)
    return basis
