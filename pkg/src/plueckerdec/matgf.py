"""Dense exact matrices over a prime field F_q.

Matrices are immutable values; every operation returns a new matrix.
Element access uses 0-based (i, j).  Index *tuples* in the public minor
and pivot interfaces are 1-based, matching the usual mathematical
convention for minors; the conversion happens only at that boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import MatrixError
from .gf import FieldCtx


@dataclass(frozen=True)
class MatGF:
    ctx: FieldCtx
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major, reduced mod q

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise MatrixError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise MatrixError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> "MatGF":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise MatrixError("ragged rows")
        q = ctx.q
        return cls(ctx, r, c, tuple(x % q for row in rows for x in row))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatGF":
        return cls(ctx, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatGF":
        return cls(ctx, rows, cols, (0,) * (rows * cols))

    # -- element access ------------------------------------------------------

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_lists(self) -> list[list[int]]:
        return [self.row_list(i) for i in range(self.rows)]

    # -- arithmetic ----------------------------------------------------------

    def _same_shape(self, other: "MatGF") -> None:
        if self.ctx != other.ctx:
            raise MatrixError("matrices over different fields")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise MatrixError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "MatGF") -> "MatGF":
        self._same_shape(other)
        q = self.ctx.q
        return MatGF(
            self.ctx, self.rows, self.cols,
            tuple((a + b) % q for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "MatGF") -> "MatGF":
        self._same_shape(other)
        q = self.ctx.q
        return MatGF(
            self.ctx, self.rows, self.cols,
            tuple((a - b) % q for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "MatGF":
        q = self.ctx.q
        return MatGF(self.ctx, self.rows, self.cols, tuple(-a % q for a in self.entries))

    def __matmul__(self, other: "MatGF") -> "MatGF":
        if self.ctx != other.ctx:
            raise MatrixError("matrices over different fields")
        if self.cols != other.rows:
            raise MatrixError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        q = self.ctx.q
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (n * p)
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            orow = i * p
            for t, av in enumerate(arow):
                if av:
                    brow = t * p
                    for j in range(p):
                        out[orow + j] += av * b[brow + j]
        return MatGF(self.ctx, n, p, tuple(x % q for x in out))

    def transpose(self) -> "MatGF":
        return MatGF(
            self.ctx, self.cols, self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "MatGF":
        """Submatrix by 0-based row/column index lists."""
        return MatGF(
            self.ctx, len(row_idx), len(col_idx),
            tuple(self.at(i, j) for i in row_idx for j in col_idx),
        )


def vstack(a: MatGF, b: MatGF) -> MatGF:
    if a.ctx != b.ctx or a.cols != b.cols:
        raise MatrixError("vstack needs equal field and column count")
    return MatGF(a.ctx, a.rows + b.rows, a.cols, a.entries + b.entries)


def hstack(a: MatGF, b: MatGF) -> MatGF:
    if a.ctx != b.ctx or a.rows != b.rows:
        raise MatrixError("hstack needs equal field and row count")
    ent = []
    for i in range(a.rows):
        ent.extend(a.entries[i * a.cols : (i + 1) * a.cols])
        ent.extend(b.entries[i * b.cols : (i + 1) * b.cols])
    return MatGF(a.ctx, a.rows, a.cols + b.cols, tuple(ent))


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def _rref_rows(rows: list[list[int]], q: int) -> list[int]:
    """In-place reduced row echelon form; returns 0-based pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        if pv != 1:
            pinv = pow(pv, q - 2, q)
            rows[r] = [(x * pinv) % q for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: MatGF) -> tuple[MatGF, tuple[int, ...]]:
    """Reduced row echelon form and 1-based pivot columns."""
    rows = m.to_lists()
    pivots = _rref_rows(rows, m.ctx.q)
    return MatGF.from_rows(m.ctx, rows) if rows else m, tuple(p + 1 for p in pivots)


def rank(m: MatGF) -> int:
    rows = m.to_lists()
    return len(_rref_rows(rows, m.ctx.q))


def _det_rows(rows: list[list[int]], q: int) -> int:
    """Determinant of a small square matrix by elimination, exact mod q."""
    n = len(rows)
    det = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        pv = rows[c][c]
        det = (det * pv) % q
        pinv = pow(pv, q - 2, q)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = (rows[i][c] * pinv) % q
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[c])]
    return det % q


def det(m: MatGF) -> int:
    if m.rows != m.cols:
        raise MatrixError("determinant of a non-square matrix")
    return _det_submatrix(m, tuple(range(m.rows)), tuple(range(m.cols)))


def _det_submatrix(m: MatGF, ri: tuple[int, ...], ci: tuple[int, ...]) -> int:
    """Determinant of the 0-indexed submatrix; small sizes are unrolled.

    The unrolled 2x2/3x3 cases carry the hot loop of ball-equation and
    embedding computations.
    """
    q = m.ctx.q
    e = m.entries
    w = m.cols
    k = len(ri)
    if k == 0:
        return 1
    if k == 1:
        return e[ri[0] * w + ci[0]]
    if k == 2:
        r0, r1 = ri[0] * w, ri[1] * w
        c0, c1 = ci
        return (e[r0 + c0] * e[r1 + c1] - e[r0 + c1] * e[r1 + c0]) % q
    if k == 3:
        r0, r1, r2 = ri[0] * w, ri[1] * w, ri[2] * w
        c0, c1, c2 = ci
        a, b, c = e[r0 + c0], e[r0 + c1], e[r0 + c2]
        d, f, g = e[r1 + c0], e[r1 + c1], e[r1 + c2]
        h, i, j = e[r2 + c0], e[r2 + c1], e[r2 + c2]
        return (a * (f * j - g * i) - b * (d * j - g * h) + c * (d * i - f * h)) % q
    if k == 4:
        # expand along the first row into unrolled 3x3 minors
        total = 0
        sign = 1
        for t in range(4):
            v = e[ri[0] * w + ci[t]]
            if v:
                sub_ci = ci[:t] + ci[t + 1 :]
                total += sign * v * _det_submatrix(m, ri[1:], sub_ci)
            sign = -sign
        return total % q
    rows = [[e[i * w + j] for j in ci] for i in ri]
    return _det_rows(rows, q)


def _check_index_tuple(t: Sequence[int], upper: int, what: str) -> tuple[int, ...]:
    tt = tuple(t)
    if any(not 1 <= x <= upper for x in tt):
        raise MatrixError(f"{what} indices out of range 1..{upper}: {tt}")
    if any(a >= b for a, b in zip(tt, tt[1:])):
        raise MatrixError(f"{what} indices must be strictly increasing: {tt}")
    return tt


def minor(m: MatGF, row_idx: Sequence[int], col_idx: Sequence[int]) -> int:
    """Determinant of the submatrix picked by 1-based index tuples."""
    ri = _check_index_tuple(row_idx, m.rows, "row")
    ci = _check_index_tuple(col_idx, m.cols, "column")
    if len(ri) != len(ci):
        raise MatrixError("row and column tuples must have equal length")
    return _det_submatrix(m, tuple(i - 1 for i in ri), tuple(j - 1 for j in ci))


def kernel_basis(m: MatGF) -> MatGF:
    """Basis of the right null space {x : m @ x^T = 0}, one vector per row."""
    q = m.ctx.q
    rows = m.to_lists()
    pivots = _rref_rows(rows, q)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * m.cols
        vec[f] = 1
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f] % q
        basis.append(vec)
    if not basis:
        return MatGF(m.ctx, 0, m.cols, ())
    return MatGF.from_rows(m.ctx, basis)


def solve_affine(
    m: MatGF, rhs: Sequence[int]
) -> tuple[tuple[int, ...], MatGF] | None:
    """Full solution set of m x = rhs as (particular, kernel basis).

    Returns None when the system is inconsistent.
    """
    if len(rhs) != m.rows:
        raise MatrixError(f"rhs length {len(rhs)} != row count {m.rows}")
    q = m.ctx.q
    aug = [m.row_list(i) + [rhs[i] % q] for i in range(m.rows)]
    if not aug:
        return (0,) * m.cols, MatGF.identity(m.ctx, m.cols)
    pivots = _rref_rows(aug, q)
    if pivots and pivots[-1] == m.cols:
        return None  # pivot in the rhs column
    particular = [0] * m.cols
    for r, p in enumerate(pivots):
        particular[p] = aug[r][m.cols]
    coeff = MatGF.from_rows(m.ctx, [row[: m.cols] for row in aug])
    return tuple(particular), kernel_basis(coeff)


# ---------------------------------------------------------------------------
# Randomized helpers (used by tests and the channel)
# ---------------------------------------------------------------------------

def random_matrix(ctx: FieldCtx, rows: int, cols: int, rng) -> MatGF:
    return MatGF(ctx, rows, cols, tuple(rng.randrange(ctx.q) for _ in range(rows * cols)))


def random_invertible(ctx: FieldCtx, n: int, rng) -> MatGF:
    while True:
        m = random_matrix(ctx, n, n, rng)
        if rank(m) == n:
            return m


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def mat_to_text(m: MatGF) -> str:
    return "\n".join(" ".join(str(x) for x in m.row_list(i)) for i in range(m.rows))


def mat_from_text(ctx: FieldCtx, text: str) -> MatGF:
    """Parse whitespace-separated entries; rows split by ';' or newlines."""
    raw = text.replace(";", "\n").strip()
    if not raw:
        raise MatrixError("empty matrix text")
    rows = []
    for line in raw.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise MatrixError(f"bad matrix row: {line!r}") from None
    return MatGF.from_rows(ctx, rows)


def mat_to_json(m: MatGF) -> str:
    return json.dumps(m.to_lists())


def mat_from_lists(ctx: FieldCtx, data: Sequence[Sequence[int]]) -> MatGF:
    return MatGF.from_rows(ctx, data)
