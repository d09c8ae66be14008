"""Deterministic dense linear algebra over the Laurent ring, over Q(x, y),
and over Z.

One Matrix class serves all three scalar domains (Laurent polynomials,
rational functions, plain ints).  Field computations clear denominators
row by row and run fraction-free (Bareiss) elimination over the ring, with
rational functions appearing only during back-substitution; pivots are
always the first nonzero entry scanning rows top-down and columns left to
right, so identical inputs give identical outputs.
"""

from __future__ import annotations

from .ring import RationalFunction, ONE, ZERO, _div_exact_any, _as_rf


class VerificationError(RuntimeError):
    """A structural identity the computation relies on failed to hold."""


class Matrix:
    """Dense matrix with optional row/column labels.  Entries may be
    Laurent polynomials, rational functions, or ints; treat as immutable."""

    __slots__ = ("nrows", "ncols", "entries", "row_labels", "col_labels")

    def __init__(self, entries, nrows=None, ncols=None, row_labels=None, col_labels=None):
        self.entries = [list(row) for row in entries]
        self.nrows = len(self.entries) if nrows is None else nrows
        self.ncols = (len(self.entries[0]) if self.entries else 0) if ncols is None else ncols
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")
        if len(self.entries) != self.nrows:
            raise ValueError("row count mismatch")
        if row_labels is not None and (len(row_labels) != self.nrows or len(set(row_labels)) != self.nrows):
            raise ValueError("bad row labels")
        if col_labels is not None and (len(col_labels) != self.ncols or len(set(col_labels)) != self.ncols):
            raise ValueError("bad column labels")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def identity(cls, n, one=1):
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    __hash__ = None

    def __getitem__(self, rc):
        return self.entries[rc[0]][rc[1]]

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [self.entries[i][j] for i in range(self.nrows)]

    def transpose(self):
        return Matrix(
            [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            nrows=self.ncols,
            ncols=self.nrows,
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def map(self, fn):
        return Matrix(
            [[fn(e) for e in row] for row in self.entries],
            nrows=self.nrows,
            ncols=self.ncols,
            row_labels=self.row_labels,
            col_labels=self.col_labels,
        )

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch: {self.ncols} vs {other.nrows}")
        if self.ncols == 0:
            raise ValueError("cannot multiply through an empty inner dimension")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, self.ncols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out, nrows=self.nrows, ncols=other.ncols,
                      row_labels=self.row_labels, col_labels=other.col_labels)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        if self.ncols != len(vec):
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.nrows):
            acc = self.entries[i][0] * vec[0]
            for k in range(1, self.ncols):
                acc = acc + self.entries[i][k] * vec[k]
            out.append(acc)
        return out

    def to_json_obj(self, entry_to_json=None, label_to_str=str):
        if entry_to_json is None:
            entry_to_json = lambda e: e.to_json_obj() if hasattr(e, "to_json_obj") else e
        obj = {"rows": self.nrows, "cols": self.ncols}
        if self.row_labels is not None:
            obj["row_labels"] = [label_to_str(l) for l in self.row_labels]
        if self.col_labels is not None:
            obj["col_labels"] = [label_to_str(l) for l in self.col_labels]
        obj["entries"] = [[entry_to_json(e) for e in row] for row in self.entries]
        return obj

    def pretty(self, sep="  "):
        cells = [[str(e) for e in row] for row in self.entries]
        widths = [max((len(cells[i][j]) for i in range(self.nrows)), default=0) for j in range(self.ncols)]
        return "\n".join(
            "[ " + sep.join(cells[i][j].rjust(widths[j]) for j in range(self.ncols)) + " ]"
            for i in range(self.nrows)
        )


def mat_mul(a, b):
    return a.mul(b)


# ---------------------------------------------------------------------------
# field computations (entries: RationalFunction, LaurentPolynomial or int)


def _row_cleared(row):
    """Scale a row of rational functions by a common denominator, returning
    Laurent-polynomial entries (row scaling preserves kernels and ranks)."""
    rfs = [_as_rf(e) for e in row]
    if any(r is None for r in rfs):
        raise TypeError("entry is not coercible to a rational function")
    n = len(rfs)
    pre = [ONE] * (n + 1)
    for i, r in enumerate(rfs):
        pre[i + 1] = pre[i] * r.den
    suf = [ONE] * (n + 1)
    for i in range(n - 1, -1, -1):
        suf[i] = suf[i + 1] * rfs[i].den
    return [rfs[i].num * (pre[i] * suf[i + 1]) for i in range(n)]


def _div_ring(a, b):
    q = _div_exact_any(a, b)
    if q is None:
        raise VerificationError("fraction-free elimination produced a non-exact division")
    return q


def _bareiss_echelon(rows, ncols):
    """Fraction-free row echelon form.

    rows: list of Laurent-polynomial rows, modified copies returned.
    Returns (rows, pivots, swaps) where pivots is a list of (row, col)
    in increasing order and swaps the number of row exchanges.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    swaps = 0
    prev = ONE
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            swaps += 1
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            if not any(rows[i][j] for j in range(c, ncols)):
                continue
            fac = rows[i][c]
            for j in range(c, ncols):
                num = piv * rows[i][j] - fac * rows[r][j]
                rows[i][j] = _div_ring(num, prev) if prev != ONE else num
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return rows, pivots, swaps


def _echelon_of(a):
    rows = [_row_cleared(a.row(i)) for i in range(a.nrows)]
    return _bareiss_echelon(rows, a.ncols)


def field_rank(a):
    """Exact rank over Q(x, y)."""
    _, pivots, _ = _echelon_of(a)
    return len(pivots)


def _back_substitute(rows, pivots, ncols, free_values):
    """Solve the echelon system rows * v = 0 given ring values for the
    non-pivot columns.

    Stays fraction-free: the vector is carried as (numerators, common
    denominator) with the denominator a product of pivots.  Returns
    (num, den) with v[j] = num[j] / den.
    """
    num = [ZERO] * ncols
    pivot_cols = {c for _, c in pivots}
    for c in range(ncols):
        if c not in pivot_cols:
            num[c] = free_values.get(c, ZERO)
    den = ONE
    for r, c in reversed(pivots):
        piv = rows[r][c]
        acc = ZERO
        for j in range(c + 1, ncols):
            if rows[r][j] and num[j]:
                acc = acc + rows[r][j] * num[j]
        for j in range(ncols):
            if num[j]:
                num[j] = num[j] * piv
        num[c] = -acc
        den = den * piv
    return num, den


def _verify_zero_combination(cleared_rows, num):
    # scaling a row or the vector by a nonzero ring element does not move
    # the combination off zero, so this checks the original a*v = 0 exactly
    for row in cleared_rows:
        acc = ZERO
        for j, e in enumerate(row):
            if e and num[j]:
                acc = acc + e * num[j]
        if acc:
            return False
    return True


def field_kernel_raw(a):
    """Right kernel basis in fraction-free form: a list of (numerators, den)
    pairs, each describing the vector numerators/den with ring entries."""
    cleared = [_row_cleared(a.row(i)) for i in range(a.nrows)]
    rows, pivots, _ = _bareiss_echelon(cleared, a.ncols)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(a.ncols):
        if f in pivot_cols:
            continue
        num, den = _back_substitute(rows, pivots, a.ncols, {f: ONE})
        if not _verify_zero_combination(cleared, num):
            raise VerificationError("kernel vector fails a*v = 0")
        basis.append((num, den))
    return basis


def field_kernel(a):
    """Basis of the right kernel over Q(x, y), one vector per free column,
    each re-verified to satisfy a*v = 0."""
    return [[RationalFunction(nj, den) for nj in num] for num, den in field_kernel_raw(a)]


def field_solve(a, b):
    """Some solution of a*x = b over Q(x, y), or None if inconsistent.
    Free variables are set to zero; the solution is re-verified."""
    if len(b) != a.nrows:
        raise ValueError("dimension mismatch")
    cleared = [_row_cleared(a.row(i) + [b[i]]) for i in range(a.nrows)]
    rows, pivots, _ = _bareiss_echelon([list(r) for r in cleared], a.ncols + 1)
    if any(c == a.ncols for _, c in pivots):
        return None
    num, den = _back_substitute(rows, pivots, a.ncols + 1, {a.ncols: -ONE})
    if not _verify_zero_combination(cleared, num):
        raise VerificationError("solve verification failed")
    return [RationalFunction(num[j], den) for j in range(a.ncols)]


def field_inv(a):
    """Inverse over Q(x, y); raises VerificationError if singular."""
    if a.nrows != a.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = a.nrows
    cols = []
    for j in range(n):
        e = [_as_rf(1) if i == j else _as_rf(0) for i in range(n)]
        x = field_solve(a, e)
        if x is None:
            raise VerificationError("matrix is singular over Q(x, y)")
        cols.append(x)
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)],
                  row_labels=a.col_labels, col_labels=a.row_labels)


def field_det(a):
    """Determinant over Q(x, y)."""
    if a.nrows != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    if a.nrows == 0:
        return _as_rf(1)
    rows = [_row_cleared(a.row(i)) for i in range(a.nrows)]
    scale = RationalFunction(ONE)
    for i in range(a.nrows):
        den = ONE
        for e in a.row(i):
            den = den * _as_rf(e).den
        scale = scale / RationalFunction(den)
    rows, pivots, swaps = _bareiss_echelon(rows, a.ncols)
    if len(pivots) < a.nrows:
        return RationalFunction(ZERO)
    det = RationalFunction(rows[a.nrows - 1][a.ncols - 1])
    if swaps % 2:
        det = -det
    return det * scale


# ---------------------------------------------------------------------------
# integer computations (Smith normal form and lattice membership)


def int_smith_transforms(a):
    """Smith normal form with transforms: returns (d, u, v) with
    u*a*v = d, u and v unimodular, d diagonal with d_i | d_{i+1} >= 0."""
    m, n = a.nrows, a.ncols
    d = [list(map(int, a.row(i))) for i in range(m)]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, k, q):  # row_i -= q * row_k
        for j in range(n):
            d[i][j] -= q * d[k][j]
        for j in range(m):
            u[i][j] -= q * u[k][j]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(m):
            d[i][j] -= q * d[i][k]
        for i in range(n):
            v[i][j] -= q * v[i][k]

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in d:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(m, n):
        # deterministic pivot: smallest |entry|, then row, then column
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] and (best is None or (abs(d[i][j]), i, j) < best):
                    best = (abs(d[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            # clear the pivot column, Euclid-stepping when remainders appear
            changed = True
            while changed:
                changed = False
                for i in range(t + 1, m):
                    if d[i][t]:
                        q = d[i][t] // d[t][t]
                        row_op(i, t, q)
                        if d[i][t]:
                            swap_rows(t, i)
                            changed = True
                for j in range(t + 1, n):
                    if d[t][j]:
                        q = d[t][j] // d[t][t]
                        col_op(j, t, q)
                        if d[t][j]:
                            swap_cols(t, j)
                            changed = True
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, -1)  # pull the offending row in and restart
        if d[t][t] < 0:
            row_op(t, t, 2)  # negate row t
        t += 1

    dm = Matrix(d, nrows=m, ncols=n)
    return dm, Matrix(u, nrows=m, ncols=m), Matrix(v, nrows=n, ncols=n)


def int_smith(a):
    """Invariant factors d_1 | d_2 | ... of an integer matrix and its rank."""
    d, _, _ = int_smith_transforms(a)
    factors = []
    for i in range(min(a.nrows, a.ncols)):
        if d.entries[i][i]:
            factors.append(d.entries[i][i])
    return factors, len(factors)


def int_solve(a, b):
    """Some integer solution of a*x = b, or None; re-verified."""
    if len(b) != a.nrows:
        raise ValueError("dimension mismatch")
    d, u, v = int_smith_transforms(a)
    c = [sum(u.entries[i][j] * b[j] for j in range(a.nrows)) for i in range(a.nrows)]
    y = [0] * a.ncols
    for i in range(a.nrows):
        di = d.entries[i][i] if i < min(a.nrows, a.ncols) else 0
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
        elif c[i]:
            return None
    x = [sum(v.entries[i][j] * y[j] for j in range(a.ncols)) for i in range(a.ncols)]
    for i in range(a.nrows):
        if sum(a.entries[i][j] * x[j] for j in range(a.ncols)) != b[i]:
            raise VerificationError("integer solve verification failed")
    return x
