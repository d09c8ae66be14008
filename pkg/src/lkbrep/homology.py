"""Cycles and bases of the degree-2 twisted homology of the one-vertex
complex, and the integral first homology.

The distinguished cycles E(i, j) span the kernel of the twisted boundary
over Q(x, y); the integral cycles form a basis of the kernel over the
Laurent ring itself, reached from any integral cycle by a descent on the
leading square cell.  For first homology, the boundary is specialized at
x = y = 1 and handed to Smith normal form.
"""

from __future__ import annotations

from functools import lru_cache

from .complexes import (
    Chain,
    cell_A,
    cell_B,
    edge_a,
    edge_b,
    edge_c,
    pair_list,
    sal_fn,
)
from .linalg import (
    Matrix,
    VerificationError,
    field_kernel_raw,
    int_smith,
    int_solve,
)
from .ring import (
    LaurentPolynomial,
    RationalFunction,
    lp_try_div_exact,
    rf_is_laurent,
    ONE,
    X,
    Y,
    ZERO,
)

LEAD = (Y - 1) * (X * Y + 1)  # coefficient of the A cell inside each E cycle


def v_chain(i, kind, n):
    """The auxiliary 2-chain supported on B(i, 1..3) whose boundary is a
    multiple of b_i and c_{i+1} (kind "b"), of a_i and c_i (kind "a"), or of
    c_i - c_{i+1} (kind "0")."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    if kind == "b":
        coeffs = {cell_B(i, 1): -X * Y, cell_B(i, 2): X * (Y - 1), cell_B(i, 3): ONE}
    elif kind == "a":
        coeffs = {cell_B(i, 1): ONE, cell_B(i, 2): X * (Y - 1), cell_B(i, 3): -X * Y}
    elif kind == "0":
        coeffs = {cell_B(i, 1): -Y, cell_B(i, 2): Y - 1, cell_B(i, 3): -Y}
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return Chain(2, coeffs)


def e_cycle(i, j, n):
    """The cycle E(i, j): its only A-cell is A(i, j), with coefficient
    (y-1)(xy+1), completed by V-chains so that the boundary cancels."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad pair ({i}, {j}) for n={n}")
    u = Chain(2, {cell_A(i, j): LEAD})
    u = u + v_chain(i, "b", n).scaled(X - 1)
    u = u + v_chain(j, "a", n).scaled(X - 1)
    sq = (X - 1) * (X - 1)
    for k in range(i + 1, j):
        u = u + v_chain(k, "0", n).scaled(sq)
    return u


@lru_cache(maxsize=None)
def e_basis(n):
    """All E cycles in pair order, verified to be cycles on construction."""
    tc = sal_fn(n)
    out = {}
    for i, j in pair_list(n):
        u = e_cycle(i, j, n)
        if tc.differential(u):
            raise VerificationError(f"E({i},{j}) is not a cycle")
        out[(i, j)] = u
    return out


def e_matrix(n):
    """Columns = E cycles written in the 2-cell basis."""
    basis2 = sal_fn(n).basis2
    es = e_basis(n)
    pairs = pair_list(n)
    return Matrix(
        [[es[p][cell] for p in pairs] for cell in basis2],
        nrows=len(basis2), ncols=len(pairs),
        row_labels=basis2, col_labels=pairs)


@lru_cache(maxsize=None)
def kernel_rank(n):
    """Dimension over Q(x, y) of the kernel of the twisted boundary; also
    verifies that the E cycles span the computed kernel.

    Membership of a kernel vector in the span of the E cycles is decided by
    its forced expansion: the A-block of the E-matrix is diagonal, so the
    only possible coordinates are the A coefficients divided by the leading
    coefficient, and e_coordinates checks that expansion exactly."""
    if n < 2:
        raise ValueError("need n >= 2")
    tc = sal_fn(n)
    vecs = field_kernel_raw(tc.differential_matrix())
    for num, _den in vecs:
        # num is den times the kernel vector, hence spans the same line
        u = Chain(2, {cell: num[k] for k, cell in enumerate(tc.basis2)})
        e_coordinates(u, n)  # raises VerificationError when outside the span
    return len(vecs)


def eta_map(n):
    """The degree-raising map on edges used to prove the kernel dimension
    bound; sends each edge into the span of the B cells over its index
    (the last c edge maps to zero)."""
    cols = {}
    for i in range(1, n + 1):
        cols[edge_a(i)] = Chain(2, {
            cell_B(i, 1): -(X * Y - Y + 1), cell_B(i, 2): -(Y - 1), cell_B(i, 3): Y})
        cols[edge_b(i)] = Chain(2, {
            cell_B(i, 1): -X * Y, cell_B(i, 2): X * (Y - 1), cell_B(i, 3): ONE})
        cols[edge_c(i)] = Chain(2, {
            cell_B(i, 1): -Y * (Y - 1), cell_B(i, 2): (Y - 1) * (Y - 1),
            cell_B(i, 3): -Y * (Y - 1)})
    cols[edge_c(n + 1)] = Chain(2)
    return cols


def verify_eta_triangular(n):
    """Build eta composed with the boundary on the span of the B cells, in
    the basis ordered B(1,1), B(1,2), B(1,3), B(2,1), ... (decreasing), and
    report whether the matrix is triangular with nonzero diagonal."""
    if n < 2:
        raise ValueError("need n >= 2")
    tc = sal_fn(n)
    eta = eta_map(n)
    blabels = [cell_B(i, r) for i in range(1, n + 1) for r in (1, 2, 3)]
    index = {b: k for k, b in enumerate(blabels)}
    size = len(blabels)
    mat = [[ZERO] * size for _ in range(size)]
    for col, b in enumerate(blabels):
        image = Chain(2)
        for e, coeff in tc.d_cols[b].coeffs.items():
            image = image + eta[e].scaled(coeff)
        for lbl, coeff in image.coeffs.items():
            mat[index[lbl]][col] = coeff
    triangular = all(not mat[r][c] for r in range(size) for c in range(r + 1, size))
    diagonal = [mat[k][k] for k in range(size)]
    nonzero = all(bool(d) for d in diagonal)
    return {
        "size": size,
        "triangular": triangular,
        "diagonal": [str(d) for d in diagonal],
        "diagonal_nonzero": nonzero,
        "passed": triangular and nonzero,
    }


def _is_lp_chain(u):
    return all(isinstance(c, LaurentPolynomial) for c in u.coeffs.values())


def e_coordinates(u, n):
    """Coordinates of a cycle over the E cycles, as rational functions.

    The coordinate at (i, j) is the A(i, j) coefficient divided by
    (y-1)(xy+1); the full chain identity is then re-verified, which also
    confirms every B coefficient."""
    tc = sal_fn(n)
    lp_input = _is_lp_chain(u)
    boundary = tc.differential(u) if lp_input else _rf_differential(tc, u)
    if boundary:
        raise ValueError("input chain is not a cycle")
    es = e_basis(n)
    pairs = pair_list(n)
    if lp_input:
        coords = {p: RationalFunction(u[cell_A(*p)], LEAD) for p in pairs}
        lhs = u.scaled(LEAD)
        rhs = Chain(2)
        for p in pairs:
            a = u[cell_A(*p)]
            if a:
                rhs = rhs + es[p].scaled(a)
        if lhs != rhs:
            raise VerificationError("cycle is not the expected combination of E cycles")
        return coords
    lead = RationalFunction(LEAD)
    coords = {}
    rem = _rf_chain(u)
    for p in pairs:
        c = _as_rf_coeff(u[cell_A(*p)]) / lead
        coords[p] = c
        if c:
            rem = rem - _rf_chain(es[p]).scaled(c)
    if rem:
        raise VerificationError("cycle is not the expected combination of E cycles")
    return coords


def _as_rf_coeff(c):
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction(c)


def _rf_chain(u):
    return Chain(u.degree, {l: _as_rf_coeff(c) for l, c in u.coeffs.items()})


def _rf_differential(tc, u):
    out = Chain(1)
    for label, coeff in u.coeffs.items():
        out = out + _rf_chain(tc.d_cols[label]).scaled(_as_rf_coeff(coeff))
    return out


def v_membership(u, n):
    """Coordinates of a cycle over the E cycles when they all lie in the
    Laurent ring, else None (the cycle sits outside the spanned submodule)."""
    coords = e_coordinates(u, n)
    out = {}
    for p, c in coords.items():
        lp = rf_is_laurent(c)
        if lp is None:
            return None
        if lp:
            out[p] = lp
    return out


def a_order_key(pair):
    """Total order on A cells: first by index spread, then by start index."""
    i, j = pair
    return (j - i, i)


def integral_x(i, j, n):
    """The integral basis cycle at leading cell A(i, j), given by its
    explicit cell form; the equivalent E-combination (after clearing its
    denominator) is asserted on construction, as is being a cycle."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad pair ({i}, {j}) for n={n}")
    xy1 = X * Y + 1
    if j == i + 1:
        u = e_cycle(i, j, n)
        denom, combo = ONE, {(i, j): ONE}
    elif i == 1 and j == 3:
        u = Chain(2, {
            cell_A(1, 2): xy1, cell_A(2, 3): xy1, cell_A(1, 3): -xy1,
            cell_B(2, 1): -(X - 1), cell_B(2, 2): X * X - 1, cell_B(2, 3): -(X - 1)})
        denom, combo = Y - 1, {(1, 2): ONE, (2, 3): ONE, (1, 3): -ONE}
    elif j == i + 2:
        u = Chain(2, {
            cell_A(i - 1, i): X * Y, cell_A(i, i + 1): Y * (X - 1),
            cell_A(i + 1, i + 2): -ONE, cell_A(i - 1, i + 1): -X * Y,
            cell_A(i, i + 2): ONE,
            cell_B(i, 2): X * (X - 1), cell_B(i, 3): -(X - 1),
            cell_B(i + 1, 2): -(X - 1), cell_B(i + 1, 3): X - 1})
        denom = LEAD
        combo = {(i - 1, i): X * Y, (i, i + 1): (X - 1) * Y, (i + 1, i + 2): -ONE,
                 (i - 1, i + 1): -X * Y, (i, i + 2): ONE}
    else:
        u = Chain(2, {
            cell_A(i, j): ONE, cell_A(i, j - 1): -ONE,
            cell_A(i + 1, j): -ONE, cell_A(i + 1, j - 1): ONE})
        denom = LEAD
        combo = {(i + 1, j - 1): ONE, (i, j - 1): -ONE, (i + 1, j): -ONE, (i, j): ONE}
    es = e_basis(n)
    rhs = Chain(2)
    for p, c in combo.items():
        rhs = rhs + es[p].scaled(c)
    if u.scaled(denom) != rhs:
        raise VerificationError(f"cell form of X({i},{j}) disagrees with its E-combination")
    if sal_fn(n).differential(u):
        raise VerificationError(f"X({i},{j}) is not a cycle")
    return u


@lru_cache(maxsize=None)
def integral_basis(n):
    return {p: integral_x(p[0], p[1], n) for p in pair_list(n)}


def _leading_divisor(i, j):
    """Coefficient of the leading cell A(i, j) inside the basis cycle."""
    if j == i + 1:
        return LEAD
    if i == 1 and j == 3:
        return -(X * Y + 1)
    return ONE


def reduce_to_integral_basis(u, n):
    """Coordinates of an integral cycle over the integral basis.

    Descends on the largest A cell present: its coefficient must be exactly
    divisible by the leading coefficient of the matching basis cycle, whose
    multiple is subtracted; a failed division or a nonzero leftover is a
    hard error, never absorbed."""
    if not _is_lp_chain(u):
        raise ValueError("expected a chain with Laurent coefficients")
    tc = sal_fn(n)
    if tc.differential(u):
        raise ValueError("input chain is not a cycle")
    basis = integral_basis(n)
    coords = {}
    work = u
    while True:
        best = None
        for p in pair_list(n):
            if work[cell_A(*p)] and (best is None or a_order_key(p) > a_order_key(best)):
                best = p
        if best is None:
            break
        alpha = work[cell_A(*best)]
        div = _leading_divisor(*best)
        lam = alpha if div == ONE else lp_try_div_exact(alpha, div)
        if lam is None:
            raise VerificationError(
                f"leading coefficient at A{best} is not divisible by {div}")
        work = work - basis[best].scaled(lam)
        coords[best] = lam
    if work:
        raise VerificationError("reduction left a nonzero chain with no A cells")
    return coords


def h1_fn(n):
    """Integral first homology of the one-vertex complex: (rank, torsion)
    of the cokernel of the untwisted boundary, plus a report confirming
    that each c_i - c_1 and b_i - a_i lies in the boundary image."""
    if n < 2:
        raise ValueError("need n >= 2")
    tc = sal_fn(n)
    m = tc.untwist()
    factors, rank = int_smith(m)
    h1rank = len(tc.basis1) - rank
    torsion = [d for d in factors if d != 1]
    eidx = {e: k for k, e in enumerate(tc.basis1)}
    relations = {}
    for i in range(2, n + 2):
        vec = [0] * len(tc.basis1)
        vec[eidx[edge_c(i)]] = 1
        vec[eidx[edge_c(1)]] = -1
        relations[f"c{i}-c1"] = int_solve(m, vec) is not None
    for i in range(1, n + 1):
        vec = [0] * len(tc.basis1)
        vec[eidx[edge_b(i)]] = 1
        vec[eidx[edge_a(i)]] = -1
        relations[f"b{i}-a{i}"] = int_solve(m, vec) is not None
    return h1rank, torsion, relations
