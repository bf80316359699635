"""Exact integer and rational sparse linear algebra.

Everything here works over Python ints (arbitrary precision) or
fractions.Fraction; no floating point is ever used.  The lattice routines
(Smith form, Hermite-style row reduction, integer kernels) back the
divisibility and double-centralizer verdicts elsewhere in the package, so
their contracts are stated carefully:

* ``smith_normal_form`` returns the nonzero elementary divisors
  d1 | d2 | ... | dr (positive, with the divisibility chain enforced).
* ``integer_kernel`` returns a basis of the full kernel *lattice*
  {v in Z^ncols : M v = 0}; this lattice is automatically saturated, i.e.
  every rational kernel vector with integer entries is an integer
  combination of the basis.
* ``rational_rank`` is the rank over Q, computed fraction-free.
"""

from __future__ import annotations

from fractions import Fraction


class IntMatrix:
    """Sparse integer matrix: entries stored as {(row, col): value}, no zeros."""

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if v:
                    if not (0 <= i < nrows and 0 <= j < ncols):
                        raise ValueError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                    self.entries[(i, j)] = int(v)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        m = cls(len(rows), ncols)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v:
                    m.entries[(i, j)] = int(v)
        return m

    def to_rows(self):
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def transpose(self):
        m = IntMatrix(self.ncols, self.nrows)
        m.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return m

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, {len(self.entries)} nonzero)"


def _rows_of(m):
    if isinstance(m, IntMatrix):
        return m.to_rows(), m.nrows, m.ncols
    rows = [list(r) for r in m]
    return rows, len(rows), (len(rows[0]) if rows else 0)


def smith_normal_form(m, transforms=False):
    """Smith normal form of an integer matrix.

    Returns (divisors, rank) where divisors = [d1, ..., dr] are the positive
    nonzero elementary divisors with d1 | d2 | ... | dr.  With
    transforms=True returns (divisors, rank, U, V) such that U * m * V is
    the diagonal matrix of divisors, U and V unimodular (as row lists).
    """
    a, nr, nc = _rows_of(m)
    U = [[int(i == j) for j in range(nr)] for i in range(nr)] if transforms else None
    V = [[int(i == j) for j in range(nc)] for i in range(nc)] if transforms else None

    def row_op(i, k, q):  # row i -= q * row k
        ai, ak = a[i], a[k]
        for j in range(nc):
            ai[j] -= q * ak[j]
        if transforms:
            ui, uk = U[i], U[k]
            for j in range(nr):
                ui[j] -= q * uk[j]

    def col_op(j, k, q):  # col j -= q * col k
        for i in range(nr):
            a[i][j] -= q * a[i][k]
        if transforms:
            for i in range(nc):
                V[i][j] -= q * V[i][k]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if transforms:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        if transforms:
            for r in V:
                r[j], r[k] = r[k], r[j]

    t = 0
    limit = min(nr, nc)
    while t < limit:
        # pick pivot of least absolute value in the trailing block
        piv = None
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v:
                    if best is None or abs(v) < best:
                        best = abs(v)
                        piv = (i, j)
                        if best == 1:
                            break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t below the pivot
            again = False
            for i in range(t + 1, nr):
                v = a[i][t]
                if v:
                    q = v // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:  # remainder smaller than pivot: swap up, restart
                        swap_rows(t, i)
                        again = True
            if again:
                continue
            for j in range(t + 1, nc):
                v = a[t][j]
                if v:
                    q = v // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        t += 1

    # normalize signs and enforce the divisibility chain
    diag = [a[i][i] for i in range(limit)]
    rank = sum(1 for v in diag if v)
    for i in range(rank):
        if a[i][i] < 0:
            for j in range(nc):
                a[i][j] = -a[i][j]
            if transforms:
                for j in range(nr):
                    U[i][j] = -U[i][j]
    i = 0
    while i < rank - 1:
        if a[i + 1][i + 1] % a[i][i] != 0:
            # fold entry (i+1,i+1) into column i and rediagonalize the 2x2 block
            col_op(i, i + 1, -1)  # col i += col i+1
            # euclid on rows i, i+1 in column i
            while a[i + 1][i]:
                q = a[i][i] // a[i + 1][i]
                row_op(i, i + 1, q)
                swap_rows(i, i + 1)
            # clear the fill-in in row i / col i+1
            q, r = divmod(a[i][i + 1], a[i][i])
            if r:
                raise AssertionError("smith normal form: pivot does not divide fill-in")
            col_op(i + 1, i, q)
            if a[i][i] < 0:
                for j in range(nc):
                    a[i][j] = -a[i][j]
                if transforms:
                    for j in range(nr):
                        U[i][j] = -U[i][j]
            if a[i + 1][i + 1] < 0:
                for j in range(nc):
                    a[i + 1][j] = -a[i + 1][j]
                if transforms:
                    for j in range(nr):
                        U[i + 1][j] = -U[i + 1][j]
            i = max(i - 1, 0)
        else:
            i += 1
    divisors = [a[i][i] for i in range(rank)]
    if transforms:
        return divisors, rank, U, V
    return divisors, rank


def integer_kernel(m):
    """Basis of the kernel lattice {v in Z^ncols : m v = 0}.

    The result is a list of integer vectors; the lattice they span is
    saturated (kernels of integer matrices always are), and each basis
    vector is primitive.
    """
    rows, nr, nc = _rows_of(m)
    # kernel basis vectors, maintained as rows of K; invariant: K spans
    # {v : all processed rows are orthogonal to v}
    K = [[int(i == j) for j in range(nc)] for i in range(nc)]
    for row in rows:
        if not any(row):
            continue
        vals = [sum(kv * rv for kv, rv in zip(k, row)) for k in K]
        nz = [i for i, v in enumerate(vals) if v]
        if not nz:
            continue
        # gcd-chain the nonzero dot products into a single position; each
        # pass reduces every value mod the current minimum, so the minimum
        # strictly shrinks until one value remains
        while len(nz) > 1:
            i0 = min(nz, key=lambda i: abs(vals[i]))
            new_nz = [i0]
            for i in nz:
                if i == i0:
                    continue
                q = vals[i] // vals[i0]
                if q:
                    vals[i] -= q * vals[i0]
                    K[i] = [kv - q * k0 for kv, k0 in zip(K[i], K[i0])]
                if vals[i]:
                    new_nz.append(i)
            nz = new_nz
        K = [k for i, k in enumerate(K) if i != nz[0]]
    return [list(k) for k in K]


def rational_rank(m):
    """Rank over Q by Bareiss fraction-free elimination."""
    rows, nr, nc = _rows_of(m)
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    prev = 1
    col = 0
    while rank < len(rows) and col < nc:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            if not any(ri[col:]):
                continue
            f = ri[col]
            for j in range(col, nc):
                ri[j] = (p * ri[j] - f * rows[rank][j]) // prev
        prev = p
        rank += 1
        col += 1
    return rank


def row_echelon_lattice(rows, ncols):
    """Hermite-style echelon basis of the lattice spanned by integer rows.

    Returns a list of rows in echelon form (increasing pivot columns,
    pivots positive, entries above pivots reduced).  Adding rows one at a
    time keeps this usable as an incremental lattice accumulator.
    """
    basis = {}  # pivot column -> row
    for row in rows:
        add_row_to_lattice(basis, list(row), ncols)
    return lattice_rows(basis)


def add_row_to_lattice(basis, row, ncols):
    """Fold one integer row into an echelon basis dict {pivot_col: row}.

    Returns True if the lattice grew (rank or index changed).
    """
    changed = False
    while True:
        piv = next((j for j in range(ncols) if row[j]), None)
        if piv is None:
            return changed
        if piv not in basis:
            if row[piv] < 0:
                row = [-v for v in row]
            basis[piv] = row
            _reduce_above(basis, piv, ncols)
            return True
        b = basis[piv]
        if row[piv] % b[piv] == 0:
            q = row[piv] // b[piv]
            row = [rv - q * bv for rv, bv in zip(row, b)]
            # keep reducing at later pivots
        else:
            # unimodular 2x2 transform: pivot row becomes the gcd combination
            g, x, y = _xgcd(b[piv], row[piv])
            new = [x * bv + y * rv for bv, rv in zip(b, row)]
            row = [(-(row[piv] // g)) * bv + (b[piv] // g) * rv
                   for bv, rv in zip(b, row)]
            basis[piv] = new
            _reduce_above(basis, piv, ncols)
            changed = True


def _reduce_above(basis, piv, ncols):
    b = basis[piv]
    for p2, r2 in basis.items():
        if p2 == piv:
            continue
        v = r2[piv]
        if v:
            q = v // b[piv]
            if q:
                basis[p2] = [rv - q * bv for rv, bv in zip(r2, b)]


def lattice_rows(basis):
    return [basis[p] for p in sorted(basis)]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_in_lattice(basis, vec, ncols):
    """Express vec as an integer combination of an echelon basis.

    basis is the dict produced by add_row_to_lattice.  Returns the
    coefficient dict {pivot_col: coeff} or None if vec is not in the
    lattice.
    """
    vec = list(vec)
    coeffs = {}
    while True:
        piv = next((j for j in range(ncols) if vec[j]), None)
        if piv is None:
            return coeffs
        if piv not in basis:
            return None
        b = basis[piv]
        q, r = divmod(vec[piv], b[piv])
        if r:
            return None
        coeffs[piv] = q
        vec = [vv - q * bv for vv, bv in zip(vec, b)]


def determinant(m):
    """Exact determinant by cofactor expansion; intended for size <= 5."""
    rows, nr, nc = _rows_of(m)
    if nr != nc:
        raise ValueError("determinant of a non-square matrix")
    if nr == 0:
        return 1
    if nr == 1:
        return rows[0][0]
    det = 0
    for j in range(nc):
        v = rows[0][j]
        if not v:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        det += (-1) ** j * v * determinant(minor)
    return det


def rational_kernel_dimension(m):
    """dim over Q of the kernel; cross-check oracle for integer_kernel."""
    rows, nr, nc = _rows_of(m)
    # plain Gaussian elimination with Fractions
    work = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pv = work[rank][col]
        work[rank] = [v / pv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return nc - rank
