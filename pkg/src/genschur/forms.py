"""Central forms, trace forms and Gram matrices.

A central form on a presentation is an even linear functional t with
t(ab) = t(ba).  When t pairs the sector-'a' part perfectly against the
sector-'c' part (and kills 'a' x 'a'), it induces a symmetrizing trace on
the integral subalgebra in every matrix size and degree:

    trace(scaled basis element of T = (b, r, s)) = [r == s] * prod t(b_k)

The Gram matrix of that trace over the scaled basis is then a signed
permutation matrix pairing T = (b, r, s) with (dual letters of b, s, r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .combinatorics import stabilizer_order
from .exactlin import IntMatrix, smith_normal_form
from .schur import SCALED, multiply


@dataclass
class FormReport:
    issues: list = field(default_factory=list)
    dual_basis: list | None = None        # dual_basis[i] = {index: int}
    dual_letter: list | None = None       # dual_basis as +/- single letters

    @property
    def symmetrizing(self):
        return not self.issues


def check_central(pres, t):
    """Witnesses for failures of centrality / evenness of t = {label: int}."""
    issues = []
    vec = [t.get(lab, 0) for lab in pres.labels]
    for i in range(pres.dim):
        if pres.parity[i] and vec[i]:
            issues.append(("odd-support", pres.labels[i]))
    for i in range(pres.dim):
        for j in range(pres.dim):
            tij = sum(c * vec[k] for k, c in pres.mult_basis(i, j).items())
            tji = sum(c * vec[k] for k, c in pres.mult_basis(j, i).items())
            if tij != tji:
                issues.append(("centrality", (pres.labels[i], pres.labels[j])))
    return issues


def check_pair_symmetrizing(pres, t):
    """Full validation of a pair-adapted symmetrizing form.

    Checks, with witnesses: centrality, vanishing on 'a' x 'a', a
    unimodular Gram matrix on the whole algebra (perfect pairing) and on
    'a' x 'c'.  On success the report carries the dual basis, and the
    letterwise dual map when every dual vector is +/- one basis element.
    """
    rep = FormReport()
    rep.issues.extend(check_central(pres, t))
    vec = [t.get(lab, 0) for lab in pres.labels]
    n = pres.dim

    def pairing(i, j):
        return sum(c * vec[k] for k, c in pres.mult_basis(i, j).items())

    a_idx = pres.sector_indices('a')
    c_idx = pres.sector_indices('c')
    for i in a_idx:
        for j in a_idx:
            if pairing(i, j):
                rep.issues.append(("pairing-on-a", (pres.labels[i], pres.labels[j])))
    if len(a_idx) != len(c_idx):
        rep.issues.append(("sector-dimensions", (len(a_idx), len(c_idx))))
    else:
        gram_ac = [[pairing(i, j) for j in c_idx] for i in a_idx]
        divisors, rank = smith_normal_form(gram_ac)
        if rank != len(a_idx) or any(d != 1 for d in divisors):
            rep.issues.append(("pairing-a-c-not-perfect", tuple(divisors)))
    gram = [[pairing(i, j) for j in range(n)] for i in range(n)]
    divisors, rank = smith_normal_form(gram)
    if rank != n or any(d != 1 for d in divisors):
        rep.issues.append(("pairing-not-perfect", tuple(divisors)))
        return rep
    if rep.issues:
        return rep
    # dual basis rows: x . gram = e_i, solved exactly over Q and checked
    # integral (automatic for a unimodular Gram matrix)
    inv = _exact_inverse(gram)
    rep.dual_basis = []
    rep.dual_letter = []
    for i in range(n):
        dual = {j: inv[i][j] for j in range(n) if inv[i][j]}
        rep.dual_basis.append(dual)
        if len(dual) == 1:
            (j, cval), = dual.items()
            rep.dual_letter.append((j, cval) if cval in (1, -1) else None)
        else:
            rep.dual_letter.append(None)
    # sector swap of the letterwise duals, when they exist
    if all(x is not None for x in rep.dual_letter):
        for i in range(n):
            j, _ = rep.dual_letter[i]
            si, sj = pres.sectors[i], pres.sectors[j]
            ok = (si, sj) in (('a', 'c'), ('c', 'a'), ('odd', 'odd'))
            if not ok:
                rep.issues.append(("dual-sector-swap",
                                   (pres.labels[i], pres.labels[j])))
    return rep


def _exact_inverse(rows):
    n = len(rows)
    work = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)]
            for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col])
        work[col], work[piv] = work[piv], work[col]
        pv = work[col][col]
        work[col] = [v / pv for v in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    inv = []
    for i in range(n):
        row = work[i][n:]
        if any(v.denominator != 1 for v in row):
            raise AssertionError("unimodular Gram with non-integer inverse")
        inv.append([int(v) for v in row])
    return inv


# ---------------------------------------------------------------------------
# induced traces

def subalgebra_trace(x, t):
    """Trace on the integral subalgebra: diagonal words, letterwise t."""
    vec = [t.get(lab, 0) for lab in x.amb.pres.labels]
    total = 0
    for T, c in x.with_tag(SCALED).coeffs.items():
        if any(r != s for (_, r, s) in T):
            continue
        prod = c
        for (lb, _, _) in T:
            prod *= vec[lb]
        total += prod
    return total


def invariant_trace(x, t):
    """Trace on the full invariant algebra: the orbit-size multiple.

    Rational in general: each orbit basis element contributes
    d! / (product of cell factorials) times the letterwise values.
    """
    amb = x.amb
    vec = [t.get(lab, 0) for lab in amb.pres.labels]
    total = Fraction(0)
    for T, c in x.orbit_coeffs().items():
        if any(r != s for (_, r, s) in T):
            continue
        prod = Fraction(c)
        for (lb, _, _) in T:
            prod *= vec[lb]
        if prod:
            total += prod * Fraction(factorial(amb.d), stabilizer_order(T))
    return total


def tensor_trace(tx, t):
    """Trace on the elementary tensor algebra: diagonal keys, letterwise t."""
    vec = [t.get(lab, 0) for lab in tx.amb.pres.labels]
    total = 0
    for key, c in tx.coeffs.items():
        if any(r != s for (_, r, s) in key):
            continue
        prod = c
        for (lb, _, _) in key:
            prod *= vec[lb]
        total += prod
    return total


# ---------------------------------------------------------------------------
# Gram matrix of the subalgebra trace

@dataclass
class GramReport:
    basis: list
    matrix: IntMatrix
    signed_permutation: bool
    divisors: list
    det_abs: int | None
    partner_ok: bool | None


def gram_subalgebra_trace(amb, t, dual_letter=None):
    """Gram matrix [trace(x_i x_j)] over the scaled basis, with verdicts.

    When the letterwise dual map is supplied, also checks that the unique
    pairing partner of each basis triple (b, r, s) is the canonical triple
    on (dual letters, s, r).
    """
    basis = list(amb.basis())
    elems = [amb.scaled_element(T) for T in basis]
    entries = {}
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            v = subalgebra_trace(multiply(x, y), t)
            if v:
                entries[(i, j)] = v
    m = IntMatrix(len(basis), len(basis), entries)
    by_row = {}
    signed_perm = True
    for (i, j), v in entries.items():
        by_row.setdefault(i, []).append((j, v))
    seen_cols = set()
    for i in range(len(basis)):
        row = by_row.get(i, [])
        if len(row) != 1 or row[0][1] not in (1, -1) or row[0][0] in seen_cols:
            signed_perm = False
            break
        seen_cols.add(row[0][0])
    if signed_perm and len(seen_cols) != len(basis):
        signed_perm = False
    if signed_perm:
        divisors = [1] * len(basis)
        det_abs = 1
    else:
        divisors, rank = smith_normal_form(m)
        det_abs = None
        if rank == len(basis):
            det_abs = 1
            for d in divisors:
                det_abs *= d
    partner_ok = None
    if dual_letter is not None and signed_perm:
        partner_ok = True
        index = {T: k for k, T in enumerate(basis)}
        from .combinatorics import canonicalize
        for i, T in enumerate(basis):
            cells = tuple((dual_letter[lb][0], s, r) for (lb, r, s) in T)
            res = canonicalize(cells, amb.odd)
            j = by_row[i][0][0]
            if res is None or index.get(res[0]) != j:
                partner_ok = False
                break
    return GramReport(basis, m, signed_perm, divisors, det_abs, partner_ok)


# ---------------------------------------------------------------------------
# stock forms for the example algebras

def zigzag_trace(pres):
    """The canonical symmetrizing form of a zigzag presentation: value 1 on
    every length-two cycle, 0 elsewhere."""
    return {lab: 1 for lab in pres.labels if lab.startswith("c")}


def trivial_extension_trace(pres):
    """Dual-evaluation-at-the-unit form on a trivial extension: the value
    on a dual label is the unit coefficient of the underlying label."""
    unit = pres.unit or {}
    return {pres.labels[i] + "*": coeff for i, coeff in unit.items()}
