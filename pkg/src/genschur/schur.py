"""Invariant matrix-tensor algebras and their integral subalgebras.

For a presentation A, the algebra of interest is the subspace of
M_n(A)^(tensor d) invariant under the signed place-permutation action of
S_d.  It has two distinguished bases indexed by canonical triples T:

* the *orbit* basis: the signed sum of the elementary tensors in the
  S_d-orbit of T (one representative per distinct arrangement);
* the *scaled* basis: the orbit basis element multiplied by the product of
  the factorials of the multiplicities of its sector-'c' cells.

Integer combinations of scaled basis elements form a full-rank sublattice
closed under multiplication; that sublattice is the generalized Schur
algebra attached to the pair (A, sector-'a' subalgebra).

Two independent multiplication routes are provided.  ``multiply`` works
orbit-by-orbit with multiplicity factorials (never enumerating the
symmetric group), while ``multiply_oracle`` expands both factors into
elementary tensors, multiplies componentwise and re-expresses the result
in the canonical basis, failing loudly if the result were not invariant.
The two must agree exactly; the test-suite checks this on full basis
grids.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import combinatorics as comb
from .combinatorics import (
    bracket, pair_bracket, canonicalize, arrangements, cell_multiplicities,
    factorial_weights, enumerate_canonical, leading_word,
)

ORBIT = "orbit"
SCALED = "scaled"


class AmbientMismatch(ValueError):
    pass


class ReexpressionError(RuntimeError):
    """A tensor expected to be invariant failed to re-expand in the basis."""


class Ambient:
    """A presentation together with matrix size n and tensor degree d.

    Carries the memoized structure-constant table; the cache is
    transparent (results are identical with caching disabled).
    """

    def __init__(self, pres, n, d, use_cache=True):
        if n < 1 or d < 0:
            raise ValueError("need n >= 1 and d >= 0")
        self.pres = pres
        self.n = n
        self.d = d
        self.use_cache = use_cache
        self._prod_cache = {}
        self._basis = None

    @property
    def odd(self):
        return self.pres.odd

    def key(self):
        return (self.pres.name, self.n, self.d)

    def __eq__(self, other):
        return (isinstance(other, Ambient) and self.n == other.n
                and self.d == other.d and self.pres == other.pres)

    def __repr__(self):
        return f"Ambient({self.pres.name}, n={self.n}, d={self.d})"

    def basis(self):
        """All canonical triples, in the fixed enumeration order."""
        if self._basis is None:
            self._basis = tuple(enumerate_canonical(
                self.pres.dim, self.n, self.d, self.odd))
        return self._basis

    def scale_of(self, triple):
        """Multiplicity factorial over sector-'c' cells ([T]!_c)."""
        return factorial_weights(triple, self.pres.sectors)[2]

    def zero(self, tag=SCALED):
        return SchurElement(self, {}, tag)

    def orbit_element(self, triple, coeff=1):
        """Orbit-basis element of any valid arrangement (canonicalized)."""
        return self._unit_element(triple, coeff, ORBIT)

    def scaled_element(self, triple, coeff=1):
        """Scaled-basis element of any valid arrangement (canonicalized)."""
        return self._unit_element(triple, coeff, SCALED)

    def _unit_element(self, triple, coeff, tag):
        triple = tuple(tuple(c) for c in triple)
        if len(triple) != self.d:
            raise AmbientMismatch(f"triple has length {len(triple)}, ambient d={self.d}")
        if not comb.is_valid_triple(triple, self.odd, self.n):
            if any(not (1 <= c[1] <= self.n and 1 <= c[2] <= self.n) for c in triple):
                raise ValueError("row/col entries out of range")
        res = canonicalize(triple, self.odd)
        if res is None:
            return self.zero(tag)
        canon, sign = res
        return SchurElement(self, {canon: sign * coeff}, tag)

    # -- structure constants -------------------------------------------------

    def structure_constants(self, T, U):
        """Orbit-basis coefficients of the product of basis elements T, U."""
        if self.use_cache:
            got = self._prod_cache.get((T, U))
            if got is None:
                got = _structure_constants(self, T, U)
                self._prod_cache[(T, U)] = got
            return got
        return _structure_constants(self, T, U)


def _structure_constants(amb, T, U):
    """Product rule, grouped by orbits of matching position data.

    A single elementary term of the product chooses, for each position, a
    cell of T (giving letter a, row r, middle t), a cell of U with row
    equal to that middle (giving letter c and column s), and a basis letter
    b in the support of a*c.  Grouping the positions by the resulting
    sextuple (a, r, t, c, s, b) collapses the stabilizer orbit of the
    output into one term counted by a multinomial index, so the cost is
    polynomial in the multiplicities rather than d factorial.
    """
    d = amb.d
    if d == 0:
        return {(): 1}
    if sorted(c[2] for c in T) != sorted(c[1] for c in U):
        return {}
    odd = amb.odd
    pres = amb.pres
    left_types = sorted(cell_multiplicities(T).items())
    right_need = cell_multiplicities(U)
    # options[i] = list of (right_cell, b, kappa) usable by left type i
    options = []
    for cellL, multL in left_types:
        opts = []
        for cellR in right_need:
            if cellR[1] != cellL[2]:
                continue
            for b, kappa in pres.mult_basis(cellL[0], cellR[0]).items():
                opts.append((cellR, b, kappa))
        if not opts:
            return {}
        opts.sort(key=lambda o: (o[0], o[1]))
        options.append(opts)

    base_sign = bracket(T, odd) + bracket(U, odd)
    out = {}
    assignment = []  # (left_cell, right_cell, b, count)

    def finish():
        a_cells = []
        c_cells = []
        out_cells = []
        kappa_prod = 1
        denom = 1
        for cellL, cellR, b, cnt in assignment:
            a_cells.extend([cellL] * cnt)
            c_cells.extend([cellR] * cnt)
            out_cells.extend([(b, cellL[1], cellR[2])] * cnt)
            kappa_prod *= kappa_for(cellL, cellR, b) ** cnt
            denom *= factorial(cnt)
        out_triple = tuple(out_cells)
        res = canonicalize(out_triple, odd)
        if res is None:
            return  # repeated odd output cell: the orbit sum vanishes
        canon, csign = res
        index = 1
        for m in cell_multiplicities(out_triple).values():
            index *= factorial(m)
        index //= denom
        a_trip = tuple(a_cells)
        c_trip = tuple(c_cells)
        exp = (base_sign + bracket(a_trip, odd) + bracket(c_trip, odd)
               + pair_bracket([c[0] for c in a_cells], [c[0] for c in c_cells], odd))
        coeff = kappa_prod * index * (1 if exp % 2 == 0 else -1) * csign
        v = out.get(canon, 0) + coeff
        if v:
            out[canon] = v
        elif canon in out:
            del out[canon]

    def kappa_for(cellL, cellR, b):
        return pres.mult_basis(cellL[0], cellR[0])[b]

    def distribute(i, remaining):
        if i == len(left_types):
            if all(v == 0 for v in remaining.values()):
                finish()
            return
        cellL, multL = left_types[i]
        opts = options[i]

        def fill(j, left):
            if j == len(opts):
                if left == 0:
                    distribute(i + 1, remaining)
                return
            cellR, b, kappa = opts[j]
            avail = remaining[cellR]
            # an odd output cell may not repeat
            cap = min(left, avail)
            if (b in odd) and cap > 1:
                cap = 1
            for take in range(cap + 1):
                if take:
                    remaining[cellR] -= take
                    assignment.append((cellL, cellR, b, take))
                fill(j + 1, left - take)
                if take:
                    remaining[cellR] += take
                    assignment.pop()

        fill(0, multL)

    distribute(0, dict(right_need))
    return out


def _normalize(coeffs):
    """Drop zeros; demote integral Fractions to int."""
    out = {}
    for k, v in coeffs.items():
        if isinstance(v, Fraction):
            if v == 0:
                continue
            if v.denominator == 1:
                v = int(v)
        elif v == 0:
            continue
        out[k] = v
    return out


class SchurElement:
    """Sparse combination of canonical triples, in one of the two scalings."""

    __slots__ = ("amb", "coeffs", "tag")

    def __init__(self, amb, coeffs, tag=SCALED):
        if tag not in (ORBIT, SCALED):
            raise ValueError(f"unknown scaling tag {tag!r}")
        self.amb = amb
        self.coeffs = _normalize(coeffs)
        self.tag = tag

    # -- ring structure -------------------------------------------------------

    def _check(self, other):
        if self.amb != other.amb:
            raise AmbientMismatch(
                f"ambient mismatch: {self.amb!r} vs {other.amb!r}")

    def __add__(self, other):
        self._check(other)
        other = other.with_tag(self.tag)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchurElement(self.amb, out, self.tag)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return SchurElement(self.amb, {k: v * c for k, v in self.coeffs.items()},
                            self.tag)

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        if self.amb != other.amb:
            return False
        return self.orbit_coeffs() == other.orbit_coeffs()

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    # -- scalings --------------------------------------------------------------

    def orbit_coeffs(self):
        """Coefficients with respect to the orbit basis."""
        if self.tag == ORBIT:
            return dict(self.coeffs)
        return _normalize({k: v * self.amb.scale_of(k)
                           for k, v in self.coeffs.items()})

    def with_tag(self, tag):
        if tag == self.tag:
            return self
        if tag == ORBIT:
            return SchurElement(self.amb, self.orbit_coeffs(), ORBIT)
        out = {}
        for k, v in self.coeffs.items():
            w = self.amb.scale_of(k)
            out[k] = Fraction(v, w) if v % w else v // w
        return SchurElement(self.amb, out, SCALED)

    def is_lattice_point(self):
        """True when all scaled-basis coefficients are integers."""
        return all(isinstance(v, int) or v.denominator == 1
                   for v in self.with_tag(SCALED).coeffs.values())

    def parity(self):
        """Common parity of the support, or None when mixed."""
        ps = {key_parity(self.amb, k) for k in self.coeffs}
        if len(ps) == 1:
            return ps.pop()
        return 0 if not ps else None

    def support(self):
        return sorted(self.coeffs)

    def __repr__(self):
        return f"SchurElement({format_element(self)!r})"


def key_parity(amb, triple):
    return sum(amb.pres.parity[c[0]] for c in triple) % 2


# ---------------------------------------------------------------------------
# multiplication

def multiply(x, y, use_cache=None):
    """Product via the orbit-grouped rule; exact in either scaling.

    With two scaled inputs the output is scaled; any coefficient that
    fails to be integral there is kept as an exact Fraction (the
    integrality of lattice products is a theorem checked by the tests, not
    silently assumed here).
    """
    x._check(y)
    amb = x.amb
    if use_cache is None:
        use_cache = amb.use_cache
    tag = SCALED if (x.tag == SCALED and y.tag == SCALED) else ORBIT
    xo = x.orbit_coeffs()
    yo = y.orbit_coeffs()
    acc = {}
    for T, cT in xo.items():
        for U, cU in yo.items():
            c = cT * cU
            if not c:
                continue
            if use_cache:
                table = amb.structure_constants(T, U)
            else:
                table = _structure_constants(amb, T, U)
            for V, f in table.items():
                v = acc.get(V, 0) + c * f
                if v:
                    acc[V] = v
                elif V in acc:
                    del acc[V]
    out = SchurElement(amb, acc, ORBIT)
    return out.with_tag(tag)


# ---------------------------------------------------------------------------
# elementary-tensor route (the oracle)

class TensorElement:
    """Sparse expansion in the elementary basis of M_n(A)^(tensor d).

    Keys are arbitrary cell tuples (arrangements, not canonical triples).
    """

    __slots__ = ("amb", "coeffs")

    def __init__(self, amb, coeffs):
        self.amb = amb
        self.coeffs = _normalize(coeffs)

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.amb == other.amb
                and self.coeffs == other.coeffs)

    def apply_place_permutation(self, sigma):
        """Signed diagonal action of a permutation on the tensor factors."""
        odd = self.amb.odd
        out = {}
        for key, c in self.coeffs.items():
            moved = comb.apply_perm(key, sigma)
            sgn = comb.perm_bracket(sigma, [cell[0] for cell in key], odd)
            out[moved] = out.get(moved, 0) + (c if sgn % 2 == 0 else -c)
        return TensorElement(self.amb, out)

    def __repr__(self):
        return f"TensorElement({len(self.coeffs)} terms)"


def to_tensor(x):
    """Expand into elementary tensors: signed sum over each orbit."""
    amb = x.amb
    odd = amb.odd
    out = {}
    for T, c in x.orbit_coeffs().items():
        bT = bracket(T, odd)
        for arr in arrangements(T):
            sgn = (bT + bracket(arr, odd)) % 2
            out[arr] = out.get(arr, 0) + (c if sgn == 0 else -c)
    return TensorElement(amb, out)


def tensor_multiply(tx, ty):
    """Componentwise product of elementary tensors with supersigns."""
    if tx.amb != ty.amb:
        raise AmbientMismatch("tensor ambient mismatch")
    amb = tx.amb
    pres = amb.pres
    odd = amb.odd
    out = {}
    for kx, cx in tx.coeffs.items():
        for ky, cy in ty.coeffs.items():
            if any(a[2] != b[1] for a, b in zip(kx, ky)):
                continue
            sgn = pair_bracket([c[0] for c in kx], [c[0] for c in ky], odd)
            coeff = cx * cy * (1 if sgn % 2 == 0 else -1)
            # expand each position over the product table
            partial = [((), coeff)]
            dead = False
            for a, b in zip(kx, ky):
                table = pres.mult_basis(a[0], b[0])
                if not table:
                    dead = True
                    break
                nxt = []
                for cells, cc in partial:
                    for lb, kap in table.items():
                        nxt.append((cells + ((lb, a[1], b[2]),), cc * kap))
                partial = nxt
            if dead:
                continue
            for cells, cc in partial:
                v = out.get(cells, 0) + cc
                if v:
                    out[cells] = v
                elif cells in out:
                    del out[cells]
    return TensorElement(amb, out)


def from_tensor(t, tag=ORBIT):
    """Re-express an invariant tensor in the canonical basis.

    Reads the coefficients at canonical keys (where each orbit-basis
    element contributes exactly 1) and verifies the reconstruction matches
    the input exactly; raises ReexpressionError otherwise.
    """
    amb = t.amb
    odd = amb.odd
    coeffs = {}
    for key, c in t.coeffs.items():
        if comb.canonicalize(key, odd) == (key, 1) and key == tuple(sorted(key)):
            coeffs[key] = c
    elem = SchurElement(amb, coeffs, ORBIT)
    if to_tensor(elem) != t:
        raise ReexpressionError("tensor is not in the invariant span")
    return elem.with_tag(tag) if tag != ORBIT else elem


def multiply_oracle(x, y):
    """Independent product route through the full elementary expansion."""
    x._check(y)
    tag = SCALED if (x.tag == SCALED and y.tag == SCALED) else ORBIT
    tz = tensor_multiply(to_tensor(x), to_tensor(y))
    return from_tensor(tz, tag)


# ---------------------------------------------------------------------------
# general-letter elements

def expand_general(amb, letters, rows, cols, tag=ORBIT):
    """Orbit-sum element for a word of homogeneous (non-basis) letters.

    letters is a sequence of coefficient vectors {label_index: int}; each
    must be homogeneous.  The element is the signed sum over the distinct
    arrangements of the formal cells (letter identity, row, col), each
    arrangement expanded multilinearly into elementary tensors.  This is
    not the same as expanding letter-by-letter first: coefficients here
    follow the orbit of the formal word.
    """
    d = amb.d
    if not (len(letters) == len(rows) == len(cols) == d):
        raise ValueError("need d letters, rows and cols")
    pres = amb.pres
    parities = []
    vecs = []
    for vec in letters:
        vec = {k: v for k, v in vec.items() if v}
        if not vec:
            return amb.zero(tag)
        ps = {pres.parity[i] for i in vec}
        if len(ps) != 1:
            raise ValueError("letters must be homogeneous")
        parities.append(ps.pop())
        vecs.append(vec)
    # formal identity of each letter: key by its coefficient vector
    ids = {}
    for vec in vecs:
        frozen = tuple(sorted(vec.items()))
        ids.setdefault(frozen, len(ids))
    formal = tuple((ids[tuple(sorted(vec.items()))], rows[k], cols[k])
                   for k, vec in enumerate(vecs))
    odd_ids = frozenset(ids[tuple(sorted(vec.items()))]
                        for vec, p in zip(vecs, parities) if p)
    # membership constraint on the formal triple
    if not comb.is_valid_triple(formal, odd_ids, amb.n):
        return amb.zero(tag)
    by_id = {}
    for vec in vecs:
        by_id[ids[tuple(sorted(vec.items()))]] = vec
    base = bracket(formal, odd_ids)
    out = {}
    for arr in arrangements(formal):
        sgn = (base + bracket(arr, odd_ids)) % 2
        sign = 1 if sgn == 0 else -1
        partial = [((), sign)]
        for fid, r, s in arr:
            vec = by_id[fid]
            nxt = []
            for cells, cc in partial:
                for lb, coeff in vec.items():
                    nxt.append((cells + ((lb, r, s),), cc * coeff))
            partial = nxt
        for cells, cc in partial:
            v = out.get(cells, 0) + cc
            if v:
                out[cells] = v
            elif cells in out:
                del out[cells]
    return from_tensor(TensorElement(amb, out), tag)


def invariant_tensor_power(amb, entries, tag=ORBIT):
    """The d-th tensor power of a single even element of M_n(A).

    entries is {(label_index, row, col): coeff} with even letters only;
    the power is S_d-invariant on the nose.
    """
    pres = amb.pres
    for (lb, r, s) in entries:
        if pres.parity[lb] != 0:
            raise ValueError("tensor powers are only taken of even elements")
    out = {(): 1}
    for _ in range(amb.d):
        nxt = {}
        for cells, cc in out.items():
            for (lb, r, s), coeff in entries.items():
                key = cells + ((lb, r, s),)
                nxt[key] = nxt.get(key, 0) + cc * coeff
        out = nxt
    return from_tensor(TensorElement(amb, _normalize(out)), tag)


# ---------------------------------------------------------------------------
# idempotents and distinguished elements

def _require_unital_pair(amb, what):
    if not amb.pres.unital_good_pair():
        raise ValueError(f"{what} needs a unital pair "
                         f"(unit supported in sector 'a')")


def identity(amb, tag=SCALED):
    """Unit of the algebra (needs a unit in the presentation)."""
    if amb.pres.unit is None:
        raise ValueError("presentation has no unit")
    entries = {(lb, r, r): c for lb, c in amb.pres.unit.items()
               for r in range(1, amb.n + 1)}
    return invariant_tensor_power(amb, entries, tag)


def weight_idempotent(amb, lam, f=None, tag=SCALED):
    """Diagonal idempotent attached to a composition (and an idempotent f)."""
    if f is None:
        if amb.pres.unit is None:
            raise ValueError("presentation has no unit")
        f = dict(amb.pres.unit)
    if sum(lam) != amb.d or len(lam) != amb.n:
        raise ValueError("composition must have n parts summing to d")
    if not amb.pres.is_idempotent(f):
        raise ValueError("f must be idempotent")
    word = leading_word(lam)
    return expand_general(amb, [f] * amb.d, word, word, tag)


def idempotent_sum(amb, f, tag=SCALED):
    """Sum of the weight idempotents of f over all compositions.

    Equals the d-th tensor power of the diagonal matrix with f in every
    slot.
    """
    if not amb.pres.is_idempotent(dict(f)):
        raise ValueError("f must be idempotent")
    entries = {(lb, r, r): c for lb, c in f.items()
               for r in range(1, amb.n + 1)}
    return invariant_tensor_power(amb, entries, tag)


def window_idempotent(amb, inner_n, tag=SCALED):
    """Sum of weight idempotents supported on the first inner_n rows."""
    _require_unital_pair(amb, "window idempotent")
    if not (1 <= inner_n <= amb.n):
        raise ValueError("window must satisfy 1 <= inner_n <= n")
    unit = dict(amb.pres.unit)
    entries = {(lb, r, r): c for lb, c in unit.items()
               for r in range(1, inner_n + 1)}
    return invariant_tensor_power(amb, entries, tag)


def multi_idempotent(amb, lams, family, tag=SCALED):
    """Idempotent attached to a tuple of compositions and orthogonal
    sector-'a' idempotents: letters f_i^(|lam_i|), diagonal leading words."""
    if len(lams) != len(family):
        raise ValueError("need one composition per idempotent")
    if sum(sum(l) for l in lams) != amb.d:
        raise ValueError("total size must be d")
    letters = []
    word = []
    for lam, f in zip(lams, family):
        if len(lam) != amb.n:
            raise ValueError("each composition needs n parts")
        letters.extend([dict(f)] * sum(lam))
        word.extend(leading_word(lam))
    return expand_general(amb, letters, tuple(word), tuple(word), tag)


def permutation_element(amb, sigmas, family, tag=SCALED):
    """Invariant element of a tuple of row permutations, one per idempotent.

    sigmas[i] is a permutation of [1, n] given as a tuple of images
    (1-based); the element is the d-th tensor power of the sum of the
    permutation matrices scaled by the orthogonal idempotents.
    """
    if len(sigmas) != len(family):
        raise ValueError("need one permutation per idempotent")
    entries = {}
    for sigma, f in zip(sigmas, family):
        if sorted(sigma) != list(range(1, amb.n + 1)):
            raise ValueError("permutations must be on [1, n]")
        for r in range(1, amb.n + 1):
            for lb, c in f.items():
                key = (lb, sigma[r - 1], r)
                entries[key] = entries.get(key, 0) + c
    return invariant_tensor_power(amb, entries, tag)


def standard_family(pres):
    """Orthogonal idempotent family as coefficient vectors, if visible."""
    fam = pres.orthogonal_idempotent_family()
    if fam is None:
        return None
    return [{i: 1} for i in fam]


# ---------------------------------------------------------------------------
# anti-involution and truncation

def apply_involution(x):
    """Transpose-with-involution: letters mapped, row and col words swapped.

    Carries the tensor supersign (-1)^(o choose 2) on keys with o odd
    letters; without it the entrywise transpose is not anti-multiplicative
    on the invariants.
    """
    amb = x.amb
    pres = amb.pres
    if pres.involution is None:
        raise ValueError("presentation declares no anti-involution")
    out = amb.zero(x.tag)
    for T, c in x.coeffs.items():
        sign = 1
        cells = []
        for (lb, r, s) in T:
            lb2, sg = pres.involution[lb]
            sign *= sg
            cells.append((lb2, s, r))
        o = sum(1 for cell in T if cell[0] in amb.odd)
        if (o * (o - 1) // 2) % 2:
            sign = -sign
        out = out + amb._unit_element(tuple(cells), sign * c, x.tag)
    return out


def corner_basis(amb, f):
    """Canonical triples whose letters all survive the corner projection
    by the idempotent f (an adapted basis is required)."""
    pres = amb.pres
    f = dict(f)
    if not pres.is_idempotent(f):
        raise ValueError("truncation element is not idempotent")
    keep = set()
    for i in range(pres.dim):
        b = {i: 1}
        fbf = pres.mult(f, pres.mult(b, f))
        if fbf == b:
            keep.add(i)
        elif fbf:
            raise ValueError(
                f"basis not adapted to the idempotent: witness {pres.labels[i]}")
    return [T for T in amb.basis() if all(c[0] in keep for c in T)]


def corner_restrict(x, keep_labels):
    """Project onto the keys supported on the surviving letters."""
    coeffs = {T: c for T, c in x.coeffs.items()
              if all(cell[0] in keep_labels for cell in T)}
    return SchurElement(x.amb, coeffs, x.tag)


# ---------------------------------------------------------------------------
# text form

def format_triple(amb, triple):
    labels = amb.pres.labels
    return "{}|{}|{}".format(
        ",".join(labels[c[0]] for c in triple),
        ",".join(str(c[1]) for c in triple),
        ",".join(str(c[2]) for c in triple))


def parse_triple(amb, text):
    """Parse 'b1,b2|r1,r2|s1,s2' into a cell tuple."""
    parts = text.split("|")
    if len(parts) != 3:
        raise ValueError(f"triple {text!r}: expected 3 '|'-separated parts")
    if parts == ["", "", ""] and amb.d == 0:
        return ()
    names = parts[0].split(",")
    try:
        rows = [int(v) for v in parts[1].split(",")]
        cols = [int(v) for v in parts[2].split(",")]
    except ValueError as e:
        raise ValueError(f"triple {text!r}: bad row/col number ({e})")
    if not (len(names) == len(rows) == len(cols)):
        raise ValueError(f"triple {text!r}: words have unequal lengths")
    if len(names) != amb.d:
        raise ValueError(f"triple {text!r}: length {len(names)}, ambient d={amb.d}")
    cells = []
    for lab, r, s in zip(names, rows, cols):
        if lab not in amb.pres.index:
            raise ValueError(f"triple {text!r}: unknown basis label {lab!r}")
        if not (1 <= r <= amb.n and 1 <= s <= amb.n):
            raise ValueError(f"triple {text!r}: row/col outside [1,{amb.n}]")
        cells.append((amb.pres.index[lab], r, s))
    return tuple(cells)


def format_element(x):
    if not x.coeffs:
        return "0"
    parts = []
    for T in sorted(x.coeffs):
        c = x.coeffs[T]
        body = f"[{format_triple(x.amb, T)}]"
        if c == 1:
            parts.append(f"+ {body}")
        elif c == -1:
            parts.append(f"- {body}")
        elif isinstance(c, Fraction) and c.denominator != 1:
            sgn = "+" if c > 0 else "-"
            parts.append(f"{sgn} {abs(c)}*{body}")
        else:
            sgn = "+" if c > 0 else "-"
            parts.append(f"{sgn} {abs(c)}*{body}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text
