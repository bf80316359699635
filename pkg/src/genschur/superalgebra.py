"""Finite-dimensional superalgebra presentations with a chosen even subalgebra.

A presentation lists a homogeneous basis, a sector for each basis element,
and integer structure constants.  The three sectors are

    'a'   : a basis of the distinguished even subalgebra,
    'c'   : a basis of an even complement of it,
    'odd' : a basis of the odd part.

Products are given by the sparse table kappa: (left, right) -> {result:
coefficient}; omitted pairs multiply to zero.  Validation checks parity
compatibility, associativity on all basis triples, closure of the 'a'
sector, unit axioms and (when declared) that the anti-involution is
involutive, anti-multiplicative and sector-preserving.

Constructors are provided for the standard examples: matrix superalgebras
M_{p|q}, trivial extensions C + C^*, and the (extended) zigzag path
algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class ValidationIssue:
    rule: str
    witness: tuple
    detail: str

    def __str__(self):
        return f"{self.rule} at {self.witness}: {self.detail}"


@dataclass
class ValidationReport:
    issues: list = field(default_factory=list)
    unital_good_pair: bool = False

    @property
    def valid(self):
        return not self.issues


class Presentation:
    """Immutable superalgebra presentation over the integers."""

    def __init__(self, name, labels, sectors, products, unit=None,
                 involution=None, parity=None):
        """
        labels:     ordered basis labels (strings)
        sectors:    parallel list with entries 'a' | 'c' | 'odd'
        products:   {(left_label, right_label): {result_label: int}}
        unit:       optional {label: int} coefficient vector
        involution: optional {label: (label, sign)}
        parity:     optional declared parities; default follows the sectors.
                    A declared parity clashing with its sector is kept and
                    reported by validate(), not rejected here.
        """
        self.name = name
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.sectors = list(sectors)
        if len(self.sectors) != len(self.labels):
            raise ValueError("sector list must match basis")
        for sec in self.sectors:
            if sec not in ('a', 'c', 'odd'):
                raise ValueError(f"unknown sector {sec!r}")
        if parity is None:
            self.parity = [1 if s == 'odd' else 0 for s in self.sectors]
        else:
            self.parity = [int(p) % 2 for p in parity]
            if len(self.parity) != len(self.labels):
                raise ValueError("parity list must match basis")
        self.odd = frozenset(i for i, p in enumerate(self.parity) if p)
        self.products = {}
        for (l, r), res in products.items():
            li, ri = self.index[l], self.index[r]
            entry = {self.index[k]: int(v) for k, v in res.items() if v}
            if entry:
                self.products[(li, ri)] = entry
        self.unit = None
        if unit is not None:
            self.unit = {self.index[k]: int(v) for k, v in unit.items() if v}
        self.involution = None
        if involution is not None:
            self.involution = {self.index[k]: (self.index[v], int(sg))
                               for k, (v, sg) in involution.items()}

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self):
        return len(self.labels)

    def sector_indices(self, sec):
        return [i for i, s in enumerate(self.sectors) if s == sec]

    def mult_basis(self, i, j):
        """Structure constants of basis product i * j as {index: int}."""
        return self.products.get((i, j), {})

    def mult(self, x, y):
        """Bilinear product of coefficient vectors {index: int}."""
        out = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, c in self.mult_basis(i, j).items():
                    v = out.get(k, 0) + xi * yj * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def element(self, coeffs):
        """Coefficient vector from {label: coeff}."""
        return {self.index[k]: int(v) for k, v in coeffs.items() if v}

    def parity_of(self, x):
        """Parity certificate of a coefficient vector, or None if mixed."""
        ps = {self.parity[i] for i in x}
        if len(ps) == 1:
            return ps.pop()
        return None if ps else 0

    def is_idempotent(self, x):
        return self.mult(x, x) == x

    def unital_good_pair(self):
        """Unit present with support inside sector 'a'."""
        return self.unit is not None and all(
            self.sectors[i] == 'a' for i in self.unit)

    def orthogonal_idempotent_family(self):
        """Sector-'a' basis labels that are orthogonal idempotents summing to
        the unit, or None when no such family is visible in the basis."""
        if self.unit is None:
            return None
        support = sorted(self.unit)
        if any(self.unit[i] != 1 or self.sectors[i] != 'a' for i in support):
            return None
        for i in support:
            for j in support:
                expect = {i: 1} if i == j else {}
                if self.mult_basis(i, j) != expect:
                    return None
        return support

    def apply_involution(self, i):
        if self.involution is None:
            raise ValueError(f"{self.name}: no anti-involution declared")
        return self.involution[i]

    # -- validation ----------------------------------------------------------

    def validate(self):
        rep = ValidationReport()
        issues = rep.issues
        for i, sec in enumerate(self.sectors):
            want = 1 if sec == 'odd' else 0
            if self.parity[i] != want:
                issues.append(ValidationIssue(
                    "sector-parity", (self.labels[i],),
                    f"sector {sec!r} entry must have parity {want}"))
        for (i, j), res in self.products.items():
            want = (self.parity[i] + self.parity[j]) % 2
            for k in res:
                if self.parity[k] != want:
                    issues.append(ValidationIssue(
                        "parity-compatibility",
                        (self.labels[i], self.labels[j], self.labels[k]),
                        f"product has parity {self.parity[k]}, expected {want}"))
            if self.sectors[i] == 'a' and self.sectors[j] == 'a':
                for k in res:
                    if self.sectors[k] != 'a':
                        issues.append(ValidationIssue(
                            "a-closure",
                            (self.labels[i], self.labels[j], self.labels[k]),
                            "product of 'a' elements leaves sector 'a'"))
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.mult_basis(i, j)
                for k in range(n):
                    left = {}
                    for m, c in ij.items():
                        for t, c2 in self.mult_basis(m, k).items():
                            left[t] = left.get(t, 0) + c * c2
                    right = {}
                    for m, c in self.mult_basis(j, k).items():
                        for t, c2 in self.mult_basis(i, m).items():
                            right[t] = right.get(t, 0) + c * c2
                    left = {t: v for t, v in left.items() if v}
                    right = {t: v for t, v in right.items() if v}
                    if left != right:
                        issues.append(ValidationIssue(
                            "associativity",
                            (self.labels[i], self.labels[j], self.labels[k]),
                            f"(xy)z={left} but x(yz)={right}"))
        if self.unit is not None:
            for i in range(n):
                b = {i: 1}
                if self.mult(self.unit, b) != b or self.mult(b, self.unit) != b:
                    issues.append(ValidationIssue(
                        "unit", (self.labels[i],), "unit axiom fails"))
        rep.unital_good_pair = self.unital_good_pair()
        if self.involution is not None:
            inv = self.involution
            if set(inv) != set(range(n)):
                issues.append(ValidationIssue(
                    "involution", (), "involution must be defined on all labels"))
            else:
                for i in range(n):
                    j, sg = inv[i]
                    j2, sg2 = inv[j]
                    if j2 != i or sg * sg2 != 1:
                        issues.append(ValidationIssue(
                            "involution-squared", (self.labels[i],),
                            "tau^2 is not the identity"))
                    if self.sectors[j] != self.sectors[i]:
                        issues.append(ValidationIssue(
                            "involution-sector", (self.labels[i],),
                            "tau must preserve sectors"))
                for i in range(n):
                    for j in range(n):
                        lhs = {}
                        for k, c in self.mult_basis(i, j).items():
                            k2, sg = inv[k]
                            lhs[k2] = lhs.get(k2, 0) + sg * c
                        ji, si = inv[j]
                        ii, sj = inv[i]
                        rhs = {k: si * sj * c
                               for k, c in self.mult_basis(ji, ii).items()}
                        lhs = {k: v for k, v in lhs.items() if v}
                        rhs = {k: v for k, v in rhs.items() if v}
                        if lhs != rhs:
                            issues.append(ValidationIssue(
                                "involution-antimultiplicative",
                                (self.labels[i], self.labels[j]),
                                f"tau(xy)={lhs} but tau(y)tau(x)={rhs}"))
        return rep

    # -- serialization -------------------------------------------------------

    def to_json_dict(self):
        data = {
            "name": self.name,
            "basis": [{"label": lab, "parity": self.parity[i],
                       "sector": self.sectors[i]}
                      for i, lab in enumerate(self.labels)],
            "products": sorted(
                [self.labels[i], self.labels[j], self.labels[k], c]
                for (i, j), res in self.products.items()
                for k, c in res.items()),
        }
        if self.unit is not None:
            data["unit"] = sorted([self.labels[i], c] for i, c in self.unit.items())
        if self.involution is not None:
            data["involution"] = sorted(
                [self.labels[i], self.labels[j], sg]
                for i, (j, sg) in self.involution.items())
        return data

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data):
        labels = [b["label"] for b in data["basis"]]
        sectors = [b["sector"] for b in data["basis"]]
        parity = [int(b["parity"]) for b in data["basis"]]
        products = {}
        for l, r, k, c in data.get("products", []):
            products.setdefault((l, r), {})[k] = products.get((l, r), {}).get(k, 0) + int(c)
        unit = None
        if "unit" in data:
            unit = {l: int(c) for l, c in data["unit"]}
        involution = None
        if "involution" in data:
            involution = {l: (r, int(sg)) for l, r, sg in data["involution"]}
        return cls(data["name"], labels, sectors, products, unit, involution,
                   parity=parity)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_dict(json.loads(text))

    def __eq__(self, other):
        return (isinstance(other, Presentation)
                and self.to_json_dict() == other.to_json_dict())

    def __repr__(self):
        return f"Presentation({self.name!r}, dim={self.dim})"


# ---------------------------------------------------------------------------
# derived constructions

def truncate(pres, e):
    """Corner subalgebra e*A*e for an idempotent e with an adapted basis.

    Every basis element b must satisfy ebe = b or ebe = 0; the surviving
    labels keep their sectors and structure constants, and e becomes the
    unit.  Raises ValueError with a witness otherwise.
    """
    e = dict(e)
    if not pres.is_idempotent(e):
        raise ValueError("truncation element is not idempotent")
    survivors = []
    for i in range(pres.dim):
        b = {i: 1}
        ebe = pres.mult(e, pres.mult(b, e))
        if ebe == b:
            survivors.append(i)
        elif ebe:
            raise ValueError(
                f"basis is not adapted to the idempotent: witness {pres.labels[i]}")
    keep = set(survivors)
    labels = [pres.labels[i] for i in survivors]
    sectors = [pres.sectors[i] for i in survivors]
    products = {}
    for (i, j), res in pres.products.items():
        if i in keep and j in keep:
            sub = {pres.labels[k]: c for k, c in res.items() if k in keep}
            # products of surviving elements stay in the corner
            if sub:
                products[(pres.labels[i], pres.labels[j])] = sub
    # e = e*e*e kills the non-surviving part of its own expansion
    unit = {pres.labels[i]: c for i, c in e.items() if i in keep}
    involution = None
    if pres.involution is not None and all(
            pres.involution[i][0] in keep for i in survivors):
        involution = {pres.labels[i]: (pres.labels[pres.involution[i][0]],
                                       pres.involution[i][1])
                      for i in survivors}
    return Presentation(pres.name + "-corner", labels, sectors, products,
                        unit, involution)


def direct_sum(p1, p2):
    """Block-diagonal direct sum; labels are prefixed to stay distinct."""
    def tag(pres, t):
        return [f"{t}.{lab}" for lab in pres.labels]

    labels = tag(p1, "L") + tag(p2, "R")
    sectors = p1.sectors + p2.sectors
    products = {}
    for (i, j), res in p1.products.items():
        products[(f"L.{p1.labels[i]}", f"L.{p1.labels[j]}")] = {
            f"L.{p1.labels[k]}": c for k, c in res.items()}
    for (i, j), res in p2.products.items():
        products[(f"R.{p2.labels[i]}", f"R.{p2.labels[j]}")] = {
            f"R.{p2.labels[k]}": c for k, c in res.items()}
    unit = None
    if p1.unit is not None and p2.unit is not None:
        unit = {f"L.{p1.labels[i]}": c for i, c in p1.unit.items()}
        unit.update({f"R.{p2.labels[i]}": c for i, c in p2.unit.items()})
    involution = None
    if p1.involution is not None and p2.involution is not None:
        involution = {f"L.{p1.labels[i]}": (f"L.{p1.labels[j]}", sg)
                      for i, (j, sg) in p1.involution.items()}
        involution.update({f"R.{p2.labels[i]}": (f"R.{p2.labels[j]}", sg)
                           for i, (j, sg) in p2.involution.items()})
    return Presentation(f"{p1.name}+{p2.name}", labels, sectors, products,
                        unit, involution)


# ---------------------------------------------------------------------------
# example algebras

def make_extended_zigzag(ell):
    """Extended zigzag algebra on vertices 0..ell.

    Arrows a(i,j) run from j to i for |i-j| = 1; paths of length three
    vanish, non-cycle length-two paths vanish, all length-two cycles at a
    vertex are identified (called c_j at vertex j < ell), and the cycle at
    the last vertex is zero.  Sectors: vertex idempotents 'a', cycles 'c',
    arrows odd.
    """
    if ell < 1:
        raise ValueError("need at least two vertices")
    verts = list(range(ell + 1))
    e = [f"e{i}" for i in verts]
    c = [f"c{j}" for j in range(ell)]
    arrows = {}
    for j in range(ell):
        arrows[(j + 1, j)] = f"a{j + 1}_{j}"
        arrows[(j, j + 1)] = f"a{j}_{j + 1}"
    labels = e + c + list(arrows.values())
    sectors = (['a'] * len(e)) + (['c'] * len(c)) + (['odd'] * len(arrows))

    products = {}

    def put(x, y, z, coeff=1):
        products.setdefault((x, y), {})[z] = coeff

    for i in verts:
        put(e[i], e[i], e[i])
    for j in range(ell):
        put(e[j], c[j], c[j])
        put(c[j], e[j], c[j])
    for (tgt, src), lab in arrows.items():
        put(e[tgt], lab, lab)
        put(lab, e[src], lab)
    # length-two cycles: a(j, j+1) a(j+1, j) is the cycle at j, and
    # a(j+1, j) a(j, j+1) is the cycle at j+1 (zero when j+1 = ell)
    for j in range(ell):
        put(arrows[(j, j + 1)], arrows[(j + 1, j)], c[j])
        if j + 1 < ell:
            put(arrows[(j + 1, j)], arrows[(j, j + 1)], c[j + 1])
    unit = {lab: 1 for lab in e}
    involution = {lab: (lab, 1) for lab in e + c}
    for (tgt, src), lab in arrows.items():
        involution[lab] = (arrows[(src, tgt)], 1)
    return Presentation(f"ext-zigzag:{ell}", labels, sectors, products,
                        unit, involution)


def make_zigzag(ell):
    """Zigzag algebra: corner of the extended zigzag at vertices 0..ell-1."""
    z = make_extended_zigzag(ell)
    e = {f"e{i}": 1 for i in range(ell)}
    out = truncate(z, z.element(e))
    out.name = f"zigzag:{ell}"
    return out


def make_matrix_superalgebra(p, q):
    """Matrix superalgebra on p even and q odd rows.

    E(r,s) is even when r, s are on the same side of p, odd otherwise; the
    distinguished even subalgebra is spanned by the E(r,s) with r, s <= p,
    so the pair carries no unit (a non-unital good pair) unless q = 0.
    """
    m = p + q
    if m < 1:
        raise ValueError("need a positive matrix size")
    labels = []
    sectors = []
    for r in range(1, m + 1):
        for s in range(1, m + 1):
            labels.append(f"E{r}_{s}")
            if (r <= p) == (s <= p):
                sectors.append('a' if (r <= p and s <= p) else 'c')
            else:
                sectors.append('odd')
    products = {}
    for r in range(1, m + 1):
        for s in range(1, m + 1):
            for t in range(1, m + 1):
                products[(f"E{r}_{s}", f"E{s}_{t}")] = {f"E{r}_{t}": 1}
    unit = None
    if q == 0:
        unit = {f"E{r}_{r}": 1 for r in range(1, m + 1)}
    involution = {f"E{r}_{s}": (f"E{s}_{r}", 1)
                  for r in range(1, m + 1) for s in range(1, m + 1)}
    return Presentation(f"matrix:{p},{q}", labels, sectors, products,
                        unit, involution)


def make_even_matrix(m):
    """Full matrix algebra with trivial grading, diagonal = sector 'a'.

    The good pair is (M_m, diagonal matrices); the off-diagonal matrix
    units span the even complement.  This is the standard source of
    idempotents that are sound for the algebra itself but not for its
    Schur-type extensions.
    """
    if m < 1:
        raise ValueError("need a positive matrix size")
    labels = [f"E{r}_{s}" for r in range(1, m + 1) for s in range(1, m + 1)]
    sectors = ['a' if r == s else 'c'
               for r in range(1, m + 1) for s in range(1, m + 1)]
    products = {}
    for r in range(1, m + 1):
        for s in range(1, m + 1):
            for t in range(1, m + 1):
                products[(f"E{r}_{s}", f"E{s}_{t}")] = {f"E{r}_{t}": 1}
    unit = {f"E{r}_{r}": 1 for r in range(1, m + 1)}
    involution = {f"E{r}_{s}": (f"E{s}_{r}", 1)
                  for r in range(1, m + 1) for s in range(1, m + 1)}
    return Presentation(f"even-matrix:{m}", labels, sectors, products,
                        unit, involution)


def make_trivial_extension(c):
    """Trivial extension: C plus its dual as a square-zero bimodule.

    Basis labels of the dual copy are suffixed with '*'.  The product is
    (a, f)(b, g) = (ab, a.g + f.b) with the dual regular actions; sector
    'a' is the even part of C, sector 'c' the duals of the even part, and
    the odd part collects the odd elements of both copies.
    """
    if c.unit is None:
        raise ValueError("trivial extension needs a unital input algebra")
    n = c.dim
    labels = list(c.labels) + [lab + "*" for lab in c.labels]
    sectors = []
    for i in range(n):
        sectors.append('a' if c.parity[i] == 0 else 'odd')
    for i in range(n):
        sectors.append('c' if c.parity[i] == 0 else 'odd')
    products = {}

    def add(x, y, z, coeff):
        if coeff:
            d = products.setdefault((x, y), {})
            d[z] = d.get(z, 0) + coeff

    for (i, j), res in c.products.items():
        for k, coeff in res.items():
            # plain products, and the two dual actions:
            #   (b_i) . (b_j*) pairs via <x . a, y> = <x, a y>
            add(c.labels[i], c.labels[j], c.labels[k], coeff)
    for i in range(n):
        for j in range(n):
            # b_i * (b_j)* : functional y -> b_j*(y b_i)
            for k in range(n):
                coeff = c.mult_basis(k, i).get(j, 0)
                add(c.labels[i], c.labels[j] + "*", c.labels[k] + "*", coeff)
            # (b_j)* * b_i : functional y -> b_j*(b_i y)
            for k in range(n):
                coeff = c.mult_basis(i, k).get(j, 0)
                add(c.labels[j] + "*", c.labels[i], c.labels[k] + "*", coeff)
    unit = {c.labels[i]: v for i, v in c.unit.items()}
    return Presentation(f"trivext:{c.name}", labels, sectors, products, unit)


BUILTIN_HELP = (
    "ext-zigzag:L | zigzag:L | matrix:P,Q | even-matrix:M | "
    "trivext:<inner> | sum:<left>+<right>"
)


def builtin(name):
    """Resolve a builtin algebra name like 'ext-zigzag:2' or 'sum:a+b'."""
    if ":" not in name:
        raise ValueError(f"not a builtin algebra: {name!r} (use {BUILTIN_HELP})")
    kind, _, arg = name.partition(":")
    if kind == "ext-zigzag":
        return make_extended_zigzag(int(arg))
    if kind == "zigzag":
        return make_zigzag(int(arg))
    if kind == "matrix":
        p, q = arg.split(",")
        return make_matrix_superalgebra(int(p), int(q))
    if kind == "even-matrix":
        return make_even_matrix(int(arg))
    if kind == "trivext":
        return make_trivial_extension(builtin(arg))
    if kind == "sum":
        left, _, right = arg.partition("+")
        return direct_sum(builtin(left), builtin(right))
    raise ValueError(f"unknown builtin algebra kind {kind!r} (use {BUILTIN_HELP})")
