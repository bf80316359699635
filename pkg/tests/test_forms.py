import random
from math import factorial

from genschur.superalgebra import (
    make_extended_zigzag, make_zigzag, make_trivial_extension,
)
from genschur.forms import (
    check_central, check_pair_symmetrizing, subalgebra_trace,
    invariant_trace, tensor_trace, gram_subalgebra_trace, zigzag_trace,
    trivial_extension_trace,
)
from genschur.bialgebra import star
from genschur.schur import Ambient, multiply, to_tensor


def idx(pres, lab):
    return pres.index[lab]


def test_zigzag_form_is_symmetrizing():
    for ell in (1, 2):
        zz = make_zigzag(ell)
        t = zigzag_trace(zz)
        rep = check_pair_symmetrizing(zz, t)
        assert rep.symmetrizing, rep.issues
        # dual of each vertex idempotent is the cycle at that vertex
        for i in range(ell):
            j, sign = rep.dual_letter[zz.index[f"e{i}"]]
            assert zz.labels[j] == f"c{i}" and sign == 1


def test_extended_zigzag_rejected_with_dimension_witness():
    z = make_extended_zigzag(1)
    t = {lab: 1 for lab in z.labels if lab.startswith("c")}
    rep = check_pair_symmetrizing(z, t)
    assert not rep.symmetrizing
    assert ("sector-dimensions", (2, 1)) in rep.issues


def test_trivial_extension_form_is_symmetrizing():
    zz = make_zigzag(1)
    e = make_trivial_extension(zz)
    t = trivial_extension_trace(e)
    rep = check_pair_symmetrizing(e, t)
    assert rep.symmetrizing, rep.issues


def test_non_central_form_reported():
    zz = make_zigzag(2)
    t = {"c0": 1}  # missing the other cycle breaks centrality
    issues = check_central(zz, t)
    assert any(kind == "centrality" for kind, _ in issues)


def test_subalgebra_trace_values():
    zz = make_zigzag(1)
    t = zigzag_trace(zz)
    amb = Ambient(zz, 2, 2)
    c0, e0 = idx(zz, "c0"), idx(zz, "e0")
    assert subalgebra_trace(amb.scaled_element(((c0, 1, 1), (c0, 2, 2))), t) == 1
    # off-diagonal words vanish
    assert subalgebra_trace(amb.scaled_element(((c0, 1, 2), (c0, 2, 1))), t) == 0
    # sector-'a' letters vanish
    assert subalgebra_trace(amb.scaled_element(((e0, 1, 1), (c0, 2, 2))), t) == 0


def test_invariant_trace_is_factorial_multiple():
    rng = random.Random(3)
    zz = make_zigzag(2)
    t = zigzag_trace(zz)
    amb = Ambient(zz, 2, 2)
    B = amb.basis()
    for _ in range(50):
        x = amb.scaled_element(rng.choice(B))
        assert invariant_trace(x, t) == factorial(amb.d) * subalgebra_trace(x, t)


def test_tensor_trace_restricts_and_is_invariant():
    import itertools
    rng = random.Random(5)
    zz = make_zigzag(2)
    t = zigzag_trace(zz)
    amb = Ambient(zz, 2, 2)
    B = amb.basis()
    for _ in range(30):
        x = amb.scaled_element(rng.choice(B))
        tx = to_tensor(x)
        assert tensor_trace(tx, t) == invariant_trace(x, t)
        for sigma in itertools.permutations(range(2)):
            assert tensor_trace(tx.apply_place_permutation(sigma), t) == \
                tensor_trace(tx, t)


def test_trace_is_central():
    rng = random.Random(7)
    zz = make_zigzag(1)
    t = zigzag_trace(zz)
    amb = Ambient(zz, 2, 2)
    B = amb.basis()
    for T in B:
        for U in B:
            x, y = amb.scaled_element(T), amb.scaled_element(U)
            assert subalgebra_trace(multiply(x, y), t) == \
                subalgebra_trace(multiply(y, x), t)


def test_trace_multiplicative_under_star():
    rng = random.Random(11)
    zz = make_zigzag(2)
    t = zigzag_trace(zz)
    amb1 = Ambient(zz, 2, 1)
    amb2 = Ambient(zz, 2, 2)
    for _ in range(60):
        a = rng.choice([amb1, amb2])
        b = rng.choice([amb1, amb2])
        x = a.scaled_element(rng.choice(a.basis()))
        y = b.scaled_element(rng.choice(b.basis()))
        assert subalgebra_trace(star(x, y), t) == \
            subalgebra_trace(x, t) * subalgebra_trace(y, t)


def test_constant_letter_pairing_pattern():
    # trace of (constant-letter power) x (dual basis element) is 0 or +-1,
    # nonzero only against the transposed dual power; exhaustive at d = 2
    zz = make_zigzag(1)
    t = zigzag_trace(zz)
    rep = check_pair_symmetrizing(zz, t)
    dual = {i: rep.dual_letter[i][0] for i in range(zz.dim)}
    amb = Ambient(zz, 2, 2)
    B = amb.basis()
    for b in range(zz.dim):
        for r in (1, 2):
            for s in (1, 2):
                T = ((b, r, s), (b, r, s))
                x = amb.scaled_element(T)
                for U in B:
                    val = subalgebra_trace(multiply(x, amb.scaled_element(U)), t)
                    assert val in (-1, 0, 1)
                    expected_U = tuple(sorted(((dual[b], s, r), (dual[b], s, r))))
                    if val:
                        assert U == expected_U
    assert True


def test_gram_is_signed_permutation():
    for ell, n, d in [(1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 1, 1)]:
        zz = make_zigzag(ell)
        t = zigzag_trace(zz)
        rep = check_pair_symmetrizing(zz, t)
        amb = Ambient(zz, n, d)
        gram = gram_subalgebra_trace(amb, t, rep.dual_letter)
        assert gram.signed_permutation
        assert gram.det_abs == 1
        assert gram.partner_ok


def test_gram_small_antidiagonal():
    zz = make_zigzag(1)
    t = zigzag_trace(zz)
    amb = Ambient(zz, 1, 1)
    gram = gram_subalgebra_trace(amb, t)
    rows = gram.matrix.to_rows()
    assert rows == [[0, 1], [1, 0]]
