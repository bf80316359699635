"""Words, triples, orbit representatives, signs and factorial weights.

The indexing objects throughout the package are *triples* (b, r, s): a word
of basis letters b together with row and column words r, s in [1,n], all of
length d.  A triple is stored as a tuple of d cells, each cell being
(letter_index, row, col).  The symmetric group S_d permutes the d cells
diagonally; triples whose letter is odd may not repeat a cell (the
alternating sign would kill the corresponding orbit sum).

A *canonical* triple is the weakly increasing one in its S_d-orbit with
respect to the cell order (letter declaration order, then row, then col);
canonical triples index the bases of the invariant algebra and of its
integral subalgebra.

Sign conventions.  For a triple T with odd-letter positions and cells c_k:

    bracket(T)        = #{k < l : both letters odd, c_k > c_l}
    pair_bracket(b,c) = #{(k, l) : k > l, b_k odd, c_l odd}
    perm_bracket(sigma, b) = #{k < l : sigma^-1(k) > sigma^-1(l), b_k, b_l odd}

and the compatibility (checked by tests on random data)

    (-1)^(bracket(T) + bracket(T sigma)) = (-1)^(perm_bracket(sigma, b)).
"""

from __future__ import annotations

import itertools
from math import factorial, comb


# ---------------------------------------------------------------------------
# cells and triples

def make_triple(letters, rows, cols):
    """Build a triple from parallel letter/row/col sequences."""
    if not (len(letters) == len(rows) == len(cols)):
        raise ValueError("letter, row and col words must have equal length")
    return tuple(zip(letters, rows, cols))


def letters_of(triple):
    return tuple(c[0] for c in triple)


def rows_of(triple):
    return tuple(c[1] for c in triple)


def cols_of(triple):
    return tuple(c[2] for c in triple)


def is_valid_triple(triple, odd, n):
    """Membership test: entries in range, no repeated odd cell."""
    seen = set()
    for cell in triple:
        b, r, s = cell
        if not (1 <= r <= n and 1 <= s <= n):
            return False
        if b in odd:
            if cell in seen:
                return False
            seen.add(cell)
    return True


def bracket(triple, odd):
    """Parity count <b,r,s>: inverted pairs of odd-letter cells."""
    count = 0
    d = len(triple)
    for k in range(d):
        ck = triple[k]
        if ck[0] not in odd:
            continue
        for l in range(k + 1, d):
            cl = triple[l]
            if cl[0] in odd and ck > cl:
                count += 1
    return count


def pair_bracket(bword, cword, odd):
    """Supercommutation count <b, c>: pairs k > l with b_k, c_l odd."""
    count = 0
    d = len(bword)
    odd_c = [l for l in range(d) if cword[l] in odd]
    for k in range(d):
        if bword[k] in odd:
            count += sum(1 for l in odd_c if l < k)
    return count


def perm_bracket(sigma, bword, odd):
    """Count <sigma; b>: odd-letter inversions created by the permutation.

    sigma is a tuple with images sigma[k]; the place-permutation action is
    (x sigma)_k = x_{sigma[k]}.
    """
    d = len(sigma)
    inv = [0] * d
    for k in range(d):
        inv[sigma[k]] = k
    count = 0
    for k in range(d):
        if bword[k] not in odd:
            continue
        for l in range(k + 1, d):
            if bword[l] in odd and inv[k] > inv[l]:
                count += 1
    return count


def apply_perm(word, sigma):
    return tuple(word[sigma[k]] for k in range(len(sigma)))


def canonicalize(triple, odd):
    """Sort a triple into its canonical representative.

    Returns (canonical, sign) with sign = (-1)^(bracket(T)+bracket(sorted T)),
    or None if the triple repeats an odd cell (its orbit sum vanishes).
    """
    canon = tuple(sorted(triple))
    seen = set()
    for cell in canon:
        if cell[0] in odd:
            if cell in seen:
                return None
            seen.add(cell)
    sign = -1 if (bracket(triple, odd) + bracket(canon, odd)) % 2 else 1
    return canon, sign


def cell_multiplicities(triple):
    mult = {}
    for cell in triple:
        mult[cell] = mult.get(cell, 0) + 1
    return mult


def factorial_weights(triple, sectors):
    """([T]!, [T]!_a, [T]!_c): products of cell-multiplicity factorials.

    sectors maps a letter index to 'a', 'c' or 'odd'.
    """
    total = w_a = w_c = 1
    for cell, m in cell_multiplicities(triple).items():
        f = factorial(m)
        total *= f
        sec = sectors[cell[0]]
        if sec == 'a':
            w_a *= f
        elif sec == 'c':
            w_c *= f
    return total, w_a, w_c


def stabilizer_order(triple):
    """|S_T| = [T]!, the product of cell-multiplicity factorials."""
    order = 1
    for m in cell_multiplicities(triple).values():
        order *= factorial(m)
    return order


def arrangements(triple):
    """All distinct arrangements of the cell multiset, each exactly once."""
    return _distinct_permutations(tuple(sorted(triple)))


def _distinct_permutations(items):
    if not items:
        yield ()
        return
    seen = set()
    for i, it in enumerate(items):
        if it in seen:
            continue
        seen.add(it)
        rest = items[:i] + items[i + 1:]
        for tail in _distinct_permutations(rest):
            yield (it,) + tail


def coset_representatives(triple):
    """Shortest coset representatives of the stabilizer in S_d.

    Yields permutations sigma (image tuples) such that T sigma runs over the
    distinct arrangements of T, each once, with sigma of minimal length.
    Intended for desk-scale d.
    """
    d = len(triple)
    best = {}
    for sigma in itertools.permutations(range(d)):
        arranged = apply_perm(triple, sigma)
        length = _inversions(sigma)
        cur = best.get(arranged)
        if cur is None or length < _inversions(cur):
            best[arranged] = sigma
    return [best[a] for a in sorted(best)]


def _inversions(sigma):
    return sum(1 for k in range(len(sigma)) for l in range(k + 1, len(sigma))
               if sigma[k] > sigma[l])


# ---------------------------------------------------------------------------
# enumeration

def cells(num_letters, n):
    """All cells (letter, row, col) in declaration/row/col order."""
    return [(b, r, s)
            for b in range(num_letters)
            for r in range(1, n + 1)
            for s in range(1, n + 1)]


def enumerate_canonical(num_letters, n, d, odd, predicate=None):
    """Canonical triples of length d, i.e. one per S_d-orbit, in order."""
    for combo in itertools.combinations_with_replacement(cells(num_letters, n), d):
        trip = tuple(combo)
        ok = True
        for i in range(1, d):
            if trip[i] == trip[i - 1] and trip[i][0] in odd:
                ok = False
                break
        if ok and (predicate is None or predicate(trip)):
            yield trip


def splits(triple, l, odd):
    """All l-splits (T1, T2, sign) of a canonical triple.

    T1, T2 are canonical of sizes l and d-l with concatenation equivalent to
    T; sign is the coset-representative sign (-1)^(bracket(T)+bracket(T1 T2)).
    """
    mult = sorted(cell_multiplicities(triple).items())
    bt = bracket(triple, odd)
    out = []
    for counts in _bounded_compositions([m for _, m in mult], l):
        t1 = []
        t2 = []
        for (cell, m), c in zip(mult, counts):
            t1.extend([cell] * c)
            t2.extend([cell] * (m - c))
        t1 = tuple(t1)
        t2 = tuple(t2)
        concat = t1 + t2
        sign = -1 if (bt + bracket(concat, odd)) % 2 else 1
        out.append((t1, t2, sign))
    return out


def _bounded_compositions(bounds, total):
    """Integer vectors 0 <= c_i <= bounds[i] with sum(c) = total."""
    if total < 0 or total > sum(bounds):
        return
    if not bounds:
        if total == 0:
            yield ()
        return
    first = bounds[0]
    rest = bounds[1:]
    rest_sum = sum(rest)
    lo = max(0, total - rest_sum)
    hi = min(first, total)
    for c in range(lo, hi + 1):
        for tail in _bounded_compositions(rest, total - c):
            yield (c,) + tail


# ---------------------------------------------------------------------------
# compositions and leading words

def compositions(n, d):
    """All (lambda_1, ..., lambda_n) of nonnegative integers summing to d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions(n - 1, d - first):
            yield (first,) + rest


def composition_count(n, d):
    return comb(n + d - 1, d)


def leading_word(lam):
    """The weakly increasing word 1^l1 2^l2 ... n^ln of a composition."""
    word = []
    for i, m in enumerate(lam, start=1):
        word.extend([i] * m)
    return tuple(word)


def weight_of_word(word, n):
    """Content of a word: how many letters equal each of 1..n."""
    w = [0] * n
    for x in word:
        w[x - 1] += 1
    return tuple(w)


def multi_compositions(parts, n, d):
    """Tuples of `parts` compositions in Lambda(n, .) with total size d."""
    if parts == 1:
        for lam in compositions(n, d):
            yield (lam,)
        return
    for head_size in range(d + 1):
        for head in compositions(n, head_size):
            for tail in multi_compositions(parts - 1, n, d - head_size):
                yield (head,) + tail
