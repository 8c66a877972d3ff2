"""Determinant-like functionals built on permutation sums.

Everything is exact: matrices are scaled to integers up front (the sums are
homogeneous of degree n in the entries), permutation sums accumulate plain
integers grouped by cycle statistic, and rationals only appear when the
accumulated counts are combined at the end.

Two evaluation tiers: naive permutation enumeration is the ground truth at
small sizes, and each structured path (coset-grouped block-ones evaluation,
column-word grouping of the wreath average) is an exact regrouping of the
same sum, gated by oracle-equivalence tests on overlapping sizes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import SizeCapExceeded
from .matrices import PermutedBlockOnes, RatMatrix, inflate, scaled_int_rows
from .perms import (
    Perm,
    _compose,
    _embed,
    _trans_len,
    perm_range,
    perm_tuples,
    young_blocks,
)
from .polynomials import QPoly, QPoly2

ADET_CAP = 9
ADET2_CAP = 6
STRUCTURED_CAP = 8
WREATH_AVG_CAP = 6
SUBGROUP_AVG_CAP = 7
DET_POWER_TERM_CAP = 10**7


def _accumulate(rows: Sequence[Sequence[int]], perms) -> list[int]:
    """Integer sums of row products, grouped by transposition length."""
    n = len(rows)
    acc = [0] * n
    for p in perms:
        prod = 1
        for j in range(n):
            prod *= rows[p[j] - 1][j]
            if not prod:
                break
        if prod:
            seen = bytearray(n)
            cycles = 0
            for i in range(n):
                if not seen[i]:
                    cycles += 1
                    j = i
                    while not seen[j]:
                        seen[j] = 1
                        j = p[j] - 1
            acc[n - cycles] += prod
    return acc


def _adet_chunk(args) -> list[int]:
    rows, start, stop = args
    return _accumulate(rows, perm_range(len(rows), start, stop))


def adet_poly(a: RatMatrix, workers: int = 1) -> QPoly:
    """The alpha-determinant as an exact polynomial: coefficient d collects
    the permutations at transposition length d.

    With workers > 1 the n! permutations are split into contiguous
    lexicographic rank ranges reduced in range order; exact addition makes
    the result identical to the serial one.
    """
    n = a.require_square()
    if n > ADET_CAP:
        raise SizeCapExceeded(f"n={n} exceeds alpha-determinant cap {ADET_CAP}")
    if n == 0:
        return QPoly.one()
    rows, scale = scaled_int_rows(a)
    if workers <= 1:
        acc = _accumulate(rows, perm_tuples(n))
    else:
        total = factorial(n)
        bounds = [total * w // workers for w in range(workers + 1)]
        chunks = [
            (tuple(rows), lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        acc = [0] * n
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_adet_chunk, chunks):
                for d, v in enumerate(partial):
                    acc[d] += v
    denom = scale**n
    return QPoly(Fraction(v, denom) for v in acc)


def adet_at(a: RatMatrix, x: Fraction) -> Fraction:
    """The alpha-determinant evaluated at a rational parameter value,
    accumulated directly without building the polynomial."""
    n = a.require_square()
    if n > ADET_CAP:
        raise SizeCapExceeded(f"n={n} exceeds alpha-determinant cap {ADET_CAP}")
    if n == 0:
        return Fraction(1)
    x = Fraction(x)
    rows, scale = scaled_int_rows(a)
    acc = _accumulate(rows, perm_tuples(n))
    xpow = Fraction(1)
    total = Fraction(0)
    for v in acc:
        if v:
            total += v * xpow
        xpow *= x
    return total / scale**n


def adet2_poly(a: RatMatrix) -> QPoly2:
    """Two-parameter deformation: double sum over permutation pairs with
    entry products prod_i a[tau(i), sigma(i)], exponents (len tau, len sigma)."""
    n = a.require_square()
    if n > ADET2_CAP:
        raise SizeCapExceeded(f"n={n} exceeds two-parameter cap {ADET2_CAP}")
    if n == 0:
        return QPoly2([[1]])
    rows, scale = scaled_int_rows(a)
    tagged = [(p, _trans_len(p)) for p in perm_tuples(n)]
    acc = [[0] * n for _ in range(n)]
    for tau, dt in tagged:
        tau_rows = [rows[v - 1] for v in tau]
        row_acc = acc[dt]
        for sigma, ds in tagged:
            prod = 1
            for i in range(n):
                prod *= tau_rows[i][sigma[i] - 1]
                if not prod:
                    break
            if prod:
                row_acc[ds] += prod
    denom = scale**n
    return QPoly2([[Fraction(v, denom) for v in row] for row in acc])


def adet2_structured(s: PermutedBlockOnes, x: Fraction, y: Fraction) -> Fraction:
    """Two-parameter value on a row-permuted block-ones matrix.

    The entry product of a pair (tau, sigma) is 1 exactly when tau lies in
    g * S_mu * sigma, so the double sum collapses to
    sum over sigma of y^len(sigma) * sum over h in S_mu of x^len(g h sigma).
    The inner sum is constant on right cosets S_mu * sigma, and h * sigma
    sweeps the coset of sigma, so a single pass over S_n grouped by coset
    (counting both len(sigma) and len(g sigma)) recovers the whole sum.
    """
    n = s.g.n
    if n > STRUCTURED_CAP:
        raise SizeCapExceeded(f"n={n} exceeds structured cap {STRUCTURED_CAP}")
    if n == 0:
        return Fraction(1)
    x, y = Fraction(x), Fraction(y)
    g = s.g.images
    joint = [[0] * n for _ in range(n)]
    if all(part == 1 for part in s.mu):
        # singleton blocks: every coset is {sigma} and the pair product is
        # nonzero only for tau = g sigma
        for p in perm_tuples(n):
            joint[_trans_len(_compose(g, p))][_trans_len(p)] += 1
    else:
        block_of = [0] * n
        starts = []
        for b, blk in enumerate(young_blocks(s.mu)):
            starts.append(blk.start - 1)
            for v in blk:
                block_of[v - 1] = b
        cosets: dict[tuple[int, ...], list[int]] = {}
        for p in perm_tuples(n):
            counter = starts.copy()
            key = [0] * n
            for i in range(n):
                b = block_of[p[i] - 1]
                counter[b] += 1
                key[i] = counter[b]
            arr = cosets.get(tuple(key))
            if arr is None:
                arr = cosets[tuple(key)] = [0] * (2 * n)
            arr[_trans_len(p)] += 1
            arr[n + _trans_len(_compose(g, p))] += 1
        for arr in cosets.values():
            for a_exp in range(n):
                cx = arr[n + a_exp]
                if cx:
                    row = joint[a_exp]
                    for b_exp in range(n):
                        cy = arr[b_exp]
                        if cy:
                            row[b_exp] += cx * cy
    xpow = [x**d for d in range(n)]
    ypow = [y**d for d in range(n)]
    total = Fraction(0)
    for a_exp in range(n):
        for b_exp in range(n):
            c = joint[a_exp][b_exp]
            if c:
                total += c * xpow[a_exp] * ypow[b_exp]
    return total


def wrdet(a: RatMatrix, k: int) -> Fraction:
    """k-wreath determinant of a kn x n matrix: the alpha-determinant of
    the k-fold column inflation, evaluated at -1/k."""
    return adet_at(inflate(a, k), Fraction(-1, k))


def wreath_average_poly(a: RatMatrix, k: int) -> QPoly:
    """Signed average over all column permutations of the inflated matrix:
    sum over sigma in S_kn of (-1/k)^len(sigma) * adet_poly(inflate(a) P(sigma)).

    Column-permuted inflations repeat: the matrix depends only on the word
    of column block indices, so equal matrices are evaluated once with
    their accumulated weight.
    """
    b = inflate(a, k)
    n = b.rows
    if n > WREATH_AVG_CAP:
        raise SizeCapExceeded(f"kn={n} exceeds wreath-average cap {WREATH_AVG_CAP}")
    counts: dict[tuple[int, ...], list[int]] = {}
    for p in perm_tuples(n):
        word = tuple((v - 1) // k for v in p)
        arr = counts.get(word)
        if arr is None:
            arr = counts[word] = [0] * n
        arr[_trans_len(p)] += 1
    w = Fraction(-1, k)
    wpow = [w**d for d in range(n)]
    total = QPoly.zero()
    for word in sorted(counts):
        weight = sum(
            (cnt * wpow[d] for d, cnt in enumerate(counts[word]) if cnt),
            Fraction(0),
        )
        if weight:
            sub = RatMatrix([[row[c] for c in word] for row in a.entries])
            total = total + weight * adet_poly(sub)
    return total


def subgroup_avg_adet(a: RatMatrix, k: int) -> QPoly:
    """Sum of adet_poly over the column permutations by S_k embedded in S_n
    fixing the letters k+1..n."""
    n = a.require_square()
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    if n > SUBGROUP_AVG_CAP:
        raise SizeCapExceeded(f"n={n} exceeds subgroup-average cap {SUBGROUP_AVG_CAP}")
    total = QPoly.zero()
    for s in perm_tuples(k):
        sigma = Perm(_embed(s, n))
        total = total + adet_poly(a.permute_columns(sigma))
    return total


def det_power_coeff(profile, k: int) -> int:
    """Coefficient of the monomial prod x_ij^m_ij in the k-th power of the
    determinant of an n x n matrix of indeterminates, by expanding over
    k-tuples of permutations with sign products."""
    n = profile.n
    nperms = factorial(n)
    if nperms**k > DET_POWER_TERM_CAP:
        raise SizeCapExceeded(f"(n!)^k = {nperms**k} exceeds {DET_POWER_TERM_CAP}")
    target = profile.m
    perms = list(perm_tuples(n))
    signs = [-1 if _trans_len(p) % 2 else 1 for p in perms]

    total = 0
    used = [[0] * n for _ in range(n)]

    def extend(t: int, sign: int) -> None:
        nonlocal total
        if t == k:
            total += sign
            return
        for p, s in zip(perms, signs):
            placed = 0
            for i in range(n):
                j = p[i] - 1
                if used[i][j] >= target[i][j]:
                    break
                used[i][j] += 1
                placed += 1
            if placed == n:
                extend(t + 1, sign * s)
            for i in range(placed):
                used[i][p[i] - 1] -= 1

    extend(0, 1)
    return total
