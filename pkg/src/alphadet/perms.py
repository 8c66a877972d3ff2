"""Permutations of {1..n}: cycle statistics, enumeration, Young subgroups,
coset factors, the Jucys-Murphy group-algebra product and block profiles.

One-line notation is 1-based everywhere, matching the serialized form
"2,1,3".  Everything is exhaustive by design; size caps raise
SizeCapExceeded instead of degrading.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import NoFactorFound, NonUniqueFactor, SizeCapExceeded
from .polynomials import QPoly

ENUM_CAP = 10  # 10! ~ 3.6M permutations
JM_CAP = 7  # group-algebra product has n! support
COSET_FACTOR_CAP = 8
YOUNG_ORDER_CAP = 10**6
DOUBLE_COSET_CAP = 10**6


def _trans_len(images: Sequence[int]) -> int:
    """n minus the number of disjoint cycles of a raw 1-based image tuple."""
    n = len(images)
    seen = bytearray(n)
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = images[j] - 1
    return n - cycles


def _cycle_type(images: Sequence[int]) -> tuple[int, ...]:
    n = len(images)
    seen = bytearray(n)
    lengths = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = images[j] - 1
                length += 1
            lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a o b)(i) = a(b(i)) on raw 1-based image tuples."""
    return tuple(a[v - 1] for v in b)


class Perm:
    """A permutation of {1..n} in one-line notation (1-based images)."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {imgs}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from disjoint cycles, e.g. from_cycles(4, [(1, 2)])."""
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for i, v in enumerate(cyc):
                imgs[v - 1] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Perm":
        return cls.from_cycles(n, [(i, j)])

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Perm(_compose(self.images, other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Perm(inv)

    @property
    def cycle_count(self) -> int:
        """Number of disjoint cycles, fixed points included."""
        return self.n - _trans_len(self.images)

    @property
    def transposition_length(self) -> int:
        """Minimal number of transpositions multiplying to this permutation.

        Equals n minus the number of disjoint cycles; 0 for the identity.
        """
        return _trans_len(self.images)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, weakly decreasing."""
        return _cycle_type(self.images)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def format_perm(p: Perm) -> str:
    """Serialize as a comma-separated 1-based image list, e.g. "2,1,3"."""
    return ",".join(str(v) for v in p.images)


def parse_perm(text: str) -> Perm:
    return Perm(int(t) for t in text.split(","))


def perm_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All n! image tuples in lexicographic order (raw, for hot loops)."""
    return itertools.permutations(range(1, n + 1))


def enumerate_perms(n: int) -> Iterator[Perm]:
    """All n! permutations in lexicographic one-line order, identity first."""
    if n > ENUM_CAP:
        raise SizeCapExceeded(f"n={n} exceeds enumeration cap {ENUM_CAP}")
    for t in perm_tuples(n):
        p = Perm.__new__(Perm)
        p.images = t
        yield p


def unrank_perm(n: int, rank: int) -> tuple[int, ...]:
    """The image tuple at the given lexicographic rank (0-based)."""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    digits = []
    for i in range(n, 0, -1):
        f = factorial(i - 1)
        digits.append(rank // f)
        rank %= f
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in digits)


def _next_tuple(t: list[int]) -> bool:
    """Advance to the lexicographic successor in place; False at the end."""
    n = len(t)
    i = n - 2
    while i >= 0 and t[i] >= t[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while t[j] <= t[i]:
        j -= 1
    t[i], t[j] = t[j], t[i]
    t[i + 1 :] = reversed(t[i + 1 :])
    return True


def perm_range(n: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Image tuples with lexicographic ranks in [start, stop).

    Disjoint contiguous ranges cover all of perm_tuples(n) exactly once,
    which is what the deterministic parallel reductions rely on.
    """
    if start >= stop:
        return
    current = list(unrank_perm(n, start))
    for _ in range(stop - start):
        yield tuple(current)
        if not _next_tuple(current):
            break


def young_blocks(mu: Sequence[int]) -> list[range]:
    """Consecutive letter blocks of sizes mu_1, mu_2, ... (1-based values)."""
    blocks = []
    offset = 0
    for part in mu:
        blocks.append(range(offset + 1, offset + part + 1))
        offset += part
    return blocks


def young_subgroup_order(mu: Sequence[int]) -> int:
    out = 1
    for part in mu:
        out *= factorial(part)
    return out


def young_subgroup_tuples(mu: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Raw image tuples of the Young subgroup (blockwise permutations)."""
    if young_subgroup_order(mu) > YOUNG_ORDER_CAP:
        raise SizeCapExceeded(f"Young subgroup of {tuple(mu)} exceeds {YOUNG_ORDER_CAP}")
    blocks = young_blocks(mu)
    per_block = [list(itertools.permutations(b)) for b in blocks]
    for choice in itertools.product(*per_block):
        merged = []
        for part in choice:
            merged.extend(part)
        yield tuple(merged)


def young_subgroup(mu: Sequence[int]) -> Iterator[Perm]:
    """All elements of the Young subgroup of S_n, n = sum(mu)."""
    for t in young_subgroup_tuples(mu):
        p = Perm.__new__(Perm)
        p.images = t
        yield p


def _embed(images: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(images) + tuple(range(len(images) + 1, n + 1))


def coset_factor(tau: Perm, k: int) -> Perm:
    """The unique c in S_k (fixing k+1..n) with
    transposition_length(tau * s) = transposition_length(tau * c^-1)
    + transposition_length(c * s) for every s in S_k.

    Found by exhaustive search over all k! candidates, each checked against
    all k! right factors; existence and uniqueness are part of the claim, so
    zero or multiple survivors abort loudly.
    """
    n = tau.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    if n > COSET_FACTOR_CAP:
        raise SizeCapExceeded(f"n={n} exceeds coset-factor cap {COSET_FACTOR_CAP}")
    t = tau.images
    subgroup = [_embed(s, n) for s in perm_tuples(k)]
    found = []
    for cand in subgroup:
        inv = [0] * n
        for i, v in enumerate(cand):
            inv[v - 1] = i + 1
        base = _trans_len(_compose(t, inv))
        ok = True
        for s in subgroup:
            if _trans_len(_compose(t, s)) != base + _trans_len(_compose(cand, s)):
                ok = False
                break
        if ok:
            found.append(cand)
    if not found:
        raise NoFactorFound(f"no coset factor for {tau!r} with k={k}")
    if len(found) > 1:
        raise NonUniqueFactor(f"{len(found)} coset factors for {tau!r} with k={k}")
    return Perm(found[0])


def jucys_murphy_product(n: int) -> dict[Perm, QPoly]:
    """Expand prod_{k=1..n} (1 + a*X_k) in the group algebra of S_n,
    where X_k is the sum of the transpositions (i k), i < k (X_1 = 0).

    Coefficients are univariate polynomials in a.
    """
    if n > JM_CAP:
        raise SizeCapExceeded(f"n={n} exceeds Jucys-Murphy cap {JM_CAP}")
    alpha = QPoly((0, 1))
    state: dict[tuple[int, ...], QPoly] = {tuple(range(1, n + 1)): QPoly.one()}
    for k in range(2, n + 1):
        nxt = dict(state)
        for sigma, coeff in state.items():
            bumped = coeff * alpha
            for i in range(1, k):
                # right-multiply by (i k): swap the images at positions i, k
                lst = list(sigma)
                lst[i - 1], lst[k - 1] = lst[k - 1], lst[i - 1]
                key = tuple(lst)
                prev = nxt.get(key)
                nxt[key] = bumped if prev is None else prev + bumped
        state = nxt
    return {Perm(t): c for t, c in state.items()}


@dataclass(frozen=True)
class BlockProfile:
    """n x n grid counting how a permutation of kn letters maps size-k
    letter blocks to size-k letter blocks; all row/column sums equal k."""

    m: tuple[tuple[int, ...], ...]
    n: int
    k: int

    def __post_init__(self):
        if len(self.m) != self.n or any(len(r) != self.n for r in self.m):
            raise ValueError("profile grid must be n x n")
        for i in range(self.n):
            if sum(self.m[i]) != self.k or sum(r[i] for r in self.m) != self.k:
                raise ValueError("row and column sums must all equal k")


def block_profile(sigma: Perm, n: int, k: int) -> BlockProfile:
    """Count, for each block pair (i, j), the letters s in block i whose
    image sigma(s) lies in block j (blocks are consecutive runs of k)."""
    if sigma.n != n * k:
        raise ValueError(f"permutation size {sigma.n} != k*n = {n * k}")
    grid = [[0] * n for _ in range(n)]
    for s, image in enumerate(sigma.images, start=1):
        grid[(s - 1) // k][(image - 1) // k] += 1
    return BlockProfile(tuple(tuple(r) for r in grid), n, k)


def double_coset_index(sigma: Perm, n: int, k: int) -> int:
    """Index of the conjugation-stable part: |H| / |H intersect s^-1 H s|
    for H = S_k^n, computed by enumerating H and membership-testing."""
    if sigma.n != n * k:
        raise ValueError(f"permutation size {sigma.n} != k*n = {n * k}")
    order = factorial(k) ** n
    if order > DOUBLE_COSET_CAP:
        raise SizeCapExceeded(f"|S_{k}^{n}| = {order} exceeds {DOUBLE_COSET_CAP}")
    subgroup = set(young_subgroup_tuples((k,) * n))
    s = sigma.images
    s_inv = [0] * len(s)
    for i, v in enumerate(s):
        s_inv[v - 1] = i + 1
    stable = sum(1 for h in subgroup if _compose(_compose(s, h), s_inv) in subgroup)
    assert order % stable == 0
    return order // stable
