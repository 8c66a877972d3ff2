"""Irreducible characters of the symmetric group and the functionals built
from them: Young-subgroup averages, immanants, convolutions and the
character-basis expansion of the alpha power weight.

Characters are evaluated by the Murnaghan-Nakayama border-strip recursion,
implemented on first-column hook lengths (beta numbers): removing a strip
of size t from the diagram is sliding one beta number down by t, and the
strip height is the number of beta numbers jumped over.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import IdentityViolation, ShapeWeightMismatch, SizeCapExceeded
from .matrices import RatMatrix, scaled_int_rows
from .partitions import (
    check_partition,
    content_poly,
    num_standard_tableaux,
    partitions_of,
)
from .perms import (
    Perm,
    _compose,
    _cycle_type,
    _trans_len,
    perm_tuples,
    young_subgroup_order,
    young_subgroup_tuples,
)
from .polynomials import QPoly

CHARACTER_CAP = 12
IMMANANT_CAP = 8
CONVOLUTION_CAP = 6
EXPANSION_CAP = 8

_char_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _beta_numbers(shape: tuple[int, ...]) -> tuple[int, ...]:
    length = len(shape)
    return tuple(shape[i] + (length - 1 - i) for i in range(length))


def _shape_from_betas(betas: Sequence[int]) -> tuple[int, ...]:
    betas = sorted(betas, reverse=True)
    length = len(betas)
    return tuple(
        b - (length - 1 - i) for i, b in enumerate(betas) if b - (length - 1 - i) > 0
    )


def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    key = (shape, rho)
    cached = _char_cache.get(key)
    if cached is not None:
        return cached
    strip, rest = rho[0], rho[1:]
    betas = _beta_numbers(shape)
    beta_set = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for other in betas if nb < other < b)
        sub = _shape_from_betas([nb if j == i else v for j, v in enumerate(betas)])
        term = _mn(sub, rest)
        total += -term if height % 2 else term
    _char_cache[key] = total
    return total


def character(shape: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character of S_n indexed by ``shape``, evaluated on the
    conjugacy class of cycle type ``rho``."""
    shape = check_partition(shape)
    rho = check_partition(rho)
    if sum(shape) != sum(rho):
        raise ShapeWeightMismatch(f"|{shape}| != |{rho}|")
    if sum(shape) > CHARACTER_CAP:
        raise SizeCapExceeded(f"|shape| > {CHARACTER_CAP}")
    return _mn(shape, rho)


def centralizer_order(rho: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type rho
    (product over cycle lengths l of l^mult * mult!)."""
    out = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for length, count in mult.items():
        out *= length**count * factorial(count)
    return out


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


def perm_of_cycle_type(rho: Sequence[int], n: int) -> Perm:
    """Canonical representative: cycles laid out on consecutive letters."""
    if sum(rho) != n:
        raise ShapeWeightMismatch(f"|{tuple(rho)}| != {n}")
    cycles = []
    start = 1
    for length in rho:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return Perm.from_cycles(n, cycles)


def subgroup_averaged_character(
    shape: Sequence[int], mu: Sequence[int], g: Perm
) -> Fraction:
    """Average of the ``shape`` character over the right translates of g by
    the Young subgroup of mu: (1/mu!) * sum over tau in S_mu of chi(g tau)."""
    shape = check_partition(shape)
    mu = check_partition(mu)
    if sum(mu) != g.n or sum(shape) != g.n:
        raise ShapeWeightMismatch("shape, mu and permutation sizes must agree")
    by_type: dict[tuple[int, ...], int] = {}
    gi = g.images
    for tau in young_subgroup_tuples(mu):
        ct = _cycle_type(_compose(gi, tau))
        by_type[ct] = by_type.get(ct, 0) + 1
    total = sum(character(shape, ct) * cnt for ct, cnt in by_type.items())
    return Fraction(total, young_subgroup_order(mu))


def immanant(shape: Sequence[int], a: RatMatrix) -> Fraction:
    """Character-weighted permutation sum: sum over sigma in S_n of
    chi(sigma) * prod_i a[sigma(i), i]."""
    n = a.require_square()
    shape = check_partition(shape)
    if sum(shape) != n:
        raise ShapeWeightMismatch(f"|{tuple(shape)}| != {n}")
    if n > IMMANANT_CAP:
        raise SizeCapExceeded(f"n={n} exceeds immanant cap {IMMANANT_CAP}")
    if n == 0:
        return Fraction(1)
    rows, scale = scaled_int_rows(a)
    by_type: dict[tuple[int, ...], int] = {}
    for p in perm_tuples(n):
        prod = 1
        for j in range(n):
            prod *= rows[p[j] - 1][j]
            if not prod:
                break
        if prod:
            ct = _cycle_type(p)
            by_type[ct] = by_type.get(ct, 0) + prod
    total = sum(character(shape, ct) * acc for ct, acc in by_type.items())
    return Fraction(total, scale**n)


def convolve_characters(
    shape: Sequence[int], rho: Sequence[int]
) -> dict[tuple[int, ...], Fraction]:
    """Convolution of two irreducible characters, tabulated per conjugacy
    class: value at class c is sum over sigma of chi_shape(x sigma) *
    chi_rho(sigma^-1) for any x of cycle type c."""
    shape = check_partition(shape)
    rho = check_partition(rho)
    n = sum(shape)
    if sum(rho) != n:
        raise ShapeWeightMismatch(f"|{shape}| != |{rho}|")
    if n > CONVOLUTION_CAP:
        raise SizeCapExceeded(f"n={n} exceeds convolution cap {CONVOLUTION_CAP}")
    out: dict[tuple[int, ...], Fraction] = {}
    for cls in partitions_of(n):
        x = perm_of_cycle_type(cls, n).images
        total = 0
        for sigma in perm_tuples(n):
            # sigma^-1 has the same cycle type as sigma
            total += character(shape, _cycle_type(_compose(x, sigma))) * character(
                rho, _cycle_type(sigma)
            )
        out[cls] = Fraction(total)
    return out


def alpha_power_expansion(n: int) -> dict[tuple[int, ...], QPoly]:
    """Character-basis expansion of the weight sigma -> a^(transposition
    length): builds, per cycle type, the polynomial
    (1/n!) * sum over shapes of f^shape * content_poly(shape) * chi(shape)
    and checks it equals the plain monomial for every permutation of S_n.

    Raises IdentityViolation with the offending permutation if any check
    fails; returns the verified table otherwise.
    """
    if n > EXPANSION_CAP:
        raise SizeCapExceeded(f"n={n} exceeds expansion cap {EXPANSION_CAP}")
    shapes = partitions_of(n)
    f = {lam: num_standard_tableaux(lam) for lam in shapes}
    fpoly = {lam: content_poly(lam) for lam in shapes}
    inv_order = Fraction(1, factorial(n))
    table: dict[tuple[int, ...], QPoly] = {}
    for cls in partitions_of(n):
        acc = QPoly.zero()
        for lam in shapes:
            acc = acc + (f[lam] * character(lam, cls) * inv_order) * fpoly[lam]
        table[cls] = acc
    for p in perm_tuples(n):
        expected = QPoly.monomial(_trans_len(p))
        if table[_cycle_type(p)] != expected:
            raise IdentityViolation(
                f"expansion mismatch at {p}", witness={"perm": p}
            )
    return table
