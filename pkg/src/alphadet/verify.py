"""Identity-verification suites with reproducible JSON reports.

Each suite enumerates its cases deterministically from (parameters, seed),
runs them serially or on a process pool, and assembles the report in case
order, so the report content is identical for any worker count and for
repeated runs with the same seed (the wall-time field aside).  Failing
cases carry a witness with the offending inputs and both side values,
serialized exactly.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .adet import (
    STRUCTURED_CAP,
    WREATH_AVG_CAP,
    adet2_structured,
    adet_at,
    det_power_coeff,
    subgroup_avg_adet,
    wrdet,
    wreath_average_poly,
)
from .characters import (
    alpha_power_expansion,
    character,
    subgroup_averaged_character,
)
from .errors import IdentityViolation, NotDivisible, SizeCapExceeded
from .matrices import PermutedBlockOnes, column_replicator
from .partitions import (
    content_poly,
    content_poly_at,
    format_partition,
    kostka_ssyt,
    num_standard_tableaux,
    partitions_of,
)
from .perms import (
    Perm,
    block_profile,
    double_coset_index,
    enumerate_perms,
    format_perm,
    jucys_murphy_product,
    young_subgroup_order,
)
from .polynomials import QPoly
from .randmat import SplitMix64, random_matrix, random_perm
from .rationals import format_rational

CHI_EXHAUSTIVE_CAP = 7
ZSF_EXHAUSTIVE_CAP = 7
WEAK_ALT_CAP = 7
STANLEY_M_CAP = 6
DET_POWER_ROUTE_CAP = 10**7


@dataclass
class CaseResult:
    id: str
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    case_count: int
    cases: list[CaseResult]
    status: str
    wall_time_s: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "case_count": self.case_count,
            "cases": [c.to_dict() for c in self.cases],
            "status": self.status,
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _run_cases(case_fn: Callable, case_args: list, workers: int) -> list[CaseResult]:
    if workers <= 1:
        return [case_fn(a) for a in case_args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(case_fn, case_args))


def _report(suite: str, params: dict, seed: int, cases: list[CaseResult], t0: float) -> SuiteReport:
    status = "pass" if all(c.status == "pass" for c in cases) else "fail"
    return SuiteReport(
        suite=suite,
        params=params,
        seed=seed,
        case_count=len(cases),
        cases=cases,
        status=status,
        wall_time_s=round(time.monotonic() - t0, 6),
    )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


# --- main averaging identity ------------------------------------------------


def _theorem_case(args) -> CaseResult:
    k, n, trial, seed = args
    a = random_matrix(k * n, n, seed)
    lhs = wreath_average_poly(a, k)
    rhs = content_poly((k,) * n) * wrdet(a, k)
    if lhs == rhs:
        return CaseResult(f"trial={trial}", "pass")
    return CaseResult(
        f"trial={trial}",
        "fail",
        witness={
            "matrix": a.to_json_dict(),
            "matrix_seed": seed,
            "lhs": lhs.to_strings(),
            "rhs": rhs.to_strings(),
        },
    )


def verify_theorem(k: int, n: int, trials: int, seed: int, workers: int = 1) -> SuiteReport:
    """Averaged alpha-determinant of the inflated matrix equals the content
    polynomial of the k^n rectangle times the k-wreath determinant, as exact
    polynomial equality, on seeded random integer matrices."""
    _require(k >= 1 and n >= 1 and trials >= 1, "k, n, trials must be positive")
    if k * n > WREATH_AVG_CAP:
        raise SizeCapExceeded(f"kn={k * n} exceeds cap {WREATH_AVG_CAP}")
    t0 = time.monotonic()
    rng = SplitMix64(seed)
    args = [(k, n, t, rng.next_u64()) for t in range(trials)]
    cases = _run_cases(_theorem_case, args, workers)
    return _report("theorem", {"k": k, "n": n, "trials": trials}, seed, cases, t0)


# --- rectangular-shape subgroup averages and Kostka numbers -------------------


def _rect_formula_value(k: int, n: int, mu: tuple[int, ...], g: Perm) -> Fraction:
    """(f / mu!) * adet[-1/k, 1/n](P(g) 1_mu) / adet[-1/kn](all-ones)."""
    size = k * n
    f = num_standard_tableaux((k,) * n)
    denom = content_poly_at((size,), Fraction(-1, size))
    value = adet2_structured(PermutedBlockOnes(g, mu), Fraction(-1, k), Fraction(1, n))
    return Fraction(f, young_subgroup_order(mu)) * value / denom


def _omega_case(args) -> CaseResult:
    k, n, mu, g_images = args
    g = Perm(g_images)
    shape = (k,) * n
    values = {
        "rect_formula": _rect_formula_value(k, n, mu, g),
        "character_average": subgroup_averaged_character(shape, mu, g),
    }
    if g.is_identity():
        values["kostka_ssyt"] = Fraction(kostka_ssyt(shape, mu))
    case_id = f"mu={format_partition(mu)};g={format_perm(g)}"
    if len(set(values.values())) == 1:
        return CaseResult(case_id, "pass")
    return CaseResult(
        case_id,
        "fail",
        witness={name: format_rational(v) for name, v in values.items()},
    )


def verify_omega(
    k: int,
    n: int,
    mu: Sequence[int] | None = None,
    g: Perm | None = None,
    seed: int = 0,
    workers: int = 1,
) -> SuiteReport:
    """The rectangular-shape formula (structured two-parameter value over
    the all-ones normalization) equals the character-average route, and at
    the identity also the tableau-counting Kostka oracle.  Without an
    explicit weight, all weights of kn are covered."""
    _require(k >= 1 and n >= 1, "k, n must be positive")
    size = k * n
    if size > STRUCTURED_CAP:
        raise SizeCapExceeded(f"kn={size} exceeds cap {STRUCTURED_CAP}")
    t0 = time.monotonic()
    if g is None:
        g = Perm.identity(size)
    _require(g.n == size, "permutation size must equal kn")
    weights = [tuple(mu)] if mu is not None else partitions_of(size)
    args = [(k, n, w, g.images) for w in weights]
    params = {"k": k, "n": n, "mu": format_partition(mu) if mu else "all", "g": format_perm(g)}
    cases = _run_cases(_omega_case, args, workers)
    return _report("omega", params, seed, cases, t0)


def _chi_case(args) -> CaseResult:
    k, n, g_images = args
    g = Perm(g_images)
    size = k * n
    shape = (k,) * n
    f = num_standard_tableaux(shape)
    lhs = Fraction(character(shape, g.cycle_type()), f)
    denom = content_poly_at((size,), Fraction(-1, size))
    rhs = (
        adet2_structured(PermutedBlockOnes(g, (1,) * size), Fraction(-1, k), Fraction(1, n))
        / denom
    )
    case_id = f"g={format_perm(g)}"
    if lhs == rhs:
        return CaseResult(case_id, "pass")
    return CaseResult(
        case_id,
        "fail",
        witness={"character_ratio": format_rational(lhs), "adet_ratio": format_rational(rhs)},
    )


def verify_chi(
    k: int, n: int, samples: int = 0, seed: int = 0, workers: int = 1
) -> SuiteReport:
    """Normalized rectangular character equals the two-parameter value of
    the bare permutation matrix over the all-ones normalization; exhaustive
    in g up to kn = 7, seeded samples at kn = 8."""
    _require(k >= 1 and n >= 1, "k, n must be positive")
    size = k * n
    if size > STRUCTURED_CAP:
        raise SizeCapExceeded(f"kn={size} exceeds cap {STRUCTURED_CAP}")
    if samples <= 0 and size > CHI_EXHAUSTIVE_CAP:
        raise SizeCapExceeded(
            f"exhaustive run needs kn <= {CHI_EXHAUSTIVE_CAP}; pass samples for kn={size}"
        )
    t0 = time.monotonic()
    if samples > 0:
        rng = SplitMix64(seed)
        perms = [random_perm(size, rng) for _ in range(samples)]
    else:
        perms = list(enumerate_perms(size))
    args = [(k, n, p.images) for p in perms]
    params = {"k": k, "n": n, "samples": samples if samples > 0 else "exhaustive"}
    cases = _run_cases(_chi_case, args, workers)
    return _report("chi", params, seed, cases, t0)


# --- rectangular character values on small supports (Stanley) ----------------


def _stanley_case(args) -> CaseResult:
    k, n, m, w_images = args
    size = k * n
    shape = (k,) * n
    w = Perm(w_images)
    embedded = Perm(tuple(w.images) + tuple(range(m + 1, size + 1)))
    f = num_standard_tableaux(shape)
    lhs = Fraction(factorial(size), factorial(size - m)) * Fraction(
        character(shape, embedded.cycle_type()), f
    )
    total = 0
    for s in enumerate_perms(m):
        total += (-k) ** (w * s).cycle_count * n**s.cycle_count
    rhs = Fraction((-1) ** m * total)
    case_id = f"w={format_perm(w)}"
    if lhs == rhs:
        return CaseResult(case_id, "pass")
    return CaseResult(
        case_id,
        "fail",
        witness={"character_side": format_rational(lhs), "sum_side": format_rational(rhs)},
    )


def verify_stanley(k: int, n: int, m: int, seed: int = 0, workers: int = 1) -> SuiteReport:
    """Rescaled rectangular character on a permutation supported on the
    first m letters equals the signed double-power sum over S_m, for every
    w in S_m."""
    _require(k >= 1 and n >= 1 and m >= 1, "k, n, m must be positive")
    size = k * n
    if m > min(size, STANLEY_M_CAP):
        raise SizeCapExceeded(f"m={m} exceeds min(kn, {STANLEY_M_CAP})")
    if size > 10:
        raise SizeCapExceeded(f"kn={size} exceeds character-evaluation cap 10")
    t0 = time.monotonic()
    args = [(k, n, m, w.images) for w in enumerate_perms(m)]
    cases = _run_cases(_stanley_case, args, workers)
    return _report("stanley", {"k": k, "n": n, "m": m}, seed, cases, t0)


# --- diagonal subgroup average: three independent routes ----------------------


def _zsf_case(args) -> CaseResult:
    k, n, g_images = args
    g = Perm(g_images)
    shape = (k,) * n
    average = subgroup_averaged_character(shape, shape, g)
    rep = column_replicator(n, k)
    ratio = wrdet(rep.permute_rows(g), k) / wrdet(rep, k)
    coeff = Fraction(
        det_power_coeff(block_profile(g, n, k), k), double_coset_index(g, n, k)
    )
    case_id = f"g={format_perm(g)}"
    if average == ratio == coeff:
        return CaseResult(case_id, "pass")
    return CaseResult(
        case_id,
        "fail",
        witness={
            "character_average": format_rational(average),
            "wreath_ratio": format_rational(ratio),
            "coefficient_over_index": format_rational(coeff),
        },
    )


def verify_zsf(k: int, n: int, samples: int = 0, seed: int = 0, workers: int = 1) -> SuiteReport:
    """Three-way agreement for the rectangular diagonal average: character
    average over the Young subgroup, ratio of wreath determinants of the
    row-permuted column replicator, and determinant-power coefficient over
    the double-coset index."""
    _require(k >= 1 and n >= 1, "k, n must be positive")
    size = k * n
    if size > STRUCTURED_CAP:
        raise SizeCapExceeded(f"kn={size} exceeds cap {STRUCTURED_CAP}")
    if samples <= 0 and size > ZSF_EXHAUSTIVE_CAP:
        raise SizeCapExceeded(
            f"exhaustive run needs kn <= {ZSF_EXHAUSTIVE_CAP}; pass samples for kn={size}"
        )
    if factorial(n) ** k > DET_POWER_ROUTE_CAP:
        raise SizeCapExceeded(f"(n!)^k exceeds coefficient-route cap {DET_POWER_ROUTE_CAP}")
    t0 = time.monotonic()
    if samples > 0:
        rng = SplitMix64(seed)
        perms = [random_perm(size, rng) for _ in range(samples)]
    else:
        perms = list(enumerate_perms(size))
    args = [(k, n, p.images) for p in perms]
    params = {"k": k, "n": n, "samples": samples if samples > 0 else "exhaustive"}
    cases = _run_cases(_zsf_case, args, workers)
    return _report("zsf", params, seed, cases, t0)


# --- weak alternating / divisibility ------------------------------------------


def _weak_alt_case(args) -> CaseResult:
    kind, size, k, trial, seed = args
    a = random_matrix(size, size, seed)
    if kind == "duplicate-columns":
        col = a.column(0)
        for j in range(1, k + 1):
            a = a.with_column(j, col)
        value = adet_at(a, Fraction(-1, k))
        case_id = f"dup;trial={trial}"
        if value == 0:
            return CaseResult(case_id, "pass")
        return CaseResult(
            case_id,
            "fail",
            witness={"matrix": a.to_json_dict(), "value": format_rational(value)},
        )
    total = subgroup_avg_adet(a, k)
    divisor = content_poly((k,))
    case_id = f"div;trial={trial}"
    try:
        total.exact_div(divisor)
        return CaseResult(case_id, "pass")
    except NotDivisible:
        return CaseResult(
            case_id,
            "fail",
            witness={
                "matrix": a.to_json_dict(),
                "sum": total.to_strings(),
                "divisor": divisor.to_strings(),
            },
        )


def verify_weak_alternating(
    size: int, k: int, trials: int, seed: int, workers: int = 1
) -> SuiteReport:
    """(a) random matrices with k+1 duplicated columns vanish at -1/k;
    (b) the S_k column average of a random matrix divides exactly by the
    single-row content polynomial of size k.

    With k equal to the matrix size the duplicated-column part is vacuous
    (k+1 columns cannot fit) and only the divisibility part runs."""
    _require(size >= 2 and trials >= 1, "size >= 2 and trials >= 1 required")
    _require(1 <= k <= size, "need 1 <= k <= size")
    if size > WEAK_ALT_CAP:
        raise SizeCapExceeded(f"size={size} exceeds cap {WEAK_ALT_CAP}")
    t0 = time.monotonic()
    rng = SplitMix64(seed)
    args = []
    if k < size:
        args += [("duplicate-columns", size, k, t, rng.next_u64()) for t in range(trials)]
    args += [("divisibility", size, k, t, rng.next_u64()) for t in range(trials)]
    cases = _run_cases(_weak_alt_case, args, workers)
    return _report(
        "weak-alt", {"size": size, "k": k, "trials": trials}, seed, cases, t0
    )


# --- character expansion of the alpha power weight ----------------------------


def _fourier_case(args) -> CaseResult:
    kind, size = args
    if kind == "expansion":
        try:
            alpha_power_expansion(size)
            return CaseResult("expansion", "pass")
        except IdentityViolation as exc:
            return CaseResult("expansion", "fail", witness={"detail": str(exc)})
    product = jucys_murphy_product(size)
    bad = [
        (p, c)
        for p, c in sorted(product.items())
        if c != QPoly.monomial(p.transposition_length)
    ]
    if len(product) == factorial(size) and not bad:
        return CaseResult("jucys-murphy", "pass")
    witness = {
        "support": len(product),
        "mismatches": [
            {"perm": format_perm(p), "coefficient": c.to_strings()} for p, c in bad[:5]
        ],
    }
    return CaseResult("jucys-murphy", "fail", witness=witness)


def verify_fourier_jm(size: int, seed: int = 0, workers: int = 1) -> SuiteReport:
    """Per-permutation check of the character-basis expansion of the alpha
    power weight (size <= 8), plus the Jucys-Murphy product expansion whose
    coefficients must be the plain monomials (size <= 6)."""
    _require(size >= 1, "size must be positive")
    if size > 8:
        raise SizeCapExceeded(f"size={size} exceeds expansion cap 8")
    t0 = time.monotonic()
    args: list = [("expansion", size)]
    if size <= 6:
        args.append(("jucys-murphy", size))
    cases = _run_cases(_fourier_case, args, workers)
    return _report("fourier", {"size": size}, seed, cases, t0)
