"""Named verification suites behind the command line.

Each suite runs a batch of exact or residual checks and returns plain
CheckResult records; the CLI decides formatting and exit codes.  Suites
accept a SuiteOptions bundle so callers can widen or narrow the sweep.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import susyqm
from .awalgebra import generators as aw_generators
from .awalgebra import verify_relations, x_eigenvalue
from .family import (
    ParamPair,
    eigenvalue,
    explicit_poly,
    generate_monic,
    moments,
    norm_square,
    qlimit_error,
    recurrence_coeffs,
    weight_moment,
)
from .operators import (
    derivative,
    dunkl_derivative,
    little_jacobi_operator,
    op_equal,
)
from .polys import Poly, reflect
from .transforms import (
    JacobiParams,
    dunkl_classical_check,
    extract_recurrence,
    gegenbauer_dunkl_check,
    identify_little,
    intertwiner_check,
    raising_check,
    symmetric_gegenbauer,
)

__all__ = [
    "CheckResult",
    "DEFAULT_PAIRS",
    "SUITE_NAMES",
    "SuiteOptions",
    "run_suites",
]

DEFAULT_PAIRS = (
    ParamPair(Fraction(1, 2), Fraction(3, 2)),
    ParamPair(Fraction(0), Fraction(2)),
    ParamPair(Fraction(1), Fraction(1)),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteOptions:
    pairs: tuple[ParamPair, ...] = DEFAULT_PAIRS
    max_degree: Optional[int] = None
    a: Fraction = Fraction(3, 2)
    levels: int = 5
    points: int = 200
    epsilons: tuple[float, ...] = (1e-3, 1e-4)

    def degree(self, default: int) -> int:
        return self.max_degree if self.max_degree is not None else default


def _tag(params: ParamPair) -> str:
    return f"({params.alpha},{params.beta})"


def _suite_orthogonality(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(20)
    for params in opts.pairs:
        mf = moments(params, 2 * n_max)
        members = [generate_monic(params, k) for k in range(n_max + 1)]

        witness = ""
        for n in range(1, n_max + 1):
            for m in range(n):
                value = mf.inner_product(members[n], members[m])
                if value != 0:
                    witness = f"<P_{n}, P_{m}> = {value}"
                    break
            if witness:
                break
        results.append(
            CheckResult(
                "orthogonality",
                f"pair vanishing n<={n_max} {_tag(params)}",
                not witness,
                witness or "all cross inner products zero exactly",
            )
        )

        bad = next(
            (
                n
                for n in range(n_max + 1)
                if mf.inner_product(members[n], members[n]) != norm_square(params, n)
            ),
            None,
        )
        results.append(
            CheckResult(
                "orthogonality",
                f"norm product rule n<={n_max} {_tag(params)}",
                bad is None,
                "norms match u_1..u_n products" if bad is None else f"mismatch at n={bad}",
            )
        )

        bad = next(
            (n for n in range(1, n_max + 1) if recurrence_coeffs(params, n)[0] <= 0),
            None,
        )
        results.append(
            CheckResult(
                "orthogonality",
                f"u_n positivity n<={n_max} {_tag(params)}",
                bad is None,
                "all u_n > 0" if bad is None else f"u_{bad} not positive",
            )
        )

        bad = next(
            (n for n in range(9) if mf.hankel_determinant(n) <= 0),
            None,
        )
        results.append(
            CheckResult(
                "orthogonality",
                f"Hankel positivity n<=8 {_tag(params)}",
                bad is None,
                "moment matrix positive definite" if bad is None else f"Delta_{bad} <= 0",
            )
        )

        worst = max(
            abs(weight_moment(params, k) - float(mf.c(k))) for k in range(9)
        )
        results.append(
            CheckResult(
                "orthogonality",
                f"weight quadrature k<=8 {_tag(params)}",
                worst < 1e-8,
                f"worst |quad - exact| = {worst:.3e}",
            )
        )
    return results


def _suite_eigen(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(20)
    for params in opts.pairs:
        op = little_jacobi_operator(params.alpha, params.beta, n_max)
        bad = next(
            (
                n
                for n in range(n_max + 1)
                if op.apply(generate_monic(params, n))
                != eigenvalue(params, n) * generate_monic(params, n)
            ),
            None,
        )
        results.append(
            CheckResult(
                "eigen",
                f"L P_n = lambda_n P_n n<={n_max} {_tag(params)}",
                bad is None,
                "coefficient-exact" if bad is None else f"mismatch at n={bad}",
            )
        )

        values = [eigenvalue(params, n) for n in range(51)]
        simple = len(set(values)) == len(values)
        results.append(
            CheckResult(
                "eigen",
                f"eigenvalue simplicity n<=50 {_tag(params)}",
                simple,
                "pairwise distinct" if simple else "repeated eigenvalue",
            )
        )
    return results


def _suite_explicit(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(12)
    for params in opts.pairs:
        bad = next(
            (
                n
                for n in range(n_max + 1)
                if explicit_poly(params, n) != generate_monic(params, n)
            ),
            None,
        )
        results.append(
            CheckResult(
                "explicit",
                f"hypergeometric = recurrence n<={n_max} {_tag(params)}",
                bad is None,
                "exact" if bad is None else f"mismatch at n={bad}",
            )
        )
    return results


def _suite_dunkl(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(12)
    for params in opts.pairs:
        bad = next(
            (
                n
                for n in range(1, n_max + 1)
                if not dunkl_classical_check(params, n).holds
            ),
            None,
        )
        results.append(
            CheckResult(
                "dunkl",
                f"lowering n<={n_max} {_tag(params)}",
                bad is None,
                "exact" if bad is None else f"mismatch at n={bad}",
            )
        )
    # mu = alpha/2 = 0 degenerates the reflection term: plain derivative
    report = op_equal(dunkl_derivative(0, 30), derivative(30))
    results.append(
        CheckResult(
            "dunkl",
            "alpha=0 degeneration T_0 = d/dx",
            report.holds,
            f"tables agree through degree {report.safe_degree}",
        )
    )
    return results


def _suite_raising(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(10)
    pairs = [p for p in opts.pairs if p.beta > 1]
    anchor = ParamPair(Fraction(1, 2), Fraction(5, 2))
    if anchor not in pairs:
        pairs.append(anchor)
    for params in pairs:
        bad = next(
            (n for n in range(n_max + 1) if not raising_check(params, n).holds),
            None,
        )
        results.append(
            CheckResult(
                "raising",
                f"degree raising n<={n_max} {_tag(params)}",
                bad is None,
                "exact" if bad is None else f"mismatch at n={bad}",
            )
        )
    return results


def _suite_transforms(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(12)
    for params in opts.pairs:
        bad = next(
            (n for n in range(n_max + 1) if not identify_little(params, n).holds),
            None,
        )
        results.append(
            CheckResult(
                "transforms",
                f"Christoffel/Geronimus identification n<={n_max} {_tag(params)}",
                bad is None,
                "all three constructions agree" if bad is None else f"mismatch at n={bad}",
            )
        )

        jp = JacobiParams((params.alpha - 1) / 2, (params.beta - 1) / 2)
        bad = next(
            (
                n
                for n in range(21)
                if reflect(symmetric_gegenbauer(jp, n))
                != (-1) ** n * symmetric_gegenbauer(jp, n)
            ),
            None,
        )
        results.append(
            CheckResult(
                "transforms",
                f"Gegenbauer parity n<=20 {_tag(params)}",
                bad is None,
                "S_n(-x) = (-1)^n S_n(x)" if bad is None else f"parity broken at n={bad}",
            )
        )

        bad = next(
            (n for n in range(1, 11) if not gegenbauer_dunkl_check(jp, n).holds),
            None,
        )
        results.append(
            CheckResult(
                "transforms",
                f"Gegenbauer Dunkl lowering n<=10 {_tag(params)}",
                bad is None,
                "exact" if bad is None else f"mismatch at n={bad}",
            )
        )

        seq = [generate_monic(params, k) for k in range(12)]
        bad = None
        for n in range(1, 11):
            u, b = extract_recurrence(seq, n)
            expected_u, expected_b = recurrence_coeffs(params, n)
            if u != expected_u or b != expected_b:
                bad = n
                break
        results.append(
            CheckResult(
                "transforms",
                f"recurrence extraction n<=10 {_tag(params)}",
                bad is None,
                "recovered coefficients match" if bad is None else f"mismatch at n={bad}",
            )
        )
    return results


def _suite_aw(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    for params in opts.pairs:
        structure = verify_relations(params, 24)
        ok = (
            structure.omega1 == 0
            and structure.omega2 == params.beta
            and abs(structure.omega3) == params.alpha
        )
        sign = {1: "+", -1: "-", 0: "0"}[structure.omega3_sign]
        results.append(
            CheckResult(
                "aw",
                f"anticommutator closure {_tag(params)}",
                ok,
                f"omega = (0, beta, {structure.omega3}); omega3 sign {sign}",
            )
        )
        results.append(
            CheckResult(
                "aw",
                f"Casimir Y^2+Z^2 = I {_tag(params)}",
                structure.casimir_is_identity,
                "central and equal to identity at N=24",
            )
        )

        x_op = aw_generators(params, 24)[0]
        bad = next(
            (
                n
                for n in range(13)
                if x_op.apply(generate_monic(params, n))
                != x_eigenvalue(params, n) * generate_monic(params, n)
            ),
            None,
        )
        results.append(
            CheckResult(
                "aw",
                f"X diagonal on the family n<=12 {_tag(params)}",
                bad is None,
                "eigen-relation exact" if bad is None else f"mismatch at n={bad}",
            )
        )
    return results


def _suite_prop2(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(10)
    pairs = opts.pairs if opts.pairs != DEFAULT_PAIRS else (
        ParamPair(Fraction(1), Fraction(1)),
        ParamPair(Fraction(1, 2), Fraction(3, 2)),
    )
    for params in pairs:
        bad = next(
            (n for n in range(n_max + 1) if not intertwiner_check(params, n).holds),
            None,
        )
        results.append(
            CheckResult(
                "prop2",
                f"intertwiner route n<={n_max} {_tag(params)}",
                bad is None,
                "exact" if bad is None else f"mismatch at n={bad}",
            )
        )
    return results


def _suite_qlimit(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    n_max = opts.degree(10)
    eps_hi, eps_lo = opts.epsilons[0], opts.epsilons[-1]
    if eps_hi <= eps_lo:
        raise ValueError("epsilon list must go from coarse to fine")
    for params in opts.pairs:
        worst_lo, worst_hi = None, None
        ok = True
        detail = ""
        for n in range(n_max + 1):
            du_hi, db_hi = qlimit_error(params, n, eps_hi)
            du_lo, db_lo = qlimit_error(params, n, eps_lo)
            ratios = []
            if n > 0 and du_lo > 0.0:
                ratios.append(du_hi / du_lo)
            if db_lo > 0.0:
                ratios.append(db_hi / db_lo)
            for ratio in ratios:
                worst_lo = ratio if worst_lo is None else min(worst_lo, ratio)
                worst_hi = ratio if worst_hi is None else max(worst_hi, ratio)
                if not 8.0 <= ratio <= 12.0:
                    ok = False
                    detail = f"ratio {ratio:.2f} at n={n} outside [8,12]"
            if not ok:
                break
        if ok:
            detail = f"error ratios in [{worst_lo:.2f}, {worst_hi:.2f}]"
        results.append(
            CheckResult(
                "qlimit",
                f"linear convergence n<={n_max} {_tag(params)}",
                ok,
                detail,
            )
        )
    return results


def _suite_susy(opts: SuiteOptions) -> list[CheckResult]:
    results = []
    a = opts.a
    af = float(a)
    grid = susyqm.default_grid(opts.points)

    worst_l1 = 0.0
    worst_h1 = 0.0
    for n in range(opts.levels + 1):
        state = susyqm.eigenstate(a, n)
        values = [state.value(y) for y in grid]
        peak = max(abs(v) for v in values)
        root = (-1.0) ** (n + 1) * (af + n + 1.0)
        e_n = susyqm.energy(a, n)
        for y, value in zip(grid, values):
            worst_l1 = max(
                worst_l1, abs(susyqm.apply_L1(a, state, y) - root * value) / peak
            )
            worst_h1 = max(
                worst_h1, abs(susyqm.apply_H1(a, state, y) - e_n * value) / peak
            )
    results.append(
        CheckResult(
            "susy",
            f"L1 eigen-relation n<={opts.levels} a={a}",
            worst_l1 < 1e-8,
            f"worst scaled residual {worst_l1:.3e}",
        )
    )
    results.append(
        CheckResult(
            "susy",
            f"H1 eigen-relation n<={opts.levels} a={a}",
            worst_h1 < 1e-8,
            f"worst scaled residual {worst_h1:.3e}",
        )
    )

    test_polys = [
        Poly.ONE,
        Poly.X,
        Poly([Fraction(-1, 2), 0, 1]),
        Poly([0, Fraction(1, 3), 0, 0, 0, 0, 1]),
    ]
    worst = 0.0
    sparse = grid[:: max(1, len(grid) // 50)]
    for p in test_polys:
        f = susyqm.PhiPoly(a, p)
        image = susyqm.L1Image(a, f)
        for y in sparse:
            lhs = susyqm.apply_L1(a, image, y)
            rhs = susyqm.apply_H1(a, f, y)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    results.append(
        CheckResult(
            "susy",
            f"square root L1^2 = H1 a={a}",
            worst < 1e-8,
            f"worst scaled residual {worst:.3e} on degree<=6 tests",
        )
    )

    report = susyqm.factorization_check(
        lambda y: susyqm.superpotential(a, y),
        lambda y: susyqm.superpotential_prime(a, y),
        lambda y: susyqm.potential(a, y),
        0.0,
        grid,
    )
    results.append(
        CheckResult(
            "susy",
            f"superpotential factorization a={a}",
            report.holds,
            "worst residuals "
            + ", ".join(f"{k}={v:.2e}" for k, v in sorted(report.worst.items())),
        )
    )

    flip_ok = True
    flip_detail = "parity flip matches the eigen-relation"
    try:
        for n in range(min(opts.levels, 3) + 1):
            for y in (0.0, 0.4, -0.7, 1.1):
                susyqm.darboux_flip(a, n, y)
    except ArithmeticError as exc:
        flip_ok = False
        flip_detail = str(exc)
    results.append(CheckResult("susy", f"Darboux flip a={a}", flip_ok, flip_detail))

    worst = 0.0
    conj_ok = True
    for p in test_polys[:3]:
        report = susyqm.conjugation_check(a, p, grid[:: max(1, len(grid) // 20)])
        worst = max(worst, report.worst)
        conj_ok = conj_ok and report.holds
    results.append(
        CheckResult(
            "susy",
            f"Sturm-Liouville conjugation a={a}",
            conj_ok,
            f"worst scaled residual {worst:.3e}",
        )
    )

    bad = next(
        (
            n
            for n in range(opts.levels + 1)
            if susyqm.node_count(a, n) != n
        ),
        None,
    )
    results.append(
        CheckResult(
            "susy",
            f"node counts n<={opts.levels} a={a}",
            bad is None,
            "psi_n crosses zero exactly n times" if bad is None else f"wrong count at n={bad}",
        )
    )
    return results


SUITES: dict[str, Callable[[SuiteOptions], list[CheckResult]]] = {
    "orthogonality": _suite_orthogonality,
    "eigen": _suite_eigen,
    "explicit": _suite_explicit,
    "dunkl": _suite_dunkl,
    "raising": _suite_raising,
    "transforms": _suite_transforms,
    "aw": _suite_aw,
    "prop2": _suite_prop2,
    "qlimit": _suite_qlimit,
    "susy": _suite_susy,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(
    names: Sequence[str],
    options: SuiteOptions,
    seed: Optional[int] = None,
) -> list[CheckResult]:
    """Run the named suites; "all" expands to every registered suite.

    Execution order is shuffled when a seed is given (ordering must never
    matter); the returned list is always sorted for stable output.
    """
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    order = list(dict.fromkeys(expanded))
    if seed is not None:
        random.Random(seed).shuffle(order)
    results: list[CheckResult] = []
    for name in order:
        results.extend(SUITES[name](options))
    results.sort(key=lambda r: (r.suite, r.name))
    return results
