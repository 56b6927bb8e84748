"""Built-in verification suites.

Every numerical claim the package is expected to reproduce is encoded here
as a named check with a pass/fail verdict and a detail trail.  The central
worked example is the surface x^2 y^3 = z^6, whose resolution data, toric
coordinate valuations and contact-locus structure are known in closed form;
the corpus checks exercise the blow-up engine against the rational invariant
on hand-verifiable arcs.

Checks compare values produced by independent routes (blow-up engine versus
differential presentation versus resolution data), so a pass is evidence of
correctness rather than of self-consistency of a single code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arcs import Arc, Hypersurface, MonomialParametrization, monomial_arc, sample_binomial_arc
from .contact import (
    ResolutionData,
    delta,
    delta_limit_check,
    fat_components,
    hironaka_order,
    rbar_extrema,
    rbar_of_multiindex,
    sample_multiindices,
    values_bounds,
)
from .nash import nash_sequence
from .polynomials import Polynomial
from .qpers import check_floor_identity, check_limit_identity, q_persistance
from .rees import ReesAlgebra, diff_saturate
from .render import format_multiindex, format_rational


@dataclass(frozen=True)
class CheckResult:
    ident: str
    label: str
    passed: bool
    details: tuple[str, ...] = ()


XYZ = ("x", "y", "z")


def x2y3z6_surface() -> Hypersurface:
    """The reference surface x^2 y^3 - z^6 = 0, multiplicity 5 at the origin."""
    return Hypersurface(Polynomial(XYZ, {(2, 3, 0): 1, (0, 0, 6): -1}))


def x2y3z6_resolution() -> ResolutionData:
    """Divisorial data of the reference surface on its toric resolution.

    Two exceptional divisors; the maximal ideal has multiplicities (2, 3);
    the generators x, y (weight 1) and z^6 (weight 5) have multiplicity
    vectors (3, 3), (2, 4) and (12, 18); the coordinate valuations are the
    rows of the matrix below and their column minima reproduce c.
    """
    return ResolutionData.of(
        c=(2, 3),
        gens=[((3, 3), 1), ((2, 4), 1), ((12, 18), 5)],
        coord_val=[(3, 3), (2, 4), (2, 3)],
    )


def x2y3z6_parametrization() -> MonomialParametrization:
    """(u, v) -> (u^3, v^2, u v), a parametrization of the reference surface."""
    return MonomialParametrization([(3, 0, 1), (0, 2, 1)])


def x2y3z6_presentation() -> ReesAlgebra:
    """The hand presentation x, y in weight 1 and z^6 in weight 5."""
    return ReesAlgebra(
        [
            (Polynomial(XYZ, {(1, 0, 0): 1}), 1),
            (Polynomial(XYZ, {(0, 1, 0): 1}), 1),
            (Polynomial(XYZ, {(0, 0, 6): 1}), 5),
        ]
    )


def x2y3z6_grid_value(alpha: int, beta: int) -> Fraction:
    """Closed form of the normalized order for contact multi-index (a, b)."""
    numerator = min(
        Fraction(3 * alpha + 3 * beta),
        Fraction(2 * alpha + 4 * beta),
        Fraction(6, 5) * (2 * alpha + 3 * beta),
    )
    return numerator / (2 * alpha + 3 * beta)


def cusp_surface() -> Hypersurface:
    return Hypersurface(Polynomial(("x", "y"), {(2, 0): 1, (0, 3): -1}))


def node_surface() -> Hypersurface:
    return Hypersurface(Polynomial(("x", "y"), {(1, 1): 1}))


def corpus() -> list[tuple[str, Hypersurface, Arc]]:
    """Hand-verifiable (surface, arc) pairs used by the identity checks."""
    surface_x2y3z6 = x2y3z6_surface()
    return [
        ("cusp t^3,t^2", cusp_surface(), monomial_arc((3, 2))),
        ("node t,0", node_surface(), monomial_arc((1, None))),
        ("x2y3-z6 t^3,t^2,t^2", surface_x2y3z6, monomial_arc((3, 2, 2))),
        ("x2y3-z6 t^6,t^6,t^5", surface_x2y3z6, monomial_arc((6, 6, 5))),
    ]


SAMPLE_TYPES = [
    (1, 0),
    (0, 1),
    (1, 1),
    (2, 1),
    (1, 2),
    (3, 1),
    (1, 3),
    (2, 3),
    (3, 2),
    (4, 1),
]


def sampled_arc(alpha: int, beta: int, seed: int) -> Arc:
    """Seeded random arc on the reference surface with contact type (a, b)."""
    orders = (alpha + beta, alpha + 2 * beta)
    return sample_binomial_arc(
        x2y3z6_surface(), x2y3z6_parametrization(), orders, seed
    )


def check_center_order() -> CheckResult:
    """Order 1 at the center by three independent routes."""
    details = []
    from_resolution = hironaka_order(x2y3z6_resolution())
    details.append(f"resolution data: {format_rational(from_resolution)}")
    from_diff = diff_saturate(x2y3z6_surface()).algebra.ord_at_center()
    details.append(f"differential presentation: {format_rational(from_diff)}")
    from_hand = x2y3z6_presentation().ord_at_center()
    details.append(f"hand presentation: {format_rational(from_hand)}")
    passed = from_resolution == from_diff == from_hand == 1
    return CheckResult(
        "center-order",
        "order at the center equals 1 by all three routes",
        passed,
        tuple(details),
    )


def check_rbar_grid(span: int = 8) -> CheckResult:
    """Normalized orders match min{3a+3b, 2a+4b, (6/5)(2a+3b)} / (2a+3b)."""
    data = x2y3z6_resolution()
    failures = []
    count = 0
    for alpha in range(span + 1):
        for beta in range(span + 1):
            if not 1 <= alpha + beta <= span:
                continue
            count += 1
            got = rbar_of_multiindex(data, (alpha, beta))
            want = x2y3z6_grid_value(alpha, beta)
            if got != want:
                failures.append(
                    f"(a,b)=({alpha},{beta}): got {format_rational(got)}, "
                    f"want {format_rational(want)}"
                )
    details = [f"{count} grid points with 1 <= a+b <= {span}"] + failures
    return CheckResult(
        "rbar-grid",
        "normalized orders over the multi-index grid match the closed form",
        not failures,
        tuple(details),
    )


def check_odd_levels(levels: Sequence[int] = (11, 13, 17, 19, 23)) -> CheckResult:
    """At odd contact levels n = 2m+1 the component (m-1, 1) realizes 1 + 1/n."""
    data = x2y3z6_resolution()
    failures = []
    details = []
    for n in levels:
        if n % 2 == 0:
            failures.append(f"level {n} is not odd")
            continue
        m = (n - 1) // 2
        components = fat_components(data, n, max(40, n))
        values = {l: rbar_of_multiindex(data, l) for l in components}
        details.append(
            f"n={n}: components "
            + ", ".join(
                f"{format_multiindex(l)} -> {format_rational(values[l])}"
                for l in components
            )
        )
        if not all(v > 1 for v in values.values()):
            failures.append(f"n={n}: some component has normalized order <= 1")
        special = (m - 1, 1)
        if special not in values:
            failures.append(f"n={n}: component {format_multiindex(special)} missing")
        elif values[special] != 1 + Fraction(1, n):
            failures.append(
                f"n={n}: component {format_multiindex(special)} has "
                f"{format_rational(values[special])}, want 1 + 1/{n}"
            )
    return CheckResult(
        "odd-levels",
        "odd contact levels have all orders > 1 and realize 1 + 1/n",
        not failures,
        tuple(details + failures),
    )


def check_delta_multiples(n_max: int = 10) -> CheckResult:
    """delta at every multiple of a divisor multiplicity equals the order 1."""
    data = x2y3z6_resolution()
    order = hironaka_order(data)
    failures = []
    for c_i in (2, 3):
        for n in range(1, n_max + 1):
            value = delta(data, n * c_i)
            if value != order:
                failures.append(
                    f"delta_{n * c_i} = {format_rational(value)} != {format_rational(order)}"
                )
    details = [f"checked m = n*c_i for n = 1..{n_max}, c_i in (2, 3)"] + failures
    return CheckResult(
        "delta-multiples",
        "delta at multiples of the divisor multiplicities equals the order",
        not failures,
        tuple(details),
    )


def check_delta_envelope(m_max: int = 60) -> CheckResult:
    """delta_m stays in [1, 1 + 3/m] for m <= m_max, with delta_13 = 14/13."""
    data = x2y3z6_resolution()
    result = delta_limit_check(data, m_max)
    failures = [
        f"m={row.m}: delta = {format_rational(row.value)} outside the envelope"
        for row in result.rows
        if not row.ok
    ]
    pinned = next(row for row in result.rows if row.m == 13)
    if pinned.value != Fraction(14, 13):
        failures.append(f"delta_13 = {format_rational(pinned.value)}, want 14/13")
    if not pinned.value > 1:
        failures.append("delta_13 is not > 1")
    details = [
        f"order = {format_rational(result.order)}, checked m = 1..{m_max}",
        f"delta_13 = {format_rational(pinned.value)}",
    ] + failures
    return CheckResult(
        "delta-envelope",
        "delta_m lies in [order, order*(1 + c_max/m)] and delta_13 = 14/13 > 1",
        result.passed and not failures,
        tuple(details),
    )


def _containment_datasets() -> list[tuple[str, ResolutionData]]:
    return [
        ("weighted reference data", x2y3z6_resolution()),
        ("single generator a=(1,3), b=1, c=(1,1)", ResolutionData.almost_rees((1, 3), 1, (1, 1))),
    ]


def check_values_containment(
    samples: int = 500, seed: int = 0, bound: int = 8
) -> CheckResult:
    """Sampled normalized orders always sit between the exact bounds."""
    failures = []
    details = []
    for name, data in _containment_datasets():
        lower, upper = values_bounds(data)
        drawn = sample_multiindices(data, samples, bound, seed)
        bad = [
            l
            for l in drawn
            if not lower <= rbar_of_multiindex(data, l) <= upper
        ]
        details.append(
            f"{name}: {len(drawn)} samples in [{format_rational(lower)}, "
            f"{format_rational(upper)}], {len(bad)} outside"
        )
        failures.extend(f"{name}: {format_multiindex(l)} outside bounds" for l in bad)
    data = x2y3z6_resolution()
    grid = [
        (alpha, beta)
        for alpha in range(9)
        for beta in range(9)
        if 1 <= alpha + beta <= 8
    ]
    extrema = rbar_extrema(data, grid)
    details.append(
        f"grid extrema: min {format_rational(extrema.minimum)} at "
        f"{format_multiindex(extrema.argmin)}, max {format_rational(extrema.maximum)} "
        f"at {format_multiindex(extrema.argmax)}"
    )
    if extrema.maximum != Fraction(6, 5) or extrema.argmax != (1, 1):
        failures.append("supremum 6/5 not attained at (1, 1)")
    if extrema.minimum != 1:
        failures.append("infimum 1 not attained on the grid")
    return CheckResult(
        "values-containment",
        "sampled normalized orders respect the exact bounds; extrema attained",
        not failures,
        tuple(details + failures),
    )


def check_divisorial_minimum(seeds: int = 5) -> CheckResult:
    """Over seeded arcs the minimum normalized order is 1, never less.

    Also cross-checks every sampled arc against the closed form from the
    resolution data and counts seeds that deviate (none are expected: the
    sampled parametrizations pin all pullback orders exactly).
    """
    surface = x2y3z6_surface()
    data = x2y3z6_resolution()
    failures = []
    exceptional = []
    values = {}
    total = 0
    for alpha, beta in SAMPLE_TYPES:
        want = rbar_of_multiindex(data, (alpha, beta))
        for seed in range(seeds):
            total += 1
            arc = sampled_arc(alpha, beta, seed)
            result = q_persistance(surface, arc)
            values[(alpha, beta, seed)] = result.r_bar
            if result.r_bar != want:
                exceptional.append(
                    f"type ({alpha},{beta}) seed {seed}: "
                    f"{format_rational(result.r_bar)} != {format_rational(want)}"
                )
            if result.r_bar < 1:
                failures.append(
                    f"type ({alpha},{beta}) seed {seed}: normalized order below 1"
                )
    minimum = min(values.values())
    attained = sorted({k[:2] for k, v in values.items() if v == minimum})
    if minimum != 1:
        failures.append(f"minimum is {format_rational(minimum)}, want 1")
    if (1, 0) not in attained:
        failures.append("type (1, 0) does not attain the minimum")
    details = [
        f"{total} arcs ({len(SAMPLE_TYPES)} contact types x {seeds} seeds)",
        f"minimum {format_rational(minimum)} attained by types "
        + ", ".join(format_multiindex(t) for t in attained),
        f"exceptional seeds: {len(exceptional)}",
    ]
    return CheckResult(
        "divisorial-minimum",
        "seeded arcs attain normalized order 1 and never go below it",
        not failures and not exceptional,
        tuple(details + failures + exceptional),
    )


def check_floor_corpus(sample_count: int = 20, budget: int | None = None) -> CheckResult:
    """Blow-up persistance equals floor of the rational invariant."""
    failures = []
    details = []
    for name, surface, arc in corpus():
        outcome = check_floor_identity(surface, arc, budget)
        details.append(
            f"{name}: rho = {outcome.rho}, floor(r) = {outcome.result.floor_r}"
        )
        if outcome.passed is None:
            failures.append(f"{name}: inconclusive within budget {outcome.budget}")
        elif not outcome.passed:
            failures.append(f"{name}: rho != floor(r)")
    surface = x2y3z6_surface()
    count = 0
    for alpha, beta in SAMPLE_TYPES[:4]:
        for seed in range(5):
            if count >= sample_count:
                break
            count += 1
            arc = sampled_arc(alpha, beta, seed)
            outcome = check_floor_identity(surface, arc, budget)
            if outcome.passed is None:
                failures.append(
                    f"sample ({alpha},{beta},{seed}): inconclusive within budget"
                )
            elif not outcome.passed:
                failures.append(
                    f"sample ({alpha},{beta},{seed}): rho = {outcome.rho} != "
                    f"floor(r) = {outcome.result.floor_r}"
                )
    details.append(f"{count} seeded sampled arcs checked")
    return CheckResult(
        "floor-identity",
        "persistance equals floor(r) on the corpus and on sampled arcs",
        not failures,
        tuple(details + failures),
    )


def check_limit_corpus(n_max: int = 20) -> CheckResult:
    """Ramified persistances follow floor(n*r) for n up to n_max."""
    failures = []
    details = []
    for name, surface, arc in corpus():
        outcome = check_limit_identity(surface, arc, n_max)
        details.append(
            f"{name}: r = {format_rational(outcome.r)}, "
            f"n = 1..{n_max} all equal floor(n*r): {outcome.passed}"
        )
        if not outcome.conclusive:
            failures.append(f"{name}: some ramification ran out of budget")
        elif not outcome.passed:
            bad = [row.n for row in outcome.rows if not row.ok]
            failures.append(f"{name}: mismatch at n = {bad}")
    return CheckResult(
        "limit-identity",
        "rho of the ramified arcs equals floor(n*r) for every n",
        not failures,
        tuple(details + failures),
    )


def check_presentation_crosscheck(sample_count: int = 8) -> CheckResult:
    """The differential and the hand presentation give equal arc orders."""
    surface = x2y3z6_surface()
    diff_algebra = diff_saturate(surface).algebra
    hand = x2y3z6_presentation()
    failures = []
    details = []
    arcs: list[tuple[str, Arc]] = [
        ("t^3,t^2,t^2", monomial_arc((3, 2, 2))),
        ("t^6,t^6,t^5", monomial_arc((6, 6, 5))),
    ]
    for i in range(sample_count):
        alpha, beta = SAMPLE_TYPES[i % len(SAMPLE_TYPES)]
        arcs.append((f"sample ({alpha},{beta},{i})", sampled_arc(alpha, beta, i)))
    for name, arc in arcs:
        a = diff_algebra.ord_along_arc(arc)
        b = hand.ord_along_arc(arc)
        details.append(
            f"{name}: differential {format_rational(a)}, hand {format_rational(b)}"
        )
        if a != b:
            failures.append(f"{name}: presentations disagree")
    return CheckResult(
        "presentation-crosscheck",
        "arc orders agree between the differential and the hand presentation",
        not failures,
        tuple(details + failures),
    )


def check_tiebreak_invariance() -> CheckResult:
    """Both chart tie-break rules give identical multiplicity sequences."""
    failures = []
    details = []
    cases = [(name, surface, arc) for name, surface, arc in corpus()]
    surface = x2y3z6_surface()
    for seed in range(3):
        cases.append((f"sample (1,1,{seed})", surface, sampled_arc(1, 1, seed)))
    for name, surf, arc in cases:
        first = nash_sequence(surf, arc, tie_break="s_first")
        second = nash_sequence(surf, arc, tie_break="lowest_index")
        if first.sequence != second.sequence or first.rho != second.rho:
            failures.append(
                f"{name}: {first.sequence} (s_first) vs {second.sequence} (lowest_index)"
            )
        else:
            details.append(f"{name}: sequence {first.sequence}")
    return CheckResult(
        "tiebreak-invariance",
        "multiplicity sequences do not depend on the chart tie-break",
        not failures,
        tuple(details + failures),
    )


def check_ramification_invariance(indices: Sequence[int] = (2, 3, 5)) -> CheckResult:
    """r scales by n under t -> t^n while r/nu stays fixed."""
    failures = []
    details = []
    for name, surface, arc in corpus():
        base = q_persistance(surface, arc)
        for n in indices:
            rammed = q_persistance(surface, arc.ramify(n))
            if rammed.r != n * base.r or rammed.r_bar != base.r_bar:
                failures.append(
                    f"{name}, n={n}: r {format_rational(rammed.r)} vs "
                    f"{format_rational(n * base.r)}, r_bar "
                    f"{format_rational(rammed.r_bar)} vs {format_rational(base.r_bar)}"
                )
        details.append(
            f"{name}: r = {format_rational(base.r)}, "
            f"r_bar = {format_rational(base.r_bar)}"
        )
    return CheckResult(
        "ramification-invariance",
        "r is homogeneous and r/nu invariant under ramification",
        not failures,
        tuple(details + failures),
    )


def check_stabilization() -> CheckResult:
    """Extended blow-up runs reach multiplicity 1 on the corpus."""
    failures = []
    details = []
    for name, surface, arc in corpus():
        report = nash_sequence(surface, arc, stop_at_drop=False)
        details.append(f"{name}: sequence {report.sequence}")
        if report.sequence[-1] != 1:
            failures.append(f"{name}: sequence did not stabilize at 1")
    return CheckResult(
        "stabilization",
        "multiplicity sequences stabilize at 1 on the corpus",
        not failures,
        tuple(details + failures),
    )


CheckEntry = tuple[Callable[..., CheckResult], tuple[str, ...]]

SUITES: dict[str, list[CheckEntry]] = {
    "x2y3z6": [
        (check_center_order, ()),
        (check_rbar_grid, ()),
        (check_odd_levels, ()),
        (check_delta_multiples, ()),
        (check_delta_envelope, ("m_max",)),
        (check_values_containment, ("samples", "seed", "bound")),
        (check_divisorial_minimum, ()),
        (check_presentation_crosscheck, ()),
    ],
    "corpus": [
        (check_floor_corpus, ("budget",)),
        (check_limit_corpus, ("n_max",)),
        (check_tiebreak_invariance, ()),
        (check_ramification_invariance, ()),
        (check_stabilization, ()),
    ],
}
SUITES["all"] = SUITES["x2y3z6"] + SUITES["corpus"]


def run_suite(name: str, **overrides) -> list[CheckResult]:
    """Run a named suite; unknown names raise KeyError with the options."""
    if name not in SUITES:
        raise KeyError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}"
        )
    results = []
    for check, accepted in SUITES[name]:
        kwargs = {
            key: overrides[key]
            for key in accepted
            if overrides.get(key) is not None
        }
        results.append(check(**kwargs))
    return results
