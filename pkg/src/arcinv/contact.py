"""Contact loci from divisorial resolution data, in multi-index form.

The input is numerical data of a common log resolution: for each of N
divisors H_1, ..., H_N, the multiplicity c_i of the maximal ideal at the
center and, for every generator (g, w) of the weighted presentation, the
vector d of multiplicities of g.  An arc whose lift meets the divisors with
intersection multiplicities l = (l_1, ..., l_N) then has

    contact with the maximal ideal   = sum_i l_i * c_i,
    normalized presentation order    = min over generators of
                                       (sum_i l_i * d_i / w) / (sum_i l_i * c_i).

When the coordinate valuation matrix nu_{H_i}(x_j) is available (as it is
for toric-style data), the multi-index l_1 >= l_2 criterion "every
coordinate valuation of l_1 is at least that of l_2" decides containment of
the corresponding maximal divisorial sets, so the irreducible fat components
of a contact locus are exactly the minimal multi-indices under that
domination order.  For data without the matrix the domination test is
unavailable and callers get an explicit error instead of a silent fallback;
in that case multi-index results should be read as candidates only.

All values are exact rationals; infinity appears only through the documented
convention c_i = 0 with a nonzero numerator.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError

MultiIndex = tuple[int, ...]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class ResolutionData:
    """Divisorial multiplicities of a presentation and of the maximal ideal.

    ``c``         -- multiplicities of the maximal ideal along the divisors.
    ``gens``      -- pairs (d, w): divisorial multiplicities of a generator
                     and its weight.
    ``coord_val`` -- optional matrix of coordinate valuations, one row per
                     ambient coordinate, one column per divisor.  Consistency
                     requires c_i = min over rows of coord_val[row][i].
    """

    c: tuple[int, ...]
    gens: tuple[tuple[tuple[int, ...], int], ...]
    coord_val: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.c)
        if n == 0:
            raise PreconditionError("at least one divisor is required")
        if any(not isinstance(x, int) or x < 0 for x in self.c):
            raise PreconditionError("maximal ideal multiplicities must be >= 0")
        if not any(self.c):
            raise PreconditionError("the maximal ideal multiplicity vector is zero")
        if not self.gens:
            raise PreconditionError("at least one generator is required")
        for d, w in self.gens:
            if len(d) != n:
                raise PreconditionError("generator vector length does not match c")
            if any(not isinstance(x, int) or x < 0 for x in d):
                raise PreconditionError("generator multiplicities must be >= 0")
            if not isinstance(w, int) or w < 1:
                raise PreconditionError(f"weight {w!r} is not a positive integer")
        if not self.contact_support:
            raise PreconditionError("every generator has zero multiplicities")
        if self.coord_val is not None:
            for row in self.coord_val:
                if len(row) != n:
                    raise PreconditionError("coordinate valuation row length mismatch")
                if any(not isinstance(x, int) or x < 0 for x in row):
                    raise PreconditionError("coordinate valuations must be >= 0")
            for i in range(n):
                column_min = min(row[i] for row in self.coord_val)
                if column_min != self.c[i]:
                    raise PreconditionError(
                        f"c[{i}] = {self.c[i]} is not the minimum coordinate "
                        f"valuation {column_min} on divisor {i}"
                    )

    @classmethod
    def of(
        cls,
        c: Sequence[int],
        gens: Sequence[tuple[Sequence[int], int]],
        coord_val: Sequence[Sequence[int]] | None = None,
    ) -> ResolutionData:
        return cls(
            tuple(c),
            tuple((tuple(d), w) for d, w in gens),
            None if coord_val is None else tuple(tuple(row) for row in coord_val),
        )

    @classmethod
    def almost_rees(
        cls,
        a: Sequence[int],
        b: int,
        c: Sequence[int],
        coord_val: Sequence[Sequence[int]] | None = None,
    ) -> ResolutionData:
        """Data of a single generator in weight b."""
        return cls.of(c, [(a, b)], coord_val)

    @property
    def num_divisors(self) -> int:
        return len(self.c)

    @property
    def contact_support(self) -> tuple[int, ...]:
        """Divisors that appear in at least one generator."""
        return tuple(
            i
            for i in range(len(self.c))
            if any(d[i] for d, _ in self.gens)
        )

    @property
    def is_almost_rees(self) -> bool:
        return len(self.gens) == 1

    @property
    def b(self) -> int | None:
        """The weight in the single-generator case, else None."""
        return self.gens[0][1] if self.is_almost_rees else None


def _check_multiindex(data: ResolutionData, l: Sequence[int]) -> MultiIndex:
    l = tuple(l)
    if len(l) != data.num_divisors:
        raise PreconditionError("multi-index length does not match the divisor count")
    if any(not isinstance(x, int) or x < 0 for x in l):
        raise PreconditionError("multi-index entries must be non-negative integers")
    if not any(l):
        raise PreconditionError("the zero multi-index does not define an arc family")
    return l


def rbar_of_multiindex(data: ResolutionData, l: Sequence[int]) -> Fraction | float:
    """Normalized presentation order of arcs with divisorial contact l.

    Infinity when the contact with the maximal ideal is zero but the contact
    with the presentation is not (the arc family does not pass through the
    center); the all-zero contact case is rejected as meaningless.
    """
    l = _check_multiindex(data, l)
    numerator = min(Fraction(_dot(l, d), w) for d, w in data.gens)
    denominator = _dot(l, data.c)
    if denominator == 0:
        if numerator == 0:
            raise PreconditionError(
                "multi-index has zero contact with both the maximal ideal and "
                "the presentation"
            )
        return math.inf
    return numerator / denominator


def dominates(data: ResolutionData, l1: Sequence[int], l2: Sequence[int]) -> bool:
    """Containment test between the divisorial sets of two multi-indices.

    True when every coordinate valuation of l1 is at least that of l2, which
    for toric-style data is equivalent to containment of the corresponding
    maximal divisorial sets.  Requires the coordinate valuation matrix.
    """
    if data.coord_val is None:
        raise PreconditionError(
            "domination needs the coordinate valuation matrix; none was supplied"
        )
    l1 = _check_multiindex(data, l1)
    l2 = _check_multiindex(data, l2)
    return all(_dot(l1, row) >= _dot(l2, row) for row in data.coord_val)


def fat_components(data: ResolutionData, m: int, bound: int) -> list[MultiIndex]:
    """Minimal multi-indices with contact >= m against the maximal ideal.

    These index the irreducible fat components of the contact locus at level
    m for toric-style data.  The search is confined to the box l_i <= bound;
    a warning is emitted if a minimal element touches the box boundary, since
    a larger bound could then reveal smaller elements.  The output is
    deduplicated (equal valuation vectors describe the same divisorial set)
    and sorted.
    """
    if data.coord_val is None:
        raise PreconditionError(
            "fat components need the coordinate valuation matrix; none was supplied"
        )
    if m < 1:
        raise PreconditionError("the contact level m must be a positive integer")
    if bound < m:
        raise PreconditionError("the search bound must be at least m")
    n = data.num_divisors
    for i in range(n):
        if all(row[i] == 0 for row in data.coord_val):
            raise PreconditionError(
                f"divisor {i} has zero valuation on every coordinate"
            )

    # A multi-index with l_i >= 1 and contact still >= m after removing one
    # copy of divisor i is dominated by that smaller index, so minimal
    # elements all live in the slab m <= l . c < m + c_i along the support.
    candidates: list[MultiIndex] = []
    for l in itertools.product(range(bound + 1), repeat=n):
        if not any(l):
            continue
        contact = _dot(l, data.c)
        if contact < m:
            continue
        if any(l[i] and contact - data.c[i] >= m for i in range(n)):
            continue
        candidates.append(l)
    if not candidates:
        warnings.warn(
            f"no multi-index with contact >= {m} fits in the box bound {bound}",
            stacklevel=2,
        )
        return []

    valuation = {
        l: tuple(_dot(l, row) for row in data.coord_val) for l in candidates
    }
    by_valuation: dict[tuple[int, ...], MultiIndex] = {}
    for l in sorted(candidates):
        by_valuation.setdefault(valuation[l], l)
    representatives = sorted(by_valuation.values())

    minimal: list[MultiIndex] = []
    for l in representatives:
        vl = valuation[l]
        strictly_dominated = False
        for other in representatives:
            if other == l:
                continue
            vo = valuation[other]
            if vl != vo and all(a >= b for a, b in zip(vl, vo)):
                strictly_dominated = True
                break
        if not strictly_dominated:
            minimal.append(l)
    if any(x == bound for l in minimal for x in l):
        warnings.warn(
            f"a minimal multi-index touches the box boundary {bound}; "
            "enlarge the bound to be sure nothing is missed",
            stacklevel=2,
        )
    return minimal


def delta(data: ResolutionData, m: int, bound: int | None = None) -> Fraction | float:
    """Smallest normalized order among the fat components at contact level m.

    The default search box has side m + max(c): minimal multi-indices have
    entries at most m, so this is complete with room to spare and the box
    boundary warning stays quiet on legitimate inputs.
    """
    effective = m + max(data.c) if bound is None else max(bound, m)
    components = fat_components(data, m, effective)
    if not components:
        raise PreconditionError(
            f"no fat components found at level {m} within bound {effective}"
        )
    return min(rbar_of_multiindex(data, l) for l in components)


@dataclass(frozen=True)
class DeltaRow:
    m: int
    value: Fraction | float
    ok: bool


@dataclass(frozen=True)
class DeltaCheck:
    order: Fraction | float
    rows: tuple[DeltaRow, ...]
    passed: bool


def delta_limit_check(
    data: ResolutionData, m_max: int, bound: int | None = None
) -> DeltaCheck:
    """Confirm that delta_m converges to the order from above.

    Every row checks ord <= delta_m <= ord * (1 + c_max / m) where c_max is
    the largest maximal ideal multiplicity; the upper envelope comes from
    rounding the contact level up to a multiple of a single divisor.
    """
    if m_max < 1:
        raise PreconditionError("m_max must be at least 1")
    order = hironaka_order(data)
    c_max = max(data.c)
    rows: list[DeltaRow] = []
    for m in range(1, m_max + 1):
        value = delta(data, m, bound)
        ok = order <= value <= order * (1 + Fraction(c_max, m))
        rows.append(DeltaRow(m, value, ok))
    return DeltaCheck(order, tuple(rows), all(row.ok for row in rows))


def hironaka_order(data: ResolutionData) -> Fraction | float:
    """Order of the presentation at the center, from divisorial data.

    The minimum over supported divisors of (min over generators of d_i / w)
    divided by c_i, where a zero c_i contributes infinity.
    """
    best: Fraction | float | None = None
    for i in data.contact_support:
        numerator = min(Fraction(d[i], w) for d, w in data.gens)
        value: Fraction | float
        if data.c[i] == 0:
            value = math.inf
        else:
            value = numerator / data.c[i]
        if best is None or value < best:
            best = value
    assert best is not None
    return best


def values_bounds(data: ResolutionData) -> tuple[Fraction | float, Fraction | float]:
    """Exact bounds for the normalized order over all multi-indices.

    For a single generator (a, b) these are min and max over supported
    divisors of a_i / (b * c_i).  For several generators the lower bound is
    the order at the center and the upper bound is the smallest, over
    generators, of the largest per-divisor ratio; both come from the mediant
    inequality.  The bounds are guaranteed sharp envelopes whenever every
    generator satisfies d >= w * c componentwise, which holds for genuine
    presentations of ideals inside the maximal ideal.
    """
    if data.is_almost_rees:
        a, b = data.gens[0]
        ratios: list[Fraction | float] = []
        for i in data.contact_support:
            if data.c[i] == 0:
                ratios.append(math.inf)
            else:
                ratios.append(Fraction(a[i], b * data.c[i]))
        return min(ratios), max(ratios)
    lower = hironaka_order(data)
    per_gen: list[Fraction | float] = []
    for d, w in data.gens:
        worst: Fraction | float = Fraction(0)
        for i in range(data.num_divisors):
            if data.c[i] == 0:
                if d[i]:
                    worst = math.inf
                continue
            ratio = Fraction(d[i], w * data.c[i])
            if ratio > worst:
                worst = ratio
        per_gen.append(worst)
    return lower, min(per_gen)


def sample_multiindices(
    data: ResolutionData, count: int, bound: int, seed: int
) -> list[MultiIndex]:
    """Seeded random multi-indices in the box, none zero, deterministic."""
    if count < 1 or bound < 1:
        raise PreconditionError("need a positive sample count and box bound")
    rng = random.Random(seed)
    samples: list[MultiIndex] = []
    while len(samples) < count:
        l = tuple(rng.randint(0, bound) for _ in range(data.num_divisors))
        if not any(l):
            continue
        if _dot(l, data.c) == 0 and all(
            _dot(l, d) == 0 for d, _ in data.gens
        ):
            continue
        samples.append(l)
    return samples


@dataclass(frozen=True)
class Extrema:
    """Observed extrema of the normalized order over a set of multi-indices."""

    minimum: Fraction | float
    argmin: MultiIndex
    maximum: Fraction | float
    argmax: MultiIndex


def rbar_extrema(data: ResolutionData, indices: Sequence[MultiIndex]) -> Extrema:
    if not indices:
        raise PreconditionError("need at least one multi-index")
    values = [(rbar_of_multiindex(data, l), tuple(l)) for l in indices]
    minimum = min(values, key=lambda pair: (pair[0], pair[1]))
    maximum = max(values, key=lambda pair: (pair[0], [-x for x in pair[1]]))
    return Extrema(minimum[0], minimum[1], maximum[0], maximum[1])
