"""Many-copy analysis of incomparable pairs.

A pair that is incomparable copy-by-copy may still convert deterministically
when several copies are transformed collectively; other pairs stay
incomparable at every copy count and under any catalyst.  This module
classifies pairs along that axis, finds the minimal deterministic copy
count, scans the optimal conclusive probability against the copy count
(with its exponential-decay bound where one applies), and collects
numerical evidence for the still-open claim that determinism at k+1 copies
persists for all larger counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .majorization import Comparability, compare, majorized_by, vidal_pmax
from .spectrum import SchmidtSpectrum, tensor_power


class ExtremalWitness(Enum):
    """Strict-inequality pattern of the extreme coefficients that certifies
    strong incomparability (no copy count, no catalyst, either direction)."""

    SOURCE_EXTREMES_SMALLER = "largest and smallest coefficients both strictly smaller"
    SOURCE_EXTREMES_LARGER = "largest and smallest coefficients both strictly larger"


class PairKind(Enum):
    COMPARABLE_SINGLE_COPY = "comparable"
    K_COPY_INCOMPARABLE = "k-copy incomparable"
    STRONGLY_INCOMPARABLE = "strongly incomparable"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class PairClassification:
    """Outcome of classifying a pair.

    kind selects the variant; the other fields are populated per variant:
    direction for single-copy comparable pairs and for k-copy pairs (the
    one direction that becomes deterministic), k for k-copy pairs (both
    directions stay incomparable for n <= k, one becomes deterministic at
    n = k+1), witness for strongly incomparable pairs, searched_up_to for
    the honest "no answer within budget" outcome.
    """

    kind: PairKind
    direction: Comparability | None = None
    k: int | None = None
    witness: ExtremalWitness | None = None
    searched_up_to: int | None = None


@dataclass(frozen=True)
class PmaxScanRow:
    k: int
    pmax: Fraction
    decay_bound: Fraction | None


@dataclass(frozen=True)
class PmaxScan:
    """Optimal conclusive probability per copy count, rows contiguous from 1.

    Whenever the exponential-decay bound applies, each row satisfies
    pmax <= bound; construction enforces both invariants.
    """

    rows: tuple[PmaxScanRow, ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if row.k != i + 1:
                raise ValueError("rows must be contiguous from k=1")
            if row.decay_bound is not None and row.pmax > row.decay_bound:
                raise ValueError(f"row k={row.k}: pmax {row.pmax} above bound")

    def argmax_k(self) -> int:
        """Copy count with the largest pmax (smallest k on ties)."""
        return max(self.rows, key=lambda r: (r.pmax, -r.k)).k


class BaselineNotDeterministic(ValueError):
    """Evidence scan requires the (k+1)-copy conversion to be deterministic."""


def _padded_extremes(
    a: SchmidtSpectrum, b: SchmidtSpectrum
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(a1, b1, ad, bd): largest and smallest coefficients of both spectra,
    the smaller-rank spectrum zero-padded to the common dimension."""
    top = max(a.dim, b.dim)
    ad = a.smallest if a.dim == top else Fraction(0)
    bd = b.smallest if b.dim == top else Fraction(0)
    return a.largest, b.largest, ad, bd


def multicopy_necessary(source: SchmidtSpectrum, target: SchmidtSpectrum) -> bool:
    """Cheap necessary condition for any many-copy or catalyzed conversion.

    A deterministic source -> target conversion of k copies (for any k,
    with or without a catalyst) forces largest(source) <= largest(target)
    and smallest(source) >= smallest(target), extremes taken after zero
    padding to the common rank.  False therefore rules the direction out
    for every copy count; true promises nothing.
    """
    a1, b1, ad, bd = _padded_extremes(source, target)
    return a1 <= b1 and ad >= bd


def strong_incomparability_witness(
    a: SchmidtSpectrum, b: SchmidtSpectrum
) -> ExtremalWitness | None:
    """Sufficient condition for strong incomparability, with its witness.

    When both extreme coefficients of one spectrum are strictly below the
    other's, the extreme test fails in both directions at every copy count
    and under any catalyst, so the pair can never convert deterministically
    either way.  Returns which strict pattern fired, or None when the
    condition does not hold (which decides nothing: the condition is not
    known to be necessary).
    """
    a1, b1, ad, bd = _padded_extremes(a, b)
    if a1 < b1 and ad < bd:
        return ExtremalWitness.SOURCE_EXTREMES_SMALLER
    if a1 > b1 and ad > bd:
        return ExtremalWitness.SOURCE_EXTREMES_LARGER
    return None


def find_min_deterministic_k(
    source: SchmidtSpectrum,
    target: SchmidtSpectrum,
    k_max: int,
    *,
    mem_cap: int | None = None,
) -> int | None:
    """Smallest n <= k_max with n copies deterministically convertible.

    Short-circuits to None when the extreme-coefficient test already rules
    the direction out; otherwise checks majorization of the n-fold powers
    for n = 1, 2, ... and returns the first hit, or None if the budget is
    exhausted.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if not multicopy_necessary(source, target):
        return None
    for n in range(1, k_max + 1):
        powered_source = tensor_power(source, n, mem_cap=mem_cap)
        powered_target = tensor_power(target, n, mem_cap=mem_cap)
        if majorized_by(powered_source, powered_target):
            return n
    return None


def classify_pair(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    k_max: int = 8,
    *,
    mem_cap: int | None = None,
) -> PairClassification:
    """Classify a pair by its many-copy transformation behaviour.

    Single-copy comparable pairs are reported as such.  Among incomparable
    pairs, the strict extreme-coefficient pattern certifies strong
    incomparability outright; otherwise the minimal deterministic copy
    count is searched, a -> b first and then b -> a (the order is fixed
    for determinism; at most one direction can ever succeed, since both
    succeeding would force the spectra to be equal).  Pairs that resolve
    neither way within k_max copies are honestly reported as undecided:
    no terminating procedure is known for "incomparable at every k"
    outside the sufficient condition.
    """
    relation = compare(a, b)
    if relation != Comparability.INCOMPARABLE:
        return PairClassification(PairKind.COMPARABLE_SINGLE_COPY, direction=relation)
    witness = strong_incomparability_witness(a, b)
    if witness is not None:
        return PairClassification(PairKind.STRONGLY_INCOMPARABLE, witness=witness)
    n = find_min_deterministic_k(a, b, k_max, mem_cap=mem_cap)
    if n is not None:
        return PairClassification(
            PairKind.K_COPY_INCOMPARABLE,
            k=n - 1,
            direction=Comparability.SOURCE_TO_TARGET,
        )
    n = find_min_deterministic_k(b, a, k_max, mem_cap=mem_cap)
    if n is not None:
        return PairClassification(
            PairKind.K_COPY_INCOMPARABLE,
            k=n - 1,
            direction=Comparability.TARGET_TO_SOURCE,
        )
    return PairClassification(PairKind.UNDECIDED, searched_up_to=k_max)


def pmax_mes(s: SchmidtSpectrum, d: int) -> Fraction:
    """Optimal probability of converting s to the rank-d maximally
    entangled state: d times the smallest coefficient (zero if the rank
    was padded up, making the conversion impossible)."""
    if d < s.dim:
        raise ValueError(f"target rank {d} below spectrum rank {s.dim}")
    smallest = s.smallest if d == s.dim else Fraction(0)
    return d * smallest


def pmax_scan(
    source: SchmidtSpectrum,
    target: SchmidtSpectrum,
    k_max: int,
    *,
    mem_cap: int | None = None,
) -> PmaxScan:
    """Optimal conclusive probability for k = 1..k_max copies.

    When the padded smallest coefficients satisfy smallest(source) <
    smallest(target), the probability is bounded by their ratio to the
    k-th power and decays exponentially no matter how the copies are
    manipulated collectively; that bound is attached per row.  Outside
    that regime no bound column is emitted (the probability may even reach
    1 at some copy count).
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    _, _, ad, bd = _padded_extremes(source, target)
    decay_base = ad / bd if ad < bd else None
    rows = []
    for k in range(1, k_max + 1):
        p = vidal_pmax(
            tensor_power(source, k, mem_cap=mem_cap),
            tensor_power(target, k, mem_cap=mem_cap),
        )
        bound = decay_base**k if decay_base is not None else None
        rows.append(PmaxScanRow(k, p, bound))
    return PmaxScan(tuple(rows))


def conjecture_scan(
    source: SchmidtSpectrum,
    target: SchmidtSpectrum,
    k: int,
    n_max: int,
    *,
    mem_cap: int | None = None,
) -> tuple[tuple[int, bool], ...]:
    """Numerical EVIDENCE that determinism at k+1 copies persists beyond.

    Requires the (k+1)-copy conversion to be deterministic, then reports
    for each n = k+2..n_max whether the n-copy conversion is deterministic
    too.  A run of True values is evidence only, never a proof; multiples
    of k+1 hold trivially (repeat the (k+1)-copy protocol), the
    interesting entries are the remainders.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    base_source = tensor_power(source, k + 1, mem_cap=mem_cap)
    base_target = tensor_power(target, k + 1, mem_cap=mem_cap)
    if not majorized_by(base_source, base_target):
        raise BaselineNotDeterministic(
            f"the {k + 1}-copy conversion is not deterministic"
        )
    results = []
    for n in range(k + 2, n_max + 1):
        holds = majorized_by(
            tensor_power(source, n, mem_cap=mem_cap),
            tensor_power(target, n, mem_cap=mem_cap),
        )
        results.append((n, holds))
    return tuple(results)
