"""Majorization decisions on compressed spectra.

Deterministic convertibility of bipartite pure states under local
operations and classical communication reduces to majorization of Schmidt
spectra (Nielsen's criterion); when that fails, the optimal probability of
a conclusive (exact, probabilistic) conversion is Vidal's minimum of
tail-sum ratios.

Both checks are evaluated only at *breakpoints* - prefix positions where
either compressed spectrum's active distinct value changes.  Between
breakpoints the prefix-sum difference is affine in the prefix length and a
ratio of two affine tails is monotone, so the extrema live at the segment
endpoints.  This keeps the cost proportional to the number of distinct
values rather than the full (possibly exponential) dimension.  The
dense `*_dense` twins exist so tests can cross-validate the breakpoint
shortcut against a full per-prefix scan.
"""

from __future__ import annotations

from bisect import bisect_left
from enum import Enum
from fractions import Fraction

from .spectrum import SchmidtSpectrum


class Comparability(Enum):
    """Single-copy relation between two spectra."""

    SOURCE_TO_TARGET = "source->target"
    TARGET_TO_SOURCE = "target->source"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


class _PrefixSums:
    """Exact prefix sums of a compressed spectrum at arbitrary positions."""

    def __init__(self, s: SchmidtSpectrum):
        self.boundaries: list[int] = []  # cumulative counts per run
        self.sums: list[Fraction] = []  # prefix sum at each boundary
        self.values: list[Fraction] = []
        count = 0
        total = Fraction(0)
        for value, mult in s.entries:
            count += mult
            total += value * mult
            self.boundaries.append(count)
            self.sums.append(total)
            self.values.append(value)
        self.dim = count

    def at(self, n: int) -> Fraction:
        """Sum of the n largest coefficients (zero-padded past dim)."""
        if n <= 0:
            return Fraction(0)
        if n >= self.dim:
            return Fraction(1)
        run = bisect_left(self.boundaries, n)
        start = self.boundaries[run - 1] if run else 0
        base = self.sums[run - 1] if run else Fraction(0)
        return base + (n - start) * self.values[run]


def majorized_by(x: SchmidtSpectrum, y: SchmidtSpectrum) -> bool:
    """True iff every descending prefix sum of x is <= that of y.

    Ranks may differ; the shorter spectrum is implicitly zero-padded.  Only
    breakpoints are inspected: the prefix-sum difference is piecewise
    linear in the prefix length, so checking both endpoints of every
    linear segment decides all intermediate positions too.
    """
    px = _PrefixSums(x)
    py = _PrefixSums(y)
    top = max(px.dim, py.dim)
    points = sorted(set(px.boundaries) | set(py.boundaries) | {top})
    return all(px.at(n) <= py.at(n) for n in points)


def majorized_by_dense(x: SchmidtSpectrum, y: SchmidtSpectrum) -> bool:
    """Full per-prefix majorization scan (test oracle for majorized_by)."""
    xs = list(x.expand())
    ys = list(y.expand())
    top = max(len(xs), len(ys))
    xs += [Fraction(0)] * (top - len(xs))
    ys += [Fraction(0)] * (top - len(ys))
    sum_x = Fraction(0)
    sum_y = Fraction(0)
    for vx, vy in zip(xs, ys):
        sum_x += vx
        sum_y += vy
        if sum_x > sum_y:
            return False
    return True


def nielsen_deterministic(source: SchmidtSpectrum, target: SchmidtSpectrum) -> bool:
    """Can the source convert to the target with probability one?

    Nielsen's criterion: exactly when the source spectrum is majorized by
    the target spectrum.
    """
    return majorized_by(source, target)


def vidal_pmax(source: SchmidtSpectrum, target: SchmidtSpectrum) -> Fraction:
    """Optimal success probability of a conclusive source -> target conversion.

    Vidal's formula: the minimum over prefix lengths l of the tail-sum
    ratio E_l(source) / E_l(target), where E_l is 1 minus the sum of the
    l-1 largest coefficients.  Positions with a zero target tail are
    excluded (their ratio is +infinity), which restricts l to
    1..target.dim; if the source has fewer nonzero coefficients than the
    target the conversion is impossible and 0 is returned rather than an
    error, so sweeps over many pairs stay total.

    The minimum is attained at a breakpoint of either compressed spectrum
    because the ratio of two affine functions is monotone between
    breakpoints; only those positions are evaluated.  The result is exact.
    """
    if source.dim < target.dim:
        return Fraction(0)
    ps = _PrefixSums(source)
    pt = _PrefixSums(target)
    last = target.dim - 1  # largest prefix length with a positive target tail
    points = {0, last}
    points.update(b for b in ps.boundaries if b <= last)
    points.update(b for b in pt.boundaries if b <= last)
    return min((1 - ps.at(n)) / (1 - pt.at(n)) for n in points)


def vidal_pmax_dense(source: SchmidtSpectrum, target: SchmidtSpectrum) -> Fraction:
    """Vidal's minimum evaluated at every prefix (test oracle)."""
    if source.dim < target.dim:
        return Fraction(0)
    src = source.expand()
    tgt = target.expand()
    best = None
    tail_s = Fraction(1)
    tail_t = Fraction(1)
    for l in range(1, len(tgt) + 1):
        ratio = tail_s / tail_t
        if best is None or ratio < best:
            best = ratio
        tail_s -= src[l - 1]
        tail_t -= tgt[l - 1]
    return best


def compare(a: SchmidtSpectrum, b: SchmidtSpectrum) -> Comparability:
    """Classify the single-copy relation between two spectra.

    Equivalent exactly when the canonical spectra are equal (majorization
    both ways collapses to equality); otherwise one-directional if exactly
    one direction majorizes, else incomparable.
    """
    if a == b:
        return Comparability.EQUIVALENT
    if majorized_by(a, b):
        return Comparability.SOURCE_TO_TARGET
    if majorized_by(b, a):
        return Comparability.TARGET_TO_SOURCE
    return Comparability.INCOMPARABLE
