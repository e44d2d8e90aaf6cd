#!/usr/bin/env python3
"""Single-copy comparability, and how extra copies can unlock a conversion.

Two entangled pure states need not be convertible into each other with
certainty: deterministic conversion under local operations and classical
communication exists exactly when the source's Schmidt probabilities are
majorized by the target's.  This walkthrough builds a classic pair where
neither direction works, shows the optimal conclusive (probabilistic)
conversion instead, and then demonstrates that transforming TWO copies
collectively is suddenly deterministic.
"""

from locc_lab import (
    compare,
    load_fixture,
    majorized_by,
    make_spectrum,
    tensor_power,
    vidal_pmax,
)
from locc_lab.render import format_decimal, format_rational

psi = make_spectrum(("0.4", "0.36", "0.14", "0.1"))  # same as fixture eq2
phi = load_fixture("eq3")  # (0.5, 0.25, 0.25)

print("source:", psi)
print("target:", phi)
print()

print("majorized(source, target):", majorized_by(psi, phi))
print("majorized(target, source):", majorized_by(phi, psi))
print("relation:", compare(psi, phi).value)
print()

p = vidal_pmax(psi, phi)
print("Neither direction is deterministic, but a conclusive conversion")
print("source -> target succeeds with optimal probability")
print(f"    p_max = {format_rational(p)} = {format_decimal(p)}")
print("(the reverse is impossible outright: the target has fewer nonzero")
print("coefficients than the source, so p_max(target -> source) =",
      format_rational(vidal_pmax(phi, psi)) + ")")
print()

two_psi = tensor_power(psi, 2)
two_phi = tensor_power(phi, 2)
print("Now take two copies of each. The compressed two-copy spectra:")
print("  source^2:", two_psi)
print("  target^2:", two_phi)
print("majorized(source^2, target^2):", majorized_by(two_psi, two_phi))
print()
print("Two copies convert with certainty even though one copy cannot -")
print("a single collective transformation beats per-copy processing.")
