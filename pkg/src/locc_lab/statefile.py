"""Exact parsing of state files.

A state file is UTF-8 text holding Schmidt coefficients either one per
line (with `#` comments and blank lines allowed) or as a single JSON list.
Every coefficient is parsed exactly as a rational - "0.36" becomes 9/25,
never a binary double - which is the contract that makes analyses of
decimal-specified states bit-reproducible.  Fractions like "9/25" and
scientific notation like "1e-3" are accepted too.

CLI arguments that do not name an existing file fall back to the bundled
catalog, so `locc-lab compare eq2 eq3` works out of the box.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .catalog import CATALOG
from .spectrum import NegativeEntry, SchmidtSpectrum, SumNotOne, make_spectrum


class StateFileError(ValueError):
    """Unreadable or unparsable state input; knows file and line."""

    def __init__(self, source: str, message: str, line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class StateFile:
    """A parsed state input: the raw coefficient strings plus the mode
    they are to be read under ("probabilities" or "amplitudes")."""

    name: str
    coefficients: tuple[str, ...]
    mode: str = "probabilities"

    def to_spectrum(self, normalize: bool = False) -> SchmidtSpectrum:
        """Exact spectrum of the state.

        Amplitude mode squares each entry first.  With normalize=True the
        entries are rescaled by their exact sum instead of insisting that
        they already sum to 1.
        """
        values = []
        for position, token in enumerate(self.coefficients, start=1):
            try:
                value = Fraction(token)
            except (ValueError, ZeroDivisionError) as exc:
                raise StateFileError(
                    self.name, f"cannot parse coefficient {token!r}: {exc}", position
                ) from None
            if self.mode == "amplitudes":
                value = value * value
            values.append(value)
        if normalize:
            total = sum(values, Fraction(0))
            if total <= 0:
                raise StateFileError(self.name, "cannot normalize: sum is not positive")
            values = [v / total for v in values]
        try:
            return make_spectrum(values)
        except NegativeEntry as exc:
            raise StateFileError(self.name, str(exc), exc.index + 1) from None
        except SumNotOne as exc:
            raise StateFileError(self.name, str(exc)) from None


def _tokens_from_lines(source: str, text: str) -> tuple[str, ...]:
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line.split()) != 1:
            raise StateFileError(
                source, f"expected one coefficient per line, got {line!r}", lineno
            )
        tokens.append(line)
    if not tokens:
        raise StateFileError(source, "no coefficients found")
    return tuple(tokens)


def _tokens_from_json(source: str, text: str) -> tuple[str, ...]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(source, f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, list) or not data:
        raise StateFileError(source, "JSON input must be a non-empty list")
    tokens = []
    for position, item in enumerate(data, start=1):
        if isinstance(item, bool) or not isinstance(item, (str, int, float)):
            raise StateFileError(
                source, f"element {position} is not a number or string: {item!r}"
            )
        # Floats written by json are decimal literals; going through str()
        # preserves their decimal reading exactly.
        tokens.append(item if isinstance(item, str) else str(item))
    return tuple(tokens)


def read_state(path_or_name: str, mode: str = "probabilities") -> StateFile:
    """Read a state file, falling back to the bundled catalog by name."""
    if os.path.exists(path_or_name):
        try:
            with open(path_or_name, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise StateFileError(path_or_name, f"cannot read: {exc}") from None
        if text.lstrip().startswith("["):
            tokens = _tokens_from_json(path_or_name, text)
        else:
            tokens = _tokens_from_lines(path_or_name, text)
        return StateFile(path_or_name, tokens, mode)
    if path_or_name in CATALOG:
        return StateFile(path_or_name, CATALOG[path_or_name], mode)
    raise StateFileError(
        path_or_name, "no such file, and not a bundled fixture name"
    )


def load_state(
    path_or_name: str, *, amplitudes: bool = False, normalize: bool = False
) -> SchmidtSpectrum:
    """One-call convenience: read and convert to a spectrum."""
    mode = "amplitudes" if amplitudes else "probabilities"
    return read_state(path_or_name, mode).to_spectrum(normalize=normalize)
