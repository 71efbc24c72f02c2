"""
Ideal files: UTF-8, one generator per line, either ``x1*x3*x5`` or ``1 3 5``.

Blank lines and lines starting with ``#`` are skipped; both notations may not
appear in the same file. Indices are 1-based.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import List
from typing import Optional
from typing import Tuple

from hilbert_depth import LOGGER
from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import DomainError
from hilbert_depth.exceptions import IdealParseError
from hilbert_depth.use_cases.ideal_operations import minimalize
from hilbert_depth.use_cases.interface.ideal_reader_interface import IdealReaderInterface

_VARIABLE = re.compile(r"^x(\d+)$")
_INDEX = re.compile(r"^\d+$")


def _parse_line(line: str, line_number: int, n: int) -> Tuple[str, List[int]]:
    if "x" in line:
        notation = "variables"
        tokens = [token.strip() for token in line.split("*")]
        matches = [_VARIABLE.match(token) for token in tokens]
        if not all(matches):
            bad = next(token for token, match in zip(tokens, matches) if not match)
            raise IdealParseError(f"malformed variable {bad!r}", line_number, line)
        indices = [int(match[1]) for match in matches]
    else:
        notation = "indices"
        tokens = line.split()
        bad = next((token for token in tokens if not _INDEX.match(token)), None)
        if bad is not None:
            raise IdealParseError(f"malformed index {bad!r}", line_number, line)
        indices = [int(token) for token in tokens]
    for index in indices:
        if not 1 <= index <= n:
            raise IdealParseError(f"variable index {index} outside 1..{n}", line_number, line)
    if len(set(indices)) != len(indices):
        raise IdealParseError("a variable repeats inside one monomial", line_number, line)
    return notation, indices


def parse_ideal(text: str, n: int) -> SquarefreeIdeal:
    """Parse an ideal file body and return the minimalized ideal."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    notation: Optional[str] = None
    supports: List[List[int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        line_notation, indices = _parse_line(line, line_number, n)
        if notation is not None and line_notation != notation:
            raise IdealParseError(f"{line_notation} mixed with {notation} in one file", line_number, line)
        notation = line_notation
        supports.append(indices)
    ideal = minimalize(n, supports)
    LOGGER.debug(f"parsed {len(supports)} generators, {len(ideal.generators)} after minimalization")
    return ideal


class IdealFileReader(IdealReaderInterface):
    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def parse(self, text: str, n: int) -> SquarefreeIdeal:
        return parse_ideal(text, n)

    def read(self, path: Path, n: int) -> SquarefreeIdeal:
        try:
            text = Path(path).read_text(encoding=self.encoding)
        except UnicodeDecodeError as error:
            raise IdealParseError(f"{path} is not valid {self.encoding}: {error.reason}", 0) from error
        return self.parse(text, n)
