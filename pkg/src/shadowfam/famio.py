"""Text format for set families.

The first non-comment line is ``n k`` (``k = 0`` for mixed-size families);
every following non-comment line is one set as strictly increasing
space-separated integers.  ``#`` starts a comment line, blank lines are
ignored.  Serialization followed by parsing is the identity on canonical
families.
"""

from __future__ import annotations

from typing import TextIO

from .core import FamilyError, SetFamily, elements_of, mask_of


class ParseError(FamilyError):
    """Malformed family text; carries the 1-based offending line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_family(text: str) -> SetFamily:
    """Parse the family text format. Duplicate sets are an error."""
    header = None
    masks = []
    seen = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise ParseError("header must be exactly 'n k'", lineno)
            n, k = values
            if n < 1:
                raise ParseError(f"ground set size must be positive, got {n}", lineno)
            if not 0 <= k <= n:
                raise ParseError(f"uniformity k={k} outside [0, n={n}]", lineno)
            header = (n, k)
            continue
        n, k = header
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ParseError("elements must be strictly increasing", lineno)
        try:
            m = mask_of(values, n)
        except FamilyError as exc:
            raise ParseError(str(exc), lineno) from None
        if k and len(values) != k:
            raise ParseError(f"set of size {len(values)} in a {k}-uniform family", lineno)
        if m in seen:
            raise ParseError("duplicate set", lineno)
        seen.add(m)
        masks.append(m)
    if header is None:
        raise ParseError("missing 'n k' header", max(lineno, 1))
    n, k = header
    try:
        return SetFamily(n, k, tuple(masks))
    except FamilyError as exc:  # family-level invariant violated
        raise ParseError(str(exc), lineno) from None


def format_family(fam: SetFamily) -> str:
    """Serialize to the text format (no comments, canonical member order).

    Families containing the empty set cannot be represented (an empty line
    is ignored by the parser) and are rejected.
    """
    if 0 in fam.members:
        raise FamilyError("the text format cannot represent an empty-set member")
    lines = [f"{fam.n} {fam.k}"]
    for m in fam.members:
        lines.append(" ".join(str(e) for e in elements_of(m)))
    return "\n".join(lines) + "\n"


def read_family(stream: TextIO) -> SetFamily:
    return parse_family(stream.read())


def write_family(stream: TextIO, fam: SetFamily) -> None:
    stream.write(format_family(fam))
