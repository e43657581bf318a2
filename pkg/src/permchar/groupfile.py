"""The plain-text group format.

Comment lines start with '#'. The first significant line is
``degree <d>``; every following significant line is ``gen <d images>``
with 0-based images forming a bijection. Trailing whitespace is ignored.
Parse errors carry the offending line number.
"""

from __future__ import annotations

from .errors import UsageError
from .groups import Permutation

__all__ = ["parse_group_text", "serialize_group"]


def parse_group_text(text: str):
    """Returns (degree, [image tuples]). An empty generator list (trivial
    group) is legal."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if degree is None:
            if parts[0] != "degree" or len(parts) != 2:
                raise UsageError(
                    "line %d: expected 'degree <d>', got %r" % (lineno, raw)
                )
            try:
                degree = int(parts[1])
            except ValueError:
                raise UsageError(
                    "line %d: malformed integer %r" % (lineno, parts[1])
                ) from None
            if degree < 1:
                raise UsageError("line %d: degree must be >= 1" % (lineno,))
            continue
        if parts[0] != "gen":
            raise UsageError("line %d: expected 'gen <images>', got %r" % (lineno, raw))
        try:
            images = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise UsageError("line %d: malformed integer in %r" % (lineno, raw)) from None
        if len(images) != degree:
            raise UsageError(
                "line %d: expected %d images, got %d" % (lineno, degree, len(images))
            )
        if sorted(images) != list(range(degree)):
            raise UsageError("line %d: images are not a bijection" % (lineno,))
        gens.append(images)
    if degree is None:
        raise UsageError("no 'degree' line found")
    return degree, gens


def serialize_group(degree: int, generators, header: str | None = None) -> str:
    """Inverse of parse_group_text; generators may be Permutations or
    image tuples."""
    lines = []
    if header:
        for part in header.splitlines():
            lines.append("# " + part)
    lines.append("degree %d" % degree)
    for g in generators:
        images = g.images if isinstance(g, Permutation) else tuple(g)
        lines.append("gen " + " ".join(str(i) for i in images))
    return "\n".join(lines) + "\n"
