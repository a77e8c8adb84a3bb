"""Integer winding numbers by ray crossing with exact orientation signs."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegeneratePositionError, DomainError
from ..geometry.predicates import point_segment_distance
from ..geometry.scene import TAU


def _orient_sign(a, b, z) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    v = (Fraction(b[0]) - ax) * (Fraction(z[1]) - ay) - (Fraction(b[1]) - ay) * (Fraction(z[0]) - ax)
    return (v > 0) - (v < 0)


def winding_number(path, z) -> int:
    """Signed number of turns of the closed ``path`` around ``z``.

    Counts upward crossings of the rightward ray from ``z`` with ``z`` on the
    left (+1) and downward crossings with ``z`` on the right (-1).
    """
    if not path.closed:
        raise DomainError("winding number needs a closed path")
    zx, zy = float(z[0]), float(z[1])
    total = 0
    for a, b in path.segments():
        if point_segment_distance((zx, zy), a, b) <= TAU:
            raise DegeneratePositionError(f"point {(zx, zy)} lies on the curve")
        if a[1] <= zy < b[1]:
            if _orient_sign(a, b, (zx, zy)) > 0:
                total += 1
        elif b[1] <= zy < a[1]:
            if _orient_sign(a, b, (zx, zy)) < 0:
                total -= 1
    return total


def total_winding(paths, z) -> int:
    return sum(winding_number(p, z) for p in paths)
