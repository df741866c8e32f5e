"""Closed-form upper bounds on the cop number of graphs embeddable in a
fixed surface, and the comparison table for non-orientable genus.

All bounds are integers; real-valued formulas are floored since cop
numbers are integers.  The sharpened orientable values at genus 0 and 2
live in one table so every consumer agrees on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ORIENTABLE_METHODS = ("quilliot", "schroder")
NONORIENTABLE_METHODS = ("andreae", "nowakowski_schroder", "this_paper")

# exact sphere value and the sharpened double-torus value
_SCHRODER_SPECIAL = {0: 3, 2: 5}


def orientable_upper_bound(g: int, method: str = "schroder") -> int:
    """Upper bound on the cop number of graphs of orientable genus g."""
    if g < 0:
        raise ValueError("orientable genus must be non-negative")
    if method == "quilliot":
        return 2 * g + 3
    if method == "schroder":
        if g in _SCHRODER_SPECIAL:
            return _SCHRODER_SPECIAL[g]
        return (3 * g) // 2 + 3
    raise ValueError(f"method must be one of {ORIENTABLE_METHODS}, got {method!r}")


def nonorientable_upper_bound(g: int, method: str = "this_paper") -> int:
    """Upper bound on the cop number of graphs of non-orientable genus g."""
    if g < 1:
        raise ValueError("non-orientable genus starts at 1")
    if method == "andreae":
        # floor(7/2 + sqrt(6g + 1/4)) = (7 + isqrt(24g + 1)) // 2
        return math.comb((7 + math.isqrt(24 * g + 1)) // 2, 2)
    if method == "nowakowski_schroder":
        return 2 * g + 1
    if method == "this_paper":
        return orientable_upper_bound(g - 1, "schroder")
    raise ValueError(
        f"method must be one of {NONORIENTABLE_METHODS}, got {method!r}"
    )


@dataclass(frozen=True)
class BoundsRow:
    g: int
    ns_bound: int
    here_bound: int


def bounds_table(max_g: int) -> tuple[BoundsRow, ...]:
    """Comparison rows (genus, previous bound 2g+1, bound proved here) for
    non-orientable genus 1..max_g."""
    if max_g < 1:
        raise ValueError("max_g must be at least 1")
    return tuple(
        BoundsRow(
            g,
            nonorientable_upper_bound(g, "nowakowski_schroder"),
            nonorientable_upper_bound(g, "this_paper"),
        )
        for g in range(1, max_g + 1)
    )


def bounds_table_csv(max_g: int) -> str:
    lines = ["genus,nowakowski_schroder,here"]
    for row in bounds_table(max_g):
        lines.append(f"{row.g},{row.ns_bound},{row.here_bound}")
    return "\n".join(lines) + "\n"


def bounds_table_json(max_g: int) -> list[dict]:
    return [
        {"genus": row.g, "nowakowski_schroder": row.ns_bound, "here": row.here_bound}
        for row in bounds_table(max_g)
    ]
