"""Backend selection and helpers for exact rank computation.

At import time the compiled echelon kernel is preferred; the pure-Python
implementation is the fallback. ``PICALB_BACKEND=pure`` or ``=compiled``
forces the choice (the latter fails loudly if the extension is absent,
which is what you want in a benchmark).

All rank computations route through here so that a single kernel swap
covers the whole package.
"""

import os
from math import lcm

_forced = os.environ.get("PICALB_BACKEND")

if _forced == "pure":
    from picalb._echelon import echelon_leads

    BACKEND = "pure"
elif _forced == "compiled":
    from picalb._echelon_c import echelon_leads  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from picalb._echelon_c import echelon_leads  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from picalb._echelon import echelon_leads  # type: ignore[no-redef]

        BACKEND = "pure"


def integer_rank(rows, ncols):
    """Rank over the rationals of a matrix of Python ints."""
    return len(echelon_leads(rows, ncols))


def clear_denominators(row):
    """Scale a row of Fractions to coprime ints (rank-preserving)."""
    scale = 1
    for c in row:
        scale = lcm(scale, c.denominator)
    return [int(c.numerator * (scale // c.denominator)) for c in row]


def rational_rank(rows, ncols):
    """Rank over the rationals of a matrix of Fractions."""
    return integer_rank([clear_denominators(r) for r in rows], ncols)
