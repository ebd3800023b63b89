"""Pure-Python exact row reduction over the integers.

This is the reference implementation of the rank kernel; the compiled
twin in ``_echelon_c`` runs the identical algorithm. Rows are lists of
Python ints. The reducer keeps at most one pivot row per leading column
and returns the sorted leading columns; the rank is their count. After
every combination step the row is divided by the gcd of its entries,
which bounds coefficient growth without leaving exact arithmetic.
"""

from math import gcd


def echelon_leads(rows, ncols):
    """Leading columns of a row-echelon basis for the span of ``rows``.

    Any exact elimination order yields the same leading-column set, so
    the result (and in particular its length, the rank) is well defined.
    """
    pivots = {}
    for source in rows:
        row = list(source)
        lead = _first_nonzero(row, 0, ncols)
        while lead >= 0:
            piv = pivots.get(lead)
            if piv is None:
                _normalize(row, lead, ncols)
                pivots[lead] = row
                break
            a = piv[lead]
            b = row[lead]
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            for j in range(lead, ncols):
                row[j] = ma * row[j] - mb * piv[j]
            _normalize(row, lead + 1, ncols)
            lead = _first_nonzero(row, lead + 1, ncols)
    return sorted(pivots)


def _first_nonzero(row, start, ncols):
    for j in range(start, ncols):
        if row[j] != 0:
            return j
    return -1


def _normalize(row, start, ncols):
    # Divide row[start:] by the gcd of its entries and make the first
    # nonzero entry positive. Exact divisions only.
    g = 0
    first = -1
    for j in range(start, ncols):
        v = row[j]
        if v:
            if first < 0:
                first = j
            g = gcd(g, v)
            if g == 1:
                break
    if first < 0:
        return
    if row[first] < 0:
        g = -g
    if g != 1:
        for j in range(first, ncols):
            row[j] //= g
