# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_echelon``.

Same algorithm, same results; the speedup comes from C-level loop and
dispatch overhead, while the arithmetic itself stays on arbitrary
precision Python ints (fixed-width ints would overflow on the rational
blowup that exact elimination can produce).
"""

from math import gcd


def echelon_leads(rows, Py_ssize_t ncols):
    """Leading columns of a row-echelon basis for the span of ``rows``."""
    cdef dict pivots = {}
    cdef list row, piv
    cdef Py_ssize_t lead, j
    cdef object a, b, g, ma, mb, hit
    for source in rows:
        row = list(source)
        lead = _first_nonzero(row, 0, ncols)
        while lead >= 0:
            hit = pivots.get(lead)
            if hit is None:
                _normalize(row, lead, ncols)
                pivots[lead] = row
                break
            piv = <list> hit
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


cdef Py_ssize_t _first_nonzero(list row, Py_ssize_t start, Py_ssize_t ncols):
    cdef Py_ssize_t j
    for j in range(start, ncols):
        if row[j] != 0:
            return j
    return -1


cdef void _normalize(list row, Py_ssize_t start, Py_ssize_t ncols):
    cdef Py_ssize_t j, first = -1
    cdef object g = 0, v
    for j in range(start, ncols):
        v = row[j]
        if v != 0:
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
            row[j] = row[j] // g
