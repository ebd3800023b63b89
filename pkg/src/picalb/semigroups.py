"""Numerical semigroups: membership, gap sets, conductor.

A numerical semigroup here is the set of N-linear combinations of a
finite set of positive generators. Its gap set (the missing positive
integers) is finite exactly when the generators are coprime as a set.
Gap counting is the fast path for unibranch monomial singularities: the
number of gaps of the value semigroup equals the codimension of the
local ring inside its normalization at that point, which is the local
unipotent contribution to the Picard variety.

The enumeration bound is certified constructively rather than through a
Frobenius-number formula (none exists in closed form for three or more
generators): once ``min(generators)`` consecutive integers are members,
everything above them is a member too.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, List

from picalb.errors import NonCofiniteError


class NumericalSemigroup:
    """Sub-semigroup of the nonnegative integers with finite generator set.

    Generators are deduplicated but redundant ones are kept; they do not
    change the semigroup.
    """

    __slots__ = ("generators", "_gaps", "_sieve")

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(generators))
        if not gens:
            raise ValueError("at least one generator is required")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g < 1:
                raise ValueError(f"generators must be positive integers, got {g!r}")
        self.generators = tuple(gens)
        self._gaps = None
        self._sieve = bytearray([1])  # membership table, index 0 upward

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def generator_gcd(self) -> int:
        return gcd(*self.generators)

    def _extend_sieve(self, upto: int) -> bytearray:
        sieve = self._sieve
        start = len(sieve)
        if upto >= start:
            sieve.extend(b"\x00" * (upto - start + 1))
            for n in range(start, upto + 1):
                for g in self.generators:
                    if g > n:
                        break
                    if sieve[n - g]:
                        sieve[n] = 1
                        break
        return sieve

    def is_member(self, n: int) -> bool:
        """Whether ``n`` is an N-combination of the generators. 0 always is."""
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("membership is defined for integers")
        if n < 0:
            raise ValueError("membership is defined for nonnegative integers")
        if self._gaps is not None:
            if not self._gaps or n > self._gaps[-1]:
                return True
            return n not in self._gaps
        return bool(self._extend_sieve(n)[n])

    def __contains__(self, n: int) -> bool:
        return self.is_member(n)

    def gaps(self) -> List[int]:
        """Sorted positive integers missing from the semigroup.

        Raises NonCofiniteError when the generators are not coprime as a
        set, since the gap set is infinite in that case.
        """
        if self._gaps is None:
            if self.generator_gcd() != 1:
                raise NonCofiniteError(
                    f"generators {self.generators} have gcd {self.generator_gcd()}; gap set is infinite"
                )
            m = self.multiplicity
            if m == 1:
                self._gaps = ()
            else:
                bound = self.generators[-1] * m  # covers the two-generator Frobenius bound a*b
                while True:
                    sieve = self._extend_sieve(bound)
                    run_start = self._find_member_run(sieve, m, bound)
                    if run_start >= 0:
                        break
                    bound *= 2
                self._gaps = tuple(n for n in range(1, run_start) if not sieve[n])
        return list(self._gaps)

    @staticmethod
    def _find_member_run(sieve: bytearray, length: int, bound: int) -> int:
        # First index starting `length` consecutive members; every integer
        # beyond such a run is a member (add multiples of the multiplicity).
        run = 0
        for n in range(bound + 1):
            run = run + 1 if sieve[n] else 0
            if run == length:
                return n - length + 1
        return -1

    def conductor(self) -> int:
        """Smallest c with every integer >= c a member; 0 when gap-free."""
        gaps = self.gaps()
        return gaps[-1] + 1 if gaps else 0

    def __repr__(self):
        return f"NumericalSemigroup{self.generators}"

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)
