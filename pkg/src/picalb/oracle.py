"""Seeded cross-checks between the semigroup and jet-space backends.

For unibranch monomial parametrizations the unipotent dimension has two
independent derivations: the gap count of the value semigroup and the
exact rank computation in jet space. They must agree; this module
samples random coprime exponent sets and verifies that they do, as a
standing regression against either backend drifting.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Dict, Tuple

from picalb.picard import monomial_point
from picalb.semigroups import NumericalSemigroup
from picalb.singularities import unipotent_dim_jets, unipotent_dim_semigroup


def sample_exponents(rng: random.Random, max_exponent: int = 12) -> Tuple[int, ...]:
    """A random exponent tuple (2 or 3 entries, coprime as a set)."""
    while True:
        count = rng.choice((2, 2, 3))
        exps = tuple(sorted(rng.randint(1, max_exponent) for _ in range(count)))
        if gcd(*exps) == 1:
            return exps


def run_equivalence_trials(trials: int, seed: int, max_exponent: int = 12) -> Dict[str, object]:
    """Compare the two backends on ``trials`` random monomial points."""
    if trials < 1:
        raise ValueError("at least one trial is required")
    rng = random.Random(seed)
    cases = []
    all_agree = True
    for _ in range(trials):
        exps = sample_exponents(rng, max_exponent)
        semigroup = NumericalSemigroup(exps)
        # Enough data for the stability ladder, and for every coordinate
        # monomial to stay visible at this truncation.
        order = max(2 * semigroup.conductor() + 4, max(exps) + 3)
        point = monomial_point("trial", exps, order)
        via_gaps = len(semigroup.gaps())
        via_semigroup = unipotent_dim_semigroup(point)
        via_jets = unipotent_dim_jets(point)
        agree = via_gaps == via_semigroup == via_jets
        all_agree = all_agree and agree
        cases.append(
            {
                "exponents": list(exps),
                "gap_count": via_gaps,
                "semigroup": via_semigroup,
                "jets": via_jets,
                "agree": agree,
            }
        )
    return {"trials": trials, "seed": seed, "all_agree": all_agree, "cases": cases}
