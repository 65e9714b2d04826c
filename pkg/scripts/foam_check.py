#!/usr/bin/env python3
"""Exhaustive foam-law check over small open-set lattices.

Enumerates every minimal finite space up to a given point count (one per
homeomorphism class), evaluates the algebra, coalgebra, duality and
split-merge diagrams on each, and samples random closed foams, which must
all evaluate to 1.  Usage: foam_check.py [max_points] [foams_per_space]
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from autcob import (  # noqa: E402
    Diagram,
    TAutomaton,
    eval_tautomaton,
    identity_diagram,
    merge_on_minus,
    minimal_spaces,
    split_on_minus,
)
from autcob.diagrams import COUNIT, MERGE, SPLIT, UNIT, ident, swap  # noqa: E402

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from util import random_closed_diagram  # noqa: E402


def ev(space, diagram):
    return eval_tautomaton(TAutomaton.bare(space), diagram).matrix


LAWS = {
    "associativity": (
        Diagram.make([[MERGE, ident("+")], [MERGE]], domain=("+", "+", "+")),
        Diagram.make([[ident("+"), MERGE], [MERGE]], domain=("+", "+", "+")),
    ),
    "commutativity": (
        Diagram.make([[swap("+", "+")], [MERGE]], domain=("+", "+")),
        Diagram.make([[MERGE]], domain=("+", "+")),
    ),
    "unit": (
        Diagram.make([[UNIT, ident("+")], [MERGE]], domain=("+",)),
        identity_diagram(("+",)),
    ),
    "coassociativity": (
        Diagram.make([[SPLIT], [SPLIT, ident("+")]], domain=("+",)),
        Diagram.make([[SPLIT], [ident("+"), SPLIT]], domain=("+",)),
    ),
    "counit": (
        Diagram.make([[SPLIT], [COUNIT, ident("+")]], domain=("+",)),
        identity_diagram(("+",)),
    ),
    "split-merge": (
        Diagram.make([[SPLIT], [MERGE]], domain=("+",)),
        identity_diagram(("+",)),
    ),
}


def main(max_points=4, foams_per_space=10):
    rng = random.Random(0)
    spaces = [s for n in range(1, max_points + 1) for s in minimal_spaces(n)]
    print(f"{len(spaces)} spaces with at most {max_points} points")
    for name, (lhs, rhs) in LAWS.items():
        bad = [s for s in spaces if ev(s, lhs) != ev(s, rhs)]
        print(f"  {name:16s} {'ok' if not bad else f'FAILS on {len(bad)} spaces'}")
    bad = [
        s
        for s in spaces
        if ev(s, merge_on_minus()) != ev(s.dual(), Diagram.make([[MERGE]]))
        or ev(s, split_on_minus()) != ev(s.dual(), Diagram.make([[SPLIT]]))
    ]
    print(f"  {'duality':16s} {'ok' if not bad else f'FAILS on {len(bad)} spaces'}")
    closed_ok = 0
    total = 0
    for space in spaces:
        for _ in range(foams_per_space):
            foam = random_closed_diagram(rng, foam=True, endpoints=False)
            total += 1
            closed_ok += eval_tautomaton(TAutomaton.bare(space), foam).scalar()
    print(f"  closed foams     {closed_ok}/{total} evaluate to 1")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
