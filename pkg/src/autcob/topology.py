"""Finite topological spaces, their open-set lattices, and T-automata.

A space is stored by its minimal-open basis U_x (the smallest open set
containing x).  Spaces are required to be minimal: distinct points have
distinct minimal opens.  The lattice of open sets is a distributive
lattice under union and intersection, and every lattice endomorphism that
respects unions is determined by its values on the U_x, subject to
monotonicity.  A T-automaton runs letters as such endomorphisms, with an
open initial set and a closed accepting set; for a discrete space this is
exactly a nondeterministic finite automaton.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .automaton import Nfa, as_word
from .errors import CapacityError

OPENS_CAP = 1 << 16

_FINTOP_KEYS = {"points", "min_open"}
_TAUT_KEYS = {"points", "min_open", "initial_open", "accepting_closed", "letters"}


@dataclass(frozen=True)
class FinTop:
    """Finite minimal topological space given by its minimal-open basis."""

    points: tuple
    min_open: dict

    def __post_init__(self):
        object.__setattr__(
            self, "min_open", {x: frozenset(u) for x, u in self.min_open.items()}
        )
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise ValueError("duplicate point ids")
        if set(self.min_open) != pts:
            raise ValueError("min_open must be defined exactly on the points")
        for x, u in self.min_open.items():
            if x not in u:
                raise ValueError(f"{x} is missing from its own minimal open")
            if not u <= pts:
                raise ValueError(f"minimal open of {x} leaves the space")
        for x in self.points:
            for y in self.min_open[x]:
                if not self.min_open[y] <= self.min_open[x]:
                    raise ValueError(
                        f"basis is inconsistent: {y} in U_{x} but U_{y} not inside U_{x}"
                    )
        seen = {}
        for x in self.points:
            u = self.min_open[x]
            if u in seen:
                raise ValueError(
                    f"space is not minimal: {seen[u]} and {x} share a minimal open"
                )
            seen[u] = x

    @classmethod
    def make(cls, points, min_open) -> FinTop:
        return cls(tuple(points), dict(min_open))

    @classmethod
    def discrete(cls, points) -> FinTop:
        return cls.make(points, {x: {x} for x in points})

    def min_open_of(self, x) -> frozenset:
        """Smallest open set containing x."""
        if x not in self.min_open:
            raise ValueError(f"unknown point {x!r}")
        return self.min_open[x]

    @cached_property
    def _closures(self) -> dict:
        return {
            x: frozenset(y for y in self.points if x in self.min_open[y])
            for x in self.points
        }

    def closure_of(self, x) -> frozenset:
        """Smallest closed set containing x."""
        if x not in self.min_open:
            raise ValueError(f"unknown point {x!r}")
        return self._closures[x]

    def is_open(self, members) -> bool:
        s = frozenset(members)
        unknown = s - set(self.points)
        if unknown:
            raise ValueError(f"unknown points {sorted(unknown)}")
        return all(self.min_open[x] <= s for x in s)

    def is_closed(self, members) -> bool:
        return self.is_open(set(self.points) - frozenset(members))

    def open_set(self, members) -> OpenSet:
        return OpenSet(self, frozenset(members))

    def opens(self, cap: int = OPENS_CAP) -> list:
        """Every open set, smallest first.  Refuses to enumerate more than
        ``cap`` sets."""
        found = {frozenset()}
        for x in self.points:
            u = self.min_open[x]
            found |= {o | u for o in found}
            if len(found) > cap:
                raise CapacityError(f"more than {cap} open sets")
        ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
        return [OpenSet(self, s) for s in ordered]

    def dual(self) -> FinTop:
        """Same points; open sets of the dual are the closed sets."""
        return FinTop.make(self.points, {x: self.closure_of(x) for x in self.points})

    # -- JSON ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "points": list(self.points),
            "min_open": {x: sorted(self.min_open[x]) for x in self.points},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> FinTop:
        _expect_keys(data, _FINTOP_KEYS, "space")
        return cls.make(data["points"], data["min_open"])

    @classmethod
    def from_json(cls, text: str) -> FinTop:
        return cls.from_json_dict(json.loads(text))


def _expect_keys(data, keys, what):
    if not isinstance(data, dict):
        raise ValueError(f"{what} JSON must be an object")
    extra = set(data) - keys
    if extra:
        raise ValueError(f"unknown keys {sorted(extra)}")
    missing = keys - set(data)
    if missing:
        raise ValueError(f"missing keys {sorted(missing)}")


@dataclass(frozen=True)
class OpenSet:
    """An open subset of a fixed space; meet is intersection, join is union."""

    space: FinTop
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if not self.space.is_open(self.members):
            raise ValueError(f"{sorted(self.members)} is not open")

    def _same_space(self, other: OpenSet):
        if self.space != other.space:
            raise ValueError("open sets live on different spaces")

    def meet(self, other: OpenSet) -> OpenSet:
        self._same_space(other)
        return OpenSet(self.space, self.members & other.members)

    def join(self, other: OpenSet) -> OpenSet:
        self._same_space(other)
        return OpenSet(self.space, self.members | other.members)

    __and__ = meet
    __or__ = join

    def __bool__(self):
        return bool(self.members)

    def __le__(self, other: OpenSet) -> bool:
        self._same_space(other)
        return self.members <= other.members


def comult(u: OpenSet) -> list:
    """Boolean tensor expansion of the comultiplication: the pairs
    (U_x, U_x) over the minimal opens inside u."""
    space = u.space
    return [
        (OpenSet(space, space.min_open_of(x)), OpenSet(space, space.min_open_of(x)))
        for x in space.points
        if space.min_open_of(x) <= u.members
    ]


def counit(u: OpenSet) -> bool:
    return bool(u.members)


def reduce_space(points, min_open) -> FinTop:
    """Merge points with identical minimal opens, keeping the first of each
    class, and restrict the basis accordingly."""
    min_open = {x: frozenset(u) for x, u in min_open.items()}
    keep = []
    seen = set()
    for x in points:
        u = min_open[x]
        if u not in seen:
            seen.add(u)
            keep.append(x)
    kept = set(keep)
    return FinTop.make(keep, {x: min_open[x] & kept for x in keep})


def space_from_preorder(points, pairs) -> FinTop:
    """Space of the preorder generated by ``pairs`` (x <= y meaning x lies
    in every open set containing y), reduced to a minimal space."""
    points = list(points)
    below = {x: {x} for x in points}
    for x, y in pairs:
        below[y].add(x)
    changed = True
    while changed:  # transitive closure
        changed = False
        for y in points:
            grow = set()
            for x in below[y]:
                grow |= below[x]
            if not grow <= below[y]:
                below[y] |= grow
                changed = True
    return reduce_space(points, below)


def minimal_spaces(n: int) -> list:
    """All minimal spaces on n points, one per homeomorphism class."""
    pts = tuple(f"x{i}" for i in range(n))
    off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    out = []
    for bits in range(1 << len(off_diag)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(off_diag):
            if bits >> b & 1:
                rel[i][j] = True
        if any(rel[i][j] and rel[j][i] for i, j in off_diag):
            continue  # antisymmetry
        if any(
            rel[i][j] and rel[j][k] and not rel[i][k]
            for i in range(n)
            for j in range(n)
            for k in range(n)
        ):
            continue  # transitivity
        canon = min(
            tuple(sorted((p[i], p[j]) for i, j in off_diag if rel[i][j]))
            for p in permutations(range(n))
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(
            FinTop.make(pts, {pts[j]: {pts[i] for i in range(n) if rel[i][j]} for j in range(n)})
        )
    return out


# -- endomorphisms and T-automata -------------------------------------------


def endo_violations(space: FinTop, image: dict) -> list:
    """Why ``image`` fails to define a union-respecting endomorphism;
    empty when valid."""
    bad = []
    for x in space.points:
        if x not in image:
            bad.append(f"no image for {x}")
    for x in space.points:
        u = image.get(x)
        if u is None:
            continue
        if not space.is_open(u):
            bad.append(f"image of U_{x} is not open")
    for x in space.points:
        for y in space.min_open_of(x):
            if y == x or x not in image or y not in image:
                continue
            if not frozenset(image[y]) <= frozenset(image[x]):
                bad.append(f"monotonicity fails on the pair ({y}, {x})")
    return bad


def endo_validate(space: FinTop, image: dict) -> bool:
    return not endo_violations(space, image)


@dataclass(frozen=True)
class Endo:
    """Union-respecting endomorphism of the open-set lattice, stored by its
    values on the minimal opens: image[x] = T(U_x)."""

    space: FinTop
    image: dict

    def __post_init__(self):
        object.__setattr__(
            self, "image", {x: frozenset(u) for x, u in self.image.items()}
        )
        if set(self.image) - set(self.space.points):
            raise ValueError("image defined on unknown points")
        bad = endo_violations(self.space, self.image)
        if bad:
            raise ValueError("; ".join(bad))

    @classmethod
    def identity(cls, space: FinTop) -> Endo:
        return cls(space, {x: space.min_open_of(x) for x in space.points})

    def apply(self, members) -> frozenset:
        """Image of an open set: the union of T(U_x) over its points."""
        members = frozenset(members)
        if not self.space.is_open(members):
            raise ValueError(f"{sorted(members)} is not open")
        out = frozenset()
        for x in members:
            out |= self.image[x]
        return out

    def then(self, other: Endo) -> Endo:
        """First self, then other."""
        if self.space != other.space:
            raise ValueError("endomorphisms live on different spaces")
        return Endo(self.space, {x: other.apply(self.image[x]) for x in self.space.points})

    def power(self, n: int) -> Endo:
        out = Endo.identity(self.space)
        for _ in range(n):
            out = out.then(self)
        return out

    def trace(self) -> bool:
        """True iff x lies in T(U_x) for some point x."""
        return any(x in self.image[x] for x in self.space.points)


@dataclass(frozen=True)
class TAutomaton:
    """(space, initial open set, accepting closed set, letter endomorphisms)."""

    space: FinTop
    alphabet: tuple
    initial_open: frozenset
    accepting_closed: frozenset
    letters: dict

    def __post_init__(self):
        object.__setattr__(self, "initial_open", frozenset(self.initial_open))
        object.__setattr__(self, "accepting_closed", frozenset(self.accepting_closed))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters")
        if not self.space.is_open(self.initial_open):
            raise ValueError("initial set is not open")
        if not self.space.is_closed(self.accepting_closed):
            raise ValueError("accepting set is not closed")
        if set(self.letters) != set(self.alphabet):
            raise ValueError("letters must cover the alphabet exactly")
        for a, t in self.letters.items():
            if t.space != self.space:
                raise ValueError(f"endomorphism for {a!r} lives on a different space")

    @classmethod
    def make(cls, space, alphabet, initial_open, accepting_closed, letters) -> TAutomaton:
        letters = {
            a: t if isinstance(t, Endo) else Endo(space, t) for a, t in letters.items()
        }
        return cls(space, tuple(alphabet), frozenset(initial_open),
                   frozenset(accepting_closed), letters)

    @classmethod
    def bare(cls, space: FinTop) -> TAutomaton:
        """No letters, empty decorations; enough to evaluate foam diagrams."""
        return cls(space, (), frozenset(), frozenset(), {})

    def letter(self, a) -> Endo:
        if a not in self.letters:
            raise KeyError(f"unknown letter {a!r}")
        return self.letters[a]

    def word_endo(self, w) -> Endo:
        out = Endo.identity(self.space)
        for a in as_word(w):
            out = out.then(self.letter(a))
        return out

    def interval_eval(self, w) -> bool:
        """True iff the accepting set meets the image of the initial set."""
        s = self.initial_open
        for a in as_word(w):
            s = self.letter(a).apply(s)
        return bool(s & self.accepting_closed)

    def trace_eval(self, w) -> bool:
        """True iff x lies in the word image of U_x for some point x."""
        return self.word_endo(w).trace()

    # -- JSON ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        d = self.space.to_json_dict()
        d["initial_open"] = sorted(self.initial_open)
        d["accepting_closed"] = sorted(self.accepting_closed)
        d["letters"] = {
            a: {x: sorted(self.letters[a].image[x]) for x in self.space.points}
            for a in self.alphabet
        }
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_dict(), **kw)

    @classmethod
    def from_json_dict(cls, data: dict) -> TAutomaton:
        _expect_keys(data, _TAUT_KEYS, "T-automaton")
        space = FinTop.make(data["points"], data["min_open"])
        return cls.make(
            space,
            list(data["letters"]),
            data["initial_open"],
            data["accepting_closed"],
            data["letters"],
        )

    @classmethod
    def from_json(cls, text: str) -> TAutomaton:
        return cls.from_json_dict(json.loads(text))


def discrete(nfa: Nfa) -> TAutomaton:
    """The automaton seen as a T-automaton on the discrete space of its
    states; evaluations agree with the Boolean matrix ones."""
    space = FinTop.discrete(nfa.states)
    letters = {
        a: Endo(space, {q: nfa.successors([q], a) for q in nfa.states})
        for a in nfa.alphabet
    }
    return TAutomaton.make(space, nfa.alphabet, nfa.initial, nfa.accepting, letters)
