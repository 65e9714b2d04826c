"""Nondeterministic finite automata as Boolean linear algebra.

An automaton is a labelled oriented graph on interned string ids.  Letter
matrices follow the order of the ``states`` tuple; the matrix of a word is
the ordered product M(a1) @ ... @ M(an).  Interval evaluation asks for a
path from an initial to an accepting state spelling the word; trace
evaluation asks for a closed walk, i.e. the Boolean trace of the word
matrix, and is invariant under rotation of the word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .semiring import BOOL, Mat, Semiring, identity

Word = tuple  # tuple of letter strings


def as_word(w) -> Word:
    """Coerce a word given as a string (one letter per char), a sequence of
    letters, or a CircularWord."""
    if isinstance(w, CircularWord):
        return w.letters
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def rotations(w) -> list:
    word = as_word(w)
    if not word:
        return [word]
    return [word[i:] + word[:i] for i in range(len(word))]


def canonical_rotation(w) -> Word:
    return min(rotations(w))


@dataclass(frozen=True)
class CircularWord:
    """A word up to rotation, stored as its lexicographically least rotation."""

    letters: Word

    def __post_init__(self):
        object.__setattr__(self, "letters", canonical_rotation(as_word(self.letters)))

    def rotations(self) -> list:
        return rotations(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


_NFA_KEYS = {"states", "alphabet", "transitions", "initial", "accepting"}
_TRANSITION_KEYS = {"from", "letter", "to"}


@dataclass(frozen=True)
class Nfa:
    """(states, alphabet, transitions, initial set, accepting set).

    The empty automaton (no states) is legal; both of its languages are
    empty, including on the empty word.
    """

    states: tuple
    alphabet: tuple
    delta: frozenset
    initial: frozenset
    accepting: frozenset

    def __post_init__(self):
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state ids")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters")
        states = set(self.states)
        letters = set(self.alphabet)
        for q, a, r in self.delta:
            if q not in states or r not in states:
                raise ValueError(f"transition ({q}, {a}, {r}) uses unknown state")
            if a not in letters:
                raise ValueError(f"transition ({q}, {a}, {r}) uses unknown letter")
        for name, group in (("initial", self.initial), ("accepting", self.accepting)):
            unknown = group - states
            if unknown:
                raise ValueError(f"{name} set contains unknown states {sorted(unknown)}")

    @classmethod
    def make(cls, states, alphabet, delta, initial=(), accepting=()) -> Nfa:
        return cls(
            tuple(states),
            tuple(alphabet),
            frozenset(tuple(t) for t in delta),
            frozenset(initial),
            frozenset(accepting),
        )

    # -- structure ---------------------------------------------------------

    @cached_property
    def _index(self) -> dict:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def _succ(self) -> dict:
        table = {}
        for q, a, r in self.delta:
            table.setdefault((q, a), set()).add(r)
        return {k: frozenset(v) for k, v in table.items()}

    def successors(self, sources: Iterable, a) -> frozenset:
        if a not in self.alphabet:
            raise KeyError(f"unknown letter {a!r}")
        out = set()
        for q in sources:
            out |= self._succ.get((q, a), frozenset())
        return frozenset(out)

    def renamed(self, fn) -> Nfa:
        return Nfa.make(
            [fn(q) for q in self.states],
            self.alphabet,
            [(fn(q), a, fn(r)) for q, a, r in self.delta],
            [fn(q) for q in self.initial],
            [fn(q) for q in self.accepting],
        )

    # -- matrices ----------------------------------------------------------

    def letter_matrix(self, a, ring: Semiring = BOOL) -> Mat:
        """M[q][r] = 1 iff r is an a-successor of q, rows in states order."""
        if a not in self.alphabet:
            raise KeyError(f"unknown letter {a!r}")
        n = len(self.states)
        ent = [ring.zero] * (n * n)
        idx = self._index
        for q, b, r in self.delta:
            if b == a:
                ent[idx[q] * n + idx[r]] = ring.one
        return Mat(ring, n, n, tuple(ent))

    def word_matrix(self, w, ring: Semiring = BOOL) -> Mat:
        m = identity(ring, len(self.states))
        for a in as_word(w):
            m = m @ self.letter_matrix(a, ring)
        return m

    # -- evaluations -------------------------------------------------------

    def interval_eval(self, w) -> bool:
        """True iff some path spelling w runs from an initial to an
        accepting state."""
        frontier = self.initial
        for a in as_word(w):
            frontier = self.successors(frontier, a)
        return bool(frontier & self.accepting)

    def trace_eval(self, w) -> bool:
        """True iff some state carries a closed walk spelling w."""
        m = self.word_matrix(w)
        n = len(self.states)
        return any(m.entries[i * n + i] for i in range(n))

    def circular_through_subset(self, marked, w) -> bool:
        """True iff some cyclic path spelling w (up to rotation) visits a
        marked state."""
        marked = frozenset(marked)
        unknown = marked - set(self.states)
        if unknown:
            raise ValueError(f"unknown states {sorted(unknown)}")
        word = as_word(w)
        if not word:
            return bool(marked)
        n = len(self.states)
        idx = self._index
        for rot in set(rotations(word)):
            m = self.word_matrix(rot)
            if any(m.entries[idx[q] * n + idx[q]] for q in marked):
                return True
        return False

    # -- language prefixes -------------------------------------------------

    def interval_language(self, max_len: int) -> set:
        """All accepted words of length <= max_len (as letter tuples)."""
        out = set()

        def walk(word, frontier):
            if frontier & self.accepting:
                out.add(word)
            if len(word) == max_len or not frontier:
                return
            for a in self.alphabet:
                walk(word + (a,), self.successors(frontier, a))

        walk((), self.initial)
        return out

    def trace_language(self, max_len: int) -> set:
        """All words of length <= max_len carried by some closed walk."""
        n = len(self.states)
        mats = {a: self.letter_matrix(a) for a in self.alphabet}
        out = set()

        def diag(m):
            return any(m.entries[i * n + i] for i in range(n))

        def walk(word, m):
            if diag(m):
                out.add(word)
            if len(word) == max_len:
                return
            for a in self.alphabet:
                walk(word + (a,), m @ mats[a])

        walk((), identity(BOOL, n))
        return out

    # -- constructions -----------------------------------------------------

    def trim(self) -> Nfa:
        """Keep only states on an initial-to-accepting path or on an
        oriented loop; drop transitions leaving that core.

        Both evaluations are preserved on every word.
        """
        fwd = self._reach(self.initial)
        bwd = self._coreach(self.accepting)
        on_path = fwd & bwd
        on_loop = {q for q in self.states if q in self._reach(self._out(q))}
        core = on_path | on_loop
        if not core and self.states:
            # a nonempty automaton always traces the empty word, the empty
            # one never does; keep a single bare state so both evaluations
            # survive even when nothing accepts and nothing loops
            core = {self.states[0]}
        return Nfa.make(
            [q for q in self.states if q in core],
            self.alphabet,
            [(q, a, r) for q, a, r in self.delta if q in core and r in core],
            self.initial & core,
            self.accepting & core,
        )

    def _out(self, q) -> set:
        return {r for p, _, r in self.delta if p == q}

    def _reach(self, seeds: Iterable) -> set:
        seen = set(seeds)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for p, _, r in self.delta:
                if p == q and r not in seen:
                    seen.add(r)
                    todo.append(r)
        return seen

    def _coreach(self, seeds: Iterable) -> set:
        seen = set(seeds)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for p, _, r in self.delta:
                if r == q and p not in seen:
                    seen.add(p)
                    todo.append(p)
        return seen

    # -- JSON --------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "states": list(self.states),
            "alphabet": list(self.alphabet),
            "transitions": [
                {"from": q, "letter": a, "to": r} for q, a, r in sorted(self.delta)
            ],
            "initial": sorted(self.initial),
            "accepting": sorted(self.accepting),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_dict(), **kw)

    @classmethod
    def from_json_dict(cls, data: dict) -> Nfa:
        if not isinstance(data, dict):
            raise ValueError("automaton JSON must be an object")
        extra = set(data) - _NFA_KEYS
        if extra:
            raise ValueError(f"unknown keys {sorted(extra)}")
        missing = _NFA_KEYS - set(data)
        if missing:
            raise ValueError(f"missing keys {sorted(missing)}")
        delta = []
        for t in data["transitions"]:
            if set(t) != _TRANSITION_KEYS:
                raise ValueError(f"transition must have keys from/letter/to, got {sorted(t)}")
            delta.append((t["from"], t["letter"], t["to"]))
        return cls.make(
            data["states"], data["alphabet"], delta, data["initial"], data["accepting"]
        )

    @classmethod
    def from_json(cls, text: str) -> Nfa:
        return cls.from_json_dict(json.loads(text))


def disjoint_union(a: Nfa, b: Nfa) -> Nfa:
    """Disjointly renamed union; interval and trace languages are unions."""
    if set(a.alphabet) != set(b.alphabet):
        raise ValueError("alphabet mismatch")
    left = a.renamed(lambda q: f"{q}#0")
    right = b.renamed(lambda q: f"{q}#1")
    return Nfa.make(
        left.states + right.states,
        a.alphabet,
        left.delta | right.delta,
        left.initial | right.initial,
        left.accepting | right.accepting,
    )


def flower_automaton(short_cycles: Sequence, start: int, step: int, count: int) -> Nfa:
    """One-letter automaton: disjoint simple a-loops of the given lengths,
    plus a one-vertex union of a-loops of lengths start, start+step, ...,
    start+(count-1)*step.

    No initial or accepting states; only the trace language is of interest.
    """
    if count < 1 or step < 1:
        raise ValueError("need count >= 1 and step >= 1")
    if start < 1 or any(j < 1 for j in short_cycles):
        raise ValueError("zero-length cycle requested")
    states = []
    delta = []

    def add_cycle(prefix, length, hub=None):
        ring = [hub] if hub else []
        ring += [f"{prefix}.{i}" for i in range(len(ring), length)]
        states.extend(s for s in ring if s != hub)
        for i, s in enumerate(ring):
            delta.append((s, "a", ring[(i + 1) % length]))

    for k, j in enumerate(short_cycles):
        add_cycle(f"c{k}", j)
    hub = "f"
    states.append(hub)
    for k in range(count):
        add_cycle(f"p{k}", start + k * step, hub=hub)
    return Nfa.make(states, ("a",), delta, (), ())
