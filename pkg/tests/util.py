"""Shared fixtures and random generators for the test suite."""

import itertools

from autcob import Nfa
from autcob.diagrams import (
    COUNIT,
    MERGE,
    SPLIT,
    UNIT,
    Diagram,
    birth,
    cap,
    cup,
    death,
    dot,
    flip,
    ident,
    swap,
)
from autcob.topology import Endo, FinTop, TAutomaton, space_from_preorder

# Two-state machine: a flips the states, b loops at the accepting one.
# Interval language (ab*a)*ab*.
A2 = Nfa.make(
    ["q1", "q2"],
    ["a", "b"],
    [("q1", "a", "q2"), ("q2", "a", "q1"), ("q2", "b", "q2")],
    ["q1"],
    ["q2"],
)

# Two-state machine on one letter: interval and trace language (a^2)*.
TWO_CYCLE = Nfa.make(
    ["s0", "s1"],
    ["a"],
    [("s0", "a", "s1"), ("s1", "a", "s0")],
    ["s0"],
    ["s0"],
)

# Undecorated pair: b swaps the states, a loops away from the marked one.
H1 = Nfa.make(
    ["q0", "q1"],
    ["a", "b"],
    [("q0", "b", "q1"), ("q1", "b", "q0"), ("q1", "a", "q1")],
    [],
    [],
)

SIERPINSKI = FinTop.make(["x", "y"], {"x": {"x"}, "y": {"x", "y"}})


def all_words(alphabet, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=k)


def random_nfa(rng, max_states=4, alphabet=("a", "b"), min_states=1):
    n = rng.randint(min_states, max_states)
    states = [f"q{i}" for i in range(n)]
    triples = [(q, a, r) for q in states for a in alphabet for r in states]
    delta = [t for t in triples if rng.random() < 0.3]
    initial = [q for q in states if rng.random() < 0.4]
    accepting = [q for q in states if rng.random() < 0.4]
    return Nfa.make(states, alphabet, delta, initial, accepting)


def random_space(rng, max_points=4, min_points=1):
    n = rng.randint(min_points, max_points)
    points = [f"p{i}" for i in range(n)]
    pairs = [
        (points[i], points[j])
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < 0.3
    ]
    return space_from_preorder(points, pairs)


def random_endo(rng, space, opens=None):
    opens = opens if opens is not None else space.opens()
    image = {}
    for x in sorted(space.points, key=lambda p: len(space.min_open_of(p))):
        lower = frozenset()
        for y in space.min_open_of(x):
            if y != x:
                lower |= image[y]
        image[x] = rng.choice([o.members for o in opens if lower <= o.members])
    return Endo(space, image)


def random_tautomaton(rng, max_points=4, alphabet=("a", "b")):
    space = random_space(rng, max_points)
    opens = space.opens()
    letters = {a: random_endo(rng, space, opens) for a in alphabet}
    initial = rng.choice(opens).members
    accepting = frozenset(space.points) - rng.choice(opens).members
    return TAutomaton.make(space, alphabet, initial, accepting, letters)


def _producers(letters, foam, endpoints):
    out = [cup("+"), cup("-")]
    if endpoints:
        out += [birth("+"), birth("-")]
    if foam:
        out.append(UNIT)
    return out


def _grow_slice(rng, boundary, letters, foam, endpoints, max_width, labels):
    slc = []
    out = []
    i = 0
    while True:
        room = max_width - (len(out) + len(boundary) - i)
        if room >= 2 and rng.random() < 0.2:
            g = rng.choice(_producers(letters, foam, endpoints))
            if g.kind == "birth" and g.sign == "+" and labels and rng.random() < 0.4:
                g = birth("+", label=rng.choice(labels))
            slc.append(g)
            out.extend(g.outputs())
            continue
        if i >= len(boundary):
            break
        s0 = boundary[i]
        s1 = boundary[i + 1] if i + 1 < len(boundary) else None
        options = [ident(s0)]
        if letters:
            options += [dot(a, s0) for a in letters]
        if endpoints:
            g = death(s0)
            if s0 == "+" and labels and rng.random() < 0.4:
                g = death("+", label=rng.choice(labels))
            options.append(g)
        if foam and s0 == "+":
            options.append(COUNIT)
            if room >= 1:
                options.append(SPLIT)
        if s1 is not None:
            options.append(swap(s0, s1))
            if s1 == flip(s0):
                options.append(cap(s0))
            if foam and s0 == "+" and s1 == "+":
                options.append(MERGE)
        g = rng.choice(options)
        slc.append(g)
        out.extend(g.outputs())
        i += len(g.inputs())
    return slc, tuple(out)


def random_diagram(
    rng,
    letters=("a", "b"),
    max_width=4,
    max_slices=5,
    domain=None,
    foam=False,
    endpoints=True,
    labels=(),
):
    """A random well-typed diagram; the domain is drawn when not given."""
    if domain is None:
        domain = tuple(rng.choice("+-") for _ in range(rng.randint(0, max_width)))
    boundary = tuple(domain)
    slices = []
    for _ in range(rng.randint(1, max_slices)):
        slc, boundary = _grow_slice(
            rng, boundary, letters, foam, endpoints, max_width, labels
        )
        if slc:
            slices.append(slc)
    return Diagram.make(slices, domain)


def _closing_slice(rng, boundary, foam, endpoints):
    # cap one adjacent opposite pair when possible, else retire a '+',
    # else stage a unit so the next pass can cap a bare '-'
    for i in range(len(boundary) - 1):
        if boundary[i + 1] == flip(boundary[i]):
            gens = [ident(s) for s in boundary[:i]]
            gens.append(cap(boundary[i]))
            gens += [ident(s) for s in boundary[i + 2 :]]
            return gens
    if "+" in boundary:
        i = boundary.index("+")
        closers = ([COUNIT] if foam else []) + ([death("+")] if endpoints else [])
        gens = [ident(s) for s in boundary[:i]]
        gens.append(rng.choice(closers))
        gens += [ident(s) for s in boundary[i + 1 :]]
        return gens
    if endpoints and not foam:
        return [death("-")] + [ident(s) for s in boundary[1:]]
    return [ident(boundary[0]), UNIT] + [ident(s) for s in boundary[1:]]


def random_closed_diagram(
    rng, letters=(), foam=True, endpoints=False, max_width=4, grow_slices=3
):
    """A random closed diagram: grow from the empty boundary, then close."""
    boundary = ()
    slices = []
    for _ in range(rng.randint(1, grow_slices)):
        slc, boundary = _grow_slice(
            rng, boundary, letters, foam, endpoints, max_width, ()
        )
        if slc:
            slices.append(slc)
    while boundary:
        slc = _closing_slice(rng, boundary, foam, endpoints)
        slices.append(slc)
        boundary = tuple(s for g in slc for s in g.outputs())
    return Diagram.make(slices, ())
