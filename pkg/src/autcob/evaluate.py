"""Evaluate diagrams to matrices over a semiring.

Conventions, fixed once and used everywhere:

* matrices act on column vectors, so evaluation composes slices bottom to
  top by left multiplication;
* side-by-side generators combine by Kronecker product in wire order, with
  row-major indexing on (left, right) factor pairs;
* a dot reading letter a on an upward wire is the transpose of the letter
  matrix (columns index source states), so the dots of a word are met in
  word order walking up from the domain.

For an automaton every wire carries the free module on the states.  For a
T-automaton every wire carries the ambient free module on the points,
cut down by the idempotent E with E[y][x] = 1 iff y lies in U_x (and its
transpose on '-' wires); every generator image is balanced by these
idempotents, and the identity wire itself evaluates to E.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Nfa, as_word
from .diagrams import Diagram, Gen, circle_diagram, interval_diagram
from .errors import CapacityError
from .semiring import BOOL, Mat, Semiring, identity, kron
from .topology import TAutomaton

MAX_DIM_PRODUCT = 1 << 20


@dataclass(frozen=True)
class Evaluation:
    """A matrix indexed by basis tuples of the ambient modules of the
    domain (columns) and codomain (rows)."""

    matrix: Mat
    domain_dims: tuple
    codomain_dims: tuple

    def scalar(self):
        if self.matrix.rows != 1 or self.matrix.cols != 1:
            raise ValueError("not a closed evaluation")
        return self.matrix.entries[0]


def _guard(width, dim):
    if dim ** width > MAX_DIM_PRODUCT:
        raise CapacityError(
            f"boundary of width {width} over dimension {dim} exceeds the cap"
        )


def _delta_column(ring, n) -> Mat:
    ent = [ring.zero] * (n * n)
    for q in range(n):
        ent[q * n + q] = ring.one
    return Mat(ring, n * n, 1, tuple(ent))


def _perm_swap(ring, n) -> Mat:
    # (i, j) at the input becomes (j, i) at the output
    ent = [ring.zero] * (n * n * n * n)
    for i in range(n):
        for j in range(n):
            ent[(j * n + i) * (n * n) + (i * n + j)] = ring.one
    return Mat(ring, n * n, n * n, tuple(ent))


def _indicator_column(ring, order, members) -> Mat:
    return Mat(
        ring, len(order), 1,
        tuple(ring.one if x in members else ring.zero for x in order),
    )


def _run(diagram: Diagram, ring: Semiring, n: int, wire_image, gen_image) -> Evaluation:
    dom, cod = diagram.typecheck()
    _guard(len(dom), n)
    if diagram.slices:
        boundary = dom
        mat = None
        cache = {}
        for slc in diagram.slices:
            boundary = tuple(s for g in slc for s in g.outputs())
            _guard(len(boundary), n)
            layer = identity(ring, 1)
            for g in slc:
                if g not in cache:
                    cache[g] = gen_image(g)
                layer = kron(layer, cache[g])
            mat = layer if mat is None else layer @ mat
    else:
        mat = identity(ring, 1)
        for s in dom:
            mat = kron(mat, wire_image(s))
    return Evaluation(mat, (n,) * len(dom), (n,) * len(cod))


# -- free modules (automata) --------------------------------------------------


def eval_nfa(nfa: Nfa, diagram: Diagram, ring: Semiring = BOOL) -> Evaluation:
    """Evaluate a defect diagram in the free module on the states."""
    unknown = diagram.letters() - set(nfa.alphabet)
    if unknown:
        raise KeyError(f"unknown letters {sorted(unknown)}")
    n = len(nfa.states)
    states = nfa.states

    def endpoint_members(g: Gen, plain):
        if g.label is None:
            return plain
        if g.label not in nfa._index:
            raise KeyError(f"unknown state {g.label!r}")
        return {g.label}

    def image(g: Gen) -> Mat:
        k = g.kind
        if k == "id":
            return identity(ring, n)
        if k == "dot":
            m = nfa.letter_matrix(g.letter, ring)
            return m.transpose() if g.sign == "+" else m
        if k == "cup":
            return _delta_column(ring, n)
        if k == "cap":
            return _delta_column(ring, n).transpose()
        if k == "swap":
            return _perm_swap(ring, n)
        if k == "birth":
            members = endpoint_members(
                g, nfa.initial if g.sign == "+" else nfa.accepting
            )
            return _indicator_column(ring, states, members)
        if k == "death":
            members = endpoint_members(
                g, nfa.accepting if g.sign == "+" else nfa.initial
            )
            return _indicator_column(ring, states, members).transpose()
        raise ValueError(
            f"{k} needs a topological state space; convert the automaton"
            " to a discrete-space T-automaton first"
        )

    return _run(diagram, ring, n, lambda s: identity(ring, n), image)


def eval_interval(nfa: Nfa, w) -> bool:
    """Value of the floating interval decorated by w; equals interval_eval."""
    return eval_nfa(nfa, interval_diagram(as_word(w))).scalar() == BOOL.one


def eval_circle(nfa: Nfa, w) -> bool:
    """Value of the circle decorated by w; equals trace_eval."""
    return eval_nfa(nfa, circle_diagram(as_word(w))).scalar() == BOOL.one


# -- projective modules (T-automata) ------------------------------------------


def eval_tautomaton(taut: TAutomaton, diagram: Diagram) -> Evaluation:
    """Evaluate a diagram, foam vertices included, in the ambient free
    module on the points of the space."""
    unknown = diagram.letters() - set(taut.alphabet)
    if unknown:
        raise KeyError(f"unknown letters {sorted(unknown)}")
    space = taut.space
    pts = space.points
    n = len(pts)
    U = space.min_open

    def grid(pred):
        return Mat(
            BOOL, n, n,
            tuple(BOOL.one if pred(y, x) else BOOL.zero for y in pts for x in pts),
        )

    e_plus = grid(lambda y, x: y in U[x])
    e_minus = e_plus.transpose()

    def wire(sign) -> Mat:
        return e_plus if sign == "+" else e_minus

    def pair_column(pred) -> Mat:
        ent = tuple(
            BOOL.one if pred(u, v) else BOOL.zero for u in pts for v in pts
        )
        return Mat(BOOL, n * n, 1, ent)

    def image(g: Gen) -> Mat:
        k = g.kind
        if k == "id":
            return wire(g.sign)
        if k == "dot":
            t = taut.letter(g.letter)
            m = grid(lambda y, x: y in t.image[x])
            return m if g.sign == "+" else m.transpose()
        if k == "cup":
            if g.sign == "+":
                return pair_column(lambda u, v: u in U[v])
            return pair_column(lambda v, u: u in U[v])
        if k == "cap":
            if g.sign == "-":
                return pair_column(lambda v, u: v in U[u]).transpose()
            return pair_column(lambda u, v: v in U[u]).transpose()
        if k == "swap":
            return _perm_swap(BOOL, n) @ kron(wire(g.sign), wire(g.sign2))
        if k == "birth":
            if g.label is not None:
                if g.label not in U:
                    raise KeyError(f"unknown point {g.label!r}")
                return _indicator_column(BOOL, pts, U[g.label])
            members = taut.initial_open if g.sign == "+" else taut.accepting_closed
            return _indicator_column(BOOL, pts, members)
        if k == "death":
            if g.label is not None:
                y = g.label
                if y not in U:
                    raise KeyError(f"unknown point {y!r}")
                return Mat(
                    BOOL, 1, n,
                    tuple(BOOL.one if y in U[u] else BOOL.zero for u in pts),
                )
            if g.sign == "+":
                acc = taut.accepting_closed
                return Mat(
                    BOOL, 1, n,
                    tuple(BOOL.one if acc & U[x] else BOOL.zero for x in pts),
                )
            ini = taut.initial_open
            return Mat(
                BOOL, 1, n,
                tuple(BOOL.one if space.closure_of(v) & ini else BOOL.zero for v in pts),
            )
        if k == "merge":
            ent = tuple(
                BOOL.one if z in (U[x] & U[y]) else BOOL.zero
                for z in pts
                for x in pts
                for y in pts
            )
            return Mat(BOOL, n, n * n, ent)
        if k == "split":
            ent = tuple(
                BOOL.one if any(u in U[z] and v in U[z] for z in U[x]) else BOOL.zero
                for u in pts
                for v in pts
                for x in pts
            )
            return Mat(BOOL, n * n, n, ent)
        if k == "unit":
            return Mat(BOOL, n, 1, (BOOL.one,) * n)
        if k == "counit":
            return Mat(BOOL, 1, n, (BOOL.one,) * n)
        raise ValueError(f"unknown generator kind {k!r}")

    return _run(diagram, BOOL, n, wire, image)
