"""Typed, layered diagrams for decorated one-dimensional cobordisms and foams.

A diagram is a list of slices read bottom to top; the domain sits at the
bottom.  Each slice is a row of generators whose concatenated input signs
must equal the boundary left by the slice below.  Generators:

    token            inputs      outputs
    id+ id-          (s)         (s)
    cup+             ()          (+ -)        cup- gives (- +)
    cap+             (+ -)       ()           cap- takes (- +)
    swap(s1s2)       (s1 s2)     (s2 s1)
    dot(L)+ dot(L)-  (s)         (s)          defect labelled by letter L
    birth+ death+    () / (+)    (+) / ()     inner endpoints; birth+(x) and
    birth- death-    () / (-)    (-) / ()     death+(x) carry a state/point label
    merge            (+ +)       (+)
    split            (+)         (+ +)
    unit             ()          (+)
    counit           (+)         ()

Slice text format: generators separated by spaces, slices separated by ';'.
Trivalent and univalent foam vertices exist only on '+' wires; their '-'
counterparts are the composite diagrams returned by merge_on_minus() and
split_on_minus(), which bend the wires through the duality.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

from .automaton import as_word
from .errors import DiagramTypeError, ParseError

SIGNS = ("+", "-")


def flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


_KINDS = {
    "id", "cup", "cap", "swap", "dot", "birth", "death",
    "merge", "split", "unit", "counit",
}
_SIGNED = {"id", "cup", "cap", "dot", "birth", "death"}
_FOAM = {"merge", "split", "unit", "counit"}


@dataclass(frozen=True)
class Gen:
    """One generator occurrence inside a slice."""

    kind: str
    sign: str = None
    sign2: str = None
    letter: str = None
    label: str = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind in _SIGNED and self.sign not in SIGNS:
            raise ValueError(f"{self.kind} needs a sign")
        if self.kind == "swap" and (self.sign not in SIGNS or self.sign2 not in SIGNS):
            raise ValueError("swap needs two signs")
        if self.kind == "dot" and not self.letter:
            raise ValueError("dot needs a letter")
        if self.label is not None and not (
            self.kind in ("birth", "death") and self.sign == "+"
        ):
            raise ValueError("labels are only supported on birth+/death+")

    def inputs(self) -> tuple:
        k = self.kind
        if k in ("id", "dot", "death", "counit"):
            return ("+",) if k == "counit" else (self.sign,)
        if k == "cap":
            return (self.sign, flip(self.sign))
        if k == "swap":
            return (self.sign, self.sign2)
        if k == "merge":
            return ("+", "+")
        if k == "split":
            return ("+",)
        return ()  # cup, birth, unit

    def outputs(self) -> tuple:
        k = self.kind
        if k in ("id", "dot", "birth", "unit"):
            return ("+",) if k == "unit" else (self.sign,)
        if k == "cup":
            return (self.sign, flip(self.sign))
        if k == "swap":
            return (self.sign2, self.sign)
        if k == "split":
            return ("+", "+")
        if k == "merge":
            return ("+",)
        return ()  # cap, death, counit

    def token(self) -> str:
        k = self.kind
        if k in ("id", "cup", "cap"):
            return f"{k}{self.sign}"
        if k == "swap":
            return f"swap({self.sign}{self.sign2})"
        if k == "dot":
            return f"dot({self.letter}){self.sign}"
        if k in ("birth", "death"):
            lab = f"({self.label})" if self.label is not None else ""
            return f"{k}{self.sign}{lab}"
        return k

    def to_json_dict(self) -> dict:
        d = {"gen": self.kind}
        if self.kind == "swap":
            d["signs"] = [self.sign, self.sign2]
        elif self.kind in _SIGNED:
            d["sign"] = self.sign
        if self.letter is not None:
            d["letter"] = self.letter
        if self.label is not None:
            d["label"] = self.label
        return d

    @classmethod
    def from_json_dict(cls, data: dict) -> Gen:
        if not isinstance(data, dict) or "gen" not in data:
            raise ValueError("generator JSON needs a 'gen' key")
        kind = data["gen"]
        allowed = {"gen"}
        kw = {"kind": kind}
        if kind == "swap":
            allowed.add("signs")
            signs = data.get("signs")
            if not isinstance(signs, list) or len(signs) != 2:
                raise ValueError("swap needs 'signs': [s1, s2]")
            kw["sign"], kw["sign2"] = signs
        elif kind in _SIGNED:
            allowed.add("sign")
            kw["sign"] = data.get("sign")
        if kind == "dot":
            allowed.add("letter")
            kw["letter"] = data.get("letter")
        if kind in ("birth", "death"):
            allowed.add("label")
            kw["label"] = data.get("label")
        extra = set(data) - allowed
        if extra:
            raise ValueError(f"unknown generator keys {sorted(extra)}")
        return cls(**kw)


def ident(sign) -> Gen:
    return Gen("id", sign)


def cup(sign) -> Gen:
    return Gen("cup", sign)


def cap(sign) -> Gen:
    return Gen("cap", sign)


def swap(sign, sign2) -> Gen:
    return Gen("swap", sign, sign2)


def dot(letter, sign="+") -> Gen:
    return Gen("dot", sign, letter=letter)


def birth(sign="+", label=None) -> Gen:
    return Gen("birth", sign, label=label)


def death(sign="+", label=None) -> Gen:
    return Gen("death", sign, label=label)


MERGE = Gen("merge")
SPLIT = Gen("split")
UNIT = Gen("unit")
COUNIT = Gen("counit")


@dataclass(frozen=True)
class Diagram:
    """Slices bottom to top; closed iff domain and codomain are empty."""

    slices: tuple
    domain: tuple

    @classmethod
    def make(cls, slices, domain=None) -> Diagram:
        slices = tuple(tuple(s) for s in slices)
        if domain is None:
            domain = ()
            if slices:
                domain = tuple(s for g in slices[0] for s in g.inputs())
        return cls(slices, tuple(domain))

    def typecheck(self) -> tuple:
        """Thread the sign sequence through every slice; returns
        (domain, codomain) or raises at the first ill-typed slice."""
        boundary = self.domain
        for k, slc in enumerate(self.slices):
            need = tuple(s for g in slc for s in g.inputs())
            if need != boundary:
                raise DiagramTypeError(
                    "slice does not fit its boundary",
                    slice_index=k,
                    expected=boundary,
                    actual=need,
                )
            boundary = tuple(s for g in slc for s in g.outputs())
        return self.domain, boundary

    @cached_property
    def codomain(self) -> tuple:
        return self.typecheck()[1]

    @property
    def is_closed(self) -> bool:
        return not self.domain and not self.codomain

    def letters(self) -> set:
        return {g.letter for s in self.slices for g in s if g.kind == "dot"}

    def __rshift__(self, other: Diagram) -> Diagram:
        return compose(self, other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return tensor(self, other)

    # -- text and JSON -------------------------------------------------------

    def to_text(self) -> str:
        if not self.slices:
            # a sliceless identity has no slice syntax; print an id layer
            return " ".join(ident(s).token() for s in self.domain)
        return " ; ".join(" ".join(g.token() for g in slc) for slc in self.slices)

    def to_json_dict(self) -> dict:
        return {"slices": [[g.to_json_dict() for g in slc] for slc in self.slices]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_dict(), **kw)

    @classmethod
    def from_json_dict(cls, data: dict) -> Diagram:
        if not isinstance(data, dict):
            raise ValueError("diagram JSON must be an object")
        extra = set(data) - {"slices"}
        if extra:
            raise ValueError(f"unknown keys {sorted(extra)}")
        slices = [[Gen.from_json_dict(g) for g in slc] for slc in data.get("slices", [])]
        return cls.make(slices)

    @classmethod
    def from_json(cls, text: str) -> Diagram:
        return cls.from_json_dict(json.loads(text))


def identity_diagram(signs) -> Diagram:
    signs = tuple(signs)
    if not signs:
        return Diagram.make([])
    return Diagram.make([[ident(s) for s in signs]])


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """Stack d2 on top of d1."""
    if d1.codomain != d2.domain:
        raise DiagramTypeError(
            f"cannot compose: codomain {''.join(d1.codomain) or 'empty'} "
            f"!= domain {''.join(d2.domain) or 'empty'}"
        )
    return Diagram.make(d1.slices + d2.slices, d1.domain)


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    """Place d2 to the right of d1, padding the shorter one with identity
    slices on its codomain."""
    c1, c2 = d1.codomain, d2.codomain
    s1, s2 = list(d1.slices), list(d2.slices)
    while len(s1) < len(s2):
        s1.append(tuple(ident(s) for s in c1))
    while len(s2) < len(s1):
        s2.append(tuple(ident(s) for s in c2))
    return Diagram.make(
        [a + b for a, b in zip(s1, s2)], d1.domain + d2.domain
    )


# -- word-shaped diagrams ----------------------------------------------------


def interval_diagram(word) -> Diagram:
    """Floating interval reading the word bottom to top: birth, dots, death."""
    slices = [[birth("+")]]
    slices += [[dot(a, "+")] for a in as_word(word)]
    slices += [[death("+")]]
    return Diagram.make(slices)


def circle_diagram(word) -> Diagram:
    """Decorated circle: cup, dots on the upward strand, cap."""
    slices = [[cup("+")]]
    slices += [[dot(a, "+"), ident("-")] for a in as_word(word)]
    slices += [[cap("+")]]
    return Diagram.make(slices)


def merge_on_minus() -> Diagram:
    """Multiplication on '-' wires, written through the duality: bend both
    inputs up across a split on a '+' wire."""
    return Diagram.make(
        [
            [ident("-"), ident("-"), cup("+")],
            [ident("-"), ident("-"), SPLIT, ident("-")],
            [ident("-"), cap("-"), ident("+"), ident("-")],
            [cap("-"), ident("-")],
        ],
        domain=("-", "-"),
    )


def split_on_minus() -> Diagram:
    """Comultiplication on '-' wires through the duality: merge on '+', its
    output capped against the incoming wire."""
    return Diagram.make(
        [
            [cup("+"), cup("+"), ident("-")],
            [ident("+"), swap("-", "+"), ident("-"), ident("-")],
            [MERGE, ident("-"), ident("-"), ident("-")],
            [swap("+", "-"), ident("-"), ident("-")],
            [ident("-"), swap("+", "-"), ident("-")],
            [ident("-"), ident("-"), cap("+")],
        ],
        domain=("-",),
    )


# -- parsing ------------------------------------------------------------------

_TOKEN_PATTERNS = [
    (re.compile(r"id([+-])\Z"), lambda m: ident(m.group(1))),
    (re.compile(r"cup([+-])\Z"), lambda m: cup(m.group(1))),
    (re.compile(r"cap([+-])\Z"), lambda m: cap(m.group(1))),
    (re.compile(r"swap\(([+-])([+-])\)\Z"), lambda m: swap(m.group(1), m.group(2))),
    (re.compile(r"dot\(([^()\s;]+)\)([+-])\Z"), lambda m: dot(m.group(1), m.group(2))),
    (
        re.compile(r"(birth|death)([+-])(?:\(([^()\s;]+)\))?\Z"),
        lambda m: Gen(m.group(1), m.group(2), label=m.group(3)),
    ),
    (re.compile(r"merge\Z"), lambda m: MERGE),
    (re.compile(r"split\Z"), lambda m: SPLIT),
    (re.compile(r"unit\Z"), lambda m: UNIT),
    (re.compile(r"counit\Z"), lambda m: COUNIT),
]


def _position(text, offset) -> tuple:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_diagram(text: str) -> Diagram:
    """Parse the slice text format; round-trips with Diagram.to_text()."""
    slices = [[]]
    offsets = [0]
    for m in re.finditer(r"[^\s;]+|;", text):
        tok = m.group(0)
        if tok == ";":
            slices.append([])
            offsets.append(m.start())
            continue
        for pattern, build in _TOKEN_PATTERNS:
            pm = pattern.match(tok)
            if pm:
                try:
                    g = build(pm)
                except ValueError as e:
                    raise ParseError(str(e), *_position(text, m.start())) from None
                slices[-1].append(g)
                break
        else:
            raise ParseError(f"unknown token {tok!r}", *_position(text, m.start()))
    while slices and not slices[-1]:
        slices.pop()
        offsets.pop()
    return Diagram.make(slices)
