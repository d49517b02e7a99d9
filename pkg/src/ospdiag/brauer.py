"""Brauer diagrams and the Brauer algebra with symbolic or fixed loop parameter.

Points are -1..-d on the bottom row and 1..d on the top row. The product
x*y stacks x on top of y: the bottom row of x is glued to the top row of y.
"""
from dataclasses import dataclass
from fractions import Fraction
import random
import re

from .errors import ParseError
from .laurent import LaurentPoly

DELTA = "δ"


@dataclass(frozen=True)
class BrauerDiagram:
    d: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p, key=_order)) for p in self.pairs))
        pts = sorted(x for p in pairs for x in p)
        want = sorted(list(range(-self.d, 0)) + list(range(1, self.d + 1)))
        if pts != want:
            raise ParseError(f"not a perfect matching on ±1..±{self.d}: {pairs}",
                             "BrauerDiagram: every point matched exactly once")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def identity(cls, d):
        return cls(d, tuple((-i, i) for i in range(1, d + 1)))

    def partner(self):
        out = {}
        for a, b in self.pairs:
            out[a], out[b] = b, a
        return out

    def to_text(self):
        return "[" + ",".join(f"({a},{b})" for a, b in self.pairs) + "]"

    __str__ = to_text

    def ascii(self):
        """Two rows: each strand gets a letter, shown at both of its ends."""
        mark = {}
        for k, (a, b) in enumerate(self.pairs):
            ch = chr(ord("a") + k % 26)
            mark[a] = mark[b] = ch
        top = " ".join(mark[i] for i in range(1, self.d + 1))
        bot = " ".join(mark[-i] for i in range(1, self.d + 1))
        return f"top {top}\nbot {bot}"


def _order(x):
    # bottom points first, then top, each by position
    return (0, -x) if x < 0 else (1, x)


def parse_diagram(text):
    pts = [(int(a), int(b)) for a, b in re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)]
    if not pts:
        raise ParseError(f"no pairs in {text!r}")
    return BrauerDiagram(len(pts), tuple(pts))


def compose(top, bottom):
    """Stack `top` on `bottom`. Returns (closed loops, resulting diagram)."""
    if top.d != bottom.d:
        raise ValueError(f"size mismatch {top.d} vs {bottom.d}")
    d = top.d
    # nodes: ("T", i) top of result, ("B", i) bottom of result, ("M", i) middle row
    adj = {}
    edges = list(top.pairs) + list(bottom.pairs)

    def node(x, upper):
        if upper:
            return ("T", x) if x > 0 else ("M", -x)
        return ("M", x) if x > 0 else ("B", -x)

    for k, (a, b) in enumerate(edges):
        upper = k < len(top.pairs)
        u, v = node(a, upper), node(b, upper)
        adj.setdefault(u, []).append((k, v))
        adj.setdefault(v, []).append((k, u))
    used = set()

    def walk(cur):
        while True:
            step = [(k, v) for k, v in adj[cur] if k not in used]
            if not step:
                return cur
            k, cur = step[0]
            used.add(k)
            if cur[0] != "M":
                return cur

    pairs = []
    for start in [("T", i) for i in range(1, d + 1)] + [("B", i) for i in range(1, d + 1)]:
        if adj[start][0][0] in used:
            continue
        end = walk(start)
        pairs.append(tuple(i if s == "T" else -i for s, i in (start, end)))
    loops = 0
    for k in range(len(edges)):
        if k in used:
            continue
        # every edge left over lies on a closed loop in the middle row
        loops += 1
        a, b = edges[k]
        used.add(k)
        walk(node(b, k < len(top.pairs)))
    return loops, BrauerDiagram(d, tuple(pairs))


@dataclass(frozen=True)
class BrauerElement:
    d: int
    terms: tuple        # sorted (diagram, coefficient) pairs, no zero coefficients
    delta: object = None    # None means symbolic

    @classmethod
    def make(cls, d, terms, delta=None):
        acc = {}
        for dia, c in terms:
            acc[dia] = acc.get(dia, _zero(delta)) + c
        items = tuple(sorted(((k, v) for k, v in acc.items() if v), key=lambda kv: kv[0].pairs))
        return cls(d, items, delta)

    @classmethod
    def basis(cls, dia, delta=None):
        return cls.make(dia.d, [(dia, _one(delta))], delta)

    def __add__(self, other):
        return BrauerElement.make(self.d, list(self.terms) + list(other.terms), self.delta)

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{dia}" for dia, c in self.terms)


def _one(delta):
    return LaurentPoly.const(1, DELTA) if delta is None else Fraction(1)


def _zero(delta):
    return LaurentPoly(var=DELTA) if delta is None else Fraction(0)


def _loop_factor(c, delta):
    if delta is None:
        return LaurentPoly.monomial(c, 1, DELTA)
    return Fraction(delta) ** c


def multiply(x, y):
    if x.d != y.d:
        raise ValueError(f"size mismatch {x.d} vs {y.d}")
    if x.delta != y.delta:
        raise ValueError("elements use different loop parameters")
    out = []
    for dx, cx in x.terms:
        for dy, cy in y.terms:
            c, dia = compose(dx, dy)
            out.append((dia, cx * cy * _loop_factor(c, x.delta)))
    return BrauerElement.make(x.d, out, x.delta)


def random_diagram(d, rng=random):
    pts = list(range(-d, 0)) + list(range(1, d + 1))
    rng.shuffle(pts)
    return BrauerDiagram(d, tuple(zip(pts[::2], pts[1::2])))
