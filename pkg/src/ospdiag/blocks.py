"""Finite windows of blocks, Cartan matrices, quivers and basis statistics."""
import csv
import io
from dataclasses import dataclass

from .circles import circle_diagram, hom_poly, is_nuclear, orientations
from .cups import cup_diagram
from .laurent import LaurentPoly
from .weights import HookPartition, linked, signs_for, super_weight


@dataclass(frozen=True)
class BlockWindow:
    g: object
    seed: object
    max_vertex: int
    names: tuple        # signed hook partitions
    weights: tuple      # their super weights, same order

    def __len__(self):
        return len(self.weights)

    def index(self, name):
        return self.names.index(name)

    def restrict(self, names):
        """Sub-window on the given signed partitions, in that order."""
        idx = [self.index(n) for n in names]
        return BlockWindow(self.g, self.seed, self.max_vertex,
                           tuple(self.names[i] for i in idx),
                           tuple(self.weights[i] for i in idx))


_SIGN_ORDER = {"+": 0, "-": 1, None: 2}


def _support(w):
    return max(w.extent(), cup_diagram(w).extent())


def _window_partitions(g, max_vertex):
    """Hook partitions that can possibly fit below max_vertex.

    Row i is capped so that S_i stays inside the window (a label further out
    always leaves a core symbol or a cup outside), and the number of rows is
    capped because the last row leaves a gap in S at delta/2 + rows - 1.
    """
    d = g.delta
    max_rows = max_vertex + 3 + abs(d)
    out = []

    def rec(parts, cap):
        out.append(HookPartition(tuple(parts)))
        i = len(parts) + 1
        if i > max_rows:
            return
        lim = min(cap, (d + 2 * i + 2 * max_vertex + 4) // 2)
        if i > g.n:
            lim = min(lim, g.m)
        for p in range(lim, 0, -1):
            parts.append(p)
            rec(parts, p)
            parts.pop()

    rec([], max_vertex + abs(d) + 4 + max_rows)
    return out


def block_weights(seed, max_vertex, g):
    """All weights linked to seed whose labels and cups stay below max_vertex.

    Weights are sorted by partition size, then parts, then sign.
    """
    found = {}
    for gam in _window_partitions(g, max_vertex):
        for s in signs_for(gam, g):
            name = gam.with_sign(s)
            w = super_weight(name, g)
            if _support(w) <= max_vertex and linked(w, seed):
                found[name] = w
    order = sorted(found, key=lambda k: (k.size(), k.parts, _SIGN_ORDER[k.sign]))
    return BlockWindow(g, seed, max_vertex, tuple(order), tuple(found[k] for k in order))


def graded_cartan(window):
    return [[hom_poly(a, b) for b in window.weights] for a in window.weights]


def cartan(window):
    return [[p.at_one() for p in row] for row in graded_cartan(window)]


def quiver(window):
    """Vertices and degree-one arrows (multiplicity = coefficient of q)."""
    arrows = []
    for i, a in enumerate(window.weights):
        for j, b in enumerate(window.weights):
            k = hom_poly(a, b).coeff(1)
            if k and i != j:
                arrows.append((i, j, k))
    return list(window.names), arrows


def quiver_dot(window, name="block"):
    verts, arrows = quiver(window)
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(verts):
        lines.append(f'  n{i} [label="{v}"];')
    for i, j, k in arrows:
        for _ in range(k):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def basis_census(window, touching=None):
    """Orientation counts per degree over ordered pairs, split by nuclearity.

    With `touching` given, only pairs with at least one weight in it are used.
    Returns {degree: [non_nuclear, nuclear]}.
    """
    out = {}
    ws = window.weights
    for i, a in enumerate(ws):
        for j, b in enumerate(ws):
            if touching is not None and i not in touching and j not in touching:
                continue
            if a.core() != b.core():
                continue
            cd = circle_diagram(a, b)
            nuc = is_nuclear(cd)
            for o in orientations(cd):
                out.setdefault(o.degree, [0, 0])[1 if nuc else 0] += 1
    return dict(sorted(out.items()))


def matrix_csv(window, mat):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [str(n) for n in window.names])
    for name, row in zip(window.names, mat):
        w.writerow([str(name)] + [str(x) for x in row])
    return buf.getvalue()


def is_symmetric(mat):
    return all(mat[i][j] == mat[j][i] for i in range(len(mat)) for j in range(len(mat)))


def max_degree(mat):
    return max((max(p.degrees()) for row in mat for p in row
                if isinstance(p, LaurentPoly) and p), default=0)
