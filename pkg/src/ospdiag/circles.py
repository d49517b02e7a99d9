"""Circle diagrams, their components, orientations and graded Hom dimensions."""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cups import cup_diagram
from .errors import CoreMismatch, InvalidDiagram
from .labels import DiagrammaticWeight
from .laurent import LaurentPoly


@dataclass(frozen=True)
class CircleDiagram:
    lam: DiagrammaticWeight
    mu: DiagrammaticWeight
    bottom: object
    top: object
    size: int          # vertices >= size are inert propagating lines
    diamond: bool      # vertex 0 carries the free label D

    def attachments(self):
        return (self.bottom.attachments(self.size), self.top.attachments(self.size))

    def ascii(self):
        n = self.size
        top = self.top.ascii(width=n).split("\n")[1]
        top = top.replace("(", "\x00").replace(")", "(").replace("\x00", ")")
        bot = self.bottom.ascii(width=n).split("\n")[1]
        mid = "".join(f"{i % 10:^3}" for i in range(n))
        return "\n".join([top, mid, bot])


@dataclass(frozen=True)
class Component:
    kind: str           # "circle" or "line"
    vertices: tuple
    dots: int
    ends: tuple = ()    # sides ("b"/"t") of the two ray ends of a line

    @property
    def propagating(self):
        if self.kind != "line":
            return None
        return set(self.ends) == {"b", "t"}


@dataclass(frozen=True)
class Orientation:
    middle: DiagrammaticWeight
    degree: int


def circle_diagram(lam, mu):
    if lam.odd != mu.odd:
        raise CoreMismatch("weights of different parity", "CircleDiagram: same group")
    if lam.core() != mu.core():
        raise CoreMismatch(f"core diagrams differ: {lam} vs {mu}",
                           "CircleDiagram: bottom.core = top.core")
    b, t = cup_diagram(lam), cup_diagram(mu)
    if b.tail_kind != "ray" or t.tail_kind != "ray":
        raise InvalidDiagram("circle diagrams need super-type weights (tail v)")
    size = max(b.tail_start, t.tail_start) + 1
    diamond = not lam.odd and lam.label(0) not in "XO"
    return CircleDiagram(lam, mu, b, t, size, diamond)


def _step(att, v, side):
    """Leave vertex v through `side`; return (next vertex, None) or (None, ray dotted)."""
    a = att[0 if side == "b" else 1][v]
    if a[0] == "ray":
        return None, a[1]
    return a[1], a[2]


def components(cd):
    """Components meeting vertices below cd.size (the tail lines are left out)."""
    att = cd.attachments()
    n = cd.size
    seen = set()
    out = []
    other = {"b": "t", "t": "b"}

    def walk(v, side):
        verts, dots = [v], 0
        while True:
            nxt, dotted = _step(att, v, side)
            dots += bool(dotted)
            if nxt is None:
                return verts, dots, side
            if nxt == verts[0] and side != start_side[0]:
                return verts, dots, None
            verts.append(nxt)
            v, side = nxt, other[side]

    for v in range(n):
        if v in seen or att[0][v][0] == "core":
            continue
        rays = [s for s, a in zip("bt", (att[0][v], att[1][v])) if a[0] == "ray"]
        if not rays:
            continue
        # start at a ray end and walk to the other end
        start_side = [other[rays[0]]]
        verts, dots, end = walk(v, start_side[0])
        dots += bool(att[0 if rays[0] == "b" else 1][v][1])
        seen.update(verts)
        out.append(Component("line", tuple(verts), dots, (rays[0], end)))
    for v in range(n):
        if v in seen or att[0][v][0] == "core":
            continue
        start_side = ["b"]
        verts, dots, end = walk(v, "b")
        if end is not None:
            raise InvalidDiagram("closed walk ended in a ray")
        seen.update(verts)
        out.append(Component("circle", tuple(verts), dots))
    return out


def is_nuclear(cd):
    return any(c.kind == "line" and not c.propagating for c in components(cd))


def _arcs(cd):
    for c in (cd.bottom, cd.top):
        for l, r, d in c.cups:
            if r >= cd.size:
                raise InvalidDiagram("arc crosses the truncation")
            yield l, r, d


def _arc_degree(l, r, dotted, labels):
    if labels[l] == "D":
        return 0 if labels[r] == "^" else 1
    if dotted:
        return 0 if labels[l] == "^" else 1
    return 0 if labels[l] == "v" else 1


def orientations(cd):
    """All orientations, found by propagating labels along each component."""
    n = cd.size
    att = cd.attachments()
    core = {v: lab for v, lab in cd.lam.core()}
    free = [v for v in range(n) if v not in core and not (cd.diamond and v == 0)]
    fixed = {}
    nbrs = {v: [] for v in free}
    for side in (0, 1):
        for v in free:
            a = att[side][v]
            if a[0] == "ray":
                want = "^" if a[1] else "v"
                if fixed.get(v, want) != want:
                    return []
                fixed[v] = want
    for l, r, d in _arcs(cd):
        if l in nbrs and r in nbrs:
            nbrs[l].append((r, d))
            nbrs[r].append((l, d))
    flip = {"^": "v", "v": "^"}
    # group the free vertices into connected pieces, each with a root
    pieces = []
    placed = {}
    for v in free:
        if v in placed:
            continue
        stack = [v]
        placed[v] = (v, False)
        members = [v]
        while stack:
            u = stack.pop()
            root, par = placed[u]
            for w, dotted in nbrs[u]:
                p = par if dotted else not par
                if w in placed:
                    if placed[w][1] != p:
                        return []
                    continue
                placed[w] = (v, p)
                members.append(w)
                stack.append(w)
        pieces.append((v, members))
    choices = []
    for root, members in pieces:
        opts = []
        for lab in "^v":
            ok = True
            for u in members:
                val = flip[lab] if placed[u][1] else lab
                if u in fixed and fixed[u] != val:
                    ok = False
                    break
            if ok:
                opts.append(lab)
        if not opts:
            return []
        choices.append(opts)
    out = []
    for pick in product(*choices):
        labels = ["?"] * n
        for v, lab in core.items():
            if v < n:
                labels[v] = lab
        if cd.diamond:
            labels[0] = "D"
        for (root, members), lab in zip(pieces, pick):
            for u in members:
                labels[u] = flip[lab] if placed[u][1] else lab
        deg = sum(_arc_degree(l, r, d, labels) for l, r, d in _arcs(cd))
        out.append(Orientation(DiagrammaticWeight(tuple(labels), "v", cd.lam.odd), deg))
    out.sort(key=lambda o: (o.degree, o.middle.prefix))
    return out


@lru_cache(maxsize=None)
def hom_poly(lam, mu):
    """Graded dimension of Hom between the projectives of lam and mu."""
    if lam.odd != mu.odd or lam.core() != mu.core():
        return LaurentPoly()
    cd = circle_diagram(lam, mu)
    if is_nuclear(cd):
        return LaurentPoly()
    total = LaurentPoly()
    for o in orientations(cd):
        total = total + LaurentPoly.monomial(o.degree)
    return total


def hom_dim(lam, mu):
    return hom_poly(lam, mu).at_one()


def transpose_dual_check(lam, mu, g):
    """Compare hom_poly for OSp(2m+1|2n) with the transposed pair in OSp(2n+1|2m)."""
    from .weights import GroupParams, super_weight
    if not g.odd:
        raise ValueError("the duality needs r odd")
    h = GroupParams(g.n, g.m, True)
    left = hom_poly(super_weight(lam, g), super_weight(mu, g))
    right = hom_poly(super_weight(lam.transpose(), h), super_weight(mu.transpose(), h))
    return left == right
