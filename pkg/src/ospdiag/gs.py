"""Gruson-Serganova weight diagrams, their cup diagrams and the alternating sum.

This is a second, independent route to Hom dimensions. It never looks at
the decorated cup diagrams of cups.py except in gses_check, which compares
the two on purpose.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .labels import DiagrammaticWeight

# how the translation T treats ambiguous rules; see the tests for the evidence
Z_RULE = "always"        # "always" or "eta" (indicator of eta must be (+))
EVEN_CROSS_AT_ZERO = False   # may a tailless nu carry a cross at 0 in the even case


@dataclass(frozen=True)
class GSTailDiagram:
    alpha: tuple        # number of > at each vertex
    beta: tuple         # number of < at each vertex
    odd: bool
    indicator: str = None   # "+" / "-" when vertex 0 holds only crosses (odd r)
    zero_sign: str = None   # "+" / "-" when vertex 0 is empty (even r)

    def stack(self, i):
        a = self.alpha[i] if i < len(self.alpha) else 0
        b = self.beta[i] if i < len(self.beta) else 0
        return a, b

    def only_crosses_at_zero(self):
        a, b = self.stack(0)
        return a == b > 0

    def tail(self):
        a, b = self.stack(0)
        x = min(a, b)
        if self.odd and self.indicator == "+":
            return x - 1
        return x

    def removed(self):
        """How many crosses the colouring step strips from vertex 0."""
        a, b = self.stack(0)
        x = min(a, b)
        if self.only_crosses_at_zero() and (self.indicator == "+" or not self.odd):
            return x - 1
        return x

    def to_text(self):
        toks = []
        for i in range(len(self.alpha)):
            a, b = self.stack(i)
            x = min(a, b)
            s = "X" * x + ">" * (a - x) + "<" * (b - x)
            toks.append(s or "O")
        if toks and len(toks[0]) > 1:
            toks[0] = "(" + toks[0] + ")"
        head = ""
        if self.indicator:
            head = f"({self.indicator}) "
        if self.zero_sign:
            head = f"[{self.zero_sign}] "
        return head + " ".join(toks) + " O*"


@dataclass(frozen=True)
class GSColoured:
    labels: tuple       # per vertex: < > X O and C for the coloured cross
    cups: tuple         # (left, right, coloured)
    odd: bool

    def label(self, i):
        return self.labels[i] if i < len(self.labels) else "O"

    def core(self):
        return tuple((i, x) for i, x in enumerate(self.labels) if x in "<>")

    def to_text(self):
        return " ".join("(X)" if x == "C" else x for x in self.labels) + " O*"


@dataclass(frozen=True)
class GSCoefficient:
    A: int
    x: int = 0
    y: int = 0
    z: int = 0

    @property
    def value(self):
        return (-1) ** (self.x + self.y + self.z) * self.A


def _index(p2, odd):
    return (p2 - 1) // 2 if odd else p2 // 2


def gs_tail(w, g):
    """GS diagram with tail of the dominant weight with doubled coefficients w."""
    size = max([abs(x) for x in w.a2 + w.b2] + [0]) // 2 + 1
    alpha = [0] * size
    beta = [0] * size
    for x in w.a2:
        alpha[_index(abs(x), g.odd)] += 1
    for x in w.b2:
        beta[_index(abs(x), g.odd)] += 1
    ind = zs = None
    if alpha[0] == beta[0] > 0 and g.odd:
        ind = "+" if 1 in w.a2 else "-"
    if not g.odd and alpha[0] == beta[0] == 0 and g.m:
        zs = "+" if w.a2[-1] > 0 else "-"
    return GSTailDiagram(tuple(alpha), tuple(beta), g.odd, ind, zs)


def _stack_cups(labels, opener, used, cups, coloured):
    stack = []
    for i, lab in enumerate(labels):
        if i in used or lab in "<>":
            continue
        if lab == opener:
            stack.append(i)
        elif lab == "O" and stack:
            l = stack.pop()
            cups.append((l, i, coloured))
            used.update((l, i))


def gs_coloured(d):
    l = d.removed()
    labels = []
    for i in range(len(d.alpha)):
        a, b = d.stack(i)
        if i == 0:
            x = min(a, b) - l
            a, b = a - l, b - l
            if x > 0:
                labels.append("X")
                continue
        if a and b:
            labels.append("X")
        elif a:
            labels.append(">")
        elif b:
            labels.append("<")
        else:
            labels.append("O")
    # room for every cross to find a nought, plus the coloured ones
    labels += ["O"] * (2 * len(labels) + 2 * l + 2)
    cups, used = [], set()
    _stack_cups(labels, "X", used, cups, False)
    free = [i for i, lab in enumerate(labels) if i not in used and lab == "O"]
    for k in range(l):
        labels[free[2 * k]] = "C"
    _stack_cups(labels, "C", used, cups, True)
    while labels and labels[-1] == "O":
        labels.pop()
    return GSColoured(tuple(labels), tuple(sorted(cups)), d.odd)


def translate_T(c):
    """GS labels to diagrammatic labels; vertex 0 is special only for even r."""
    plain = {"<": "X", ">": "O", "X": "v", "O": "^", "C": "^"}
    zero = {"C": "D", ">": "O", "O": "D", "X": "D", "<": "X"}
    labs = [plain[x] for x in c.labels] or ["^"]
    if not c.odd:
        labs[0] = zero[c.label(0)]
    return DiagrammaticWeight(tuple(labs), "^", c.odd)


@lru_cache(maxsize=None)
def gs_data(w, g):
    d = gs_tail(w, g)
    return d, gs_coloured(d)


def a_coeff(eta_w, g, nu):
    """Signed coefficient a(eta, nu) for a tailless labelling nu (dict vertex -> label)."""
    d, c = gs_data(eta_w, g)
    core = dict(c.core())
    for i, lab in nu.items():
        if lab in "<>" and core.get(i) != lab:
            return GSCoefficient(0)
    for i, lab in core.items():
        if nu.get(i) != lab:
            return GSCoefficient(0)
    on_cup = set()
    for l, r, _ in c.cups:
        if {nu.get(l, "O"), nu.get(r, "O")} != {"X", "O"}:
            return GSCoefficient(0)
        on_cup.update((l, r))
    for i, lab in nu.items():
        if lab == "X" and i not in on_cup:
            return GSCoefficient(0)
    x = sum(1 for cup in c.cups if cup[2])
    y = sum(1 for l, r, col in c.cups if col and nu.get(l, "O") == "O")
    z = 0
    for l, r, _ in c.cups:
        if l == 0 and nu.get(0) == "X":
            if not g.odd or Z_RULE == "always" or d.indicator == "+":
                z = 1
    return GSCoefficient(1, x, y, z)


def _labellings(c, g):
    base = dict(c.core())
    options = []
    for l, r, _ in c.cups:
        options.append(((l, "X"), (r, "O")))
    for pick in product(*[(0, 1)] * len(options)):
        nu = dict(base)
        for (left, right), flip in zip(options, pick):
            (l, a), (r, b) = left, right
            nu[l], nu[r] = (b, a) if flip else (a, b)
        if not g.odd and not EVEN_CROSS_AT_ZERO and nu.get(0) == "X":
            continue
        yield nu


def alternating_hom_dim(lam_w, mu_w, g):
    """Sum over tailless nu of a(lam,nu) a(mu,nu), with the even zero-vertex doubling."""
    if not g.odd and g.m:
        s, t = lam_w.a2[-1], mu_w.a2[-1]
        if s * t < 0:
            return 0
    _, c1 = gs_data(lam_w, g)
    _, c2 = gs_data(mu_w, g)
    if c1.core() != c2.core():
        return 0
    total = 0
    for nu in _labellings(c1, g):
        a1 = a_coeff(lam_w, g, nu).value
        if not a1:
            continue
        a2 = a_coeff(mu_w, g, nu).value
        mult = 1
        if (not g.odd and g.m and nu.get(0, "O") == "O"
                and lam_w.a2[-1] == 0 == mu_w.a2[-1]):
            mult = 2
        total += a1 * a2 * mult
    return total


def gses_check(gamma, g):
    """Compare the GS side with the decorated cup diagram of gamma^infinity.

    Returns a dict of the three comparisons.
    """
    from .cups import cup_diagram
    from .weights import tail_length, weight_diagram, weight_from_hook
    w = weight_from_hook(gamma.unsigned(), g)
    _, c = gs_data(w, g)
    lam_inf = weight_diagram(gamma.unsigned(), g)
    ours = cup_diagram(lam_inf)
    t = tail_length(gamma.unsigned(), g)
    real = [ours.dotted_cup_at(k) for k in range(t)]
    plain = {(l, r) for l, r, d in ours.cups if not d}
    expect_all = plain | {(l, r) for l, r, _ in real}
    expect_col = {(l, r) for l, r, _ in real if g.odd or l != 0}
    return {
        "weight": translate_T(c) == lam_inf,
        "cups": {(l, r) for l, r, _ in c.cups} == expect_all,
        "coloured": {(l, r) for l, r, col in c.cups if col} == expect_col,
    }


def positive_hom_dim(gamma1, gamma2, g):
    """Dimension over the Lie superalgebra predicted by circle diagrams.

    The best sign choice is taken. A line through the diamond vertex with a
    cup and a cap at 0 counts twice, since GS attach both signs [+] and [-]
    to its single orientation.
    """
    from .circles import circle_diagram, components, is_nuclear, orientations
    from .weights import signs_for, super_weight
    best = 0
    for s1 in signs_for(gamma1, g):
        for s2 in signs_for(gamma2, g):
            lam = super_weight(gamma1.with_sign(s1), g)
            mu = super_weight(gamma2.with_sign(s2), g)
            if lam.core() != mu.core():
                continue
            cd = circle_diagram(lam, mu)
            if is_nuclear(cd):
                continue
            k = len(orientations(cd))
            if k and s1 and s2 and cd.diamond:
                bot, top = cd.attachments()
                if bot[0][0] == "cup" and top[0][0] == "cup":
                    zero = next(c for c in components(cd) if 0 in c.vertices)
                    if zero.kind == "line":
                        k *= 2
            best = max(best, k)
    return best
