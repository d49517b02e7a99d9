"""Hook partitions, dominant weights and their diagrammatic weights."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cups import cup_diagram
from .errors import (DominanceViolation, HookViolation, ParseError,
                     SignContractViolation)
from .labels import DiagrammaticWeight, position2


@dataclass(frozen=True)
class GroupParams:
    m: int
    n: int
    odd: bool

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ParseError("m and n must be nonnegative")

    @property
    def r(self):
        return 2 * self.m + (1 if self.odd else 0)

    @property
    def delta(self):
        return self.r - 2 * self.n

    @property
    def parity(self):
        return "odd" if self.odd else "even"

    def __str__(self):
        return f"OSp({self.r}|{2 * self.n})"

    @classmethod
    def from_osp(cls, r, two_n):
        if two_n % 2:
            raise ParseError("OSp(r|2n) needs an even second entry")
        return cls(r // 2, two_n // 2, r % 2 == 1)


@dataclass(frozen=True)
class HookPartition:
    parts: tuple
    sign: str = None

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ParseError("partition parts must be nonnegative", "HookPartition: parts >= 0")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ParseError(f"partition {parts} is not weakly decreasing",
                             "HookPartition: weakly decreasing parts")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if self.sign not in (None, "+", "-"):
            raise ParseError(f"sign must be + or -, got {self.sign!r}", "HookPartition: sign in {+, -}")
        object.__setattr__(self, "parts", parts)

    def part(self, i):
        """1-indexed part, zero past the end."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def size(self):
        return sum(self.parts)

    def transpose(self):
        if not self.parts:
            return HookPartition((), self.sign)
        return HookPartition(tuple(sum(1 for p in self.parts if p > j)
                                   for j in range(self.parts[0])), self.sign)

    def unsigned(self):
        return HookPartition(self.parts)

    def with_sign(self, sign):
        return HookPartition(self.parts, sign)

    def __str__(self):
        body = ",".join(map(str, self.parts)) if self.parts else "empty"
        return body + (self.sign or "")


@dataclass(frozen=True)
class WeightCoefficients:
    """Coefficients of lambda+rho, stored doubled so half-integers stay exact."""
    a2: tuple
    b2: tuple

    @property
    def a(self):
        return tuple(Fraction(x, 2) for x in self.a2)

    @property
    def b(self):
        return tuple(Fraction(x, 2) for x in self.b2)

    @classmethod
    def from_values(cls, a, b):
        return cls(tuple(int(2 * Fraction(x)) for x in a),
                   tuple(int(2 * Fraction(x)) for x in b))

    def __str__(self):
        f = lambda x: str(x // 2) if x % 2 == 0 else f"{x}/2"
        return "(" + ",".join(map(f, self.a2)) + "|" + ",".join(map(f, self.b2)) + ")"


def check_hook(gamma, g):
    if gamma.part(g.n + 1) > g.m:
        raise HookViolation(f"{gamma} is not an ({g.n},{g.m})-hook partition")


def sign_required(gamma, g):
    return g.odd or gamma.part(g.n + 1) < g.m


def check_sign(gamma, g):
    need = sign_required(gamma, g)
    if need and gamma.sign is None:
        raise SignContractViolation(f"{gamma} needs a sign for {g}")
    if not need and gamma.sign is not None:
        raise SignContractViolation(f"{gamma} takes no sign for {g}")


def _floors(g):
    # doubled lower bounds for a and b
    return (-1, 1) if g.odd else (0, 0)


def weight_from_hook(gamma, g):
    check_hook(gamma, g)
    fa, fb = _floors(g)
    d = g.delta
    gt = gamma.transpose()
    b2 = tuple(max(2 * gamma.part(j) - 2 * j - d + 2, fb) for j in range(1, g.n + 1))
    a2 = tuple(max(2 * gt.part(i) - 2 * i + d, fa) for i in range(1, g.m + 1))
    w = WeightCoefficients(a2, b2)
    assert is_dominant(w, g), f"non-dominant image of {gamma}"
    return w


def _strict(xs):
    return all(xs[i] > xs[i + 1] for i in range(len(xs) - 1))


def is_dominant(w, g):
    a, b = list(w.a2), list(w.b2)
    if len(a) != g.m or len(b) != g.n:
        return False
    par = 1 if g.odd else 0
    if any(x % 2 != par for x in a + b):
        return False
    m, n = g.m, g.n
    if g.odd:
        if _strict(a) and _strict(b) and all(x >= 1 for x in a) and all(x >= 1 for x in b):
            return True
        for l in range(min(m, n)):
            ta, tb = a[m - l - 1:], b[n - l - 1:]
            ha, hb = a[:m - l - 1], b[:n - l - 1]
            if any(x != -1 for x in ta) or any(x != 1 for x in tb):
                continue
            if _strict(ha) and (not ha or ha[-1] > -1) and _strict(hb) and (not hb or hb[-1] >= 1):
                return True
        return False
    head = a[:-1] if a else []
    if (_strict(head) and (not a or not head or head[-1] > abs(a[-1]))
            and _strict(b) and all(x > 0 for x in b)):
        return True
    for l in range(min(m, n)):
        ta, tb = a[m - l - 1:], b[n - l - 1:]
        ha, hb = a[:m - l - 1], b[:n - l - 1]
        if any(x != 0 for x in ta) or any(x != 0 for x in tb):
            continue
        if _strict(ha) and (not ha or ha[-1] >= 0) and _strict(hb) and (not hb or hb[-1] > 0):
            return True
    return False


def hook_from_weight(w, g):
    if not is_dominant(w, g):
        raise DominanceViolation(f"{w} is not dominant for {g}")
    d = g.delta
    a2 = [abs(x) for x in w.a2] if not g.odd else list(w.a2)
    # doubled lengths: row j from b_j, column i from a_i
    rows = [(w.b2[j - 1] + 2 * j + d - 2) // 2 for j in range(1, g.n + 1)]
    cols = [(a2[i - 1] + 2 * i - d) // 2 for i in range(1, g.m + 1)]
    thr = g.m - g.n + (1 if g.odd else 0)
    boxes = set()
    for j, lj in enumerate(rows, 1):
        for c in range(1, lj + 1):
            if c - j >= thr:
                boxes.add((j, c))
    for i, li in enumerate(cols, 1):
        for r_ in range(1, li + 1):
            if i - r_ < thr:
                boxes.add((r_, i))
    nrows = max((r_ for r_, _ in boxes), default=0)
    parts = []
    for r_ in range(1, nrows + 1):
        lr = 0
        while (r_, lr + 1) in boxes:
            lr += 1
        parts.append(lr)
    if sum(parts) != len(boxes):
        raise DominanceViolation(f"{w} does not come from a hook partition")
    try:
        gamma = HookPartition(tuple(parts))
        back = weight_from_hook(gamma, g)
    except (ParseError, HookViolation):
        raise DominanceViolation(f"{w} does not come from a hook partition")
    want = WeightCoefficients(tuple(a2), w.b2)
    if back != want:
        raise DominanceViolation(f"{w} is outside the image of the hook map")
    return gamma


def s_sequence2(gamma, g, length):
    """Doubled S-sequence entries S_1..S_length."""
    d = g.delta
    return [d + 2 * i - 2 * gamma.part(i) - 2 for i in range(1, length + 1)]


def s_sequence(gamma, g, length=None):
    if length is None:
        length = len(gamma.parts) + 3
    return [Fraction(x, 2) for x in s_sequence2(gamma, g, length)]


@lru_cache(maxsize=None)
def weight_diagram(gamma, g):
    """The hook-type weight gamma^infinity."""
    gamma = gamma.unsigned()
    k = len(gamma.parts)
    d = g.delta
    bound = max(abs(d - 2 * gamma.part(1)), abs(d + 2 * k)) + 4
    length = k + 1
    while d + 2 * length - 2 <= bound + 2:
        length += 1
    s = set(s_sequence2(gamma, g, length))
    labels = []
    idx = 0
    while position2(idx, g.odd) <= bound:
        p = position2(idx, g.odd)
        if p == 0:
            labels.append("D" if 0 in s else "O")
        else:
            up, down = p in s, -p in s
            labels.append("X" if up and down else "^" if up else "v" if down else "O")
        idx += 1
    return DiagrammaticWeight(tuple(labels), "^", g.odd)


def diagonal_boxes(gamma, g):
    """Boxes on the delta/2-shifted diagonal inside the hook."""
    d = g.delta
    beyond = sum(1 for i in range(1, max(len(gamma.parts), g.n) + 1)
                 if 2 * gamma.part(i) > 2 * i + d - 2)
    return beyond - max(0, g.n - g.m)


def tail_length(gamma, g):
    w = weight_diagram(gamma, g)
    s = w.count("v") + w.count("X")
    t1 = g.n - s
    t2 = min(g.m, g.n) - diagonal_boxes(gamma, g)
    assert t1 == t2, f"tail formulas disagree for {gamma} in {g}: {t1} vs {t2}"
    return t1


def freeze(gamma, g):
    """gamma^infinity with the vertices of fake cups marked frozen."""
    w = weight_diagram(gamma, g)
    t = tail_length(gamma, g)
    c = cup_diagram(w)
    dotted = c.dotted_cups()
    frozen = set()
    for l, r, _ in dotted[t:]:
        frozen.update((l, r))
    # the periodic dotted cups start at tail_start; all fake once t is used up
    skip = max(0, t - len(dotted))
    start = c.tail_start + 2 * skip
    return DiagrammaticWeight(w.prefix, w.tail, w.odd, frozenset(frozen), start)


def diamond_weight(gamma, g):
    """gamma^diamond: frozen labels replaced by v (the diamond at 0 stays)."""
    f = freeze(gamma, g)
    n = f.extent()
    labs = []
    for i in range(n):
        lab = f.label(i)
        if f.is_frozen(i) and lab != "D":
            lab = "v"
        labs.append(lab)
    return DiagrammaticWeight(tuple(labs), "v", g.odd)


def d_value(w):
    """Sum over core labels of the number of up/down labels left of them."""
    total = 0
    seen = 0
    for lab in w.prefix:
        if lab in "^v":
            seen += 1
        elif lab in "XO":
            total += seen
    return total


def _flip_first_ray(w):
    c = cup_diagram(w)
    v = c.first_ray()
    assert w.label(v) == "v", "first ray is expected to carry v"
    return w.replace(v, "^")


@lru_cache(maxsize=None)
def super_weight(gamma, g):
    check_hook(gamma, g)
    check_sign(gamma, g)
    base = diamond_weight(gamma, g)
    if gamma.sign is None:
        return base
    sign = gamma.sign
    if g.odd and (d_value(base) + base.count("^")) % 2 == 1:
        sign = "+" if sign == "-" else "-"
    return _flip_first_ray(base) if sign == "+" else base


def core_diagram(w):
    return w.core()


def linked(w1, w2):
    if w1.odd != w2.odd or w1.core() != w2.core() or w1.tail != w2.tail:
        return False
    if w1.has_diamond() or w2.has_diamond():
        return True
    return w1.count("^") % 2 == w2.count("^") % 2


def defect(w, g):
    dfc = g.n - w.count("X")
    assert dfc == cup_diagram(w).num_cups(), f"defect and cup count differ for {w}"
    return dfc


def signs_for(gamma, g):
    """All sign decorations allowed for the underlying partition."""
    return ("+", "-") if sign_required(gamma, g) else (None,)


def hook_partitions(g, max_size, max_rows=None, max_cols=None):
    """All (n,m)-hook partitions with at most max_size boxes."""
    out = []

    def rec(parts, left, cap):
        out.append(HookPartition(tuple(parts)))
        row = len(parts) + 1
        if max_rows is not None and row > max_rows:
            return
        lim = min(cap, left)
        if row > g.n:
            lim = min(lim, g.m)
        for p in range(lim, 0, -1):
            parts.append(p)
            rec(parts, left - p, p)
            parts.pop()

    top = max_size if max_cols is None else min(max_size, max_cols)
    rec([], max_size, top)
    return out


def super_weights(g, max_size):
    """(signed partition, super weight) for every partition up to max_size."""
    out = []
    for gam in hook_partitions(g, max_size):
        for s in signs_for(gam, g):
            gs = gam.with_sign(s)
            out.append((gs, super_weight(gs, g)))
    return out
