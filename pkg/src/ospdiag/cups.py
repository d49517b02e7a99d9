"""Decorated cup diagrams of diagrammatic weights."""
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidDiagram
from .labels import DiagrammaticWeight


@dataclass(frozen=True)
class CupDiagram:
    cups: tuple          # (left, right, dotted), sorted by left end
    rays: tuple          # (vertex, dotted), explicit rays left of tail_start
    core: tuple          # (vertex, "X" | "O")
    tail_kind: str       # "ray", "dotted_cups" or "core"
    tail_start: int
    odd: bool

    def __post_init__(self):
        cups = sorted(tuple(c) for c in self.cups)
        rays = sorted(tuple(r) for r in self.rays)
        core = sorted(tuple(c) for c in self.core)
        start = self.tail_start
        # canonical: absorb trailing explicit items into the tail motif
        if self.tail_kind == "ray":
            while rays and rays[-1] == (start - 1, False):
                rays.pop()
                start -= 1
        elif self.tail_kind == "dotted_cups":
            while cups and cups[-1] == (start - 2, start - 1, True):
                cups.pop()
                start -= 2
        elif self.tail_kind == "core":
            while core and core[-1] == (start - 1, "O"):
                core.pop()
                start -= 1
        else:
            raise InvalidDiagram(f"unknown tail kind {self.tail_kind!r}")
        object.__setattr__(self, "cups", tuple(cups))
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "core", tuple(core))
        object.__setattr__(self, "tail_start", start)

    def extent(self):
        return self.tail_start

    def num_cups(self):
        if self.tail_kind == "dotted_cups":
            raise ValueError("hook-type diagram has infinitely many cups")
        return len(self.cups)

    def dotted_cups(self):
        return [c for c in self.cups if c[2]]

    def dotted_cup_at(self, k):
        """k-th dotted cup from the left, including the periodic tail."""
        explicit = self.dotted_cups()
        if k < len(explicit):
            return explicit[k]
        if self.tail_kind != "dotted_cups":
            return None
        s = self.tail_start + 2 * (k - len(explicit))
        return (s, s + 1, True)

    def first_ray(self):
        cands = [v for v, _ in self.rays]
        if self.tail_kind == "ray":
            cands.append(self.tail_start)
        return min(cands) if cands else None

    def attachments(self, count):
        """Per-vertex attachment for vertices < count.

        ("cup", partner, dotted) | ("ray", dotted) | ("core", label)
        """
        out = [None] * count

        def put(v, item):
            if v < count:
                if out[v] is not None:
                    raise InvalidDiagram(f"vertex {v} used twice")
                out[v] = item

        for l, r, d in self.cups:
            put(l, ("cup", r, d))
            put(r, ("cup", l, d))
        for v, d in self.rays:
            put(v, ("ray", d))
        for v, lab in self.core:
            put(v, ("core", lab))
        for v in range(self.tail_start, count):
            if self.tail_kind == "ray":
                put(v, ("ray", False))
            elif self.tail_kind == "core":
                put(v, ("core", "O"))
            else:
                k = (v - self.tail_start) % 2
                put(v, ("cup", v + 1 if k == 0 else v - 1, True))
        for v in range(min(count, self.tail_start)):
            if out[v] is None:
                raise InvalidDiagram(f"vertex {v} carries nothing")
        return out

    def to_json(self):
        return {
            "cups": [[l, r, d] for l, r, d in self.cups],
            "rays": [[v, d] for v, d in self.rays],
            "ray_tail_start": self.tail_start if self.tail_kind == "ray" else None,
            "tail_kind": self.tail_kind,
            "tail_start": self.tail_start,
            "core": {str(v): lab for v, lab in self.core},
        }

    def ascii(self, labels=None, width=None):
        n = width or self.tail_start + 2
        att = self.attachments(n)
        top = []
        bot = []
        for v in range(n):
            a = att[v]
            lab = labels[v] if labels else " "
            top.append(f" {lab} ")
            if a[0] == "core":
                bot.append(f" {a[1]} " if not labels else "   ")
            elif a[0] == "ray":
                bot.append(" * " if a[1] else " | ")
            else:
                partner, dotted = a[1], a[2]
                if partner > v:
                    bot.append(" (*" if dotted else " ( ")
                else:
                    bot.append(" ) ")
        tail = {"ray": " | ...", "core": " O ...", "dotted_cups": " (*)..."}[self.tail_kind]
        return "".join(top).rstrip() + " ...\n" + "".join(bot) + tail

    def __str__(self):
        return self.ascii()


@lru_cache(maxsize=None)
def cup_diagram(w):
    labels = list(w.prefix)
    # fix the diamond so that #up is odd (or infinite)
    if labels and labels[0] == "D":
        if w.tail == "^":
            labels[0] = "^"
        else:
            ups = sum(1 for x in labels if x == "^")
            labels[0] = "^" if ups % 2 == 0 else "v"
    if w.tail == "^":
        labels += ["^"] * sum(1 for x in labels if x == "v")
    # neighbouring down-up pairs, one stack pass
    stack, cups, lone_ups, core = [], [], [], []
    for i, lab in enumerate(labels):
        if lab in "XO":
            core.append((i, lab))
        elif lab == "v":
            stack.append(i)
        elif stack:
            cups.append((stack.pop(), i, False))
        else:
            lone_ups.append(i)
    # leftover downs get rays
    rays = [(i, False) for i in stack]
    n = len(labels)
    if w.tail == "^":
        if len(lone_ups) % 2:
            lone_ups.append(n)
            n += 1
        tail_kind = "dotted_cups"
    else:
        tail_kind = "ray" if w.tail == "v" else "core"
    # pair the remaining ups into dotted cups, a single one gets a dotted ray
    for k in range(0, len(lone_ups) - 1, 2):
        cups.append((lone_ups[k], lone_ups[k + 1], True))
    if len(lone_ups) % 2:
        rays.append((lone_ups[-1], True))
    return CupDiagram(tuple(cups), tuple(rays), tuple(core), tail_kind, n, w.odd)


def weight_of_cup(c):
    """The unique weight whose cup diagram is c (degree-zero labels everywhere)."""
    n = c.tail_start
    att = c.attachments(n)
    labels = []
    for v, a in enumerate(att):
        if a[0] == "core":
            labels.append(a[1])
        elif a[0] == "ray":
            labels.append("^" if a[1] else "v")
        else:
            partner, dotted = a[1], a[2]
            if dotted:
                labels.append("^")
            else:
                labels.append("v" if partner > v else "^")
    if not c.odd and (not att or att[0][0] != "core"):
        if labels:
            labels[0] = "D"
        else:
            labels = ["D"]
    tail = {"ray": "v", "dotted_cups": "^", "core": "O"}[c.tail_kind]
    if not c.odd and c.tail_start == 0 and tail != "O":
        labels = ["D"]
    w = DiagrammaticWeight(tuple(labels), tail, c.odd)
    if cup_diagram(w) != c:
        raise InvalidDiagram("no weight produces this cup diagram")
    return w


def cup_equal(c1, c2):
    return c1 == c2
