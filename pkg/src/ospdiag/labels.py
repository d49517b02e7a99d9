"""Infinite diagrammatic weights: a finite prefix plus a repeating tail label.

Labels are single characters, the same ones used by the text notation:
X (cross), O (nought), ^ (up), v (down), D (diamond, vertex 0 only).
"""
from dataclasses import dataclass

from .errors import ParseError

LABELS = "XO^vD"
CORE = "XO"
PRETTY = {"X": "×", "O": "∘", "^": "∧", "v": "∨", "D": "◇"}


def position2(idx, odd):
    """Doubled physical position of vertex idx."""
    return 2 * idx + 1 if odd else 2 * idx


@dataclass(frozen=True)
class DiagrammaticWeight:
    prefix: tuple
    tail: str
    odd: bool
    frozen: frozenset = frozenset()
    frozen_from: int = None  # every vertex >= frozen_from is frozen

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if self.tail not in "^vO":
            raise ParseError(f"tail label must be ^, v or O, got {self.tail!r}",
                             "DiagrammaticWeight: tail in {^, v, O}")
        for i, lab in enumerate(prefix):
            if lab not in LABELS:
                raise ParseError(f"unknown label {lab!r}")
            if lab == "D" and (i != 0 or self.odd):
                raise ParseError("D may only sit at vertex 0 and only for even r",
                                 "DiagrammaticWeight: diamond placement")
        while prefix and prefix[-1] == self.tail:
            prefix = prefix[:-1]
        ff = self.frozen_from
        fz = set(self.frozen)
        if ff is not None:
            fz = {i for i in fz if i < ff}
            while ff - 1 in fz:
                fz.discard(ff - 1)
                ff -= 1
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "frozen", frozenset(fz))
        object.__setattr__(self, "frozen_from", ff)

    def label(self, i):
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def labels(self, count):
        return [self.label(i) for i in range(count)]

    def is_frozen(self, i):
        return i in self.frozen or (self.frozen_from is not None and i >= self.frozen_from)

    @property
    def kind(self):
        return {"O": "finite", "^": "hook_type", "v": "super_type"}[self.tail]

    def extent(self):
        """Number of vertices needed to see every non-tail feature."""
        n = len(self.prefix)
        if self.frozen:
            n = max(n, max(self.frozen) + 1)
        if self.frozen_from is not None:
            n = max(n, self.frozen_from)
        return n

    def count(self, lab):
        if lab == self.tail:
            raise ValueError(f"infinitely many {lab!r}")
        return sum(1 for x in self.prefix if x == lab)

    def core(self):
        """Core symbols of the finite prefix as a tuple of (vertex, label)."""
        return tuple((i, x) for i, x in enumerate(self.prefix) if x in CORE)

    def has_diamond(self):
        return bool(self.prefix) and self.prefix[0] == "D"

    def unfrozen(self):
        return DiagrammaticWeight(self.prefix, self.tail, self.odd)

    def replace(self, idx, lab):
        labs = self.labels(max(self.extent(), idx + 1))
        labs[idx] = lab
        return DiagrammaticWeight(tuple(labs), self.tail, self.odd,
                                  self.frozen, self.frozen_from)

    def to_text(self):
        n = self.extent()
        toks = []
        for i in range(n):
            lab = self.label(i)
            toks.append(f"({lab})" if self.is_frozen(i) else lab)
        t = f"({self.tail})" if self.frozen_from is not None else self.tail
        toks.append(t + "*")
        return " ".join(toks)

    def pretty(self):
        return "".join(PRETTY[x] for x in self.prefix) + PRETTY[self.tail] + "…"

    def __str__(self):
        return self.to_text()


def parse_weight(text, odd):
    """Inverse of DiagrammaticWeight.to_text; spaces between labels are optional."""
    s = text.strip()
    if not s.endswith("*"):
        raise ParseError(f"weight {text!r} must end with the repeating label and '*'")
    body = s[:-1].replace(" ", "")
    toks = []
    i = 0
    while i < len(body):
        if body[i] == "(":
            if i + 2 >= len(body) or body[i + 2] != ")":
                raise ParseError(f"bad frozen marker in {text!r}")
            toks.append((body[i + 1], True))
            i += 3
        else:
            toks.append((body[i], False))
            i += 1
    if not toks:
        raise ParseError("empty weight")
    tail, tail_frozen = toks[-1]
    toks = toks[:-1]
    for lab, _ in toks + [(tail, False)]:
        if lab not in LABELS:
            raise ParseError(f"unknown label {lab!r} in {text!r}")
    frozen = frozenset(i for i, (_, f) in enumerate(toks) if f)
    return DiagrammaticWeight(tuple(lab for lab, _ in toks), tail, odd, frozen,
                              len(toks) if tail_frozen else None)
