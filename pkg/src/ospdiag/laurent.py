"""Integer Laurent polynomials in one variable, stored sparsely."""


class LaurentPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var="q"):
        clean = {}
        for e, c in (coeffs or {}).items():
            if c:
                clean[int(e)] = clean.get(int(e), 0) + int(c)
        self.coeffs = {e: c for e, c in clean.items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exp, coeff=1, var="q"):
        return cls({exp: coeff}, var)

    @classmethod
    def const(cls, c, var="q"):
        return cls({0: c}, var)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def at_one(self):
        return sum(self.coeffs.values())

    def evaluate(self, x):
        # exact for ints and Fractions
        total = 0
        for e, c in self.coeffs.items():
            total += c * (x ** e)
        return total

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    def degrees(self):
        return sorted(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                mono = str(abs(c))
            else:
                pw = self.var if e == 1 else f"{self.var}^{e}"
                mono = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        return {"coeffs": {str(e): c for e, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, obj, var="q"):
        return cls({int(e): c for e, c in obj["coeffs"].items()}, var)

    @classmethod
    def parse(cls, text, var="q"):
        """Inverse of __str__ (accepts the same `1 + 2*q^2 - q^-1` shape)."""
        s = text.replace(" ", "")
        if s == "0":
            return cls({}, var)
        terms = []
        buf = ""
        for i, ch in enumerate(s):
            # a sign starts a new term unless it follows '^'
            if ch in "+-" and i > 0 and s[i - 1] != "^":
                terms.append(buf)
                buf = ch
            else:
                buf += ch
        terms.append(buf)
        out = {}
        for t in terms:
            sign = 1
            if t.startswith("-"):
                sign, t = -1, t[1:]
            elif t.startswith("+"):
                t = t[1:]
            if var not in t:
                c, e = int(t), 0
            else:
                head, _, tail = t.partition(var)
                c = int(head.rstrip("*")) if head else 1
                e = int(tail[1:]) if tail.startswith("^") else 1
            out[e] = out.get(e, 0) + sign * c
        return cls(out, var)


def q(exp=1):
    return LaurentPoly.monomial(exp)


def quantum_two():
    """[2] = q^-1 + q"""
    return LaurentPoly({-1: 1, 1: 1})
