"""Comparisons of the library against the extracted reference tables.

Each check returns a list of human readable mismatches; empty means equal.
"""
import re

from ospdiag.cups import cup_diagram
from ospdiag.laurent import LaurentPoly
from ospdiag.weights import (HookPartition, defect, diamond_weight, freeze, s_sequence2,
                             signs_for, super_weight, tail_length)

from conftest import group, load_golden, seen


def _picture(w, c, pic):
    got = seen(w, len(pic["labels"]), c)
    want = (pic["labels"], pic["cups"], pic["rays"])
    return got == want, got


def check_hugeexample():
    bad = []
    for row in load_golden("hugeexample"):
        g, gam = group(row["group"]), HookPartition(tuple(row["partition"]))
        if s_sequence2(gam, g, len(row["s_sequence2"])) != row["s_sequence2"]:
            bad.append(f"{g} {gam}: S-sequence")
        for pic in row["pictures"]:
            w = super_weight(gam.with_sign(pic["sign"]), g)
            ok, got = _picture(w, cup_diagram(w), pic)
            if not ok:
                bad.append(f"{g} ({gam},{pic['sign']}): got {got}, table {pic}")
    return bad


def check_huge():
    bad = []
    for row in load_golden("huge"):
        g, gam = group(row["group"]), HookPartition(tuple(row["partition"]))
        ok, got = _picture(freeze(gam, g), cup_diagram(diamond_weight(gam, g)), row)
        if not ok:
            bad.append(f"{g} {gam}: got {got}")
        if tail_length(gam, g) != row["tail"]:
            bad.append(f"{g} {gam}: tail {tail_length(gam, g)} != {row['tail']}")
        s = signs_for(gam, g)[0]
        d = defect(super_weight(gam.with_sign(s), g), g)
        if d != row["defect"]:
            bad.append(f"{g} {gam}: defect {d} != {row['defect']}")
    return bad


def check_klassisch():
    tab = load_golden("klassisch")
    g = group(tab["group"])
    bad = []
    for row in tab["rows"]:
        for sign, key in (("+", "plus"), ("-", "minus")):
            w = super_weight(HookPartition(tuple(row["partition"]), sign), g)
            if w.labels(len(row[key])) != row[key]:
                bad.append(f"{row['partition']}{sign}: {w.labels(len(row[key]))}")
    # the printed generic shape for (1^a, +-)
    for a in range(1, 9):
        for sign, key in (("+", "plus"), ("-", "minus")):
            first = tab["generic"]["odd" if a % 2 else "even"][key]
            want = first + ["v"] * (a - 1) + ["O"] + ["v"] * 4
            w = super_weight(HookPartition((1,) * a, sign), g)
            if w.labels(len(want)) != want:
                bad.append(f"(1^{a}){sign}: {w.labels(len(want))}")
    return bad


def check_osp32():
    bad = []
    for row in load_golden("osp32"):
        g, gam = group(row["group"]), HookPartition(tuple(row["partition"]))
        if s_sequence2(gam, g, len(row["s_sequence2"])) != row["s_sequence2"]:
            bad.append(f"{gam}: S-sequence")
        f = freeze(gam, g)
        if seen(f, len(row["infinity"]), cup_diagram(f))[0] != row["infinity"]:
            bad.append(f"{gam}: infinity weight")
        for pic in row["pictures"]:
            w = super_weight(gam.with_sign(pic["sign"]), g)
            ok, got = _picture(w, cup_diagram(w), pic)
            if not ok:
                bad.append(f"({gam},{pic['sign']}): got {got}")
    return bad


def bigtable_partition(index, sign):
    if index <= 4:
        return HookPartition((index,) + (1,) * index if index else (), sign)
    return HookPartition({5: (2, 2, 2), 6: (3, 2, 2, 1)}[index], sign)


def table_entry(token):
    """Read an entry like "E(q)", "q^2[2]" or "0" using the printed legend."""
    two = LaurentPoly.monomial(-1) + LaurentPoly.monomial(1)
    value = LaurentPoly.const(1)
    for f in re.findall(r"E\(q\)|\[2\]|q\^-?\d+|\d+", token):
        if f == "E(q)":
            value = value * LaurentPoly.monomial(2) * two * two
        elif f == "[2]":
            value = value * two
        elif f.startswith("q"):
            value = value * LaurentPoly.monomial(int(f[2:]))
        else:
            value = value * LaurentPoly.const(int(f))
    return value


def seed_text(name):
    body = ",".join(map(str, name.parts)) or "empty"
    return body + (name.sign or "")


def check_cupdiag():
    bad = []
    for row in load_golden("cupdiag"):
        g = group(row["group"])
        w = super_weight(bigtable_partition(row["index"], row["sign"]), g)
        ok, got = _picture(w, cup_diagram(w), row)
        if not ok:
            bad.append(f"lambda_{row['index']}{row['sign']}: got {got}")
    return bad


def check_empty():
    bad = []
    for row in load_golden("empty"):
        g = group(row["group"])
        f = freeze(HookPartition(()), g)
        width = row["width"]
        labels, _, _ = seen(f, len(row["labels"]), cup_diagram(f))
        _, cups, _ = seen(f, width, cup_diagram(f))
        if labels != row["labels"] or cups != row["cups"]:
            bad.append(f"{g}: got {labels} {cups}")
    return bad


TABLES = {
    "hugeexample": check_hugeexample, "huge": check_huge, "klassisch": check_klassisch,
    "osp32": check_osp32, "cupdiag": check_cupdiag, "empty": check_empty,
}
