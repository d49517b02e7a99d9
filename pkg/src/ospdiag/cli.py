"""ospdiag command line.

    ospdiag --group 3,2 weight --partition "2,1" --sign +
    ospdiag --group 4,4 cartan --seed "(0|0)+" --window 6 --format csv
    ospdiag brauer "[(-1,1),(-2,3),(-3,-4),(2,4)]" "[(1,2),(3,4),(-1,-3),(-2,-4)]"

Exit status: 0 ok, 2 bad input, 1 internal failure.
"""
import argparse
import contextlib
import csv
import io
import json
import os
import re
import shlex
import sys
from fractions import Fraction
from pathlib import Path

from . import blocks, brauer, circles, gs
from .cups import cup_diagram
from .errors import OspError, ParseError
from .labels import parse_weight
from .weights import (GroupParams, HookPartition, WeightCoefficients, defect,
                      hook_from_weight, hook_partitions, super_weight, tail_length,
                      weight_diagram, weight_from_hook, freeze)

FORMATS = ("ascii", "json", "csv", "dot")


def parse_group(text):
    """`r,2n` as in OSp(r|2n), or `m,n,odd|even`."""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 2:
            r, two_n = int(parts[0]), int(parts[1])
            if r < 0 or two_n < 0:
                raise ValueError
            return GroupParams.from_osp(r, two_n)
        if len(parts) == 3 and parts[2] in ("odd", "even"):
            return GroupParams(int(parts[0]), int(parts[1]), parts[2] == "odd")
    except ValueError:
        pass
    raise ParseError(f"bad group {text!r}; use r,2n or m,n,odd|even", "GroupParams")


def parse_partition(text, sign=None):
    s = text.strip()
    if s and s[-1] in "+-":
        if sign is not None and sign != s[-1]:
            raise ParseError(f"conflicting signs in {text!r}")
        sign, s = s[-1], s[:-1].strip()
    if s in ("", "empty", "0", "()"):
        return HookPartition((), sign)
    s = s.strip("()")
    try:
        parts = tuple(int(p) for p in s.split(",") if p.strip())
    except ValueError:
        raise ParseError(f"malformed partition {text!r}", "HookPartition: comma-separated parts")
    return HookPartition(parts, sign)


def _frac_list(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            try:
                out.append(Fraction(tok))
            except ValueError:
                raise ParseError(f"bad coefficient {tok!r}")
    return out


def parse_seed(text, g):
    """Returns (signed partition or None, super weight)."""
    s = text.strip()
    if "*" in s:
        return None, parse_weight(s, g.odd)
    m = re.fullmatch(r"\(([^|]*)\|([^)]*)\)\s*([+-]?)", s)
    if m:
        a, b = _frac_list(m.group(1)), _frac_list(m.group(2))
        if len(a) > g.m or len(b) > g.n:
            raise ParseError(f"too many coefficients in {text!r} for {g}")
        a += [Fraction(0)] * (g.m - len(a))
        b += [Fraction(0)] * (g.n - len(b))
        rho = weight_from_hook(HookPartition(()), g)
        w = WeightCoefficients(tuple(int(2 * x) + y for x, y in zip(a, rho.a2)),
                               tuple(int(2 * x) + y for x, y in zip(b, rho.b2)))
        gam = hook_from_weight(w, g).with_sign(m.group(3) or None)
    else:
        gam = parse_partition(s)
    return gam, super_weight(gam, g)


def _color(text):
    if os.environ.get("OSPDIAG_COLOR", "0") == "1":
        return text.replace("*", "\x1b[31m*\x1b[0m")
    return text


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _need_group(args):
    if getattr(args, "group", None) is None:
        raise ParseError("this command needs --group", "JobSpec: group required")
    return args.group


def _window(args, g):
    if not args.seed:
        raise ParseError("--seed is required", "JobSpec: seed required")
    if args.window is None:
        raise ParseError("--window is required", "JobSpec: window required")
    _, seed = parse_seed(args.seed, g)
    return blocks.block_weights(seed, args.window, g)


def cmd_weight(args, out):
    g = _need_group(args)
    gam = parse_partition(args.partition or "", args.sign)
    w = super_weight(gam, g)
    if args.format == "json":
        out.write(_dump({
            "group": str(g), "partition": list(gam.parts), "sign": gam.sign,
            "coefficients": str(weight_from_hook(gam.unsigned(), g)),
            "weight_infinity": weight_diagram(gam.unsigned(), g).to_text(),
            "frozen": freeze(gam.unsigned(), g).to_text(),
            "super_weight": w.to_text(),
            "tail_length": tail_length(gam.unsigned(), g),
            "defect": defect(w, g),
        }))
    else:
        out.write(w.to_text() + "\n")


def cmd_cup(args, out):
    g = _need_group(args)
    if args.weight:
        w = parse_weight(args.weight, g.odd)
    elif args.seed:
        _, w = parse_seed(args.seed, g)
    else:
        w = super_weight(parse_partition(args.partition or "", args.sign), g)
    c = cup_diagram(w)
    if args.format == "json":
        out.write(_dump(c.to_json()))
    else:
        out.write(_color(c.ascii(w.labels(c.extent() + 2))) + "\n")


def _two(args, g):
    if len(args.weights) != 2:
        raise ParseError("give exactly two weights", "JobSpec: arity 2")
    return [parse_seed(t, g)[1] for t in args.weights]


def cmd_circle(args, out):
    g = _need_group(args)
    lam, mu = _two(args, g)
    cd = circles.circle_diagram(lam, mu)
    comps = circles.components(cd)
    ors = circles.orientations(cd)
    if args.format == "json":
        out.write(_dump({
            "components": [{"kind": c.kind, "vertices": list(c.vertices), "dots": c.dots,
                            "propagating": c.propagating} for c in comps],
            "nuclear": circles.is_nuclear(cd),
            "orientations": [{"middle": o.middle.to_text(), "degree": o.degree} for o in ors],
        }))
        return
    out.write(_color(cd.ascii()) + "\n")
    for c in comps:
        extra = "" if c.kind == "circle" else (" propagating" if c.propagating else " non-propagating")
        out.write(f"{c.kind} {list(c.vertices)} dots={c.dots}{extra}\n")
    out.write(f"nuclear: {circles.is_nuclear(cd)}\n")
    for o in ors:
        out.write(f"{o.middle.to_text()}  deg {o.degree}\n")


def cmd_hom(args, out):
    g = _need_group(args)
    lam, mu = _two(args, g)
    p = circles.hom_poly(lam, mu)
    if args.format == "json":
        out.write(_dump({"poly": p.to_json(), "dim": p.at_one(), "text": str(p)}))
    else:
        out.write(f"{p}\n")


def cmd_block(args, out):
    g = _need_group(args)
    win = _window(args, g)
    if args.format == "json":
        out.write(_dump({"weights": [{"name": str(n), "weight": w.to_text()}
                                     for n, w in zip(win.names, win.weights)]}))
    elif args.format == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(["name", "weight"])
        for n, w in zip(win.names, win.weights):
            wr.writerow([str(n), w.to_text()])
    else:
        for n, w in zip(win.names, win.weights):
            out.write(f"{str(n):<16} {w.to_text()}\n")


def cmd_cartan(args, out):
    g = _need_group(args)
    win = _window(args, g)
    mat = blocks.cartan(win) if args.ungraded else blocks.graded_cartan(win)
    if args.format == "csv":
        out.write(blocks.matrix_csv(win, mat))
    elif args.format == "json":
        cell = (lambda x: x) if args.ungraded else (lambda p: str(p))
        out.write(_dump({"names": [str(n) for n in win.names],
                         "matrix": [[cell(x) for x in row] for row in mat]}))
    else:
        width = max(len(str(x)) for row in mat for x in row) + 2
        names = [str(n) for n in win.names]
        nw = max(len(n) for n in names) + 2
        out.write(" " * nw + "".join(f"{n:>{width}}" for n in names) + "\n")
        for n, row in zip(names, mat):
            out.write(f"{n:<{nw}}" + "".join(f"{str(x):>{width}}" for x in row) + "\n")


def cmd_quiver(args, out):
    g = _need_group(args)
    win = _window(args, g)
    if args.format == "dot":
        out.write(blocks.quiver_dot(win))
        return
    verts, arrows = blocks.quiver(win)
    if args.format == "json":
        out.write(_dump({"vertices": [str(v) for v in verts],
                         "arrows": [[str(verts[i]), str(verts[j]), k] for i, j, k in arrows]}))
    else:
        for i, j, k in arrows:
            out.write(f"{verts[i]} -> {verts[j]}" + (f" x{k}" if k > 1 else "") + "\n")


def cmd_census(args, out):
    g = _need_group(args)
    win = _window(args, g)
    touch = None
    if args.touch is not None:
        touch = set(range(args.touch))
    res = blocks.basis_census(win, touch)
    if args.format == "json":
        out.write(_dump({str(d): {"non_nuclear": a, "nuclear": b} for d, (a, b) in res.items()}))
    else:
        out.write("degree,non_nuclear,nuclear\n")
        for d, (a, b) in res.items():
            out.write(f"{d},{a},{b}\n")


def cmd_gs_verify(args, out):
    g = _need_group(args)
    if args.partition:
        cases = [parse_partition(args.partition)]
    else:
        cases = hook_partitions(g, args.max_size)
    failed = 0
    rows = []
    for gam in cases:
        res = gs.gses_check(gam, g)
        ok = all(res.values())
        failed += not ok
        rows.append({"partition": str(gam.unsigned()), **res})
    if args.format == "json":
        out.write(_dump({"checked": len(rows), "failed": failed, "cases": rows}))
    else:
        for r in rows:
            if not all(r[k] for k in ("weight", "cups", "coloured")) or args.partition:
                out.write(f"{r['partition']}: weight={r['weight']} cups={r['cups']} "
                          f"coloured={r['coloured']}\n")
        out.write(f"checked {len(rows)}, failed {failed}\n")
    if failed:
        raise AssertionError(f"{failed} GS comparisons failed")


def cmd_brauer(args, out):
    if len(args.diagrams) != 2:
        raise ParseError("give exactly two diagrams", "JobSpec: arity 2")
    d1, d2 = (brauer.parse_diagram(t) for t in args.diagrams)
    loops, prod = brauer.compose(d1, d2)
    delta = Fraction(args.delta) if args.delta is not None else None
    coeff = brauer._loop_factor(loops, delta)
    if args.format == "json":
        out.write(_dump({"loops": loops, "diagram": [list(p) for p in prod.pairs],
                         "coefficient": str(coeff)}))
    else:
        out.write(f"{coeff} * {prod}\n")
        if args.format == "ascii":
            out.write(prod.ascii() + "\n")


def cmd_batch(args, out):
    path = Path(args.file)
    lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    report = []
    for k, ln in enumerate(lines):
        try:
            job = json.loads(ln)
            argv = job["args"] if isinstance(job["args"], list) else shlex.split(job["args"])
        except (ValueError, KeyError, TypeError) as e:
            report.append({"job": k, "status": 2, "ok": False, "error": f"bad job line: {e}"})
            continue
        buf = io.StringIO()
        status = run(argv, buf)
        ok = status == job.get("status", 0)
        exp = job.get("expected")
        if exp is not None:
            p = (path.parent / exp) if not exp.endswith("\n") else None
            want = p.read_text() if p is not None and p.exists() else exp
            ok = ok and buf.getvalue() == want
        report.append({"job": k, "status": status, "ok": ok})
    failed = sum(1 for r in report if not r["ok"])
    out.write(_dump({"jobs": len(report), "failed": failed, "results": report}))
    return 1 if failed else 0


COMMANDS = {
    "weight": cmd_weight, "cup": cmd_cup, "circle": cmd_circle, "hom": cmd_hom,
    "block": cmd_block, "cartan": cmd_cartan, "quiver": cmd_quiver, "census": cmd_census,
    "gs-verify": cmd_gs_verify, "brauer": cmd_brauer, "batch": cmd_batch,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, "JobSpec: command line")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--group", type=parse_group, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--window", type=int)
    common.add_argument("--seed")
    common.add_argument("--partition")
    common.add_argument("--sign", choices=("+", "-"))
    common.add_argument("--delta")
    p = _Parser(prog="ospdiag", description="Diagrammatics for OSp(r|2n) projectives.")
    p.add_argument("--group", type=parse_group)
    p.add_argument("--format", choices=FORMATS, default="ascii")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("weight", parents=[common])
    sp = sub.add_parser("cup", parents=[common])
    sp.add_argument("--weight")
    for name in ("circle", "hom"):
        sub.add_parser(name, parents=[common]).add_argument("weights", nargs="*")
    for name in ("block", "quiver"):
        sub.add_parser(name, parents=[common])
    sub.add_parser("cartan", parents=[common]).add_argument("--ungraded", action="store_true")
    sub.add_parser("census", parents=[common]).add_argument("--touch", type=int)
    sp = sub.add_parser("gs-verify", parents=[common])
    sp.add_argument("--max-size", type=int, default=6)
    sub.add_parser("brauer", parents=[common]).add_argument("diagrams", nargs="*")
    sub.add_parser("batch").add_argument("file")
    return p


def run(argv, out=None):
    out = out if out is not None else sys.stdout
    buf = io.StringIO()
    try:
        with contextlib.redirect_stderr(io.StringIO()):
            args = build_parser().parse_args(argv)
        status = COMMANDS[args.command](args, buf) or 0
    except OspError as e:
        out.write(buf.getvalue())
        out.write(f"error: {e} [invariant: {e.invariant}]\n")
        return 2
    except (AssertionError, RecursionError) as e:
        out.write(buf.getvalue())
        out.write(f"internal error: {e}\n")
        return 1
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    out.write(buf.getvalue())
    return status


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
