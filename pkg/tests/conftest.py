import json
from pathlib import Path

import pytest

from ospdiag.weights import GroupParams, HookPartition

GOLDEN = Path(__file__).parent / "golden"
SCHEMAS = Path(__file__).parent.parent / "schema" / "v1"


def load_golden(name):
    return json.loads((GOLDEN / f"{name}.json").read_text())


def group(triple):
    m, n, odd = triple
    return GroupParams(m, n, odd)


def hp(parts, sign=None):
    return HookPartition(tuple(parts), sign)


def seen(w, n, cups=None):
    """Labels, cups and rays of a weight restricted to the first n vertices."""
    from ospdiag.cups import cup_diagram
    c = cups if cups is not None else cup_diagram(w)
    att = c.attachments(n)
    cs = sorted([v, a[1], a[2]] for v, a in enumerate(att)
                if a[0] == "cup" and v < a[1] < n)
    rays = sorted([v, a[1]] for v, a in enumerate(att) if a[0] == "ray")
    labels = [f"({w.label(i)})" if w.is_frozen(i) else w.label(i) for i in range(n)]
    return labels, cs, rays


@pytest.fixture
def golden():
    return load_golden


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
