import io
import json

import jsonschema
import pytest
from referencing import Registry, Resource

from ospdiag import cli, gs
from ospdiag.laurent import LaurentPoly

from conftest import SCHEMAS, load_golden
from tables import bigtable_partition, seed_text, table_entry


def run(*argv):
    out = io.StringIO()
    status = cli.run(list(argv), out)
    return status, out.getvalue()


def _registry():
    reg = Registry()
    for f in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(f.read_text())
        reg = reg.with_resource(doc["$id"], Resource.from_contents(doc))
    return reg


REGISTRY = _registry()


def validate(obj, name):
    doc = REGISTRY.contents(f"{name}.schema.json")
    jsonschema.Draft202012Validator(doc, registry=REGISTRY).validate(obj)


def test_weight_example():
    assert run("--group", "3,2", "weight", "--partition", "2,1", "--sign", "+") == (0, "v v ^ v*\n")
    assert run("--group", "1,1,odd", "weight", "--partition", "2,1+")[1] == "v v ^ v*\n"


@pytest.mark.parametrize("argv,name", [
    (["--group", "7,4", "--format", "json", "weight", "--partition", "2,2", "--sign", "-"], "weight"),
    (["--group", "3,2", "--format", "json", "cup", "--partition", "1+"], "cup"),
    (["--group", "3,2", "--format", "json", "circle", "empty+", "3,1,1+"], "circle"),
    (["--group", "4,4", "--format", "json", "hom", "empty+", "1,1+"], "hom"),
    (["--group", "3,2", "--format", "json", "cartan", "--seed", "empty+", "--window", "4"], "cartan"),
    (["--group", "3,2", "--format", "json", "cartan", "--ungraded", "--seed", "empty+",
      "--window", "4"], "cartan"),
    (["--group", "3,2", "--format", "json", "quiver", "--seed", "empty+", "--window", "5"], "quiver"),
    (["--group", "3,2", "--format", "json", "census", "--seed", "empty+", "--window", "5",
      "--touch", "4"], "census"),
    (["--format", "json", "brauer", "[(1,2),(-1,-2)]", "[(1,2),(-1,-2)]"], "brauer"),
])
def test_json_outputs_validate(argv, name):
    status, text = run(*argv)
    assert status == 0, text
    validate(json.loads(text), name)


def test_census_counts():
    status, text = run("--group", "3,2", "census", "--seed", "empty+", "--window", "5", "--touch", "4")
    assert text == "degree,non_nuclear,nuclear\n0,4,0\n1,8,0\n2,4,2\n"


def test_brauer_example():
    status, text = run("brauer", "[(-1,1),(-2,3),(-3,-4),(2,4)]", "[(1,2),(3,4),(-1,-3),(-2,-4)]",
                       "--delta", "-3", "--format", "csv")
    assert (status, text) == (0, "-3 * [(-2,-4),(-1,-3),(1,3),(2,4)]\n")


def test_gs_verify():
    status, text = run("--group", "2,2,odd", "gs-verify", "--max-size", "5")
    assert status == 0 and text.endswith("failed 0\n")


@pytest.mark.parametrize("argv,invariant", [
    (["--group", "3,2", "weight", "--partition", "2,2", "--sign", "+"], "part n+1 must be <= m"),
    (["--group", "3,2", "weight", "--partition", "1"], "sign present iff required"),
    (["--group", "4,4", "weight", "--partition", "2,2,2", "--sign", "+"], "sign present iff required"),
    (["--group", "3,2", "weight", "--partition", "1,2+"], "weakly decreasing parts"),
    (["--group", "3,2", "hom", "empty+"], "arity 2"),
    (["--group", "3,2", "circle", "1+", "2+"], "bottom.core = top.core"),
    (["weight", "--partition", "1+"], "group required"),
    (["--group", "x", "weight"], "GroupParams"),
    (["brauer", "[(1,1)]", "[(1,-1)]"], "every point matched exactly once"),
    (["--group", "3,2", "frobnicate"], "command line"),
])
def test_input_errors_exit_2(argv, invariant):
    status, text = run(*argv)
    assert status == 2
    assert text.startswith("error:") and invariant in text


def test_internal_failure_exit_1(monkeypatch):
    monkeypatch.setattr(gs, "gses_check", lambda gam, g: {"weight": False, "cups": True,
                                                         "coloured": True})
    status, text = run("--group", "3,2", "gs-verify", "--partition", "1")
    assert status == 1 and "internal error" in text


def test_deterministic():
    argv = ["--group", "4,4", "cartan", "--seed", "(0|0)+", "--window", "6", "--format", "csv"]
    assert run(*argv) == run(*argv)


def test_color(monkeypatch):
    argv = ["--group", "3,2", "cup", "--partition", "empty+"]
    plain = run(*argv)[1]
    monkeypatch.setenv("OSPDIAG_COLOR", "1")
    assert "\x1b[31m" in run(*argv)[1] and "\x1b" not in plain


def test_empty_batch(tmp_path):
    f = tmp_path / "jobs.jsonl"
    f.write_text("")
    status, text = run("batch", str(f))
    assert status == 0
    assert json.loads(text) == {"jobs": 0, "failed": 0, "results": []}


def test_malformed_job(tmp_path):
    f = tmp_path / "jobs.jsonl"
    f.write_text('{"args": ["brauer", "[(1,2),(-1,-2)]", "[(1,-1),(2,-2)]"]}\n{"args": \n')
    status, text = run("batch", str(f))
    report = json.loads(text)
    validate(report, "batch_report")
    assert status == 1 and report["failed"] == 1 and report["results"][0]["ok"]


def _labels_text(labels):
    while labels and labels[-1] == "v":
        labels = labels[:-1]
    return " ".join(labels + ["v*"]) + "\n"


def golden_jobs(tmp_path):
    jobs = []
    big = load_golden("bigtable")
    names = [seed_text(bigtable_partition(i, s)) for i, s in big["columns"]]
    for a, row in zip(names, big["rows"]):
        for b, tok in zip(names, row["entries"]):
            jobs.append({"args": ["--group", "4,4", "hom", a, b], "expected": f"{table_entry(tok)}\n"})
    # P(a) in OSp(3|2) has highest weight (a|a-1), (0|0) for a = 0
    seeds = ["(0|0)+"] + [f"({a}|{a - 1})+" for a in range(1, 6)]
    for i, layers in enumerate(load_golden("pims")["quotient"]):
        for j, b in enumerate(seeds):
            p = LaurentPoly()
            for k, layer in enumerate(layers):
                p = p + LaurentPoly.monomial(k, layer.count(j))
            jobs.append({"args": ["--group", "3,2", "hom", seeds[i], b], "expected": f"{p}\n"})
    labels = ["empty+"] + [f"{a}{',1' * (a - 1)}+" for a in range(1, 6)]
    dot = ["digraph block {"] + [f'  n{i} [label="{v}"];' for i, v in enumerate(labels)]
    dot += [f"  n{i} -> n{j};" for i, j in load_golden("quiver")["arrows"]]
    (tmp_path / "quiver.dot").write_text("\n".join(dot + ["}"]) + "\n")
    jobs.append({"args": "--group 3,2 quiver --seed empty+ --window 6 --format dot",
                 "expected": "quiver.dot"})
    for row in load_golden("osp32"):
        for pic in row["pictures"]:
            part = ",".join(map(str, row["partition"])) or "empty"
            jobs.append({"args": ["--group", "3,2", "weight", "--partition", part + pic["sign"]],
                         "expected": _labels_text(pic["labels"])})
    for row in load_golden("klassisch")["rows"]:
        part = ",".join(map(str, row["partition"])) or "empty"
        for sign, key in (("+", "plus"), ("-", "minus")):
            jobs.append({"args": ["--group", "3,0", "weight", "--partition", part + sign],
                         "expected": _labels_text(row[key])})
    return jobs


def test_golden_batch(tmp_path):
    jobs = golden_jobs(tmp_path)
    for job in jobs:
        validate(job, "batch_job")
    f = tmp_path / "golden.jsonl"
    f.write_text("".join(json.dumps(j) + "\n" for j in jobs))
    status, text = run("batch", str(f))
    report = json.loads(text)
    bad = [(jobs[r["job"]]["args"], r) for r in report["results"] if not r["ok"]]
    assert bad == []
    assert status == 0 and report["jobs"] == len(jobs)
