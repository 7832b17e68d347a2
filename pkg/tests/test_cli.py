import json

import pytest

from multirel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def pairs(out):
    return json.loads(out)["pairs"]


def test_eval_domain(capsys):
    code, out, _ = run(capsys, "eval", "--universe", "a,b", "--expr", "d(x)",
                       "--bind", "x=<{(a,∅)}>")
    assert code == 0
    assert pairs(out) == [["a", ["a"]]]


def test_eval_up_closure(capsys):
    code, out, _ = run(capsys, "eval", "--universe", "a,b", "--expr", "x || U",
                       "--bind", "x=<{(a,{a})}>")
    assert pairs(out) == [["a", ["a"]], ["a", ["a", "b"]]]


def test_eval_output_reparses(capsys, tmp_path):
    _, out, _ = run(capsys, "eval", "--universe", "a,b", "--expr", "x . U",
                    "--bind", "x=<{(a,{b}),(b,{})}>")
    f = tmp_path / "r.json"
    f.write_text(out)
    code, out2, _ = run(capsys, "eval", "--expr", "1s . x", "--bind", f"x={f}")
    assert code == 0 and json.loads(out2) == json.loads(out)


@pytest.mark.parametrize("argv", [
    ["eval", "--universe", "a", "--expr", "x +", "--bind", "x=<{}>"],
    ["eval", "--universe", "a", "--expr", "x . y", "--bind", "x=<{}>"],
    ["eval", "--universe", "a,b", "--expr", "p:sub", "--bind", "p=<{(a,{b})}>"],
    ["eval", "--expr", "x", "--bind", "x=missing-file.json"],
    ["check", "--law", "no-such-law"],
    ["check", "--expr", "(w || x) . (y || z) <= (w . y) || (x . z)",
     "--mode", "exhaustive"],
    ["fixpoint", "--op", "star_binary", "--universe", "a", "--input", "<{}>"],
    ["repro"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_check_named_law_holds(capsys):
    code, out, _ = run(capsys, "check", "--law", "c1", "--n", "2", "--mode", "exhaustive")
    assert code == 0
    assert out.startswith("LAW c1 HOLDS")


def test_check_hypothesis_law(capsys):
    code, out, _ = run(capsys, "check", "--law", "cl4", "--n", "2")
    assert code == 0


def test_check_refuted_named_law_is_expected(capsys):
    code, out, _ = run(capsys, "check", "--law", "below-par")
    assert code == 0 and "REFUTED" in out


def test_check_expression_refuted(capsys):
    code, out, _ = run(capsys, "check", "--expr", "x . (y . z) <= (x . y) . z",
                       "--n", "3")
    assert code == 1
    line = out.splitlines()[0]
    assert line.startswith("LAW expr REFUTED ")
    assert set(json.loads(line.split(" ", 3)[3])) == {"x", "y", "z"}


def test_check_in_algebra(capsys):
    code, out, _ = run(capsys, "check", "--law", "dia-seq", "--algebra")
    assert code == 0 and "REFUTED" in out


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "--expr", "x <= x || y")
    assert code == 0 and "REFUTED" in out
    code, out, _ = run(capsys, "hunt", "--expr", "x + y = y + x", "--max-n", "2")
    assert code == 1


def test_fixpoint_star_of_empty(capsys):
    code, out, _ = run(capsys, "fixpoint", "--op", "star", "--universe", "a",
                       "--input", "<{}>")
    res = json.loads(out)
    assert code == 0 and res["iterations"] == 2
    assert res["value"]["pairs"] == [["a", ["a"]]]


def test_fixpoint_omega_example(capsys):
    code, out, _ = run(capsys, "fixpoint", "--op", "omega", "--universe", "a,b,c",
                       "--input", "<{(a,{b,c}),(b,{a})}>")
    assert json.loads(out)["value"]["pairs"] == []


def test_fixpoint_nabla(capsys):
    code, out, _ = run(capsys, "fixpoint", "--op", "nabla", "--universe", "a",
                       "--input", "<{(a,∅)}>")
    assert json.loads(out)["value"]["pairs"] == [["a", ["a"]]]


def test_fixpoint_binary(capsys):
    code, out, _ = run(capsys, "fixpoint", "--op", "omega_binary",
                       "--universe", "a,b,c", "--input", "<{(a,{b,c}),(b,{a})}>",
                       "--rhs", "<{(c,{a})}>")
    assert code == 0
    assert ["c", ["a"]] in json.loads(out)["value"]["pairs"]


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    laws = json.loads(out)
    assert code == 0 and len(laws) >= 90


def test_catalog_run_group(capsys):
    code, out, _ = run(capsys, "catalog", "--run", "--group", "c-monoid")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("0 mismatches")


def test_repro_all(capsys):
    code, out, _ = run(capsys, "repro", "--all")
    lines = out.strip().splitlines()
    assert code == 0
    assert all(l.startswith("PASS") for l in lines[:-1])
    n = len(lines) - 1
    assert lines[-1] == f"# {n}/{n} passed"


def test_repro_single(capsys):
    code, out, _ = run(capsys, "repro", "--name", "upclosed-peleg")
    assert code == 0 and out.startswith("PASS upclosed-peleg")


def test_algebra_command(capsys):
    code, out, _ = run(capsys, "algebra")
    assert code == 0
    assert "HOLDS" in out.strip().splitlines()[-1]


def test_engine_failure_exit_code(monkeypatch, capsys):
    from multirel import cli
    from multirel.fixpoint import FixpointError

    def boom(*a, **k):
        raise FixpointError("cap exceeded")

    monkeypatch.setattr(cli, "lfp", boom)
    code, _, err = run(capsys, "fixpoint", "--op", "star", "--universe", "a",
                       "--input", "<{}>")
    assert code == 3 and "cap exceeded" in err
