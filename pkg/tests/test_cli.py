import json


from dncat.cli import main

FAN5 = "p:1-3,p:1-4,p:1-5,s:1:+,s:1:-"
ALL_SPOKES5 = "s:1:+,s:2:+,s:3:+,s:4:+,s:5:+"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--count")
    assert code == 0 and out.strip() == "182"
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--count")
    assert code == 0 and out.strip() == "50"


def test_enumerate_classes_type_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--classes",
                       "--type", "1", "--count")
    assert code == 0 and out.strip() == "15"


def test_enumerate_stream_and_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 50
    assert lines[0].startswith("p:") or lines[0].startswith("s:")
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--json")
    payload = json.loads(out.strip().splitlines()[0])
    assert payload["n"] == 4 and len(payload["edges"]) == 4


def test_edges_listing(capsys):
    code, out, _ = run(capsys, "edges", "--n", "4")
    assert code == 0 and len(out.strip().splitlines()) == 16


def test_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "5", "--edges", FAN5, "--dot")
    assert code == 0
    assert "1 -> 2;" in out and "2 -> 3;" in out
    assert "3 -> 4;" in out and "3 -> 5;" in out
    assert '[label="p:1-3"]' in out


def test_quiver_all_spokes_cycle(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "5", "--edges", ALL_SPOKES5)
    assert code == 0
    payload = json.loads(out)
    assert len(payload["arrows"]) == 5
    assert ["s:5:+", "s:1:+"] in payload["arrows"]


def test_quiver_relations_attached(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "5", "--edges", FAN5,
                       "--json", "--relations")
    payload = json.loads(out)
    assert code == 0 and payload["relations"] == {
        "zeroPaths": [], "commutativityPairs": []}


def test_quiver_invalid_edge_exits_3(capsys):
    code, _, err = run(capsys, "quiver", "--n", "5",
                       "--edges", "p:1-2,p:1-4,p:1-5,s:1:+,s:1:-")
    assert code == 3
    assert ">= 3" in err
    code, _, err = run(capsys, "quiver", "--n", "5",
                       "--edges", "p:1-3,p:1-4,s:1:+,s:1:-")
    assert code == 3 and "not maximal" in err
    code, _, err = run(capsys, "quiver", "--n", "5",
                       "--edges", "p:1-3,p:2-4,p:1-4,s:1:+,s:1:-")
    assert code == 3 and "cross" in err


def test_dot_and_json_mutually_exclusive(capsys):
    code, *_ = run(capsys, "quiver", "--n", "5", "--edges", FAN5,
                   "--dot", "--json")
    assert code == 2


def test_flip_command(capsys):
    code, out, _ = run(capsys, "flip", "--n", "5", "--edges", FAN5,
                       "--edge", "s:1:+", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["replacement"] == "s:5:-"


def test_relations_command(capsys):
    code, out, _ = run(capsys, "relations", "--n", "5",
                       "--edges", "p:1-3,p:3-5,p:3-1,s:1:+,s:1:-")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["commutativityPairs"]) == 1
    assert len(payload["zeroPaths"]) == 4


def test_ar_command(capsys):
    code, out, _ = run(capsys, "ar", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["vertices"]) == 25
    code, out, _ = run(capsys, "ar", "--n", "5", "--dot", "--tau-ranks")
    assert code == 0 and "rank=same" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--suite", "prop47")
    assert code == 0 and "bijectively" in out
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "d4")
    assert code == 0 and "witness" in out
    code, out, _ = run(capsys, "verify", "--n", "5", "--suite", "flip")
    assert code == 0


def test_verify_failure_exits_1_with_counterexample(capsys):
    # the class-quiver bijection genuinely fails at n=4
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "prop47")
    assert code == 1
    assert "FAIL" in out and "share a quiver" in out


def test_verify_all_suite(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "all")
    assert code == 0
    assert "suite=crossing" in out and "suite=d4" in out
    assert "suite=prop47" not in out  # bijection hypothesis needs n >= 5


def test_classes_subcommand(capsys):
    code, out, _ = run(capsys, "classes", "--n", "5", "--count")
    assert code == 0 and out.strip() == "26"
    code, out, _ = run(capsys, "classes", "--n", "5", "--json")
    first = json.loads(out.strip().splitlines()[0])
    assert set(first) == {"representative", "orbitSize", "type"}


def test_verify_jobs_deterministic(capsys):
    _, serial, _ = run(capsys, "verify", "--n", "5", "--suite", "types")
    _, parallel, _ = run(capsys, "verify", "--n", "5", "--suite", "types",
                         "--jobs", "2")
    assert serial == parallel


def test_usage_errors(capsys):
    assert run(capsys, "enumerate")[0] == 2          # missing --n
    assert run(capsys, "nonsense", "--n", "5")[0] == 2
    assert run(capsys, "verify", "--n", "5", "--suite", "bogus")[0] == 2


def test_max_n_bound(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "10", "--count")
    assert code == 3 and "--max-n" in err


def test_catalog_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "build", "--n", "4",
                       "--dir", str(tmp_path))
    assert code == 0 and "50 triangulations" in out
    code, out, _ = run(capsys, "catalog", "show", "--n", "4",
                       "--dir", str(tmp_path))
    assert code == 0 and "50 triangulations" in out
    code, _, err = run(capsys, "catalog", "show", "--n", "5",
                       "--dir", str(tmp_path))
    assert code == 3


def test_out_file(capsys, tmp_path):
    target = tmp_path / "edges.txt"
    code, out, _ = run(capsys, "edges", "--n", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert len(target.read_text().strip().splitlines()) == 16


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
