import json
import subprocess
import sys

from syncpaths.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_simulate_explicit_config(capsys):
    code, out, err = run_cli(
        "simulate", "--family", "kn", "--n", "4", "--eps", "1", "--x", "0,2,5,9",
        capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert [e["edge"] for e in payload["events"]] == [
        [1, 2], [2, 3], [3, 4], [1, 3], [2, 4], [1, 4]
    ]
    assert payload["initial_code"] == "1,2,3,4"
    assert payload["final_code"] == "4,4,4,4"
    assert "6 events" in err


def test_simulate_not_typical_exit_code(capsys):
    code, _, err = run_cli(
        "simulate", "--family", "kn", "--n", "4", "--eps", "0.5", "--x", "0,1,3,4",
        capsys=capsys,
    )
    assert code == 2
    assert "error" in err


def test_simulate_diagonal_zero_events(capsys):
    code, out, _ = run_cli(
        "simulate", "--family", "kn", "--n", "3", "--eps", "1", "--x", "2,2,2",
        capsys=capsys,
    )
    assert code == 0
    assert json.loads(out)["events"] == []


def test_simulate_seeded_deterministic(capsys):
    args = ("simulate", "--family", "kn", "--n", "4", "--seed", "7",
            "--flow", "kuramoto", "--eps", "0.001")
    code1, out1, _ = run_cli(*args, capsys=capsys)
    code2, out2, _ = run_cli(*args, capsys=capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_simulate_kuramoto_path_in_diagram(capsys):
    code, out, _ = run_cli(
        "simulate", "--family", "kn", "--n", "4", "--seed", "7",
        "--flow", "kuramoto", "--eps", "0.001", capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    from syncpaths.diagram import build_diagram
    from syncpaths.graphs import complete

    diagram = build_diagram(complete(4))
    arrows = {(a.source, a.site): a.target for a in diagram.arrows}
    node = tuple(int(t) for t in payload["initial_code"].split(","))
    for ev in payload["events"]:
        node = arrows[(node, ev["site"])]
    assert node == (4, 4, 4, 4)


def test_simulate_knn_balanced_linear(capsys):
    code, out, _ = run_cli(
        "simulate", "--family", "knn", "--n", "3", "--eps", "0.001",
        "--seed", "11", "--balanced", capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["final_code"] == "1,1,1|3,3,3"
    assert len(payload["events"]) >= 1
    assert all(ev["sign"] in (-1, 1) for ev in payload["events"])


def test_simulate_knn_unbalanced_linear_rejected(capsys):
    code, _, err = run_cli(
        "simulate", "--family", "knn", "--n", "2", "--eps", "0.5",
        "--x", "0,3,0.5,3.5", capsys=capsys,
    )
    assert code == 2
    assert "party means" in err


def test_encode(capsys):
    code, out, _ = run_cli(
        "encode", "--family", "kn", "--n", "4", "--eps", "1", "--x", "0,1,3,4",
        capsys=capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["code"] == "2,2,4,4"
    assert payload["edges"] == [[1, 2], [3, 4]]


def test_diagram_counts(capsys):
    code, out, err = run_cli(
        "diagram", "--family", "kn", "--n", "4", "--format", "dot", capsys=capsys
    )
    assert code == 0
    assert out.count('";') == 14  # one line per vertex
    assert "14 vertices" in err

    code, _, err = run_cli("diagram", "--family", "knn", "--n", "2", capsys=capsys)
    assert code == 0
    assert "20 vertices" in err and "6 start codes" in err


def test_diagram_guard_exit_code(capsys):
    code, _, err = run_cli("diagram", "--family", "kn", "--n", "40", capsys=capsys)
    assert code == 3


def test_diagram_deterministic_bytes(capsys):
    args = ("diagram", "--family", "knn", "--n", "2", "--format", "json")
    _, out1, _ = run_cli(*args, capsys=capsys)
    _, out2, _ = run_cli(*args, capsys=capsys)
    assert out1 == out2


def test_count_kn(capsys):
    code, out, _ = run_cli(
        "count", "--family", "kn", "--n", "4", "--format", "json", capsys=capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible_paths"] == "16"
    assert payload["realizable_paths"] == "10"
    assert payload["bounds"]["upper_thrall"] == "12"


def test_count_kn5(capsys):
    code, out, _ = run_cli(
        "count", "--family", "kn", "--n", "5", "--format", "json", capsys=capsys
    )
    assert json.loads(out)["realizable_paths"] == "114"


def test_count_knn(capsys):
    code, out, _ = run_cli(
        "count", "--family", "knn", "--n", "2", "--format", "json", capsys=capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["start_codes"] == 6
    assert payload["interleaving_bound"] == "40"
    assert payload["realizable_orderings"] == 24  # exact enumeration


def test_dist_rows(capsys):
    code, out, _ = run_cli("dist", "--family", "kn", "--n", "4", capsys=capsys)
    assert code == 0
    assert out.splitlines()[0] == "lengths: 1,1,2,3,3,3,1"

    code, out, _ = run_cli(
        "dist", "--family", "knn", "--n", "2", "--format", "json", capsys=capsys
    )
    payload = json.loads(out)
    assert payload["counts"] == ["1", "2", "5", "6", "6"]


def test_dist_density(capsys):
    code, out, _ = run_cli(
        "dist", "--family", "kn", "--n", "8", "--bins", "10", capsys=capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,density"
    assert len(lines) == 11


def test_witness_commands(capsys):
    code, out, err = run_cli(
        "witness", "--family", "kn", "--code", "2,2,4,4", "--eps", "1", capsys=capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == ["0", "1", "3", "4"]
    assert "roundtrip confirmed" in err

    code, out, err = run_cli(
        "witness", "--family", "knn", "--code", "1,2|1,2", capsys=capsys
    )
    assert code == 0
    assert "roundtrip confirmed" in err

    code, out, _ = run_cli(
        "witness", "--family", "kn", "--code", "1,2,3,4", "--eps", "1", capsys=capsys
    )
    assert json.loads(out)["values"] == ["0", "2", "4", "6"]


def test_witness_invalid_code(capsys):
    code, _, err = run_cli(
        "witness", "--family", "kn", "--code", "3,2,1", capsys=capsys
    )
    assert code == 2


def test_verify_exit_codes(monkeypatch, capsys, tmp_path):
    import syncpaths.cli as cli

    def fake_verify(quick=False):
        return {
            "checks": [
                {"name": "a", "passed": True, "detail": ""},
                {"name": "knn2_ordering_table", "passed": False, "detail": "documented"},
            ],
            "passed": False,
            "documented_discrepancies": ["knn2_ordering_table"],
        }

    monkeypatch.setattr(cli, "run_verify", fake_verify)
    report = tmp_path / "r.json"
    code = cli.main(["verify", "--quick", "--report", str(report)])
    _, err = capsys.readouterr()
    assert code == 1
    assert "documented discrepancies: knn2_ordering_table" in err
    assert report.exists()

    monkeypatch.setattr(
        cli,
        "run_verify",
        lambda quick=False: {"checks": [], "passed": True, "documented_discrepancies": []},
    )
    assert cli.main(["verify"]) == 0


def test_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "syncpaths.cli", "dist", "--family", "kn", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("lengths: 1,1,2,1")
