"""Command-line surface: outputs, JSON round trips, exit codes."""

import json


from potnum.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_k3(capsys):
    code, out, _ = run_cli(capsys, "analyze", "K 3")
    assert code == 0
    assert "Type2" in out
    assert "NotStable" in out
    assert "WeaklyStable" in out


def test_analyze_c6(capsys):
    code, out, _ = run_cli(capsys, "analyze", "C 6")
    assert code == 0
    assert "NotStable" in out and "NotWeaklyStable" in out


def test_analyze_split_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "analyze", "join(K 2, Kbar 3)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["profile"]["type"] == "Type1"
    assert payload["sigmaStability"]["status"] == "Stable"
    assert payload["sigmaStability"]["theorem"] == "MainLow"
    assert set(payload) == {"profile", "sigmaStability", "weakStability", "targetPatterns"}


def test_build_pi_tilde(capsys):
    code, out, _ = run_cli(capsys, "build", "K 3", "pi_tilde", "2", "8")
    assert code == 0
    assert out.strip() == "7,1^7"


def test_build_rho(capsys):
    code, out, _ = run_cli(capsys, "build", "K 3", "rho", "8")
    assert code == 0
    assert out.strip() == "4,4,1^6"


def test_build_family(capsys):
    code, out, _ = run_cli(capsys, "build", "K 4", "family", "10")
    assert code == 0
    assert out.strip().splitlines() == ["9,9,2^8"]


def test_check_false(capsys):
    code, out, _ = run_cli(capsys, "check", "4,4,1^6", "K 3")
    assert code == 0
    assert out.splitlines()[0] == "potentially: false"


def test_check_true_json(capsys):
    code, out, _ = run_cli(capsys, "check", "2,2,2", "K 3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["potentially"] is True
    assert payload["embedding"] and payload["realizationEdges"]


def test_sigma_k3(capsys):
    code, out, _ = run_cli(capsys, "sigma", "K 3", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "16"
    assert "maximizer: 7,1^7" in lines
    assert "maximizer: 4,4,1^6" in lines


def test_dist(capsys):
    code, out, _ = run_cli(capsys, "dist", "4,4,1^6", "7,1^7")
    assert code == 0
    assert out.strip() == "6"


def test_probe_human_and_trace(capsys):
    code, out, _ = run_cli(capsys, "probe", "7,1^7", "K 3", "--f-override", "4")
    assert code == 0
    assert "verdict: found_split" in out

    code, out, _ = run_cli(
        capsys, "probe", "7,1^7", "K 3", "--f-override", "4", "--trace"
    )
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert records[0]["record"] == "config"
    assert records[-1]["record"] == "final"


def test_graph_file_input(tmp_path, capsys):
    path = tmp_path / "triangle.txt"
    path.write_text("n 3\ne 1 2\ne 2 3\ne 1 3\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--json")
    assert code == 0
    assert json.loads(out)["profile"]["k"] == 3


def test_exit_code_usage_error(capsys):
    code, _, err = run_cli(capsys, "analyze", "K x")
    assert code == 1 and err


def test_exit_code_parse_error(capsys):
    code, _, err = run_cli(capsys, "check", "4,4,oops", "K 3")
    assert code == 1 and err


def test_exit_code_cap_exceeded(capsys):
    code, _, err = run_cli(capsys, "sigma", "K 3", "12")
    assert code == 2 and err


def test_all_json_outputs_are_valid_json(capsys):
    cases = [
        ("analyze", "C 5", "--json"),
        ("build", "K 3", "family", "8", "--json"),
        ("check", "7,1^7", "K 3", "--json"),
        ("sigma", "K 3", "6", "--json"),
        ("probe", "9,3^9", "join(K 2, Kbar 3)", "--f-override", "3", "--json"),
        ("dist", "2,2", "2", "--json"),
    ]
    for argv in cases:
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, argv
        json.loads(out)
