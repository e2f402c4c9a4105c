"""Command-line surface: subcommands, formats, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

from oldset import from_edges, half_graph, to_graph6
from oldset.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_half_graph(capsys):
    record = to_graph6(half_graph(4))
    code, out, err = _run(capsys, "solve", record)
    assert code == 0
    assert record in out
    assert "gamma_OL=8" in out
    assert err == ""


def test_solve_k3_text(capsys):
    record = to_graph6(from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    code, out, _ = _run(capsys, "solve", record)
    assert code == 0
    assert "gamma_OL=2" in out
    assert "unforced = {0, 1, 2}" in out


def test_solve_structured_is_stable(capsys):
    record = to_graph6(half_graph(2))
    code, first, _ = _run(capsys, "solve", "--format", "structured", record)
    assert code == 0
    code, second, _ = _run(capsys, "solve", "--format", "structured", record)
    assert first == second
    payload = json.loads(first)
    assert payload["gamma"] == 4
    assert payload["witness"] == [0, 1, 2, 3]
    assert payload["graph6"] == record
    assert payload["nodes_explored"] == 1


def test_solve_non_locatable_exit_code(capsys):
    c4 = to_graph6(from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    code, _, err = _run(capsys, "solve", c4)
    assert code == 3
    assert "open twins" in err
    assert "(0, 2)" in err and "(1, 3)" in err


def test_solve_parse_failure_exit_code(capsys):
    code, _, err = _run(capsys, "solve", "!!not-graph6!!")
    assert code == 2
    assert "graph6" in err


def test_solve_reads_files(tmp_path, capsys):
    records = [to_graph6(half_graph(k)) for k in (1, 2)]
    path = tmp_path / "batch.g6"
    path.write_text("\n".join(records) + "\n")
    code, out, _ = _run(capsys, "solve", str(path))
    assert code == 0
    assert "gamma_OL=2" in out and "gamma_OL=4" in out


def test_solve_solver_choice_agrees(capsys):
    record = to_graph6(from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    _, fast, _ = _run(capsys, "solve", "--format", "structured", record)
    _, slow, _ = _run(
        capsys, "solve", "--format", "structured", "--solver", "bruteforce", record
    )
    a, b = json.loads(fast), json.loads(slow)
    assert a["gamma"] == b["gamma"] == 4
    assert a["witness"] == b["witness"]
    assert a["method"] != b["method"]


def test_gen_k1_emits_a_underscore(capsys):
    code, out, _ = _run(capsys, "gen", "--k", "1")
    assert code == 0
    assert out == "A_\n"


def test_gen_k3_round_trips_to_figure_edges(capsys):
    from oldset import parse_graph6

    code, out, _ = _run(capsys, "gen", "--k", "3")
    assert code == 0
    assert parse_graph6(out.strip()).edges() == [
        (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 5),
    ]


def test_gen_rejects_k_zero(capsys):
    code, _, err = _run(capsys, "gen", "--k", "0")
    assert code == 1
    assert "positive" in err


def test_gen_then_recognize_pipeline(capsys):
    code, out, _ = _run(capsys, "gen", "--k", "2")
    assert code == 0
    code, out, _ = _run(capsys, "recognize", out.strip())
    assert code == 0
    assert "half-graph k=2" in out


def test_recognize_p4_as_h2(capsys):
    p4 = to_graph6(from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    code, out, _ = _run(capsys, "recognize", p4)
    assert code == 0
    assert "half-graph k=2" in out


def test_recognize_rejects_k4(capsys):
    k4 = to_graph6(
        from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    )
    code, out, _ = _run(capsys, "recognize", k4)
    assert code == 0
    assert "not a half-graph" in out


def test_recognize_disconnected_per_component(capsys):
    from oldset import disjoint_union

    record = to_graph6(disjoint_union(half_graph(1), half_graph(2)))
    code, out, _ = _run(capsys, "recognize", record)
    assert code == 0
    assert "component [0, 1]: half-graph k=1" in out
    assert "component [2, 3, 4, 5]: half-graph k=2" in out
    assert "union of half-graphs: yes" in out


def test_recognize_structured(capsys):
    record = to_graph6(half_graph(6))
    code, out, _ = _run(capsys, "recognize", "--format", "structured", record)
    assert code == 0
    payload = json.loads(out)
    assert payload["half_graph"] is True
    assert payload["k"] == 6


def test_verify_builtin_order_4(capsys):
    code, out, _ = _run(capsys, "verify", "--n", "4")
    assert code == 0
    assert "theorem holds: yes" in out
    assert "CL" in out


def test_verify_order_7_has_no_extremal(capsys):
    code, out, _ = _run(capsys, "verify", "--n", "7")
    assert code == 0
    assert "extremal classes (gamma_OL = n): 0" in out


def test_verify_structured_byte_stable(capsys):
    code, first, _ = _run(capsys, "verify", "--n", "5", "--format", "structured")
    assert code == 0
    _, second, _ = _run(
        capsys, "verify", "--n", "5", "--format", "structured", "--jobs", "2"
    )
    assert first == second


def test_verify_usage_errors(capsys):
    code, _, err = _run(capsys, "verify")
    assert code == 1
    code, _, err = _run(capsys, "verify", "--n", "9")
    assert code == 1
    assert "--stream" in err


def test_verify_stream_with_explicit_order(tmp_path, capsys):
    path = tmp_path / "h4.g6"
    path.write_text(to_graph6(half_graph(4)) + "\n")
    code, out, _ = _run(capsys, "verify", "--stream", str(path), "--n", "8")
    assert code == 0
    assert "theorem holds: yes" in out


def test_verify_stream_reports_bad_records_without_aborting(capsys, tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("A_\n!!!\n")
    code, out, _ = _run(
        capsys, "verify", "--stream", str(path), "--format", "structured"
    )
    assert code == 0  # theorem holds on the parsable record
    payload = json.loads(out)
    assert payload["graphs_scanned"] == 1
    assert len(payload["record_errors"]) == 1


def test_verify_missing_stream_file(capsys):
    code, _, err = _run(capsys, "verify", "--stream", "/no/such/file.g6")
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = _run(capsys, "frobnicate")
    assert code == 1


def test_entry_point_via_interpreter():
    done = subprocess.run(
        [sys.executable, "-m", "oldset", "gen", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert done.stdout.strip() == to_graph6(half_graph(2))


def test_stdin_round_trip_via_interpreter():
    record = to_graph6(half_graph(3))
    done = subprocess.run(
        [sys.executable, "-m", "oldset", "solve", "--format", "structured"],
        input=record + "\n",
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["gamma"] == 6
