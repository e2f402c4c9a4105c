"""Theorem harness: reports, determinism, worker pool."""

from __future__ import annotations

import json
import random

from oldset import (
    HarnessReport,
    canonical_form,
    classify_forced,
    disjoint_union,
    enumerate_connected_graphs,
    from_edges,
    half_graph,
    parse_graph6,
    run_harness,
    verify_bondy,
    verify_proposition2,
    verify_theorem,
)


def _k(n: int):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _relabel(g, perm):
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_verify_theorem_order_4():
    report = verify_theorem(enumerate_connected_graphs(4), 4)
    assert report.theorem_holds
    assert report.counterexamples == []
    assert len(report.extremal) == 1
    assert report.extremal[0].encode("ascii") == canonical_form(half_graph(2))


def test_verify_theorem_order_5_no_extremal():
    report = verify_theorem(enumerate_connected_graphs(5), 5)
    assert report.theorem_holds
    assert report.extremal == []
    assert report.graphs_scanned == 21
    assert report.locatable_count == 11


def test_extremal_graphs_have_no_unforced_vertices():
    for n in (2, 4, 6):
        report = verify_theorem(enumerate_connected_graphs(n), n)
        for cert in report.extremal:
            assert classify_forced(parse_graph6(cert)).unforced == 0


def test_verify_bondy_clean_on_half_graph_stream():
    report = verify_bondy([half_graph(k) for k in range(1, 7)], 0)
    assert report.bondy_violations == []
    report = verify_bondy([half_graph(1)], 2)
    assert report.bondy_violations == []
    assert report.locatable_count == 1


def test_verify_proposition2_examples():
    report = verify_proposition2([_k(3)], 3)
    assert report.prop2_violations == []
    report = verify_proposition2([half_graph(3)], 6)  # vacuous: all forced
    assert report.prop2_violations == []


def test_report_deterministic_under_relabeling_and_shuffling():
    rng = random.Random(97)
    graphs = list(enumerate_connected_graphs(6))
    relabeled = []
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled.append(_relabel(g, perm))
    rng.shuffle(relabeled)
    original = run_harness(graphs, 6)
    scrambled = run_harness(relabeled, 6)
    assert original.to_json() == scrambled.to_json()


def test_report_deterministic_across_worker_counts():
    graphs = list(enumerate_connected_graphs(5))
    solo = run_harness(graphs, 5)
    pooled = run_harness(graphs, 5, jobs=3)
    assert solo.to_json() == pooled.to_json()


def test_report_deterministic_across_solvers():
    graphs = list(enumerate_connected_graphs(5))
    fast = run_harness(graphs, 5, solver="bnb")
    slow = run_harness(graphs, 5, solver="bruteforce")
    assert fast.to_json() == slow.to_json()


def test_structured_dump_is_stable_and_timing_free():
    graphs = list(enumerate_connected_graphs(4))
    first = run_harness(graphs, 4).to_json()
    second = run_harness(graphs, 4).to_json()
    assert first == second
    payload = json.loads(first)
    assert "timing" not in payload
    assert payload["theorem_holds"] is True
    report = run_harness(graphs, 4)
    assert report.timing > 0
    assert "timing" in report.as_dict(include_timing=True)


def test_text_report_mentions_the_extremal_class():
    report = verify_theorem(enumerate_connected_graphs(4), 4)
    text = report.to_text()
    assert "theorem holds: yes" in text
    assert report.extremal[0] in text
    assert "elapsed" in text


def test_order_mismatch_lands_in_record_errors():
    report = run_harness([half_graph(1), half_graph(2)], 4)
    assert len(report.record_errors) == 1
    assert report.graphs_scanned == 2


def test_caller_record_errors_pass_through():
    report = run_harness([], 3, record_errors=["record 2: bad byte"])
    assert report.record_errors == ["record 2: bad byte"]
    assert report.graphs_scanned == 0
    assert report.theorem_holds  # vacuously


def test_disconnected_union_counts_as_extremal_not_counterexample():
    union = disjoint_union(half_graph(1), half_graph(2))
    report = run_harness([union], 6)
    assert report.theorem_holds
    assert len(report.extremal) == 1


def test_non_locatable_graphs_are_scanned_but_skipped():
    c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = run_harness([c4, half_graph(2)], 4)
    assert report.graphs_scanned == 2
    assert report.locatable_count == 1
    assert len(report.extremal) == 1


def test_rendering_of_a_synthetic_failure():
    # the mathematics never produces one, so exercise the report
    # plumbing directly
    report = HarnessReport(n=4)
    report.counterexamples.append(("CL", 3, True))
    report.theorem_holds = False
    text = report.to_text()
    assert "theorem holds: NO" in text
    assert "counterexample CL" in text
    assert report.violations == 1


def test_run_harness_validates_arguments():
    for kwargs in (
        {"checks": frozenset({"nope"})},
        {"solver": "magic"},
        {"jobs": 0},
    ):
        try:
            run_harness([], 3, **kwargs)
        except ValueError:
            continue
        raise AssertionError(f"accepted {kwargs}")
