"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.  The heavyweight sweeps (n = 8 verification, the
n <= 7 site sweeps) share session-scoped fixtures so the whole suite stays
within a desk-scale budget.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time

import pytest

from conftest import connected_graphs
from oracles import labeled_connected_class_count
from zagreb.canon import canonical_form, is_isomorphic
from zagreb.extremal import minimize, verify_range
from zagreb.graphs import Graph, emit_g6, parse_g6
from zagreb.indices import gap_g, zagreb_m1, zagreb_m2
from zagreb.rewrites import RewriteKind, apply_site, find_sites
from zagreb.structure import construct_cnk, cut_vertices, in_vnk, is_cnk

STRICT_KINDS = {
    RewriteKind.OP_I,
    RewriteKind.OP_IB,
    RewriteKind.OP_II,
    RewriteKind.OP_III,
    RewriteKind.OP_IV,
    RewriteKind.BLOCK_EDGE_DELETE,
}


class _criterion:
    """Prints the criterion verdict even when the assertions fail."""

    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "PASS" if exc_type is None else "FAIL"
        print(f"CRITERION {self.number} {verdict}: {self.title}")
        return False


@pytest.fixture(scope="session")
def reports_to_n8():
    return verify_range(8)


def test_criterion_1_closed_forms():
    with _criterion(1, "closed forms M1=4n+2 and M2=4n+4 for 4<=n<=200"):
        start = time.time()
        for n in range(4, 201):
            for k in range(1, n - 2):
                g = construct_cnk(n, k)
                assert zagreb_m1(g) == 4 * n + 2
                if k >= 2:
                    assert zagreb_m2(g) == 4 * n + 4
        elapsed = time.time() - start
        assert elapsed < 1.0, f"closed-form sweep took {elapsed:.2f}s"


def test_criterion_2_exhaustive_verification(reports_to_n8):
    with _criterion(2, "exhaustive minima over 4<=n<=8 match the closed forms"):
        for report in reports_to_n8:
            n, k = report.n, report.k
            key = canonical_form(construct_cnk(n, k)).decode("ascii")
            assert report.min_m1 == 4 * n + 2, (n, k, report.min_m1)
            assert list(report.argmin_m1) == [key], (n, k)
            if k >= 2:
                assert report.min_m2 == 4 * n + 4, (n, k, report.min_m2)
                assert list(report.argmin_m2) == [key], (n, k)


def test_criterion_3_documented_falsification(reports_to_n8):
    with _criterion(3, "k=1 anomaly: min_m2 = 4n+3, flagged, exit status 3"):
        for report in reports_to_n8:
            if report.k == 1:
                assert report.min_m2 == 4 * report.n + 3, (report.n, report.min_m2)
                assert not report.m2_matches_paper
        (r51,) = [r for r in reports_to_n8 if (r.n, r.k) == (5, 1)]
        assert r51.min_m2 == 23
        proc = subprocess.run(
            [sys.executable, "-m", "zagreb.cli", "verify", "--n-max", "5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 3, proc.stderr


def test_criterion_4_rewrite_property_suite():
    with _criterion(4, "strict/nonstrict decreases and quantified floors, n<=7"):
        violations = 0
        for n in range(3, 8):
            for g in connected_graphs(n):
                if g.m < g.n:
                    continue
                for site in find_sites(g):
                    out = apply_site(g, site)
                    if site.kind in STRICT_KINDS:
                        if not (out.delta_m1 > 0 and out.delta_m2 > 0):
                            violations += 1
                    else:
                        if not (out.delta_m1 >= 0 and out.delta_m2 >= 0):
                            violations += 1
                    if site.kind in (
                        RewriteKind.OP_I,
                        RewriteKind.OP_II,
                        RewriteKind.OP_III,
                    ):
                        if out.delta_m1 < 2:
                            violations += 1
                    if site.kind is RewriteKind.OP_IV and out.delta_m1 < 10:
                        violations += 1
                    if site.kind is RewriteKind.OP_II:
                        w1, w2 = site.vertices[3], site.vertices[4]
                        if out.delta_m2 < gap_g(g.degree(w1), g.degree(w2)) + 1:
                            violations += 1
        assert violations == 0


def test_criterion_5_enumeration_counts():
    with _criterion(5, "enumeration matches the labeled-orbit oracle"):
        oracle = {n: labeled_connected_class_count(n) for n in (4, 5, 6)}
        assert oracle == {4: 6, 5: 21, 6: 112}
        for n, expected in oracle.items():
            graphs = connected_graphs(n)
            assert len(graphs) == expected
            keys = {canonical_form(g) for g in graphs}
            assert len(keys) == expected


def test_criterion_6_minimizer():
    with _criterion(6, "minimizer is monotone, terminates, honest about C(n,k)"):
        for n in range(4, 8):
            for g in connected_graphs(n):
                if g.m < g.n or not cut_vertices(g):
                    continue
                trace = minimize(g, preserve_k=True)
                values = [zagreb_m1(trace.initial)]
                for step in trace.steps:
                    values.append(values[-1] - step.delta_m1)
                assert values[-1] == zagreb_m1(trace.final)
                assert all(a >= b for a, b in zip(values, values[1:]))
                if trace.terminated_reason == "ReachedCnk":
                    assert is_cnk(trace.final)
                    assert zagreb_m1(trace.final) == 4 * n + 2


def test_criterion_7_serialization_round_trip():
    with _criterion(7, "graph6 round trip over 10000 random graphs, A_ <-> K2"):
        assert emit_g6(Graph.build(2, [(0, 1)])) == b"A_"
        assert parse_g6("A_").edges() == [(0, 1)]
        rng = random.Random(20240803)
        for _ in range(10_000):
            n = rng.randrange(1, 41)
            edges = [
                (u, v)
                for v in range(n)
                for u in range(v)
                if rng.random() < rng.choice((0.1, 0.3, 0.6))
            ]
            g = Graph.build(n, edges)
            encoded = emit_g6(g)
            assert parse_g6(encoded).adj == g.adj
            assert emit_g6(parse_g6(encoded)) == encoded


def test_criterion_8_worker_determinism():
    with _criterion(8, "verify --n-max 7 byte-identical across 1/2/8 workers"):
        outputs = []
        for workers in ("1", "2", "8"):
            proc = subprocess.run(
                [
                    sys.executable,
                    "-m",
                    "zagreb.cli",
                    "verify",
                    "--n-max",
                    "7",
                    "--threads",
                    workers,
                ],
                capture_output=True,
            )
            assert proc.returncode == 3, proc.stderr
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1] == outputs[2]
