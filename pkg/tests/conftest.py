"""Session-wide oracle sweeps shared by the acceptance and tension tests.

Each sweep enumerates tens of thousands of graphs and runs the homology
oracle on every one, so it is computed once per pytest session and every
consumer reads the same records.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import pytest

from compedge import (Field, SimpleGraph, complementary_edge_ideal, enumerate_graphs, height,
                      hochster_betti, implication_suite, reg_pd)
from compedge.graphs import complete_graph, connected_components


@dataclass(frozen=True)
class OracleRecord:
    """Measured invariants of the complementary edge ideal of one graph."""

    graph: SimpleGraph
    height: int
    pd_ideal: int
    reg_ideal: int
    reg_s_mod_i: int
    cohen_macaulay: bool


def measure(graph: SimpleGraph) -> OracleRecord:
    ideal = complementary_edge_ideal(graph)
    hom = reg_pd(hochster_betti(ideal, Field.GF2))
    ht = height(ideal)
    return OracleRecord(graph, ht, hom.pd_ideal, hom.reg_ideal, hom.reg_s_mod_i,
                        hom.pd_s_mod_i == ht)


def labeled_forests(n: int) -> list[SimpleGraph]:
    """All labeled forests on {1..n} with at least one edge.

    Depth-first over the edge slots, keeping a union-find per branch so a
    slot is only taken when it joins two distinct components.
    """
    slots = list(combinations(range(1, n + 1), 2))
    out: list[SimpleGraph] = []

    def find(parent: dict[int, int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(idx: int, edges: list[tuple[int, int]], parent: dict[int, int]) -> None:
        if idx == len(slots):
            if edges:
                out.append(SimpleGraph(n, tuple(edges)))
            return
        rec(idx + 1, edges, parent)
        u, v = slots[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            child = dict(parent)
            child[ru] = rv
            edges.append((u, v))
            rec(idx + 1, edges, child)
            edges.pop()

    rec(0, [], {v: v for v in range(1, n + 1)})
    return out


@pytest.fixture(scope="session")
def oracle_sweep() -> tuple[list[OracleRecord], float]:
    """(records, wall seconds) over every labeled graph with >= 1 edge, n = 3..6."""
    start = time.perf_counter()
    records = []
    for n in range(3, 7):
        for graph in enumerate_graphs(n):
            if graph.m:
                records.append(measure(graph))
    return records, time.perf_counter() - start


@pytest.fixture(scope="session")
def forest_sweep():
    """(graph, is connected, pd of I, reg of I) for every forest with >= 1 edge, n <= 7."""
    rows = []
    for n in range(3, 8):
        for graph in labeled_forests(n):
            ideal = complementary_edge_ideal(graph)
            hom = reg_pd(hochster_betti(ideal, Field.GF2))
            connected = len(connected_components(graph)) == 1
            rows.append((graph, connected, hom.pd_ideal, hom.reg_ideal))
    return rows


@pytest.fixture(scope="session")
def forest_suites():
    """Implication suites for every forest with >= 1 edge on n <= 6, plus K_3."""
    suites = [implication_suite(graph)
              for n in range(3, 7) for graph in labeled_forests(n)]
    suites.append(implication_suite(complete_graph(3)))
    return suites
