#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: test_hamsearch
@time: 2023/3/15
"""

from itertools import permutations

import networkx as nx
import pytest

from cayley8pq.grouptable import GenMultiset, group_by_tag
from cayley8pq.hamsearch import (
    iter_ham_cycles, enumerate_ham_cycles, LazyCycles, verify_ham_cycle, cayley_graph, ham_path
)
from cayley8pq.timer import BudgetExhausted
from cayley8pq.voltage import GeneratorSpec


def _brute_force_count(group, gens):
    """按顶点排列数基于单位元的有向哈密顿圈"""
    steps = set(gens) | {group.inverse(s) for s in gens}
    others = [g for g in range(group.order) if g != group.identity]
    count = 0
    for order in permutations(others):
        trace = [group.identity, *order, group.identity]
        if all(group.mul(group.inverse(a), b) in steps for a, b in zip(trace, trace[1:])):
            count += 1
    return count


def test_cube_has_twelve_cycles():
    e8 = group_by_tag('E8')
    cycles = enumerate_ham_cycles(e8, GenMultiset((1, 2, 4)))
    assert len(cycles) == 12
    assert len({cycle.steps for cycle in cycles}) == 12
    assert len(cycles) == _brute_force_count(e8, (1, 2, 4))
    specs = [GeneratorSpec(g) for g in (1, 2, 4)]
    for cycle in cycles:
        assert verify_ham_cycle(e8, cycle.step_elements(e8, specs))


def test_cyclic_group_has_two_cycles():
    c8 = group_by_tag('C8')
    cycles = enumerate_ham_cycles(c8, [1])
    assert sorted(cycle.steps for cycle in cycles) == [(-1,) * 8, (1,) * 8]


def test_search_order_is_deterministic():
    q8 = group_by_tag('Q8')
    gens = [q8.index('i'), q8.index('j')]
    first = [cycle.steps for cycle in iter_ham_cycles(q8, gens)]
    second = [cycle.steps for cycle in iter_ham_cycles(q8, gens)]
    assert first == second
    assert first == sorted(first, key=lambda steps: [(abs(c), c < 0) for c in steps])


def test_non_generating_set_rejected():
    d8 = group_by_tag('D8')
    with pytest.raises(ValueError):
        enumerate_ham_cycles(d8, [d8.index('x')])


def test_lazy_cycles_cache():
    d8 = group_by_tag('D8')
    gens = [d8.index('f'), d8.index('fx'), d8.index('x')]
    lazy = LazyCycles(d8, gens)
    head = next(iter(lazy))
    assert next(iter(lazy)) == head
    assert list(lazy) == enumerate_ham_cycles(d8, gens)
    assert len(lazy) == len(enumerate_ham_cycles(d8, gens))


def test_verify_rejects_bad_walks():
    c8 = group_by_tag('C8')
    assert verify_ham_cycle(c8, [1] * 8)
    assert not verify_ham_cycle(c8, [1] * 7)
    assert not verify_ham_cycle(c8, [1] * 4 + [7] + [1] * 3)
    assert not verify_ham_cycle(c8, [3] * 8 + [1])


def test_verify_in_quotient():
    c8 = group_by_tag('C8')
    assert verify_ham_cycle(c8, [1] * 4, key=lambda g: g % 4, order=4)
    assert not verify_ham_cycle(c8, [2] * 4, key=lambda g: g % 4, order=4)


def test_cayley_graph_is_cube():
    graph = cayley_graph(group_by_tag('E8'), [1, 2, 4])
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 12
    assert nx.is_bipartite(graph)
    assert all(degree == 3 for _, degree in graph.degree())


def test_ham_path_on_cycle_graph():
    c8 = group_by_tag('C8')
    assert ham_path(c8, [1], 7) == [1] * 7
    assert ham_path(c8, [1], 1) == [7] * 7
    assert ham_path(c8, [1], 2) is None
    with pytest.raises(ValueError):
        ham_path(c8, [1], 0)


def test_ham_path_respects_budget():
    e8 = group_by_tag('E8')
    with pytest.raises(BudgetExhausted):
        ham_path(e8, [1, 2, 4], 1, budget=0)


def test_cube_paths_follow_parity():
    e8 = group_by_tag('E8')
    for target in range(1, 8):
        path = ham_path(e8, [1, 2, 4], target)
        odd = bin(target).count('1') % 2 == 1
        assert (path is not None) is odd
        if path is not None:
            trace = [0]
            for s in path:
                trace.append(e8.mul(trace[-1], s))
            assert sorted(trace) == list(range(8))
            assert trace[-1] == target


@pytest.mark.slow
def test_g56_paths_from_identity():
    g56 = group_by_tag('G56')
    gens = (g56.index('c'), g56.index('e1'))
    for target in (g56.index('c^3'), g56.index('e1e2'), g56.index('c^6*e3')):
        path = ham_path(g56, gens, target, budget=10.0)
        assert path is not None
        assert len(path) == 55
