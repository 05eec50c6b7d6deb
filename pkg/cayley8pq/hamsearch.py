#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: hamsearch
@time: 2023/3/8
"""

from typing import List, Optional, Sequence, Iterator, Union, Any, Callable, Hashable

import networkx as nx

from cayley8pq.grouptable import GroupTable, GenMultiset
from cayley8pq.voltage import CodedCycle
from cayley8pq.timer import Deadline
from cayley8pq.log import logger


__all__ = (
    'iter_ham_cycles', 'enumerate_ham_cycles', 'LazyCycles', 'verify_ham_cycle', 'cayley_graph', 'ham_path'
)


def _entries(group: GroupTable, gens: Union[GenMultiset, Sequence[int]]) -> Sequence[int]:
    entries = gens.entries if isinstance(gens, GenMultiset) else tuple(gens)
    if not group.generates(entries):
        raise ValueError(f'{[group.labels[g] for g in entries]}不生成群[{group.id_tag}]')
    return entries


def _moves(group: GroupTable, entries: Sequence[int]) -> List[tuple]:
    """(编号, 元素)，顺序为 +1, -1, +2, -2, …；对合只取正向"""
    moves = []
    for j, s in enumerate(entries, 1):
        if s == group.identity:
            continue
        moves.append((j, s))
        if group.inverse(s) != s:
            moves.append((-j, group.inverse(s)))
    return moves


def iter_ham_cycles(group: GroupTable, gens: Union[GenMultiset, Sequence[int]]) -> Iterator[CodedCycle]:
    entries = _entries(group, gens)
    moves = _moves(group, entries)
    product = group.product
    n = group.order
    visited = [False] * n
    visited[group.identity] = True
    steps: List[int] = []

    def extend(vertex: int, depth: int) -> Iterator[CodedCycle]:
        if depth == n - 1:
            for code, s in moves:
                if product[vertex][s] == group.identity:
                    steps.append(code)
                    yield CodedCycle(tuple(steps))
                    steps.pop()
            return
        for code, s in moves:
            nxt = product[vertex][s]
            if not visited[nxt]:
                visited[nxt] = True
                steps.append(code)
                yield from extend(nxt, depth + 1)
                steps.pop()
                visited[nxt] = False

    yield from extend(group.identity, 0)


def enumerate_ham_cycles(group: GroupTable, gens: Union[GenMultiset, Sequence[int]]) -> List[CodedCycle]:
    return list(iter_ham_cycles(group, gens))


class LazyCycles:
    """按需枚举并缓存，供同一生成多重集下的所有特征对复用"""

    def __init__(self, group: GroupTable, gens: Union[GenMultiset, Sequence[int]]):
        self._source = iter_ham_cycles(group, gens)
        self._cache: List[CodedCycle] = []
        self._exhausted = False

    def __iter__(self) -> Iterator[CodedCycle]:
        index = 0
        while True:
            if index < len(self._cache):
                yield self._cache[index]
                index += 1
                continue
            if self._exhausted:
                return
            try:
                self._cache.append(next(self._source))
            except StopIteration:
                self._exhausted = True

    def __len__(self) -> int:
        for _ in self:
            pass
        return len(self._cache)


def verify_ham_cycle(
        group: Any, walk: Sequence[Any], key: Optional[Callable[[Any], Hashable]] = None,
        order: Optional[int] = None
) -> bool:
    """
    walk为步骤元素序列；group需提供 identity、order、mul。
    给定key与order时，在key诱导的商群（阶为order）中检查
    """
    key = key or (lambda element: element)
    order = group.order if order is None else order
    if len(walk) != order:
        return False
    vertex = group.identity
    seen = set()
    for s in walk:
        vertex = group.mul(vertex, s)
        image = key(vertex)
        if image in seen:
            return False
        seen.add(image)
    return key(vertex) == key(group.identity) and len(seen) == order


def cayley_graph(group: GroupTable, gens: Sequence[int]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(group.order))
    for g in range(group.order):
        for s in gens:
            h = group.mul(g, s)
            if h != g:
                graph.add_edge(g, h)
    return graph


def ham_path(
        group: GroupTable, gens: Union[GenMultiset, Sequence[int]], target: int, budget: Optional[float] = None
) -> Optional[List[int]]:
    """
    从单位元到target的哈密顿路，返回步骤元素序列；
    证明不存在时返回None，超出时间预算抛出BudgetExhausted
    """
    entries = _entries(group, gens)
    if target == group.identity:
        raise ValueError('终点不能是单位元')
    graph = cayley_graph(group, entries)
    deadline = Deadline(budget)
    n = group.order
    visited = {group.identity}
    path = [group.identity]

    def residual_degree(v: int, current: int) -> int:
        return sum(1 for w in graph[v] if w not in visited or w == current)

    def hopeless(current: int) -> bool:
        unvisited = [v for v in graph if v not in visited]
        for v in unvisited:
            degree = residual_degree(v, current)
            if degree == 0 or (degree == 1 and v != target):
                return True
        residual = nx.restricted_view(graph, visited - {current}, [])
        return not nx.is_connected(residual)

    def extend(current: int) -> bool:
        deadline.check()
        if len(path) == n:
            return current == target
        candidates = [w for w in graph[current] if w not in visited]
        if len(path) < n - 1:
            candidates = [w for w in candidates if w != target]
        # 剩余度小的邻点优先
        candidates.sort(key=lambda w: (sum(1 for u in graph[w] if u not in visited), w))
        for w in candidates:
            visited.add(w)
            path.append(w)
            if not hopeless(w) and extend(w):
                return True
            path.pop()
            visited.discard(w)
        return False

    if not extend(group.identity):
        logger.debug(f'群[{group.id_tag}]中不存在到[{group.labels[target]}]的哈密顿路')
        return None
    return [group.mul(group.inverse(a), b) for a, b in zip(path, path[1:])]
