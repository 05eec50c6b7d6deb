#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: voltage
@time: 2023/3/8

扭积 Z ⋊_χ Ḡ 中编码圈的电压，以及三种认证策略。
乘法约定: (g1, z1)(g2, z2) = (g1g2, χ(g2)z1 + z2)
"""

from dataclasses import dataclass
from typing import Tuple, List, Optional, Sequence, Iterable

from cayley8pq.grouptable import GroupTable, Character
from cayley8pq.cyclotomic import CycInt, norm, smooth5


__all__ = (
    'GeneratorSpec', 'CodedCycle', 'VoltagePair', 'twisted_mul', 'twisted_inverse', 'walk_product',
    'twisted_voltage', 'dual_voltages', 'voltage_pair', 'strategy_fgl', 'strategy_single', 'strategy_pair',
    'pair_norm'
)


@dataclass(frozen=True)
class GeneratorSpec:
    gbar: int
    inv_p: bool = False
    inv_q: bool = False
    # x_q 的指数未知（记为 i），只能通过 π′_q + i·π″_q 处理
    free_q: bool = False

    def involvement(self, which: str) -> int:
        if which == 'p':
            return int(self.inv_p)
        if which == 'q':
            return int(self.inv_q or self.free_q)
        if which == 'q_fixed':
            return int(self.inv_q and not self.free_q)
        if which == 'q_free':
            return int(self.free_q)
        raise ValueError(f'未知的素数分量[{which}]')

    def label(self, group: GroupTable) -> str:
        parts = [group.labels[self.gbar]]
        if self.inv_p:
            parts.append('xp')
        if self.free_q:
            parts.append('xq^i')
        elif self.inv_q:
            parts.append('xq')
        return '*'.join(parts)

    @classmethod
    def from_label(cls, group: GroupTable, label: str) -> 'GeneratorSpec':
        parts = label.split('*')
        flags = set()
        while len(parts) > 1 and parts[-1] in ('xp', 'xq', 'xq^i'):
            flags.add(parts.pop())
        return cls(group.index('*'.join(parts)), 'xp' in flags, 'xq' in flags, 'xq^i' in flags)


@dataclass(frozen=True)
class CodedCycle:
    steps: Tuple[int, ...]

    def __len__(self):
        return len(self.steps)

    def step_elements(self, group: GroupTable, gens: Sequence[GeneratorSpec]) -> List[int]:
        elements = []
        for code in self.steps:
            if code == 0 or abs(code) > len(gens):
                raise IndexError(f'步骤编号[{code}]超出生成元范围[1, {len(gens)}]')
            g = gens[abs(code) - 1].gbar
            elements.append(g if code > 0 else group.inverse(g))
        return elements

    def vertices(self, group: GroupTable, gens: Sequence[GeneratorSpec]) -> List[int]:
        trace = [group.identity]
        for s in self.step_elements(group, gens):
            trace.append(group.mul(trace[-1], s))
        return trace

    def inverted(self) -> 'CodedCycle':
        return CodedCycle(tuple(-code for code in reversed(self.steps)))

    def to_list(self) -> List[int]:
        return list(self.steps)


@dataclass(frozen=True)
class VoltagePair:
    pi_p: CycInt
    pi_q: Optional[CycInt] = None
    pi_q_prime: Optional[CycInt] = None
    pi_q_double: Optional[CycInt] = None


def twisted_mul(
        group: GroupTable, chi: Character, a: Tuple[int, CycInt], b: Tuple[int, CycInt]
) -> Tuple[int, CycInt]:
    (g1, z1), (g2, z2) = a, b
    return group.mul(g1, g2), z1.shift(chi(g2)) + z2


def twisted_inverse(group: GroupTable, chi: Character, a: Tuple[int, CycInt]) -> Tuple[int, CycInt]:
    g, z = a
    h = group.inverse(g)
    return h, -z.shift(chi(h))


def walk_product(
        group: GroupTable, cycle: CodedCycle, gens: Sequence[GeneratorSpec], chi: Character, which: str
) -> Tuple[int, CycInt]:
    """整条路径在 Z ⋊_χ Ḡ 中的乘积"""
    g, z = group.identity, CycInt.zero(chi.conductor)
    for code in cycle.steps:
        if code == 0 or abs(code) > len(gens):
            raise IndexError(f'步骤编号[{code}]超出生成元范围[1, {len(gens)}]')
        spec = gens[abs(code) - 1]
        e = spec.involvement(which)
        if code > 0:
            g, z = group.mul(g, spec.gbar), z.shift(chi(spec.gbar)) + e
        else:
            h = group.inverse(spec.gbar)
            g, z = group.mul(g, h), (z - e).shift(chi(h))
    return g, z


def twisted_voltage(
        group: GroupTable, cycle: CodedCycle, gens: Sequence[GeneratorSpec], chi: Character, which: str
) -> CycInt:
    return walk_product(group, cycle, gens, chi, which)[1]


def dual_voltages(
        group: GroupTable, cycle: CodedCycle, gens: Sequence[GeneratorSpec], chi_q: Character
) -> Tuple[CycInt, CycInt]:
    """(π′_q, π″_q)：π_q = π′_q + i·π″_q"""
    return (
        twisted_voltage(group, cycle, gens, chi_q, 'q_fixed'),
        twisted_voltage(group, cycle, gens, chi_q, 'q_free'),
    )


def voltage_pair(
        group: GroupTable, cycle: CodedCycle, gens: Sequence[GeneratorSpec], chi_p: Character, chi_q: Character
) -> VoltagePair:
    """存在自由指数的生成元时，π_q 拆成 (π′_q, π″_q)"""
    pi_p = twisted_voltage(group, cycle, gens, chi_p, 'p')
    if any(spec.free_q for spec in gens):
        prime, double = dual_voltages(group, cycle, gens, chi_q)
        return VoltagePair(pi_p, pi_q_prime=prime, pi_q_double=double)
    return VoltagePair(pi_p, pi_q=twisted_voltage(group, cycle, gens, chi_q, 'q'))


def strategy_fgl(
        group: GroupTable, cycles: Iterable[CodedCycle], gens: Sequence[GeneratorSpec],
        chi_p: Character, chi_q: Character
) -> Optional[Tuple[CodedCycle, int, int]]:
    for cycle in cycles:
        norm_p = norm(twisted_voltage(group, cycle, gens, chi_p, 'p'))
        if not smooth5(norm_p):
            continue
        norm_q = norm(twisted_voltage(group, cycle, gens, chi_q, 'q'))
        if smooth5(norm_q):
            return cycle, norm_p, norm_q
    return None


def strategy_single(
        group: GroupTable, cycle: CodedCycle, gens: Sequence[GeneratorSpec], chi_q: Character
) -> Optional[int]:
    prime, double = dual_voltages(group, cycle, gens, chi_q)
    if not double.is_zero:
        return None
    value = norm(prime)
    return value if smooth5(value) else None


def pair_norm(first: Tuple[CycInt, CycInt], second: Tuple[CycInt, CycInt]) -> Optional[int]:
    """行列式 det[[π′(c1), π″(c1)], [π′(c2), π″(c2)]] 的范数，5-光滑时返回"""
    det = first[0] * second[1] - first[1] * second[0]
    value = norm(det)
    return value if smooth5(value) else None


def strategy_pair(
        group: GroupTable, c1: CodedCycle, c2: CodedCycle, gens: Sequence[GeneratorSpec], chi_q: Character
) -> Optional[int]:
    return pair_norm(dual_voltages(group, c1, gens, chi_q), dual_voltages(group, c2, gens, chi_q))
