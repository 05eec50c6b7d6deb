#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: casework
@time: 2023/3/12

八阶商群上的四个计算机搜索：
  two-extra    S = S₀ ∪ {a·x_p, b·x_q}
  complement   S = S₀ ∪ {g·x_p·x_q}，⟨S₀⟩为8阶
  rank-two     S = {a, b·x_q, c·x_p·x_q^i}
  elementary   Ḡ = E8，S = {e1·x_q, e2, e3, g·x_p}
以及G56上的哈密顿连通抽查。每个(群, 生成多重集, 特征对)单元输出一条证书。
"""

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product as cartesian
from typing import Tuple, List, Dict, Optional, Iterator, Iterable, Callable, Any

import networkx as nx

from cayley8pq.config import settings
from cayley8pq.log import logger
from cayley8pq.crypto import StreamDigest
from cayley8pq.schema import Certificate, CaseReport, LiftResult, VerificationError, UnexplainedCellError
from cayley8pq.grouptable import (
    GroupTable, Character, group_by_tag, order8_catalog, rank, irredundant_generating_sets, derived_subgroup,
    abelian_characters
)
from cayley8pq.cyclotomic import norm, norm_checked, smooth5
from cayley8pq.voltage import (
    GeneratorSpec, CodedCycle, twisted_voltage, dual_voltages, voltage_pair, strategy_fgl, pair_norm
)
from cayley8pq.hamsearch import LazyCycles, verify_ham_cycle, cayley_graph, ham_path
from cayley8pq.timer import BudgetExhausted
from cayley8pq.concrete import (
    build_explicit, build_cyclic_extension, reduce_cyc, explicit_walk, walk_product, fgl_lift, lift_coded_cycle
)


__all__ = (
    'PROP_IDS', 'PROP_ALIASES', 'CaseCell', 'complement_exponent', 'complement_subset', 'punctured_subset',
    'match_twin_action_complement', 'match_twin_action_elementary', 'match_special_dihedral', 'pattern_mapping',
    'solve_cell', 'run_two_extra', 'run_complement', 'run_rank_two', 'run_elementary', 'driver_mapping',
    'run_search', 'g56_has_index_two_subgroup', 'run_order56', 'reverify', 'iter_cells', 'run_e2e', 'bridge_samples'
)


PROP_IDS = ('two-extra', 'complement', 'rank-two', 'elementary')
# 编号形式的别名
PROP_ALIASES = {'7.4': 'two-extra', '7.7': 'complement', '7.9': 'rank-two', '5.1': 'elementary'}
RANK_TWO_TAGS = ('C4xC2', 'D8', 'Q8')

REASON_DERIVED = 'generator-in-derived-subgroup'
REASON_ORDER_EIGHT = 'order-eight-subset'
EVERY_EXPONENT = 'every'

WorkUnit = Tuple[str, str, Tuple[GeneratorSpec, ...], Tuple[Tuple[Character, Character], ...]]


@dataclass(frozen=True)
class CaseCell:
    prop_id: str
    group_id: str
    gens: Tuple[GeneratorSpec, ...]
    chi_p: Character
    chi_q: Character

    @property
    def group(self) -> GroupTable:
        return group_by_tag(self.group_id)

    def multiset(self) -> List[str]:
        return [spec.label(self.group) for spec in self.gens]

    def characters(self) -> Dict[str, List[int]]:
        return {'p': self.chi_p.to_list(), 'q': self.chi_q.to_list()}

    def is_admissible(self, p: int, q: int) -> bool:
        return (p - 1) % self.chi_p.conductor == 0 and (q - 1) % self.chi_q.conductor == 0

    def certificate(self, outcome: str, **kwargs) -> Certificate:
        return Certificate(
            prop_id=self.prop_id, group_id=self.group_id, multiset=self.multiset(),
            characters=self.characters(), outcome=outcome, **kwargs
        )


@functools.lru_cache(maxsize=None)
def _nontrivial_characters(group_id: str) -> Tuple[Character, ...]:
    return tuple(
        chi for chi in abelian_characters(group_by_tag(group_id), settings.CONDUCTOR) if not chi.is_trivial
    )


def _character_pairs(group_id: str) -> Tuple[Tuple[Character, Character], ...]:
    # C_pq ≤ G′ 要求两个素数上的作用都非平凡
    return tuple(cartesian(_nontrivial_characters(group_id), repeat=2))


def _plain(gbars: Iterable[int]) -> Tuple[GeneratorSpec, ...]:
    return tuple(GeneratorSpec(g) for g in gbars)


def _two_extra_units() -> Iterator[WorkUnit]:
    for group in order8_catalog():
        logger.info(f'[two-extra] 扫描群[{group.id_tag}]')
        pairs = _character_pairs(group.id_tag)
        for base in irredundant_generating_sets(group, rank(group)):
            for a, b in cartesian(range(group.order), repeat=2):
                gens = _plain(base) + (GeneratorSpec(a, inv_p=True), GeneratorSpec(b, inv_q=True))
                yield 'two-extra', group.id_tag, gens, pairs


def _complement_units() -> Iterator[WorkUnit]:
    for group in order8_catalog():
        logger.info(f'[complement] 扫描群[{group.id_tag}]')
        pairs = _character_pairs(group.id_tag)
        for base in irredundant_generating_sets(group, rank(group)):
            for g in range(group.order):
                yield 'complement', group.id_tag, _plain(base) + (GeneratorSpec(g, inv_p=True, inv_q=True),), pairs


def _rank_two_units() -> Iterator[WorkUnit]:
    for tag in RANK_TWO_TAGS:
        group = group_by_tag(tag)
        logger.info(f'[rank-two] 扫描群[{tag}]')
        for base in irredundant_generating_sets(group, 2):
            for a, b in (base, base[::-1]):
                # a 不中心化 C_q
                pairs = tuple(pair for pair in _character_pairs(tag) if pair[1](a) != 0)
                for c in range(group.order):
                    gens = (
                        GeneratorSpec(a), GeneratorSpec(b, inv_q=True), GeneratorSpec(c, inv_p=True, free_q=True)
                    )
                    yield 'rank-two', tag, gens, pairs


def _elementary_units() -> Iterator[WorkUnit]:
    group = group_by_tag('E8')
    logger.info('[elementary] 扫描群[E8]')
    pairs = _character_pairs('E8')
    for e1 in range(1, group.order):
        for e2, e3 in combinations([e for e in range(1, group.order) if e != e1], 2):
            if not group.generates((e1, e2, e3)):
                continue
            for g in range(1, group.order):
                gens = (GeneratorSpec(e1, inv_q=True), GeneratorSpec(e2), GeneratorSpec(e3), GeneratorSpec(g, inv_p=True))
                yield 'elementary', 'E8', gens, pairs


_UNITS: Dict[str, Callable[[], Iterator[WorkUnit]]] = {
    'two-extra': _two_extra_units,
    'complement': _complement_units,
    'rank-two': _rank_two_units,
    'elementary': _elementary_units,
}


def _weight(fixed: List[Tuple[int, int]]) -> Optional[Tuple]:
    """
    固定指数成员 (e_j, z_j) 对 w 的约束 z_j = (1 - ζ^{e_j})·w：
    ('any',) w任意；('zero',) w = 0；('unit', e) w = 1/(1 - ζ^e)；None 无解
    """
    if any(e == 0 and z != 0 for e, z in fixed):
        return None
    moving = {(e, z) for e, z in fixed if e != 0}
    if not moving:
        return ('any',)
    if all(z == 0 for _, z in moving):
        return ('zero',)
    if len(moving) == 1:
        (e, _), = moving
        return ('unit', e)
    return None


def complement_exponent(members: List[GeneratorSpec], chi_p: Character, chi_q: Character) -> Optional[Any]:
    """
    ⟨members⟩ 是 C_pq 的补（8阶）时 x_q^i 的指数 i：
    EVERY_EXPONENT 对所有 i 成立；0 或 1 只对该指数成立；
    None 不成立，或成立的指数依赖于具体的素数
    """
    if _weight([(chi_p(spec.gbar), spec.involvement('p')) for spec in members]) is None:
        return None
    weight = _weight([(chi_q(spec.gbar), spec.involvement('q')) for spec in members if not spec.free_q])
    if weight is None:
        return None
    free = [chi_q(spec.gbar) for spec in members if spec.free_q]
    if not free:
        return EVERY_EXPONENT
    if len(free) > 1:
        raise ValueError(f'至多一个生成元带有未知指数，实际[{len(free)}]个')
    e = free[0]
    if e == 0 or weight == ('zero',):
        return 0
    if weight == ('any',):
        return EVERY_EXPONENT
    return 1 if weight == ('unit', e) else None


def _generating_subsets(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], size: int
) -> Iterator[Tuple[Tuple[int, ...], List[GeneratorSpec]]]:
    for subset in combinations(range(len(gens)), size):
        members = [gens[j] for j in subset]
        if group.generates([spec.gbar for spec in members]):
            yield subset, members


def complement_subset(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], chi_p: Character, chi_q: Character, size: int
) -> Optional[Tuple[int, ...]]:
    """像生成Ḡ且对每个指数 i 都生成8阶子群（C_pq的补）的size元子集"""
    for subset, members in _generating_subsets(group, gens, size):
        if complement_exponent(members, chi_p, chi_q) == EVERY_EXPONENT:
            return subset
    return None


def punctured_subset(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], chi_p: Character, chi_q: Character, size: int
) -> Optional[Tuple[Tuple[int, ...], int]]:
    """只在一个指数 i0 处生成C_pq之补的子集及 i0"""
    for subset, members in _generating_subsets(group, gens, size):
        exponent = complement_exponent(members, chi_p, chi_q)
        if isinstance(exponent, int):
            return subset, exponent
    return None


def match_twin_action_complement(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], chi_p: Character, chi_q: Character
) -> Optional[Dict[str, Any]]:
    """E8，S = {a, b, c, ab·x_p·x_q}，a 取逆C_p、中心化C_q，b、c 中心化C_p、取逆C_q（可交换p、q）"""
    if group.id_tag != 'E8' or len(gens) != 4:
        return None
    base = [spec.gbar for spec in gens if not (spec.inv_p or spec.inv_q)]
    extra = [spec.gbar for spec in gens if spec.inv_p and spec.inv_q]
    if len(base) != 3 or len(extra) != 1:
        return None
    for swapped, (chi_a, chi_b) in ((False, (chi_p, chi_q)), (True, (chi_q, chi_p))):
        for a, b, c in permutations(base):
            if group.mul(a, b) != extra[0]:
                continue
            if [chi_a.sign(x) for x in (a, b, c)] == [-1, 1, 1] and [chi_b.sign(x) for x in (a, b, c)] == [1, -1, -1]:
                return {'a': group.labels[a], 'b': group.labels[b], 'c': group.labels[c], 'swapped': swapped}
    return None


def match_twin_action_elementary(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], chi_p: Character, chi_q: Character
) -> Optional[Dict[str, Any]]:
    """
    E8，S = {e1·x_Q, e2, e3, e1e2′·x_P}，e2′ ∈ {e2, e3}；
    e1 取逆两个素数分量，e2、e3 中心化C_P、取逆C_Q
    """
    if group.id_tag != 'E8' or len(gens) != 4:
        return None
    q_only = [spec.gbar for spec in gens if spec.inv_q and not spec.inv_p]
    p_only = [spec.gbar for spec in gens if spec.inv_p and not spec.inv_q]
    plain = [spec.gbar for spec in gens if not (spec.inv_p or spec.inv_q)]
    if len(q_only) != 1 or len(p_only) != 1 or len(plain) != 2:
        return None
    b, c = plain
    arrangements = ((False, q_only[0], p_only[0], chi_p, chi_q), (True, p_only[0], q_only[0], chi_q, chi_p))
    for swapped, a, d, chi_big_p, chi_big_q in arrangements:
        if not group.generates((a, b, c)) or d not in (group.mul(a, b), group.mul(a, c)):
            continue
        if chi_big_p.sign(a) == chi_big_q.sign(a) == -1 and chi_big_p.sign(b) == chi_big_p.sign(c) == 1 \
                and chi_big_q.sign(b) == chi_big_q.sign(c) == -1:
            return {'e1': group.labels[a], 'e2': group.labels[b], 'e3': group.labels[c], 'swapped': swapped}
    return None


def match_special_dihedral(
        group: GroupTable, gens: Tuple[GeneratorSpec, ...], chi_p: Character, chi_q: Character
) -> Optional[Dict[str, Any]]:
    """D8，S̄ = {f, f·x4⁻¹, f·x4}，f 中心化C_p、取逆C_q，x4 取逆C_p、中心化C_q"""
    if group.id_tag != 'D8' or len(gens) != 3:
        return None
    f = gens[0].gbar
    x4 = group.mul(group.inverse(f), gens[2].gbar)
    if group.element_order(f) != 2 or group.element_order(x4) != 4:
        return None
    if gens[1].gbar != group.mul(f, group.inverse(x4)):
        return None
    if chi_p.sign(f) == 1 and chi_q.sign(f) == -1 and chi_p.sign(x4) == -1 and chi_q.sign(x4) == 1:
        return {'f': group.labels[f], 'x4': group.labels[x4]}
    return None


pattern_mapping: Dict[str, Callable] = {
    'twin-action-complement': match_twin_action_complement,
    'twin-action-elementary': match_twin_action_elementary,
    'special-dihedral': match_special_dihedral,
}

_PATTERNS = {
    'two-extra': (),
    'complement': ('twin-action-complement',),
    'rank-two': ('special-dihedral',),
    'elementary': ('twin-action-elementary',),
}

_ROUTED_SUBSET_SIZE = {'rank-two': 2, 'elementary': 3}


def _certify_fgl(cell: CaseCell, group: GroupTable, cycles: Iterable[CodedCycle]) -> Optional[Certificate]:
    found = strategy_fgl(group, cycles, cell.gens, cell.chi_p, cell.chi_q)
    if found is None:
        return None
    cycle, norm_p, norm_q = found
    return cell.certificate('certified', strategy='fgl', cycle=cycle.to_list(), norms=[norm_p, norm_q])


def _certify_dual(cell: CaseCell, group: GroupTable, cycles: Iterable[CodedCycle]) -> Optional[Certificate]:
    """π_p 光滑的圈中先找single，再按字典序找pair"""
    good = []
    for cycle in cycles:
        pair = voltage_pair(group, cycle, cell.gens, cell.chi_p, cell.chi_q)
        norm_p = norm(pair.pi_p)
        if not smooth5(norm_p):
            continue
        duals = pair.pi_q_prime, pair.pi_q_double
        if duals[1].is_zero:
            norm_q = norm(duals[0])
            if smooth5(norm_q):
                return cell.certificate('certified', strategy='single', cycle=cycle.to_list(), norms=[norm_p, norm_q])
        good.append((cycle, norm_p, duals))
    for (c1, n1, d1), (c2, n2, d2) in combinations(good, 2):
        det_norm = pair_norm(d1, d2)
        if det_norm is not None:
            return cell.certificate(
                'certified', strategy='pair', cycle=c1.to_list(), partner=c2.to_list(), norms=[n1, n2, det_norm]
            )
    return None


def _certify_punctured(
        cell: CaseCell, group: GroupTable, cycles: Iterable[CodedCycle], subset: Tuple[int, ...], exponent: int
) -> Optional[Certificate]:
    """
    i ≡ i0 时子集生成C_pq的补，交给complement搜索；
    其余指数上要求 π′_q + i0·π″_q = 0，于是 π_q = (i - i0)·π″_q
    """
    for cycle in cycles:
        pair = voltage_pair(group, cycle, cell.gens, cell.chi_p, cell.chi_q)
        if not (pair.pi_q_prime + pair.pi_q_double * exponent).is_zero:
            continue
        norm_q = norm(pair.pi_q_double)
        if not smooth5(norm_q):
            continue
        norm_p = norm(pair.pi_p)
        if smooth5(norm_p):
            witness = {'subset': [cell.gens[j].label(group) for j in subset], 'exponent': exponent}
            return cell.certificate(
                'certified', strategy='punctured', cycle=cycle.to_list(), norms=[norm_p, norm_q], witness=witness
            )
    return None


def solve_cell(cell: CaseCell, cycles: Optional[Iterable[CodedCycle]] = None) -> Certificate:
    group = cell.group
    derived = derived_subgroup(group)
    blocked = [spec for spec in cell.gens if spec.gbar in derived]
    if blocked:
        return cell.certificate('skipped', reason=REASON_DERIVED, witness={'generator': blocked[0].label(group)})
    if cycles is None:
        cycles = LazyCycles(group, [spec.gbar for spec in cell.gens])

    certify = _certify_dual if cell.prop_id == 'rank-two' else _certify_fgl
    certificate = certify(cell, group, cycles)
    if certificate is not None:
        return certificate

    for pattern in _PATTERNS[cell.prop_id]:
        witness = pattern_mapping[pattern](group, cell.gens, cell.chi_p, cell.chi_q)
        if witness is not None:
            return cell.certificate('exception', pattern=pattern, witness=witness)

    size = _ROUTED_SUBSET_SIZE.get(cell.prop_id)
    if size is not None:
        subset = complement_subset(group, cell.gens, cell.chi_p, cell.chi_q, size)
        if subset is not None:
            witness = {'subset': [cell.gens[j].label(group) for j in subset]}
            return cell.certificate('skipped', reason=REASON_ORDER_EIGHT, witness=witness)
        punctured = punctured_subset(group, cell.gens, cell.chi_p, cell.chi_q, size)
        if punctured is not None:
            certificate = _certify_punctured(cell, group, cycles, *punctured)
            if certificate is not None:
                return certificate

    logger.error(f'[{cell.prop_id}] 无法解释的单元[{cell.group_id}]{cell.multiset()} 特征{cell.characters()}')
    return cell.certificate('unexplained')


def _solve_unit(unit: WorkUnit) -> List[Certificate]:
    prop_id, group_id, gens, pairs = unit
    group = group_by_tag(group_id)
    cycles = None
    if not any(spec.gbar in derived_subgroup(group) for spec in gens):
        # 同一多重集下的特征对共享一份哈密顿圈枚举
        cycles = LazyCycles(group, [spec.gbar for spec in gens])
    return [solve_cell(CaseCell(prop_id, group_id, gens, chi_p, chi_q), cycles) for chi_p, chi_q in pairs]


def _run(
        prop_id: str, units: Iterable[Any], solve: Callable, jobs: int, strict: bool,
        writer: Optional[Callable[[bytes], Any]]
) -> CaseReport:
    report = CaseReport(prop_id=prop_id)
    digest = StreamDigest()
    serializer = settings.SERIALIZER
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    results = executor.map(solve, units, chunksize=8) if executor else map(solve, units)
    try:
        for certificates in results:
            for certificate in certificates:
                line = serializer.pack(certificate.to_dict()) + b'\n'
                digest.update(line)
                if writer is not None:
                    writer(line)
                report.add(certificate)
                logger.debug(f'[{prop_id}] {certificate.multiset} -> [{certificate.outcome}]')
                if strict and certificate.outcome == 'unexplained':
                    raise UnexplainedCellError(f'[{prop_id}]出现无法解释的单元', certificate.to_dict())
    finally:
        if executor is not None:
            executor.shutdown(wait=False)
    report.digest = digest.hexdigest()
    logger.info(
        f'[{prop_id}] 扫描完成: 单元[{report.cells_scanned}] 认证[{report.certified}] '
        f'例外[{report.exceptions}] 跳过[{report.skipped}] 无法解释[{report.unexplained}]'
    )
    return report


def run_two_extra(jobs: Optional[int] = None, strict: bool = False, writer: Optional[Callable] = None) -> CaseReport:
    return _run('two-extra', _two_extra_units(), _solve_unit, jobs or settings.JOBS, strict, writer)


def run_complement(jobs: Optional[int] = None, strict: bool = False, writer: Optional[Callable] = None) -> CaseReport:
    return _run('complement', _complement_units(), _solve_unit, jobs or settings.JOBS, strict, writer)


def run_rank_two(jobs: Optional[int] = None, strict: bool = False, writer: Optional[Callable] = None) -> CaseReport:
    return _run('rank-two', _rank_two_units(), _solve_unit, jobs or settings.JOBS, strict, writer)


def run_elementary(jobs: Optional[int] = None, strict: bool = False, writer: Optional[Callable] = None) -> CaseReport:
    return _run('elementary', _elementary_units(), _solve_unit, jobs or settings.JOBS, strict, writer)


driver_mapping: Dict[str, Callable[..., CaseReport]] = {
    'two-extra': run_two_extra,
    'complement': run_complement,
    'rank-two': run_rank_two,
    'elementary': run_elementary,
}


def run_search(prop_id: str, **kwargs) -> CaseReport:
    try:
        driver = driver_mapping[PROP_ALIASES.get(prop_id, prop_id)]
    except KeyError:
        raise ValueError(f'未知的搜索[{prop_id}]，可选{list(PROP_IDS)}')
    return driver(**kwargs)


def g56_has_index_two_subgroup() -> bool:
    """指数2子群对应到μ2的非平凡特征"""
    group = group_by_tag('G56')
    return any(not chi.is_trivial for chi in abelian_characters(group, 2))


def _encode_steps(group: GroupTable, gens: Tuple[int, ...], walk: Iterable[int]) -> List[int]:
    codes = []
    for s in walk:
        if s in gens:
            codes.append(gens.index(s) + 1)
        else:
            codes.append(-(gens.index(group.inverse(s)) + 1))
    return codes


def _order56_paths(unit: Tuple[Tuple[int, ...], Optional[float]]) -> List[Certificate]:
    gens, budget = unit
    group = group_by_tag('G56')
    labels = [group.labels[g] for g in gens]
    if nx.is_bipartite(cayley_graph(group, gens)):
        raise VerificationError(f'G56上的Cayley图{labels}是二部图', {'multiset': labels})
    certificates = []
    for target in range(1, group.order):
        base = dict(prop_id='order56', group_id='G56', multiset=labels, characters={})
        witness = {'target': group.labels[target]}
        try:
            path = ham_path(group, gens, target, budget)
        except BudgetExhausted:
            logger.warning(f'G56{labels}到[{group.labels[target]}]的哈密顿路搜索超时')
            certificates.append(Certificate(outcome='timeout', witness=witness, **base))
            continue
        if path is None:
            logger.error(f'G56{labels}中不存在到[{group.labels[target]}]的哈密顿路')
            certificates.append(Certificate(outcome='unexplained', witness=witness, **base))
            continue
        certificates.append(Certificate(
            outcome='certified', strategy='ham-path', cycle=_encode_steps(group, gens, path), witness=witness, **base
        ))
    return certificates


def _replay_redundant_lift(gens: Tuple[int, ...], budget: Optional[float], prime: int) -> Certificate:
    """到 h⁻¹ 的哈密顿路接上 a = h·x_p，电压为 x_p，在 G56 ⋉ C_p 中提升"""
    group = group_by_tag('G56')
    h = gens[0]
    labels = [group.labels[g] for g in gens] + [f'{group.labels[h]}*xp']
    base = dict(prop_id='order56', group_id='G56', multiset=labels, characters={})
    try:
        path = ham_path(group, gens, group.inverse(h), budget)
    except BudgetExhausted:
        return Certificate(outcome='timeout', reason='redundant-lift', **base)
    if path is None:
        return Certificate(outcome='unexplained', reason='redundant-lift', **base)
    extension = build_cyclic_extension(group, Character(1, (0,) * group.order), prime)
    walk = [extension.element(s) for s in path] + [extension.element(h, 1)]
    voltage = walk_product(extension, walk)
    lifted = fgl_lift(extension, walk, prime)
    if not verify_ham_cycle(extension, lifted):
        raise VerificationError(f'[{extension.order}]阶群中的提升圈验证失败', {'multiset': labels, 'prime': prime})
    return Certificate(
        outcome='certified', strategy='redundant-lift', cycle=_encode_steps(group, gens, path) + [len(gens) + 1],
        witness={'voltage': list(voltage), 'prime': prime, 'order': extension.order}, **base
    )


def run_order56(
        sample_size: Optional[int] = None, budget: Optional[float] = None, full: bool = False,
        jobs: Optional[int] = None, writer: Optional[Callable] = None, prime: Optional[int] = None
) -> CaseReport:
    if g56_has_index_two_subgroup():
        raise VerificationError('G56存在指数为2的子群')
    group = group_by_tag('G56')
    sample_size = sample_size or settings.ORDER56_SAMPLE
    budget = settings.HAM_PATH_BUDGET if budget is None else budget
    prime = prime or settings.ORDER56_PRIME
    candidates = irredundant_generating_sets(group, 2)
    if full:
        chosen = candidates
    else:
        chosen = [candidates[k * len(candidates) // sample_size] for k in range(min(sample_size, len(candidates)))]
    logger.info(f'G56的不可约生成集共[{len(candidates)}]个，检查[{len(chosen)}]个')
    report = _run('order56', [(gens, budget) for gens in chosen], _order56_paths, jobs or settings.JOBS, False, writer)

    certificate = _replay_redundant_lift(chosen[0], budget, prime)
    line = settings.SERIALIZER.pack(certificate.to_dict()) + b'\n'
    if writer is not None:
        writer(line)
    report.add(certificate)
    digest = StreamDigest()
    digest.update(report.digest)
    digest.update(line)
    report.digest = digest.hexdigest()
    return report


def _hamiltonian_cycle(group: GroupTable, gens: Tuple[GeneratorSpec, ...], steps: List[int]) -> CodedCycle:
    cycle = CodedCycle(tuple(steps))
    if not verify_ham_cycle(group, cycle.step_elements(group, gens)):
        raise VerificationError(f'编码圈{steps}不是[{group.id_tag}]中的哈密顿圈', {'cycle': steps})
    return cycle


def _witness_members(certificate: Certificate, group: GroupTable, gens) -> List[GeneratorSpec]:
    labels = certificate.witness['subset']
    if not set(labels) <= set(certificate.multiset):
        raise VerificationError(f'见证子集{labels}不在生成多重集中', certificate.to_dict())
    members = [gens[certificate.multiset.index(label)] for label in labels]
    if not group.generates([spec.gbar for spec in members]):
        raise VerificationError('见证子集的像不生成商群', certificate.to_dict())
    return members


def _reverify_certified(certificate: Certificate, group: GroupTable, gens, chi_p: Character, chi_q: Character):
    cycle = _hamiltonian_cycle(group, gens, certificate.cycle)
    norm_p = norm_checked(twisted_voltage(group, cycle, gens, chi_p, 'p'))
    if certificate.strategy == 'fgl':
        norms = [norm_p, norm_checked(twisted_voltage(group, cycle, gens, chi_q, 'q'))]
    elif certificate.strategy == 'single':
        prime, double = dual_voltages(group, cycle, gens, chi_q)
        if not double.is_zero:
            raise VerificationError('single策略要求 π″_q = 0', certificate.to_dict())
        norms = [norm_p, norm_checked(prime)]
    elif certificate.strategy == 'pair':
        partner = _hamiltonian_cycle(group, gens, certificate.partner)
        first, second = dual_voltages(group, cycle, gens, chi_q), dual_voltages(group, partner, gens, chi_q)
        det = first[0] * second[1] - first[1] * second[0]
        norms = [norm_p, norm_checked(twisted_voltage(group, partner, gens, chi_p, 'p')), norm_checked(det)]
    elif certificate.strategy == 'punctured':
        exponent = certificate.witness['exponent']
        if complement_exponent(_witness_members(certificate, group, gens), chi_p, chi_q) != exponent:
            raise VerificationError(f'见证子集不在指数[{exponent}]处生成8阶子群', certificate.to_dict())
        prime, double = dual_voltages(group, cycle, gens, chi_q)
        if not (prime + double * exponent).is_zero:
            raise VerificationError(f'punctured策略要求 π′_q + {exponent}·π″_q = 0', certificate.to_dict())
        norms = [norm_p, norm_checked(double)]
    else:
        raise VerificationError(f'未知的认证策略[{certificate.strategy}]', certificate.to_dict())
    if norms != certificate.norms or not all(smooth5(n) for n in norms):
        raise VerificationError(f'范数{norms}与证书{certificate.norms}不符或不光滑', certificate.to_dict())


def _reverify_order56(certificate: Certificate):
    group = group_by_tag('G56')
    specs = tuple(GeneratorSpec.from_label(group, label) for label in certificate.multiset)
    elements = CodedCycle(tuple(certificate.cycle)).step_elements(group, specs)
    if certificate.strategy == 'redundant-lift':
        if not verify_ham_cycle(group, elements):
            raise VerificationError('G56中的圈验证失败', certificate.to_dict())
        return
    trace = [group.identity]
    for s in elements:
        trace.append(group.mul(trace[-1], s))
    if len(set(trace)) != group.order or trace[-1] != group.index(certificate.witness['target']):
        raise VerificationError('G56中的哈密顿路验证失败', certificate.to_dict())


def reverify(certificate: Certificate) -> bool:
    """只依据证书本身重新验证"""
    if certificate.outcome == 'unexplained':
        raise VerificationError('证书记录的是无法解释的单元', certificate.to_dict())
    if certificate.prop_id == 'order56':
        if certificate.outcome == 'certified':
            _reverify_order56(certificate)
        return True
    group = group_by_tag(certificate.group_id)
    gens = tuple(GeneratorSpec.from_label(group, label) for label in certificate.multiset)
    chi_p = Character.from_list(certificate.characters['p'])
    chi_q = Character.from_list(certificate.characters['q'])
    if not (chi_p.is_homomorphism(group) and chi_q.is_homomorphism(group)):
        raise VerificationError('证书中的特征不是同态', certificate.to_dict())

    if certificate.outcome == 'certified':
        _reverify_certified(certificate, group, gens, chi_p, chi_q)
    elif certificate.outcome == 'exception':
        witness = pattern_mapping[certificate.pattern](group, gens, chi_p, chi_q)
        if witness != certificate.witness:
            raise VerificationError(f'例外模式[{certificate.pattern}]不匹配', certificate.to_dict())
    elif certificate.reason == REASON_DERIVED:
        derived = derived_subgroup(group)
        if not any(spec.gbar in derived for spec in gens):
            raise VerificationError('没有生成元落在导群中', certificate.to_dict())
    elif certificate.reason == REASON_ORDER_EIGHT:
        members = _witness_members(certificate, group, gens)
        if complement_exponent(members, chi_p, chi_q) != EVERY_EXPONENT:
            raise VerificationError('见证子集不能对每个指数都生成8阶子群', certificate.to_dict())
    else:
        raise VerificationError(f'未知的证书结果[{certificate.outcome}]', certificate.to_dict())
    return True


def iter_cells(prop_id: str) -> Iterator[Tuple[CaseCell, bool]]:
    """(单元, 是否被导群过滤)"""
    prop_id = PROP_ALIASES.get(prop_id, prop_id)
    try:
        units = _UNITS[prop_id]()
    except KeyError:
        raise ValueError(f'未知的搜索[{prop_id}]，可选{list(PROP_IDS)}')
    for _, group_id, gens, pairs in units:
        derived = derived_subgroup(group_by_tag(group_id))
        blocked = any(spec.gbar in derived for spec in gens)
        for chi_p, chi_q in pairs:
            yield CaseCell(prop_id, group_id, gens, chi_p, chi_q), blocked


def _strided(items: List[Any], count: int) -> Iterator[Any]:
    if not items:
        return
    step = max(1, len(items) // count)
    yield from items[::step]


def _check_bridge(cell: CaseCell, explicit, cycle: CodedCycle, i: int = 1):
    """约化后的分圆电压等于显式群中同一路径的电压分量"""
    group = cell.group
    _, a, b = walk_product(explicit, explicit_walk(explicit, cycle, cell.gens, i))
    voltage_q = twisted_voltage(group, cycle, cell.gens, cell.chi_q, 'q_fixed')
    voltage_q = voltage_q + twisted_voltage(group, cycle, cell.gens, cell.chi_q, 'q_free') * i
    reduced = (
        reduce_cyc(twisted_voltage(group, cycle, cell.gens, cell.chi_p, 'p'), explicit.p, explicit.r_p),
        reduce_cyc(voltage_q, explicit.q, explicit.r_q),
    )
    if reduced != (a, b):
        raise VerificationError(
            f'约化电压{reduced}与显式电压{(a, b)}不一致',
            {'cell': cell.certificate('certified').to_dict(), 'cycle': cycle.to_list(), 'p': explicit.p, 'q': explicit.q}
        )


def _lift_certificate(cell: CaseCell, certificate: Certificate, p: int, q: int) -> int:
    explicit = build_explicit(cell.group, cell.chi_p, cell.chi_q, p, q)
    if explicit.cpq_meets_center():
        raise VerificationError('C_pq与中心的交非平凡', cell.certificate('certified').to_dict())
    # punctured证书只覆盖 i ≠ i0
    i = certificate.witness['exponent'] + 1 if certificate.strategy == 'punctured' else 1
    candidates = [certificate.cycle] + ([certificate.partner] if certificate.partner else [])
    error = None
    for steps in candidates:
        cycle = CodedCycle(tuple(steps))
        _check_bridge(cell, explicit, cycle, i)
        try:
            return len(lift_coded_cycle(explicit, cycle, cell.gens, i))
        except VerificationError as e:
            error = e
    raise error


def run_e2e(
        prop_id: str, pairs: Optional[Iterable[Tuple[int, int]]] = None, sample: Optional[int] = None
) -> List[LiftResult]:
    """对均匀抽样的已认证单元在具体素数下做FGL提升并验证"""
    pairs = list(pairs or settings.E2E_PAIRS)
    sample = sample or settings.E2E_SAMPLE
    prop_id = PROP_ALIASES.get(prop_id, prop_id)
    cells = [cell for cell, blocked in iter_cells(prop_id) if not blocked]
    cycle_cache: Dict[Tuple[str, Tuple[int, ...]], LazyCycles] = {}
    results = []
    for p, q in pairs:
        result = LiftResult(prop_id=prop_id, p=p, q=q)
        admissible = [cell for cell in cells if cell.is_admissible(p, q)]
        for cell in _strided(admissible, sample):
            if result.lifted >= sample:
                break
            key = (cell.group_id, tuple(spec.gbar for spec in cell.gens))
            if key not in cycle_cache:
                cycle_cache[key] = LazyCycles(cell.group, list(key[1]))
            certificate = solve_cell(cell, cycle_cache[key])
            if certificate.outcome != 'certified':
                continue
            result.lifted += 1
            try:
                length = _lift_certificate(cell, certificate, p, q)
            except VerificationError as e:
                logger.error(f'[{prop_id}] p=[{p}] q=[{q}] 提升失败: {e}')
                result.failures.append({'certificate': certificate.to_dict(), 'error': str(e)})
                continue
            if length == 8 * p * q:
                result.verified += 1
        logger.info(f'[{prop_id}] p=[{p}] q=[{q}] 提升[{result.lifted}] 验证通过[{result.verified}]')
        results.append(result)
    return results


def bridge_samples(prop_id: str, p: int, q: int, count: int, cycles_per_cell: int = 2) -> int:
    """在均匀抽样的单元上核对约化电压与显式电压，返回核对次数"""
    cells = [cell for cell, blocked in iter_cells(prop_id) if not blocked and cell.is_admissible(p, q)]
    checked = 0
    for cell in _strided(cells, count):
        explicit = build_explicit(cell.group, cell.chi_p, cell.chi_q, p, q)
        for index, cycle in enumerate(LazyCycles(cell.group, [spec.gbar for spec in cell.gens])):
            if index >= cycles_per_cell:
                break
            for i in (0, 1, 2):
                _check_bridge(cell, explicit, cycle, i)
            checked += 1
        if checked >= count * cycles_per_cell:
            break
    return checked
