#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: grouptable
@time: 2023/3/7
"""

import math
import functools
from itertools import combinations, combinations_with_replacement, product as cartesian
from dataclasses import dataclass, field
from typing import Tuple, List, Dict, Sequence, Iterable, FrozenSet, Callable, Hashable, Optional

from sympy import factorint

from cayley8pq.schema import VerificationError


__all__ = (
    'GroupTable', 'Character', 'GenMultiset', 'ORDER8_TAGS', 'order8_catalog', 'group_by_tag', 'rank',
    'generating_multisets', 'irredundant_generating_sets', 'abelianization', 'abelian_characters',
    'character_from_images', 'derived_subgroup', 'center', 'automorphisms', 'render_table'
)


ORDER8_TAGS = ('C8', 'C4xC2', 'D8', 'Q8', 'E8')


@dataclass(frozen=True, eq=False)
class GroupTable:
    id_tag: str
    labels: Tuple[str, ...]
    product: Tuple[Tuple[int, ...], ...]
    inverses: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(self.product) != n or any(len(row) != n for row in self.product):
            raise ValueError(f'群[{self.id_tag}]的乘法表不是{n}x{n}')
        if len(set(self.labels)) != n:
            raise ValueError(f'群[{self.id_tag}]的元素标签不唯一')
        inverses = []
        for g, row in enumerate(self.product):
            if 0 not in row:
                raise VerificationError(f'元素[{self.labels[g]}]没有右逆元', {'group': self.id_tag})
            inverses.append(row.index(0))
        object.__setattr__(self, 'inverses', tuple(inverses))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    def _check(self, *elements: int):
        for g in elements:
            if not 0 <= g < self.order:
                raise IndexError(f'元素下标[{g}]超出群[{self.id_tag}]的范围')

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f'群[{self.id_tag}]中没有元素[{label}]')

    def label(self, g: int) -> str:
        self._check(g)
        return self.labels[g]

    def mul(self, g: int, h: int) -> int:
        self._check(g, h)
        return self.product[g][h]

    def inverse(self, g: int) -> int:
        self._check(g)
        return self.inverses[g]

    def power(self, g: int, k: int) -> int:
        self._check(g)
        if k < 0:
            g, k = self.inverses[g], -k
        result = 0
        while k:
            if k & 1:
                result = self.product[result][g]
            g = self.product[g][g]
            k >>= 1
        return result

    def element_order(self, g: int) -> int:
        self._check(g)
        k, h = 1, g
        while h != 0:
            h = self.product[h][g]
            k += 1
        return k

    def commutator(self, g: int, h: int) -> int:
        """[g, h] = g⁻¹h⁻¹gh"""
        inv = self.inverses
        return self.mul(self.mul(self.mul(inv[g], inv[h]), g), h)

    def conjugate(self, g: int, h: int) -> int:
        """g^h = h⁻¹gh"""
        return self.mul(self.mul(self.inverses[h], g), h)

    def generated(self, gens: Iterable[int]) -> FrozenSet[int]:
        gens = sorted(set(gens))
        self._check(*gens)
        seen = {0}
        frontier = [0]
        while frontier:
            row = self.product[frontier.pop()]
            for s in gens:
                h = row[s]
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        return frozenset(seen)

    def generates(self, gens: Iterable[int]) -> bool:
        return len(self.generated(gens)) == self.order

    def is_abelian(self) -> bool:
        return all(self.product[g][h] == self.product[h][g] for g in range(self.order) for h in range(g))

    def is_associative(self) -> bool:
        p = self.product
        n = self.order
        return all(p[p[a][b]][c] == p[a][p[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def validate(self):
        if any(self.product[0][g] != g or self.product[g][0] != g for g in range(self.order)):
            raise VerificationError(f'群[{self.id_tag}]的下标0不是单位元')
        if any(self.product[self.inverses[g]][g] != 0 for g in range(self.order)):
            raise VerificationError(f'群[{self.id_tag}]的逆元不是双边的')
        if not self.is_associative():
            raise VerificationError(f'群[{self.id_tag}]的乘法不满足结合律')


@dataclass(frozen=True)
class Character:
    conductor: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError(f'特征的导子[{self.conductor}]必须为正')
        if self.exponents and self.exponents[0] != 0:
            raise ValueError('特征在单位元处的指数必须为0')

    def __call__(self, g: int) -> int:
        return self.exponents[g]

    @property
    def order(self) -> int:
        return self.conductor // functools.reduce(math.gcd, self.exponents, self.conductor)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def primitive(self) -> 'Character':
        """导子改为特征自身的阶"""
        step = self.conductor // self.order
        return Character(self.order, tuple(e // step for e in self.exponents))

    def sign(self, g: int) -> int:
        e = self.exponents[g]
        if e == 0:
            return 1
        if 2 * e == self.conductor:
            return -1
        raise ValueError(f'特征值ζ^{e}不是±1')

    def is_homomorphism(self, group: GroupTable) -> bool:
        m, e = self.conductor, self.exponents
        return all(
            (e[g] + e[h]) % m == e[group.product[g][h]] for g in range(group.order) for h in range(group.order)
        )

    def to_list(self) -> List[int]:
        return [self.conductor, *self.exponents]

    @classmethod
    def from_list(cls, data: Sequence[int]) -> 'Character':
        return cls(data[0], tuple(data[1:]))


@dataclass(frozen=True)
class GenMultiset:
    entries: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.entries)

    def labels(self, group: GroupTable) -> List[str]:
        return [group.labels[g] for g in self.entries]


def _from_presentation(
        id_tag: str, elements: Sequence[Hashable], multiply: Callable, label: Callable
) -> GroupTable:
    position = {element: index for index, element in enumerate(elements)}
    table = GroupTable(
        id_tag=id_tag,
        labels=tuple(label(element) for element in elements),
        product=tuple(tuple(position[multiply(a, b)] for b in elements) for a in elements)
    )
    table.validate()
    return table


def _power_label(symbol: str, k: int) -> str:
    return '' if k == 0 else symbol if k == 1 else f'{symbol}^{k}'


def _basis_label(v: int) -> str:
    return ''.join(f'e{i + 1}' for i in range(3) if v >> i & 1)


def _cyclic8() -> GroupTable:
    return _from_presentation('C8', range(8), lambda a, b: (a + b) % 8, lambda a: _power_label('s', a) or '1')


def _c4xc2() -> GroupTable:
    return _from_presentation(
        'C4xC2',
        [(a, b) for b in range(2) for a in range(4)],
        lambda x, y: ((x[0] + y[0]) % 4, (x[1] + y[1]) % 2),
        lambda x: (_power_label('s', x[0]) + _power_label('t', x[1])) or '1'
    )


def _dihedral8() -> GroupTable:
    # f^k x^r，x f = f x⁻¹
    return _from_presentation(
        'D8',
        [(k, r) for k in range(2) for r in range(4)],
        lambda x, y: ((x[0] + y[0]) % 2, (x[1] * (-1) ** y[0] + y[1]) % 4),
        lambda x: (_power_label('f', x[0]) + _power_label('x', x[1])) or '1'
    )


def _quaternion8() -> GroupTable:
    units = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
             (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
    names = ['1', '-1', 'i', '-i', 'j', '-j', 'k', '-k']

    def hamilton(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    return _from_presentation('Q8', units, hamilton, lambda x: names[units.index(x)])


def _elementary8() -> GroupTable:
    return _from_presentation('E8', range(8), lambda a, b: a ^ b, lambda v: _basis_label(v) or '1')


def _frobenius_action() -> Tuple[Tuple[int, ...], ...]:
    """x³+x+1的友矩阵在GF(2)³上的各次幂，阶为7"""
    def apply(v: int) -> int:
        images = (0b010, 0b100, 0b011)
        w = 0
        for i in range(3):
            if v >> i & 1:
                w ^= images[i]
        return w

    powers = [tuple(range(8))]
    for _ in range(6):
        powers.append(tuple(apply(powers[-1][v]) for v in range(8)))
    if tuple(apply(powers[-1][v]) for v in range(8)) != powers[0]:
        raise VerificationError('GF(2)³上的自同构阶不为7')
    return tuple(powers)


def _g56() -> GroupTable:
    action = _frobenius_action()
    return _from_presentation(
        'G56',
        [(k, v) for k in range(7) for v in range(8)],
        lambda x, y: ((x[0] + y[0]) % 7, action[y[0]][x[1]] ^ y[1]),
        lambda x: '*'.join(part for part in (_power_label('c', x[0]), _basis_label(x[1])) if part) or '1'
    )


_BUILDERS = {
    'C8': _cyclic8, 'C4xC2': _c4xc2, 'D8': _dihedral8, 'Q8': _quaternion8, 'E8': _elementary8, 'G56': _g56
}


@functools.lru_cache(maxsize=None)
def group_by_tag(id_tag: str) -> GroupTable:
    try:
        builder = _BUILDERS[id_tag]
    except KeyError:
        raise ValueError(f'未知的群[{id_tag}]')
    return builder()


def order8_catalog() -> List[GroupTable]:
    return [group_by_tag(tag) for tag in ORDER8_TAGS]


def irredundant_generating_sets(group: GroupTable, size: Optional[int] = None) -> List[Tuple[int, ...]]:
    sizes = [size] if size is not None else range(1, group.order)
    found = []
    for k in sizes:
        for subset in combinations(range(1, group.order), k):
            if not group.generates(subset):
                continue
            if all(not group.generates(subset[:i] + subset[i + 1:]) for i in range(k)):
                found.append(subset)
    return found


@functools.lru_cache(maxsize=None)
def rank(group: GroupTable) -> int:
    if len(factorint(group.order)) != 1:
        raise ValueError(f'群[{group.id_tag}]的阶[{group.order}]不是素数幂')
    nonidentity = range(1, group.order)
    minimum = next(
        k for k in range(1, group.order) if any(group.generates(s) for s in combinations(nonidentity, k))
    )
    sizes = {len(s) for s in irredundant_generating_sets(group)}
    if sizes != {minimum}:
        raise VerificationError(f'群[{group.id_tag}]的不可约生成集大小不唯一{sorted(sizes)}')
    return minimum


def generating_multisets(group: GroupTable, size: int) -> List[GenMultiset]:
    d = rank(group)
    if not d <= size <= d + 2:
        raise ValueError(f'生成集大小[{size}]不在[{d}, {d + 2}]之内')
    return [
        GenMultiset(entries) for entries in combinations_with_replacement(range(1, group.order), size)
        if group.generates(entries)
    ]


@functools.lru_cache(maxsize=None)
def derived_subgroup(group: GroupTable) -> FrozenSet[int]:
    commutators = {group.commutator(g, h) for g in range(group.order) for h in range(group.order)}
    return group.generated(commutators)


def center(group: GroupTable) -> FrozenSet[int]:
    p = group.product
    return frozenset(g for g in range(group.order) if all(p[g][h] == p[h][g] for h in range(group.order)))


def abelianization(group: GroupTable) -> Tuple[List[int], GroupTable]:
    """返回 (元素 -> 陪集下标, G/G′的乘法表)"""
    derived = derived_subgroup(group)
    coset_of: Dict[int, int] = {}
    representatives = []
    for g in range(group.order):
        if g not in coset_of:
            for d in derived:
                coset_of[group.product[g][d]] = len(representatives)
            representatives.append(g)
    quotient = GroupTable(
        id_tag=f'{group.id_tag}/G\'',
        labels=tuple(group.labels[r] for r in representatives),
        product=tuple(tuple(coset_of[group.product[a][b]] for b in representatives) for a in representatives)
    )
    return [coset_of[g] for g in range(group.order)], quotient


def _extend(group: GroupTable, gens: Sequence[int], images: Sequence[int], m: int) -> Optional[List[int]]:
    exponents = {0: 0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for s, image in zip(gens, images):
            b = group.product[a][s]
            value = (exponents[a] + image) % m
            if b not in exponents:
                exponents[b] = value
                frontier.append(b)
            elif exponents[b] != value:
                return None
    if len(exponents) != group.order:
        raise ValueError(f'给定元素不生成群[{group.id_tag}]')
    return [exponents[g] for g in range(group.order)]


def abelian_characters(group: GroupTable, m: int) -> List[Character]:
    projection, quotient = abelianization(group)
    gens: List[int] = []
    for a in range(1, quotient.order):
        if a not in quotient.generated(gens):
            gens.append(a)
    characters = []
    for images in cartesian(range(m), repeat=len(gens)):
        exponents = _extend(quotient, gens, images, m)
        if exponents is not None:
            characters.append(Character(m, tuple(exponents[projection[g]] for g in range(group.order))).primitive())
    return characters


def character_from_images(group: GroupTable, conductor: int, images: Dict[int, int]) -> Character:
    gens = sorted(images)
    exponents = _extend(group, gens, [images[g] % conductor for g in gens], conductor)
    if exponents is None:
        raise ValueError(f'生成元上的取值{images}不能延拓为同态')
    return Character(conductor, tuple(exponents)).primitive()


def automorphisms(group: GroupTable) -> List[Tuple[int, ...]]:
    """以生成元的像枚举全部自同构，返回元素的置换"""
    gens = min(irredundant_generating_sets(group), key=len)
    found = []
    for images in cartesian(range(1, group.order), repeat=len(gens)):
        mapping = {0: 0}
        frontier = [0]
        consistent = True
        while frontier and consistent:
            a = frontier.pop()
            for s, image in zip(gens, images):
                b = group.product[a][s]
                value = group.product[mapping[a]][image]
                if b not in mapping:
                    mapping[b] = value
                    frontier.append(b)
                elif mapping[b] != value:
                    consistent = False
                    break
        if not consistent or len(set(mapping.values())) != group.order:
            continue
        permutation = tuple(mapping[g] for g in range(group.order))
        if all(
                permutation[group.product[g][h]] == group.product[permutation[g]][permutation[h]]
                for g in range(group.order) for h in range(group.order)
        ):
            found.append(permutation)
    return found


def render_table(group: GroupTable) -> str:
    width = max(len(label) for label in group.labels) + 1
    lines = [' ' * width + '|' + ''.join(label.rjust(width) for label in group.labels)]
    lines.append('-' * len(lines[0]))
    for g, row in enumerate(group.product):
        lines.append(group.labels[g].rjust(width) + '|' + ''.join(group.labels[h].rjust(width) for h in row))
    return '\n'.join(lines)
