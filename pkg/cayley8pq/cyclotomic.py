#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: cyclotomic
@time: 2023/3/7
"""

import math
import functools
from dataclasses import dataclass
from typing import Tuple, List, Union, Sequence

from sympy import Poly, cyclotomic_poly
from sympy.abc import x

from cayley8pq.schema import VerificationError


__all__ = ('CycInt', 'norm', 'norm_by_resultant', 'norm_checked', 'smooth5', 'phi_degree')


@functools.lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> Tuple[int, ...]:
    """Φ_m的系数，低次在前"""
    if m < 1:
        raise ValueError(f'导子[{m}]必须为正')
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))


def phi_degree(m: int) -> int:
    return len(_phi_coeffs(m)) - 1


def _reduce(m: int, coeffs: Sequence[int]) -> Tuple[int, ...]:
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c:
            # Φ_m首一，减去 c·x^{k-d}·Φ_m
            for i, a in enumerate(phi):
                work[k - d + i] -= c * a
    work.extend([0] * (d - len(work)))
    return tuple(work[:d])


@functools.lru_cache(maxsize=None)
def _zeta_rows(m: int) -> Tuple[Tuple[int, ...], ...]:
    """ζ^k (0 <= k < m) 在幂基下的坐标"""
    return tuple(_reduce(m, [0] * k + [1]) for k in range(m))


@dataclass(frozen=True)
class CycInt:
    conductor: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != phi_degree(self.conductor):
            raise ValueError(
                f'导子[{self.conductor}]下系数长度应为[{phi_degree(self.conductor)}]，实际为[{len(self.coeffs)}]'
            )

    @classmethod
    def zero(cls, m: int) -> 'CycInt':
        return cls(m, (0,) * phi_degree(m))

    @classmethod
    def from_int(cls, c: int, m: int) -> 'CycInt':
        return cls(m, (c,) + (0,) * (phi_degree(m) - 1))

    @classmethod
    def zeta_power(cls, k: int, m: int) -> 'CycInt':
        return cls(m, _zeta_rows(m)[k % m])

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], m: int) -> 'CycInt':
        """任意长度的系数（低次在前）模Φ_m约化"""
        return cls(m, _reduce(m, coeffs))

    def _coerce(self, other: Union['CycInt', int]) -> 'CycInt':
        if isinstance(other, int):
            return CycInt.from_int(other, self.conductor)
        if other.conductor != self.conductor:
            raise ValueError(f'导子不一致[{self.conductor}] != [{other.conductor}]')
        return other

    def __add__(self, other: Union['CycInt', int]) -> 'CycInt':
        other = self._coerce(other)
        return CycInt(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> 'CycInt':
        return CycInt(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Union['CycInt', int]) -> 'CycInt':
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> 'CycInt':
        return self._coerce(other) - self

    def __mul__(self, other: Union['CycInt', int]) -> 'CycInt':
        if isinstance(other, int):
            return CycInt(self.conductor, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        product: List[int] = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CycInt.from_polynomial(product, self.conductor)

    __rmul__ = __mul__

    def shift(self, k: int) -> 'CycInt':
        """乘以ζ^k"""
        m = self.conductor
        rows = _zeta_rows(m)
        acc = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, a in enumerate(rows[(i + k) % m]):
                    acc[j] += c * a
        return CycInt(m, tuple(acc))

    def conjugate(self, k: int) -> 'CycInt':
        """Galois共轭σ_k: ζ -> ζ^k"""
        m = self.conductor
        if math.gcd(k, m) != 1:
            raise ValueError(f'[{k}]与导子[{m}]不互素')
        rows = _zeta_rows(m)
        acc = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, a in enumerate(rows[(i * k) % m]):
                    acc[j] += c * a
        return CycInt(m, tuple(acc))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def evaluate(self, r: int, modulus: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = (value * r + c) % modulus
        return value

    def to_list(self) -> List[int]:
        return [self.conductor, *self.coeffs]


def norm(z: CycInt) -> int:
    """共轭之积"""
    if z.is_zero:
        return 0
    m = z.conductor
    result = CycInt.from_int(1, m)
    for k in range(1, m + 1):
        if math.gcd(k, m) == 1:
            result = result * z.conjugate(k)
    if not result.is_rational:
        raise VerificationError(f'范数[{result.coeffs}]不是有理整数', {'z': z.to_list()})
    return result.coeffs[0]


def norm_by_resultant(z: CycInt) -> int:
    """Res(Φ_m, f)，Φ_m首一"""
    if z.is_zero:
        return 0
    phi = Poly(list(reversed(_phi_coeffs(z.conductor))), x)
    f = Poly(list(reversed(z.coeffs)), x)
    return int(phi.resultant(f))


def norm_checked(z: CycInt) -> int:
    by_conjugates, by_resultant = norm(z), norm_by_resultant(z)
    if by_conjugates != by_resultant:
        raise VerificationError(
            f'两种范数算法结果不一致[{by_conjugates}] != [{by_resultant}]', {'z': z.to_list()}
        )
    return by_conjugates


def smooth5(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    for prime in (2, 3, 5):
        while n % prime == 0:
            n //= prime
    return n == 1
