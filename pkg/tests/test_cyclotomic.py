#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: test_cyclotomic
@time: 2023/3/15
"""

import random

import pytest

from cayley8pq.cyclotomic import CycInt, norm, norm_by_resultant, norm_checked, smooth5, phi_degree


@pytest.mark.parametrize('m, degree', [(1, 1), (2, 1), (4, 2), (8, 4)])
def test_phi_degree(m, degree):
    assert phi_degree(m) == degree


def test_zeta_powers():
    zeta = CycInt.zeta_power(1, 8)
    assert CycInt.zeta_power(4, 8) == CycInt.from_int(-1, 8)
    assert zeta * zeta == CycInt.zeta_power(2, 8)
    assert CycInt.zeta_power(9, 8) == zeta
    assert CycInt.zeta_power(1, 2) == CycInt.from_int(-1, 2)
    assert CycInt.zeta_power(3, 4).shift(1) == CycInt.from_int(1, 4)


def test_arithmetic():
    a = CycInt(8, (1, 2, 0, -1))
    assert a - a == CycInt.zero(8)
    assert (a + 3) - 3 == a
    assert 2 * a == a + a
    assert a.shift(8) == a
    assert a.shift(3) == a * CycInt.zeta_power(3, 8)
    assert CycInt.from_polynomial([0, 0, 0, 0, 1], 8) == CycInt.from_int(-1, 8)


def test_shape_and_conductor_errors():
    with pytest.raises(ValueError):
        CycInt(8, (1, 2))
    with pytest.raises(ValueError):
        CycInt.from_int(1, 8) + CycInt.from_int(1, 4)
    with pytest.raises(ValueError):
        CycInt.from_int(1, 8).conjugate(2)


@pytest.mark.parametrize('z, expected', [
    (CycInt.from_int(1, 8) - CycInt.zeta_power(1, 8), 2),
    (CycInt.from_int(1, 4) - CycInt.zeta_power(1, 4), 2),
    (CycInt.from_int(2, 8), 16),
    (CycInt.from_int(-5, 1), -5),
    (CycInt.from_int(1, 2) - CycInt.zeta_power(1, 2), 2),
    (CycInt.from_int(1, 4) + CycInt.zeta_power(1, 4) * 2, 5),
    (CycInt.zero(8), 0),
])
def test_norm_values(z, expected):
    assert norm(z) == expected
    assert norm_by_resultant(z) == expected


def test_norm_algorithms_agree():
    rng = random.Random(8)
    for m in (1, 2, 4, 8):
        for _ in range(50):
            z = CycInt(m, tuple(rng.randint(-6, 6) for _ in range(phi_degree(m))))
            assert norm_checked(z) == norm(z) == norm_by_resultant(z)


def test_norm_is_multiplicative():
    rng = random.Random(4)
    for _ in range(30):
        a = CycInt(8, tuple(rng.randint(-3, 3) for _ in range(4)))
        b = CycInt(8, tuple(rng.randint(-3, 3) for _ in range(4)))
        assert norm(a * b) == norm(a) * norm(b)


def test_evaluate():
    # ζ8 -> 2 模 17，2 的阶为8
    z = CycInt(8, (3, 1, 0, 0))
    assert z.evaluate(2, 17) == 5
    assert CycInt.zeta_power(5, 8).evaluate(2, 17) == pow(2, 5, 17)


@pytest.mark.parametrize('n, expected', [(1, True), (-1, True), (2 ** 5 * 3 * 25, True), (-30, True),
                                         (7, False), (0, False), (2 * 11, False)])
def test_smooth5(n, expected):
    assert smooth5(n) is expected
