#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: timer
@time: 2023/3/8
"""

import time
from typing import Optional


__all__ = ('Deadline', 'BudgetExhausted')


class BudgetExhausted(TimeoutError):
    pass


class Deadline:
    """单调时钟上的时间预算，budget为None表示不限时"""

    def __init__(self, budget: Optional[float]):
        self.budget = budget
        self.started = time.monotonic()
        self.is_active = budget is not None

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    @property
    def remaining(self) -> float:
        if not self.is_active:
            return float('inf')
        return max(0.0, self.budget - self.elapsed)

    def expired(self) -> bool:
        return self.is_active and self.elapsed >= self.budget

    def check(self):
        if self.expired():
            raise BudgetExhausted(f'时间预算[{self.budget}s]已耗尽')
