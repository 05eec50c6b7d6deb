#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: config
@time: 2023/3/6
"""

from pathlib import Path
from typing import Union, Optional, Tuple
from dataclasses import dataclass

from cayley8pq.serializer import AbstractSerializer, JsonSerializer


__all__ = ('settings', 'Settings')


@dataclass
class Settings:
    CERT_PATH: Union[str, Path] = Path('~/.cayley8pq').expanduser()
    SERIALIZER: Optional[AbstractSerializer] = JsonSerializer()

    JOBS: int = 1
    # 八阶商群的特征值都在μ8中
    CONDUCTOR: int = 8

    HAM_PATH_BUDGET: float = 10.0
    ORDER56_SAMPLE: int = 5
    ORDER56_PRIME: int = 11

    E2E_PAIRS: Tuple[Tuple[int, int], ...] = ((7, 11), (11, 13))
    E2E_SAMPLE: int = 50
    HAND_CASE_PAIRS: Tuple[Tuple[int, int], ...] = ((7, 11), (11, 13), (13, 17))
    SWEEP_BOUND: int = 1000

    LOG_LEVEL: str = 'INFO'


settings = Settings()
settings.CERT_PATH = Path(settings.CERT_PATH)
