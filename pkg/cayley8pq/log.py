#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: log
@time: 2023/3/6
"""

import logging

__all__ = ('logger', 'set_level')


logger = logging.getLogger('cayley8pq')
# 日志级别：DEBUG|INFO|WARNING|ERROR
logger.setLevel('INFO')
handler = logging.StreamHandler()
handler.setFormatter(
    logging.Formatter('%(asctime)s | %(levelname)-8s | %(module)s:%(funcName)s:%(lineno)d - %(message)s')
)
logger.addHandler(handler)


def set_level(level: str):
    logger.setLevel(level.upper())
