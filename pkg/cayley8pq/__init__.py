#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: __init__.py
@time: 2023/3/6
"""
