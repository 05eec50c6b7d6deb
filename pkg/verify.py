#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: verify
@time: 2023/3/14
"""

import sys

from cayley8pq.cli import main


if __name__ == '__main__':
    sys.exit(main())
