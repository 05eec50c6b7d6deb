#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: crypto
@time: 2023/3/9
"""

from typing import AnyStr

from Crypto.Hash import SHA256


__all__ = ('StreamDigest',)


class StreamDigest:
    """证书字节流的SHA256摘要"""

    def __init__(self, encoding: str = 'utf-8'):
        self.encoding = encoding
        self._hash = SHA256.new()
        self.count = 0

    def update(self, data: AnyStr):
        if isinstance(data, str):
            data = data.encode(self.encoding)
        self._hash.update(data)
        self.count += 1

    def hexdigest(self) -> str:
        return self._hash.hexdigest()
