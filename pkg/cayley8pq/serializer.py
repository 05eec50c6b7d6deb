#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: serializer
@time: 2023/3/6
"""

import json
import base64
from abc import ABCMeta, abstractmethod
from typing import Optional, AnyStr, Dict, Iterable, Iterator

import msgpack


__all__ = ('AbstractSerializer', 'JsonSerializer', 'MsgPackSerializer', 'serializer_mapping')


class AbstractSerializer(metaclass=ABCMeta):
    name: str = ''

    def __init__(self, encoding: Optional[str] = 'utf-8'):
        self.encoding = encoding

    @abstractmethod
    def pack(self, data: Dict) -> AnyStr:
        ...

    @abstractmethod
    def unpack(self, data: AnyStr) -> Dict:
        ...

    def pack_lines(self, records: Iterable[Dict]) -> Iterator[bytes]:
        """每条记录一行，LF结尾"""
        for record in records:
            yield self.pack(record) + b'\n'

    def unpack_lines(self, data: bytes) -> Iterator[Dict]:
        for line in data.split(b'\n'):
            if line.strip():
                yield self.unpack(line)


class JsonSerializer(AbstractSerializer):
    name = 'json'

    def pack(self, data: Dict) -> bytes:
        # 固定分隔符，保证证书文件逐字节可复现
        return json.dumps(data, separators=(',', ':'), ensure_ascii=False).encode(self.encoding)

    def unpack(self, data: bytes) -> Dict:
        return json.loads(data)


class MsgPackSerializer(AbstractSerializer):
    name = 'msgpack'

    def pack(self, data: Dict) -> bytes:
        return base64.b64encode(msgpack.packb(data, use_bin_type=True))

    def unpack(self, data: bytes) -> Dict:
        return msgpack.unpackb(base64.b64decode(data), use_list=True)


serializer_mapping = {
    JsonSerializer.name: JsonSerializer,
    MsgPackSerializer.name: MsgPackSerializer,
}
