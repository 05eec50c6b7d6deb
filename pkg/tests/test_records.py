#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: test_records
@time: 2023/3/15
"""

import pytest

from cayley8pq.crypto import StreamDigest
from cayley8pq.schema import (
    Certificate, CaseReport, HandCaseResult, LiftResult, VerificationError, UnexplainedCellError, load_record
)
from cayley8pq.serializer import JsonSerializer, MsgPackSerializer, serializer_mapping
from cayley8pq.timer import Deadline, BudgetExhausted


def _certificate(outcome, **kwargs):
    return Certificate('two-extra', 'E8', ['e1', 'e2'], {'p': [2, 0, 1], 'q': [1, 0, 0]}, outcome, **kwargs)


def test_json_lines_are_compact():
    line = JsonSerializer().pack({'a': [1, 2], 'b': None})
    assert line == b'{"a":[1,2],"b":null}'


@pytest.mark.parametrize('name', sorted(serializer_mapping))
def test_serializer_lines(name):
    serializer = serializer_mapping[name]()
    records = [_certificate('certified', strategy='fgl', cycle=[1, -2], norms=[4, 9]).to_dict(),
               _certificate('skipped', reason='generator-in-derived-subgroup').to_dict()]
    data = b''.join(serializer.pack_lines(records))
    assert data.count(b'\n') == 2
    assert list(serializer.unpack_lines(data)) == records


def test_msgpack_lines_are_ascii():
    line = MsgPackSerializer().pack(_certificate('certified').to_dict())
    assert b'\n' not in line
    line.decode('ascii')


def test_certificate_field_order():
    assert list(_certificate('certified').to_dict()) == [
        'prop_id', 'group_id', 'multiset', 'characters', 'outcome', 'strategy', 'cycle', 'partner', 'norms',
        'pattern', 'witness', 'reason', 'type'
    ]


def test_load_record_dispatches_on_type():
    report = CaseReport('complement')
    hand = HandCaseResult('special-dihedral', 7, 11, {'c_lift': True}, True)
    lift = LiftResult('two-extra', 7, 11, lifted=2, verified=2)
    for record in (_certificate('exception', pattern='twin-action-complement'), report, hand, lift):
        assert load_record(record.to_dict()) == record
    assert isinstance(load_record({'prop_id': 'x', 'group_id': 'E8', 'multiset': [], 'characters': {},
                                   'outcome': 'certified'}), Certificate)


def test_case_report_counts():
    report = CaseReport('rank-two')
    report.add(_certificate('certified', strategy='single'))
    report.add(_certificate('certified', strategy='pair'))
    report.add(_certificate('certified', strategy='pair'))
    report.add(_certificate('exception', pattern='special-dihedral'))
    report.add(_certificate('skipped', reason='order-eight-subset'))
    assert report.cells_scanned == 4
    assert report.certified == {'single': 1, 'pair': 2}
    assert report.certified_total == 3
    assert report.skipped == {'order-eight-subset': 1}
    assert report.is_consistent()
    assert report.passed
    report.add(_certificate('unexplained'))
    report.add(_certificate('timeout'))
    assert report.unexplained == 1
    assert report.timeouts == 1
    assert report.is_consistent()
    assert not report.passed


def test_lift_result_passed():
    assert LiftResult('two-extra', 7, 11, lifted=3, verified=3).passed
    assert not LiftResult('two-extra', 7, 11, lifted=3, verified=2).passed


def test_errors_carry_witness():
    error = UnexplainedCellError('boom', {'cell': 1})
    assert isinstance(error, VerificationError)
    assert isinstance(error, RuntimeError)
    assert error.witness == {'cell': 1}
    assert VerificationError('boom').witness == {}


def test_stream_digest():
    lines = [b'{"a":1}\n', b'{"b":2}\n']
    digest = StreamDigest()
    for line in lines:
        digest.update(line)
    assert digest.count == 2
    reverse = StreamDigest()
    for line in reversed(lines):
        reverse.update(line)
    assert reverse.hexdigest() != digest.hexdigest()
    text, raw = StreamDigest(), StreamDigest()
    text.update('{"a":1}\n')
    raw.update(lines[0])
    assert text.hexdigest() == raw.hexdigest()
    assert len(digest.hexdigest()) == 64


def test_deadline():
    unlimited = Deadline(None)
    assert unlimited.remaining == float('inf')
    assert not unlimited.expired()
    unlimited.check()
    expired = Deadline(0)
    assert expired.expired()
    assert expired.remaining == 0.0
    with pytest.raises(BudgetExhausted):
        expired.check()
    assert issubclass(BudgetExhausted, TimeoutError)
