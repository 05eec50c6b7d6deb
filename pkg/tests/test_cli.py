#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: test_cli
@time: 2023/3/15
"""

import json

import pytest

from cayley8pq.cli import main, parse_pairs, build_parser
from cayley8pq.config import settings
from cayley8pq.serializer import JsonSerializer


@pytest.fixture(autouse=True)
def restore_serializer():
    yield
    settings.SERIALIZER = JsonSerializer()


def _last_json(capsys):
    lines = [line for line in capsys.readouterr().out.splitlines() if line.startswith('{')]
    return json.loads(lines[-1])


def test_parse_pairs():
    assert parse_pairs('(7,11),(11,13)') == [(7, 11), (11, 13)]
    assert parse_pairs(' ( 7 , 11 ) ') == [(7, 11)]
    with pytest.raises(ValueError):
        parse_pairs('7,11')


def test_doubling_pairs(capsys):
    assert main(['lemma', '--name', 'doubling-pairs', '--bound', '30']) == 0
    assert _last_json(capsys)['pairs'] == [[3, 2], [7, 2], [5, 3], [11, 3], [19, 5]]


def test_subset_sum(capsys):
    assert main(['lemma', '--name', 'subset-sum', '--p', '7', '--q', '11']) == 0
    output = _last_json(capsys)
    assert output['holds'] is True
    assert output['counterexamples'] == 0


def test_verify_hand(capsys):
    assert main(['-q', 'verify-hand', '--case', 'special-dihedral', '--p', '7', '--q', '13']) == 0
    output = _last_json(capsys)
    assert output['type'] == 'hand_case'
    assert output['passed'] is True


def test_catalog(capsys):
    assert main(['catalog']) == 0
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines() if line.startswith('{')]
    assert [r['group_id'] for r in records] == ['C8', 'C4xC2', 'D8', 'Q8', 'E8', 'G56']
    assert records[2]['derived_subgroup'] == ['1', 'x^2']
    assert records[-1] == {'group_id': 'G56', 'irredundant_pairs': 1344, 'index_two_subgroup': False}


def test_dihedral_sweep(capsys):
    assert main(['dihedral-sweep', '--bound', '300']) == 0
    assert _last_json(capsys)['solutions'] == {'4p': [], '2p': []}


def test_e2e(capsys):
    assert main(['-q', 'e2e', '--prop', '7.4', '--pairs', '(7,11)', '--sample', '3']) == 0
    output = _last_json(capsys)
    assert output['lifted'] == output['verified'] == 3


@pytest.mark.parametrize('argv', [
    ['search', '--prop', '7.5'],
    ['lemma', '--name', 'doubling-pairs', '--bound', '10'],
    ['lemma', '--name', 'subset-sum', '--p', '7'],
    ['lemma', '--name', 'subset-sum'],
    ['lemma', '--name', 'add3', '--q', '11'],
    ['verify-hand', '--case', 'special-dihedral', '--p', '5', '--q', '13'],
    ['e2e', '--prop', 'two-extra', '--pairs', 'none'],
    [],
])
def test_usage_errors(argv):
    assert main(argv) == 2


@pytest.mark.parametrize('alias, name', [('7.4', 'two-extra'), ('7.7', 'complement'), ('7.9', 'rank-two'),
                                         ('5.1', 'elementary'), ('rank-two', 'rank-two')])
def test_prop_aliases(alias, name):
    parser = build_parser()
    assert parser.parse_args(['search', '--prop', alias]).prop == name
    assert parser.parse_args(['e2e', '--prop', alias]).prop == name


def test_lemma_aliases(capsys):
    assert main(['lemma', '--name', '0modpandq', '--bound', '30']) == 0
    output = _last_json(capsys)
    assert output['name'] == 'doubling-pairs'
    assert output['pairs'] == [[3, 2], [7, 2], [5, 3], [11, 3], [19, 5]]
    assert main(['lemma', '--name', 'add3', '--p', '7', '--q', '11']) == 0
    assert _last_json(capsys)['holds'] is True


def test_missing_input_file(tmp_path):
    assert main(['reverify', '--input', str(tmp_path / 'missing.jsonl')]) == 2


@pytest.mark.slow
@pytest.mark.parametrize('fmt', ['json', 'msgpack'])
def test_search_writes_certificates_and_reverifies(tmp_path, capsys, fmt):
    out = tmp_path / f'complement.{fmt}'
    assert main(['-q', '--format', fmt, 'search', '--prop', 'complement', '--out', str(out)]) == 0
    report = _last_json(capsys)
    assert report['unexplained'] == 0
    assert len(out.read_bytes().splitlines()) == report['cells_scanned'] + sum(report['skipped'].values())
    assert main(['-q', '--format', fmt, 'reverify', '--input', str(out)]) == 0
    assert _last_json(capsys)['reverified'] == len(out.read_bytes().splitlines())


@pytest.mark.slow
def test_order56(tmp_path, capsys):
    assert main(['-q', 'order56', '--sample', '5', '--budget', '10', '--out', str(tmp_path / 'g56.jsonl')]) == 0
    report = _last_json(capsys)
    assert report['timeouts'] == 0
    assert report['certified']['redundant-lift'] == 1
