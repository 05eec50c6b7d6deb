#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: test_casework
@time: 2023/3/15
"""

from dataclasses import replace

import pytest

from cayley8pq.config import settings
from cayley8pq.grouptable import group_by_tag, character_from_images
from cayley8pq.schema import VerificationError, load_record
from cayley8pq.serializer import JsonSerializer, MsgPackSerializer
from cayley8pq.hamsearch import enumerate_ham_cycles
from cayley8pq.voltage import GeneratorSpec, twisted_voltage, dual_voltages, strategy_fgl
from cayley8pq.casework import (
    PROP_IDS, EVERY_EXPONENT, REASON_ORDER_EIGHT, CaseCell, complement_exponent, complement_subset, punctured_subset,
    match_twin_action_complement, match_twin_action_elementary, match_special_dihedral, solve_cell, run_search,
    run_two_extra, run_order56, g56_has_index_two_subgroup, reverify, iter_cells, run_e2e, bridge_samples
)


ALLOWED_PATTERNS = {
    'two-extra': set(),
    'complement': {'twin-action-complement'},
    'rank-two': {'special-dihedral'},
    'elementary': {'twin-action-elementary'},
}


def _e8_character(images):
    e8 = group_by_tag('E8')
    return character_from_images(e8, 2, dict(zip((1, 2, 4), images)))


def _d8_character(f_image, x_image):
    d8 = group_by_tag('D8')
    return character_from_images(d8, 2, {d8.index('f'): f_image, d8.index('x'): x_image})


@pytest.fixture(scope='module')
def dihedral_gens():
    d8 = group_by_tag('D8')
    f, x = d8.index('f'), d8.index('x')
    return d8, (GeneratorSpec(f), GeneratorSpec(d8.mul(f, d8.inverse(x)), inv_q=True),
                GeneratorSpec(d8.mul(f, x), inv_p=True, free_q=True))


def test_twin_action_complement():
    e8 = group_by_tag('E8')
    gens = (GeneratorSpec(1), GeneratorSpec(2), GeneratorSpec(4), GeneratorSpec(3, inv_p=True, inv_q=True))
    chi_p, chi_q = _e8_character((1, 0, 0)), _e8_character((0, 1, 1))
    assert match_twin_action_complement(e8, gens, chi_p, chi_q) == {'a': 'e1', 'b': 'e2', 'c': 'e3', 'swapped': False}
    assert match_twin_action_complement(e8, gens, chi_q, chi_p)['swapped'] is True
    assert match_twin_action_complement(e8, gens, chi_p, chi_p) is None
    wrong_extra = gens[:3] + (GeneratorSpec(7, inv_p=True, inv_q=True),)
    assert match_twin_action_complement(e8, wrong_extra, chi_p, chi_q) is None


def test_twin_action_elementary():
    e8 = group_by_tag('E8')
    gens = (GeneratorSpec(1, inv_q=True), GeneratorSpec(2), GeneratorSpec(4), GeneratorSpec(3, inv_p=True))
    chi_p, chi_q = _e8_character((1, 0, 0)), _e8_character((1, 1, 1))
    witness = match_twin_action_elementary(e8, gens, chi_p, chi_q)
    assert witness == {'e1': 'e1', 'e2': 'e2', 'e3': 'e3', 'swapped': False}
    # e1e2e3·x_p 不是 e1·e2′ 的形式
    other = gens[:3] + (GeneratorSpec(7, inv_p=True),)
    assert match_twin_action_elementary(e8, other, chi_p, chi_q) is None


def test_twin_action_elementary_swapped():
    e8 = group_by_tag('E8')
    # A = e1e2 携带 x_p，D = e1 携带 x_q
    gens = (GeneratorSpec(1, inv_q=True), GeneratorSpec(2), GeneratorSpec(4), GeneratorSpec(3, inv_p=True))
    chi_p = _e8_character((0, 1, 1))
    chi_q = _e8_character((1, 0, 0))
    witness = match_twin_action_elementary(e8, gens, chi_p, chi_q)
    assert witness is not None
    assert witness['swapped'] is True
    assert witness['e1'] == 'e1e2'


def test_special_dihedral(dihedral_gens):
    d8, gens = dihedral_gens
    assert match_special_dihedral(d8, gens, _d8_character(0, 1), _d8_character(1, 0)) == {'f': 'f', 'x4': 'x'}
    assert match_special_dihedral(d8, gens, _d8_character(1, 0), _d8_character(0, 1)) is None
    assert match_special_dihedral(group_by_tag('Q8'), gens, _d8_character(0, 1), _d8_character(1, 0)) is None


def test_complement_subset(dihedral_gens):
    d8, _ = dihedral_gens
    f, x = d8.index('f'), d8.index('x')
    gens = (GeneratorSpec(f), GeneratorSpec(x, inv_q=True), GeneratorSpec(d8.mul(f, x), inv_p=True, free_q=True))
    assert complement_subset(d8, gens, _d8_character(0, 1), _d8_character(0, 1), 2) == (0, 1)
    assert complement_subset(d8, gens, _d8_character(0, 1), _d8_character(1, 0), 2) is None


def test_complement_exponent():
    d8 = group_by_tag('D8')
    f, x = d8.index('f'), d8.index('x')
    free = GeneratorSpec(d8.mul(f, x), inv_p=True, free_q=True)
    plain, twisted = GeneratorSpec(f), GeneratorSpec(x, inv_q=True)
    assert complement_exponent([plain, free], _d8_character(0, 1), _d8_character(1, 0)) == 0
    assert complement_exponent([plain, free], _d8_character(0, 1), _d8_character(0, 1)) == EVERY_EXPONENT
    assert complement_exponent([twisted, free], _d8_character(1, 0), _d8_character(0, 1)) == 1
    assert complement_exponent([twisted, free], _d8_character(0, 1), _d8_character(0, 1)) is None
    with pytest.raises(ValueError):
        complement_exponent([free, free], _d8_character(0, 1), _d8_character(0, 1))


def test_punctured_subset(dihedral_gens):
    d8, _ = dihedral_gens
    f, x = d8.index('f'), d8.index('x')
    gens = (GeneratorSpec(f), GeneratorSpec(x, inv_q=True), GeneratorSpec(d8.mul(f, x), inv_p=True, free_q=True))
    # 只有 i ≡ 0 时 {f, fx·x_p·x_q^i} 生成8阶子群
    assert punctured_subset(d8, gens, _d8_character(0, 1), _d8_character(1, 0), 2) == ((0, 2), 0)
    assert punctured_subset(d8, gens, _d8_character(0, 1), _d8_character(0, 1), 2) is None


def test_reverify_order_eight_subset(dihedral_gens):
    d8, _ = dihedral_gens
    f, x = d8.index('f'), d8.index('x')
    gens = (GeneratorSpec(f), GeneratorSpec(x, inv_q=True), GeneratorSpec(d8.mul(f, x), inv_p=True, free_q=True))
    every = CaseCell('rank-two', 'D8', gens, _d8_character(0, 1), _d8_character(0, 1))
    certificate = every.certificate('skipped', reason=REASON_ORDER_EIGHT, witness={'subset': ['f', 'x*xq']})
    assert reverify(certificate)
    single = CaseCell('rank-two', 'D8', gens, _d8_character(0, 1), _d8_character(1, 0))
    certificate = single.certificate('skipped', reason=REASON_ORDER_EIGHT, witness={'subset': ['f', 'fx*xp*xq^i']})
    with pytest.raises(VerificationError):
        reverify(certificate)
    certificate = single.certificate('skipped', reason=REASON_ORDER_EIGHT, witness={'subset': ['f', 'x^2']})
    with pytest.raises(VerificationError):
        reverify(certificate)


def test_special_dihedral_defeats_dual_strategies(dihedral_gens):
    d8, gens = dihedral_gens
    chi_p, chi_q = _d8_character(0, 1), _d8_character(1, 0)
    cycles = enumerate_ham_cycles(d8, [spec.gbar for spec in gens])
    assert len(cycles) == 12
    for cycle in cycles:
        prime, double = dual_voltages(d8, cycle, gens, chi_q)
        assert prime == double or twisted_voltage(d8, cycle, gens, chi_p, 'p').is_zero
    # 固定 i = 1 时仍有光滑的圈，只对全部 i 才失败
    assert strategy_fgl(d8, cycles, gens, chi_p, chi_q) is not None
    certificate = solve_cell(CaseCell('rank-two', 'D8', gens, chi_p, chi_q), cycles)
    assert certificate.outcome == 'exception'
    assert certificate.pattern == 'special-dihedral'
    assert reverify(certificate)


def test_derived_subgroup_filter():
    d8 = group_by_tag('D8')
    gens = (GeneratorSpec(d8.index('x')), GeneratorSpec(d8.index('f')),
            GeneratorSpec(d8.index('x^2'), inv_p=True), GeneratorSpec(d8.index('f'), inv_q=True))
    cell = CaseCell('two-extra', 'D8', gens, _d8_character(0, 1), _d8_character(1, 0))
    certificate = solve_cell(cell)
    assert certificate.outcome == 'skipped'
    assert certificate.reason == 'generator-in-derived-subgroup'
    assert certificate.witness == {'generator': 'x^2*xp'}
    assert reverify(certificate)


@pytest.fixture(scope='module')
def certified_cell():
    gens = (GeneratorSpec(1), GeneratorSpec(2), GeneratorSpec(4), GeneratorSpec(1, inv_p=True),
            GeneratorSpec(2, inv_q=True))
    cell = CaseCell('two-extra', 'E8', gens, _e8_character((1, 0, 0)), _e8_character((0, 1, 0)))
    return cell, solve_cell(cell)


def test_solve_and_reverify(certified_cell):
    cell, certificate = certified_cell
    assert certificate.outcome == 'certified'
    assert certificate.strategy == 'fgl'
    assert certificate.multiset == ['e1', 'e2', 'e3', 'e1*xp', 'e2*xq']
    assert certificate.characters == {'p': [2, 0, 1, 0, 1, 0, 1, 0, 1], 'q': [2, 0, 0, 1, 1, 0, 0, 1, 1]}
    assert len(certificate.cycle) == 8
    assert reverify(certificate)


@pytest.mark.parametrize('serializer', [JsonSerializer(), MsgPackSerializer()])
def test_reverify_from_serialized_line(certified_cell, serializer):
    _, certificate = certified_cell
    line = serializer.pack(certificate.to_dict()) + b'\n'
    (data,) = list(serializer.unpack_lines(line))
    assert reverify(load_record(data))


def test_reverify_rejects_tampering(certified_cell):
    _, certificate = certified_cell
    with pytest.raises(VerificationError):
        reverify(replace(certificate, norms=[n + 1 for n in certificate.norms]))
    with pytest.raises(VerificationError):
        reverify(replace(certificate, cycle=certificate.cycle[:-1]))
    with pytest.raises(VerificationError):
        reverify(replace(certificate, outcome='unexplained'))


def test_run_search_unknown_driver():
    with pytest.raises(ValueError):
        run_search('7.5')
    with pytest.raises(ValueError):
        next(iter_cells('nope'))


def test_prop_aliases():
    cell, _ = next(iter_cells('7.9'))
    assert cell.prop_id == 'rank-two'
    assert next(iter_cells('5.1'))[0].group_id == 'E8'


def test_g56_has_no_index_two_subgroup():
    assert not g56_has_index_two_subgroup()


@pytest.mark.parametrize('prop_id', PROP_IDS)
def test_bridge_reduction(prop_id):
    checked = sum(bridge_samples(prop_id, p, q, 13) for p, q in settings.E2E_PAIRS)
    assert checked >= 50


def test_e2e_small_sample():
    (result,) = run_e2e('two-extra', [(7, 11)], 4)
    assert result.lifted == 4
    assert result.passed


@pytest.mark.slow
def test_e2e_two_extra():
    results = run_e2e('two-extra', settings.E2E_PAIRS, 50)
    assert [(r.p, r.q) for r in results] == list(settings.E2E_PAIRS)
    for result in results:
        assert result.lifted == 50
        assert result.passed


@pytest.mark.slow
@pytest.mark.parametrize('prop_id', PROP_IDS)
def test_driver_has_no_unexplained_cells(prop_id):
    lines = []
    report = run_search(prop_id, writer=lines.append)
    assert report.unexplained == 0
    assert report.is_consistent()
    assert set(report.exceptions) <= ALLOWED_PATTERNS[prop_id]
    assert len(lines) == report.cells_scanned + sum(report.skipped.values())


@pytest.mark.slow
def test_driver_output_is_reproducible():
    first, second = [], []
    assert run_two_extra(writer=first.append).digest == run_two_extra(jobs=2, writer=second.append).digest
    assert first == second


@pytest.mark.slow
def test_order56_spot_check():
    lines = []
    report = run_order56(5, 10.0, writer=lines.append)
    assert report.passed
    assert report.certified['ham-path'] == 5 * 55
    assert report.certified['redundant-lift'] == 1
    replay = load_record(settings.SERIALIZER.unpack(lines[-1].rstrip(b'\n')))
    assert replay.witness['order'] == 616
    assert reverify(replay)
