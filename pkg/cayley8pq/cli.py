#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: cli
@time: 2023/3/14

退出码：0 验证通过；1 验证失败（stdout输出见证）；2 用法或文件错误
"""

import re
import sys
from pathlib import Path
from argparse import ArgumentParser, Namespace
from typing import Optional, Sequence, List, Tuple, Dict, Any

from cayley8pq.config import settings
from cayley8pq.log import logger, set_level
from cayley8pq.serializer import JsonSerializer, serializer_mapping
from cayley8pq.schema import VerificationError, Certificate, load_record
from cayley8pq.grouptable import (
    order8_catalog, group_by_tag, rank, abelian_characters, derived_subgroup, center, render_table,
    irredundant_generating_sets
)
from cayley8pq.concrete import (
    hand_case_mapping, verify_hand_case, doubling_pairs, subset_sum_counterexamples, dihedral_sweep
)
from cayley8pq.casework import (
    PROP_IDS, PROP_ALIASES, run_search, run_order56, run_e2e, reverify, g56_has_index_two_subgroup
)


__all__ = ('parse_pairs', 'build_parser', 'main')


EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

LEMMA_NAMES = ('doubling-pairs', 'subset-sum')
LEMMA_ALIASES = {'0modpandq': 'doubling-pairs', 'add3': 'subset-sum'}

_stdout = JsonSerializer()


def _emit(data: Dict[str, Any]):
    print(_stdout.pack(data).decode(_stdout.encoding))


def parse_pairs(text: str) -> List[Tuple[int, int]]:
    """'(7,11),(11,13)' -> [(7, 11), (11, 13)]"""
    pairs = [(int(p), int(q)) for p, q in re.findall(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)', text)]
    if not pairs:
        raise ValueError(f'无法解析素数对[{text}]')
    return pairs


def _prop_name(text: str) -> str:
    return PROP_ALIASES.get(text, text)


def _lemma_name(text: str) -> str:
    return LEMMA_ALIASES.get(text, text)


def _cmd_catalog(args: Namespace) -> int:
    for group in order8_catalog():
        print(render_table(group))
        _emit({
            'group_id': group.id_tag,
            'rank': rank(group),
            'characters': len(abelian_characters(group, settings.CONDUCTOR)),
            'derived_subgroup': sorted(group.labels[g] for g in derived_subgroup(group)),
            'center': sorted(group.labels[g] for g in center(group)),
        })
    g56 = group_by_tag('G56')
    print(render_table(g56))
    _emit({
        'group_id': g56.id_tag,
        'irredundant_pairs': len(irredundant_generating_sets(g56, 2)),
        'index_two_subgroup': g56_has_index_two_subgroup(),
    })
    return EXIT_OK


def _cmd_search(args: Namespace) -> int:
    out = Path(args.out) if args.out else settings.CERT_PATH / f'{args.prop}.{settings.SERIALIZER.name}l'
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open('wb') as fp:
        report = run_search(args.prop, jobs=args.jobs, strict=args.strict, writer=fp.write)
    logger.info(f'证书已写入[{out}]')
    _emit(report.to_dict())
    return EXIT_OK if report.passed and report.is_consistent() else EXIT_FAILED


def _cmd_verify_hand(args: Namespace) -> int:
    result = verify_hand_case(args.case, args.p, args.q)
    _emit(result.to_dict())
    return EXIT_OK if result.passed else EXIT_FAILED


def _cmd_e2e(args: Namespace) -> int:
    results = run_e2e(args.prop, parse_pairs(args.pairs) if args.pairs else None, args.sample)
    for result in results:
        _emit(result.to_dict())
    return EXIT_OK if all(result.passed and result.lifted > 0 for result in results) else EXIT_FAILED


def _cmd_lemma(args: Namespace) -> int:
    if args.name == 'doubling-pairs':
        pairs = doubling_pairs(args.bound)
        _emit({'name': args.name, 'bound': args.bound, 'pairs': [list(pair) for pair in pairs]})
        return EXIT_OK
    count = subset_sum_counterexamples(args.p, args.q)
    _emit({'name': args.name, 'p': args.p, 'q': args.q, 'counterexamples': count, 'holds': count == 0})
    return EXIT_OK if count == 0 else EXIT_FAILED


def _cmd_order56(args: Namespace) -> int:
    out = Path(args.out) if args.out else settings.CERT_PATH / f'order56.{settings.SERIALIZER.name}l'
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open('wb') as fp:
        report = run_order56(args.sample, args.budget, full=args.full, jobs=args.jobs, writer=fp.write)
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_dihedral_sweep(args: Namespace) -> int:
    sweeps = {f'{factor}p': dihedral_sweep(args.bound, factor) for factor in (4, 2)}
    _emit({'bound': args.bound, 'solutions': {key: [list(pair) for pair in found] for key, found in sweeps.items()}})
    return EXIT_OK if not any(sweeps.values()) else EXIT_FAILED


def _cmd_reverify(args: Namespace) -> int:
    checked = 0
    for data in settings.SERIALIZER.unpack_lines(Path(args.input).read_bytes()):
        record = load_record(data)
        if isinstance(record, Certificate):
            reverify(record)
            checked += 1
    _emit({'input': args.input, 'reverified': checked})
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='cayley8pq', description='Cayley graphs of order 8pq: certified hamiltonicity search')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='warnings and errors only')
    parser.add_argument('--format', choices=sorted(serializer_mapping), default=JsonSerializer.name,
                        help='certificate line format')
    subparsers = parser.add_subparsers(dest='command', required=True)

    catalog = subparsers.add_parser('catalog', help='dump order-8 tables, ranks, characters')
    catalog.set_defaults(handler=_cmd_catalog)

    search = subparsers.add_parser('search', help='run one case driver over all cells')
    search.add_argument('--prop', type=_prop_name, choices=PROP_IDS, required=True,
                        help='driver name, or 7.4/7.7/7.9/5.1')
    search.add_argument('--jobs', type=int, default=settings.JOBS)
    search.add_argument('--out', help='certificate file')
    search.add_argument('--strict', action='store_true', help='stop at the first unexplained cell')
    search.set_defaults(handler=_cmd_search)

    hand = subparsers.add_parser('verify-hand', help='check a hand-derived case at concrete primes')
    hand.add_argument('--case', choices=sorted(hand_case_mapping), required=True)
    hand.add_argument('--p', type=int, required=True)
    hand.add_argument('--q', type=int, required=True)
    hand.set_defaults(handler=_cmd_verify_hand)

    e2e = subparsers.add_parser('e2e', help='lift sampled certificates at concrete primes')
    e2e.add_argument('--prop', type=_prop_name, choices=PROP_IDS, required=True,
                     help='driver name, or 7.4/7.7/7.9/5.1')
    e2e.add_argument('--pairs', help='e.g. "(7,11),(11,13)"')
    e2e.add_argument('--sample', type=int, default=settings.E2E_SAMPLE)
    e2e.set_defaults(handler=_cmd_e2e)

    lemma = subparsers.add_parser('lemma', help='number-theoretic side conditions')
    lemma.add_argument('--name', type=_lemma_name, choices=LEMMA_NAMES, required=True, help='also 0modpandq/add3')
    lemma.add_argument('--bound', type=int, default=30)
    lemma.add_argument('--p', type=int)
    lemma.add_argument('--q', type=int)
    lemma.set_defaults(handler=_cmd_lemma)

    order56 = subparsers.add_parser('order56', help='hamiltonian connectivity spot check on G56')
    order56.add_argument('--sample', type=int, default=settings.ORDER56_SAMPLE)
    order56.add_argument('--budget', type=float, default=settings.HAM_PATH_BUDGET, help='seconds per target')
    order56.add_argument('--full', action='store_true', help='every irredundant generating set')
    order56.add_argument('--jobs', type=int, default=settings.JOBS)
    order56.add_argument('--out', help='certificate file')
    order56.set_defaults(handler=_cmd_order56)

    sweep = subparsers.add_parser('dihedral-sweep', help='congruence sweep for the dihedral exception')
    sweep.add_argument('--bound', type=int, default=settings.SWEEP_BOUND)
    sweep.set_defaults(handler=_cmd_dihedral_sweep)

    replay = subparsers.add_parser('reverify', help='re-check every certificate in a file')
    replay.add_argument('--input', required=True)
    replay.set_defaults(handler=_cmd_reverify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == 'lemma' and args.name == 'subset-sum' and (args.p is None or args.q is None):
            parser.error('subset-sum 需要同时指定 --p 与 --q')
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.verbose:
        set_level('DEBUG')
    elif args.quiet:
        set_level('WARNING')
    else:
        set_level(settings.LOG_LEVEL)
    settings.SERIALIZER = serializer_mapping[args.format]()

    try:
        return args.handler(args)
    except VerificationError as e:
        logger.error(f'验证失败: {e}')
        _emit({'error': str(e), 'witness': e.witness})
        return EXIT_FAILED
    except ValueError as e:
        logger.error(f'参数错误: {e}')
        return EXIT_USAGE
    except OSError as e:
        logger.error(f'证书文件读写失败: {e}')
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
