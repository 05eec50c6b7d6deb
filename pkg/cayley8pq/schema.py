#!/usr/bin/env python
# -*- coding:utf-8 -*-
"""
@author: wang_chao03
@project: cayley8pq
@file: schema
@time: 2023/3/9
"""

from typing import Optional, Dict, Any, List
from dataclasses import dataclass, asdict, field, fields
from collections import namedtuple


__all__ = (
    'record_mapping', 'load_record', 'Certificate', 'CaseReport', 'HandCaseResult', 'LiftResult',
    'VerificationError', 'UnexplainedCellError'
)


class VerificationError(RuntimeError):
    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}


class UnexplainedCellError(VerificationError):
    pass


@dataclass
class Certificate:
    prop_id: str
    group_id: str
    multiset: List[str]
    characters: Dict[str, List[int]]
    outcome: str
    strategy: Optional[str] = None
    cycle: Optional[List[int]] = None
    partner: Optional[List[int]] = None
    norms: Optional[List[int]] = None
    pattern: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    type: Optional[str] = 'certificate'

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class CaseReport:
    prop_id: str
    cells_scanned: int = 0
    certified: Dict[str, int] = field(default_factory=dict)
    exceptions: Dict[str, int] = field(default_factory=dict)
    skipped: Dict[str, int] = field(default_factory=dict)
    unexplained: int = 0
    timeouts: int = 0
    digest: Optional[str] = None
    type: Optional[str] = 'case_report'

    @property
    def certified_total(self) -> int:
        return sum(self.certified.values())

    @property
    def passed(self) -> bool:
        return self.unexplained == 0 and self.timeouts == 0

    def is_consistent(self) -> bool:
        return self.cells_scanned == self.certified_total + sum(self.exceptions.values()) + self.unexplained

    def add(self, certificate: Certificate):
        if certificate.outcome == 'skipped':
            self.skipped[certificate.reason] = self.skipped.get(certificate.reason, 0) + 1
            return
        if certificate.outcome == 'timeout':
            self.timeouts += 1
            return
        self.cells_scanned += 1
        if certificate.outcome == 'certified':
            self.certified[certificate.strategy] = self.certified.get(certificate.strategy, 0) + 1
        elif certificate.outcome == 'exception':
            self.exceptions[certificate.pattern] = self.exceptions.get(certificate.pattern, 0) + 1
        else:
            self.unexplained += 1

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class HandCaseResult:
    case_id: str
    p: int
    q: int
    checks: Dict[str, Any]
    passed: bool
    type: Optional[str] = 'hand_case'

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class LiftResult:
    prop_id: str
    p: int
    q: int
    lifted: int = 0
    verified: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    type: Optional[str] = 'lift_result'

    @property
    def passed(self) -> bool:
        return self.lifted == self.verified and not self.failures

    def to_dict(self) -> Dict:
        return asdict(self)


RecordMapping = namedtuple('RecordMapping', ['certificate', 'case_report', 'hand_case', 'lift_result'])

record_mapping = RecordMapping(Certificate, CaseReport, HandCaseResult, LiftResult)


def load_record(data: Dict) -> Any:
    record_class = getattr(record_mapping, data.get('type') or 'certificate')
    names = {f.name for f in fields(record_class)}
    return record_class(**{key: value for key, value in data.items() if key in names})
