"""Verification results and the JSON report the command line prints.

A :py:class:`Report` becomes read-only once it has been serialized, the same
way a parameter map is locked once written to a file.
"""

from __future__ import annotations

import json
import math
import time
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy

from qzcodes.cyclotomic import CycInt
from qzcodes.exactmat import DenseMatrix, MonomialMatrix, Ratio, StateVector


@dataclass
class Check:
    """Outcome of one verification: a name, a verdict, an optional witness of
    failure and an optional value worth reporting"""

    name: str
    passed: bool
    witness: Any = None
    value: Any = None

    def __bool__(self):
        return bool(self.passed)

    def to_dict(self) -> dict:
        result = {'name': self.name, 'pass': bool(self.passed)}
        if self.witness is not None:
            result['witness'] = render_exact(self.witness)
        if self.value is not None:
            result['value'] = render_exact(self.value)
        return result


def render_exact(value: Any) -> Any:
    """Renders values for JSON without losing exactness: cyclotomic integers
    become {order, coeffs}, tuples become lists, numpy scalars become Python
    numbers"""
    if isinstance(value, CycInt):
        return {'order': value.order, 'coeffs': list(value.coeffs)}
    if isinstance(value, Ratio):
        return {'num': render_exact(value.num), 'den': render_exact(value.den)}
    if isinstance(value, MonomialMatrix):
        return {'dim': value.dim, 'order': value.order, 'perm': list(value.perm), 'phases': list(value.phases)}
    if isinstance(value, DenseMatrix):
        return [[render_exact(entry) for entry in row] for row in value.entries]
    if isinstance(value, StateVector):
        return [{'index': list(index), 'amplitude': render_exact(amplitude)} for index, amplitude in value.items()]
    if isinstance(value, Check):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {_render_key(key): render_exact(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_exact(item) for item in value]
    if isinstance(value, (set, frozenset)):
        return sorted(render_exact(item) for item in value)
    if isinstance(value, numpy.integer):
        return int(value)
    if isinstance(value, numpy.floating):
        return float(value)
    if isinstance(value, numpy.ndarray):
        return render_exact(value.tolist())
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if hasattr(value, "to_dict"):
        return render_exact(value.to_dict())
    return value


def _render_key(key: Any) -> str:
    if isinstance(key, tuple):
        return ','.join(_render_key(k) for k in key)
    if isinstance(key, Enum):
        return str(key.value)
    return str(key)


class Report:
    """Checks gathered by one command, with timing kept apart from the
    deterministic payload"""

    def __init__(self, version: str, command: list):
        self.version = version
        self.command = list(command)
        self.checks = []
        self.sections = {}
        self.timing = {}
        self._is_locked = False

    def _stop_if_locked(self):
        if self._is_locked:
            raise TypeError(f'Cannot modify a {type(self).__name__} object after it has been written')

    def add(self, check: Check) -> Check:
        self._stop_if_locked()
        if not isinstance(check, Check):
            raise TypeError('only Check objects can be added to a report')
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        for check in checks:
            self.add(check)

    def check(self, name: str, passed: bool, witness: Any = None, value: Any = None) -> Check:
        return self.add(Check(name, passed, witness, value))

    def section(self, name: str, value: Any) -> None:
        """Adds a named payload section, e.g. the code parameters or a
        lambda table"""
        self._stop_if_locked()
        self.sections[name] = value

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            if not self._is_locked:
                self.timing[name] = self.timing.get(name, 0.0) + time.perf_counter() - start

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def payload(self) -> dict:
        result = {
            'version': self.version,
            'command': self.command,
            'checks': [check.to_dict() for check in self.checks],
            'pass': self.passed,
        }
        for name in sorted(self.sections):
            result[name] = render_exact(self.sections[name])
        return result

    def payload_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, separators=(',', ':'))

    def to_json(self, include_timing: bool = True) -> str:
        """Serializes the report and locks it against further changes"""
        document = {'report': self.payload()}
        if include_timing:
            document['timing'] = {name: round(seconds, 6) for name, seconds in sorted(self.timing.items())}
        self._is_locked = True
        return json.dumps(document, sort_keys=True, indent=2)

    def to_text(self) -> str:
        self._is_locked = True
        lines = ['{0:s} {1:s}'.format('qzcodes', ' '.join(self.command))]
        for check in self.checks:
            line = '  [{0:s}] {1:s}'.format('PASS' if check.passed else 'FAIL', check.name)
            if check.value is not None:
                line += ' = {0:s}'.format(json.dumps(render_exact(check.value), sort_keys=True))
            if check.witness is not None:
                line += ' (witness {0:s})'.format(json.dumps(render_exact(check.witness), sort_keys=True))
            lines.append(line)
        lines.append('result: {0:s}'.format('PASS' if self.passed else 'FAIL'))
        return '\n'.join(lines)

    def is_locked(self) -> bool:
        return self._is_locked
