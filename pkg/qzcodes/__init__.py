"""
Exact construction and verification of nice error bases and of quantum
error-correcting codes over Z_n built from classical linear codes.
"""

import logging
from importlib.metadata import PackageNotFoundError, version

from qzcodes.code_store import CodeStore, code_open
from qzcodes.common import CodeField, Convention, GateKind, OutputFormat, ReadoutBasis, ShiftClockLabeling
from qzcodes.config import RunConfig
from qzcodes.cyclotomic import CycInt
from qzcodes.engine.engine import Engine
from qzcodes.engine.file import FileEngine
from qzcodes.engine.json import JsonEngine
from qzcodes.errorbasis import ErrorBasis, build_egner, build_shift_clock, tensor_basis
from qzcodes.exactmat import DenseMatrix, MonomialMatrix, StateVector
from qzcodes.qcode import ErrorIndex, PuncturedQuantumCode, build_code
from qzcodes.report import Check, Report
from qzcodes.standardcodes import StandardCode
from qzcodes.zncodes import LinearCodeZn

try:
    __version__ = version(__name__)
except PackageNotFoundError:
    # Running from a source checkout that was never installed
    __version__ = "0+unknown"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    'code_open',
    'open',
    'Check',
    'CodeField',
    'CodeStore',
    'Convention',
    'CycInt',
    'DenseMatrix',
    'Engine',
    'ErrorBasis',
    'ErrorIndex',
    'FileEngine',
    'GateKind',
    'JsonEngine',
    'LinearCodeZn',
    'MonomialMatrix',
    'OutputFormat',
    'PuncturedQuantumCode',
    'ReadoutBasis',
    'Report',
    'RunConfig',
    'ShiftClockLabeling',
    'StandardCode',
    'StateVector',
    'build_code',
    'build_egner',
    'build_shift_clock',
    'tensor_basis',
]

open = code_open
