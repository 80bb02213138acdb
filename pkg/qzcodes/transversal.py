"""Logical operations applied site by site to encoded states.

Every gate carries the logical action it is expected to induce. The induced
action is measured by expanding images in the (unnormalized) logical basis
and compared to the expected matrix up to one global scalar.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from qzcodes.common import GateKind, ReadoutBasis
from qzcodes.config import RunConfig, resolve
from qzcodes.cyclotomic import CycInt
from qzcodes.errors import DimensionMismatch, ImageOutsideCode, NoPhaseVector, NotSelfDual
from qzcodes.exactmat import DenseMatrix, MonomialMatrix, Operator, Ratio, StateVector, apply_dense, proportional
from qzcodes.qcode import PuncturedQuantumCode
from qzcodes.report import Check
from qzcodes.utils import dot
from qzcodes.zncodes import is_self_dual

logger = logging.getLogger(__name__)

Matrix = list[list[CycInt]]


def _zero_matrix(size: int) -> Matrix:
    return [[CycInt.zero() for _ in range(size)] for _ in range(size)]


def _permutation_matrix(size: int, image: Callable[[int], int], phase: Callable[[int], CycInt] = None) -> Matrix:
    """Matrix with entry phase(i) at (image(i), i)"""
    matrix = _zero_matrix(size)
    for i in range(size):
        matrix[image(i)][i] = CycInt.one() if phase is None else phase(i)
    return matrix


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    result = _zero_matrix(size)
    for i in range(size):
        for j in range(size):
            total = CycInt.zero()
            for k in range(size):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    total = total + a[i][k] * b[k][j]
            result[i][j] = total
    return result


@dataclass(frozen=True)
class TransversalGate:
    """Logical gate built from independent operations on each site (one
    block) or on each pair of corresponding sites (two blocks).

    `expected` is indexed [output][input]; for two blocks the logical label
    of |i_L>|j_L> is i * n + j.
    """

    kind: GateKind
    label: str
    n: int
    l: int
    expected: tuple
    site_ops: Optional[tuple] = None
    pair_rule: Optional[Callable[[int, int], int]] = None

    def __post_init__(self):
        if self.site_ops is not None:
            if len(self.site_ops) != self.l:
                raise DimensionMismatch(self.l, len(self.site_ops), 'number of site operators')
            for op in self.site_ops:
                if op is not None and op.dim != self.n:
                    raise DimensionMismatch(self.n, op.dim, 'site operator dimension')

    @property
    def blocks(self) -> int:
        return 1 if self.site_ops is not None else 2

    def apply(self, state: StateVector, config: Optional[RunConfig] = None) -> StateVector:
        if self.site_ops is not None:
            return apply_dense(list(self.site_ops), state, config)
        if state.sites != 2 * self.l:
            raise DimensionMismatch(2 * self.l, state.sites, 'number of sites over both blocks')
        l, rule = self.l, self.pair_rule
        return state.map_indices(lambda index: index[:l] + tuple(rule(z, w) for z, w in zip(index[:l], index[l:])))

    def is_monomial(self) -> bool:
        return self.site_ops is not None and all(op is None or isinstance(op, MonomialMatrix) for op in self.site_ops)


def identity_gate(code: PuncturedQuantumCode) -> TransversalGate:
    n = code.n
    return TransversalGate(GateKind.CUSTOM, 'identity', n, code.l, tuple(map(tuple, _permutation_matrix(n, int))),
                           site_ops=(None,) * code.l)


def custom_gate(code: PuncturedQuantumCode, site_ops: Sequence[Optional[Operator]], expected: Matrix,
                label: str = 'custom') -> TransversalGate:
    return TransversalGate(GateKind.CUSTOM, label, code.n, code.l, tuple(map(tuple, expected)), site_ops=tuple(site_ops))


def logical_increment(code: PuncturedQuantumCode) -> TransversalGate:
    """Shift X^((e'_1)_i) on site i; |i_L> -> |(i+1)_L>"""
    n = code.n
    ops = tuple(MonomialMatrix.shift(n, power) for power in code.e1_prime)
    expected = _permutation_matrix(n, lambda i: (i + 1) % n)
    return TransversalGate(GateKind.INCREMENT, 'increment', n, code.l, tuple(map(tuple, expected)), site_ops=ops)


def find_phase_vector(code: PuncturedQuantumCode) -> tuple:
    """Lexicographically least x in D' with x.e'_1 = 1 mod n"""
    n = code.n
    for row in code.d_prime.words:
        x = tuple(int(v) for v in row)
        if dot(x, code.e1_prime, n) == 1 % n:
            return x
    raise NoPhaseVector('no word x of D\' has x.e\'_1 = 1 mod {0:d}'.format(n))


def logical_phase(code: PuncturedQuantumCode) -> TransversalGate:
    """Clock D^(x_i) on site i for a phase vector x; |i_L> -> w^i |i_L>"""
    n = code.n
    x = find_phase_vector(code)
    ops = tuple(MonomialMatrix.clock(n, power) for power in x)
    expected = _permutation_matrix(n, int, lambda i: CycInt.root(n, i))
    logger.debug('logical phase uses x = %s', x)
    return TransversalGate(GateKind.PHASE, 'phase', n, code.l, tuple(map(tuple, expected)), site_ops=ops)


def logical_cadd(code: PuncturedQuantumCode) -> TransversalGate:
    """|z_i>|w_i> -> |z_i>|w_i + z_i> on each pair of sites;
    |i_L>|j_L> -> |i_L>|(i+j)_L>"""
    n = code.n
    expected = _permutation_matrix(n * n, lambda label: (label // n) * n + (label // n + label % n) % n)
    return TransversalGate(GateKind.CADD, 'cadd', n, code.l, tuple(map(tuple, expected)),
                           pair_rule=lambda z, w: (w + z) % n)


def compose(second: TransversalGate, first: TransversalGate) -> TransversalGate:
    """Single block gate applying `first`, then `second`"""
    if first.blocks != 1 or second.blocks != 1 or not (first.is_monomial() and second.is_monomial()):
        raise ValueError('only single block monomial gates compose site by site')
    if (first.n, first.l) != (second.n, second.l):
        raise DimensionMismatch((first.n, first.l), (second.n, second.l), 'gate shape')
    n = first.n
    identity = MonomialMatrix.identity(n)
    ops = tuple((b or identity) @ (a or identity) for a, b in zip(first.site_ops, second.site_ops))
    expected = _matmul([list(row) for row in second.expected], [list(row) for row in first.expected])
    return TransversalGate(GateKind.CUSTOM, '{0:s}*{1:s}'.format(second.label, first.label), n, first.l,
                           tuple(map(tuple, expected)), site_ops=ops)


def power(gate: TransversalGate, exponent: int) -> TransversalGate:
    if exponent < 0:
        raise ValueError('gate powers are non-negative')
    result = TransversalGate(GateKind.CUSTOM, 'identity', gate.n, gate.l,
                             tuple(map(tuple, _permutation_matrix(gate.n, int))), site_ops=(None,) * gate.l)
    for _ in range(exponent):
        result = compose(gate, result)
    return result


@dataclass
class LogicalAction:
    """Induced logical matrix, indexed [output][input] and scaled by the
    squared norm of the unnormalized logical basis states"""

    gate: str
    matrix: Matrix
    inside: bool
    scalar: Optional[Ratio] = None
    reflected: bool = False
    witness: Optional[dict] = None
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            'gate': self.gate,
            'pass': self.passed,
            'matrix': self.matrix,
            'scalar': self.scalar,
            'reflected': self.reflected,
            'checks': [check.to_dict() for check in self.checks],
        }


def logical_inputs(code: PuncturedQuantumCode, blocks: int) -> list[StateVector]:
    states = list(code.logical_states)
    if blocks == 1:
        return states
    return [a.tensor(b) for a in states for b in states]


def _matrix_ratio(matrix: Matrix, expected: Sequence[Sequence[CycInt]]) -> Optional[Ratio]:
    pivot = None
    for i, row in enumerate(expected):
        for j, value in enumerate(row):
            if matrix[i][j].is_zero() != value.is_zero():
                return None
            if pivot is None and not value.is_zero():
                pivot = (i, j)
    if pivot is None:
        return None
    u0 = matrix[pivot[0]][pivot[1]]
    v0 = expected[pivot[0]][pivot[1]]
    for i, row in enumerate(expected):
        for j, value in enumerate(row):
            if not value.is_zero() and matrix[i][j] * v0 != u0 * value:
                return None
    return Ratio(u0, v0)


def verify_logical_action(code: PuncturedQuantumCode, gate: TransversalGate,
                          allow_reflection: bool = False, config: Optional[RunConfig] = None) -> LogicalAction:
    """Applies `gate` to every logical basis state, checks each image lies in
    the code space and compares the induced matrix with the expected one up
    to a global scalar. With `allow_reflection` the input labels may also be
    reflected i -> -i."""
    if (gate.n, gate.l) != (code.n, code.l):
        raise DimensionMismatch((code.n, code.l), (gate.n, gate.l), 'gate shape')
    config = resolve(config)
    basis = logical_inputs(code, gate.blocks)
    norm = len(code.c_prime_0) ** gate.blocks
    size = len(basis)
    matrix = _zero_matrix(size)
    witness = None
    for label, state in enumerate(basis):
        image = gate.apply(state, config)
        projection = StateVector(image.shape)
        for out, target in enumerate(basis):
            coefficient = target.inner(image)
            matrix[out][label] = coefficient
            if not coefficient.is_zero():
                projection = projection + target.scaled(coefficient)
        residual = image.scaled(norm) - projection
        if witness is None and not residual.is_zero():
            index, amplitude = next(residual.items())
            witness = {'logical': label, 'index': list(index), 'amplitude': amplitude}

    action = LogicalAction(gate.label, matrix, witness is None, witness=witness)
    action.checks.append(Check('{0:s} preserves the code space'.format(gate.label), witness is None, witness))
    action.scalar = _matrix_ratio(matrix, gate.expected)
    if action.scalar is None and allow_reflection and gate.blocks == 1:
        n = code.n
        reflected = [[gate.expected[i][(-j) % n] for j in range(n)] for i in range(n)]
        action.scalar = _matrix_ratio(matrix, reflected)
        action.reflected = action.scalar is not None
    action.checks.append(Check('{0:s} logical action'.format(gate.label), action.scalar is not None, None,
                               {'scalar': action.scalar, 'reflected': action.reflected}))
    return action


def transversal_fourier(code: PuncturedQuantumCode,
                        config: Optional[RunConfig] = None) -> tuple[TransversalGate, LogicalAction]:
    """Unnormalized F on every site of a code with self-dual C. Returns the
    gate together with the induced logical matrix, which matches the logical
    Fourier matrix up to a scalar and possibly the reflection i -> -i."""
    if not is_self_dual(code.c):
        raise NotSelfDual('the transversal Fourier transform needs C = dual(C)')
    config = resolve(config)
    n = code.n
    f = DenseMatrix.fourier(n, config)
    expected = [[CycInt.root(n, i * j) for j in range(n)] for i in range(n)]
    gate = TransversalGate(GateKind.FOURIER, 'fourier', n, code.l, tuple(map(tuple, expected)),
                           site_ops=(f,) * code.l)
    action = verify_logical_action(code, gate, allow_reflection=True, config=config)
    if not action.inside:
        raise ImageOutsideCode(action.witness['logical'], action.witness)
    return gate, action


def error_group_action(code: PuncturedQuantumCode, a: int, b: int) -> LogicalAction:
    """Induced action of increment^b after phase^a, expected to be the
    logical error w^(a i)|i> -> |i+b>"""
    gate = compose(power(logical_increment(code), b), power(logical_phase(code), a))
    return verify_logical_action(code, gate)


def verify_logical_commutation(code: PuncturedQuantumCode) -> Check:
    """phase*increment = w increment*phase on every logical state"""
    n = code.n
    increment, phase = logical_increment(code), logical_phase(code)
    root = CycInt.root(n)
    witness = None
    for i, state in enumerate(code.logical_states):
        left = phase.apply(increment.apply(state))
        right = increment.apply(phase.apply(state))
        ratio = proportional(left, right)
        if ratio is None or not ratio.equals(root):
            witness = {'logical': i, 'ratio': ratio}
            break
    return Check('logical clock/shift commutation', witness is None, witness, {'phase': root})


def verify_fourier_conjugation(n: int, config: Optional[RunConfig] = None) -> list[Check]:
    """F D^k F^dagger = n C^k for every k, with F unnormalized"""
    if n < 2:
        raise ValueError('n must be at least 2, got {0!r}'.format(n))
    config = resolve(config)
    f = DenseMatrix.fourier(n, config)
    checks = [Check('F F^dagger = n I (n={0:d})'.format(n), f @ f.adjoint() == DenseMatrix.identity(n, config).scaled(n))]
    for k in range(n):
        conjugated = f @ MonomialMatrix.clock(n, k).to_dense(config) @ f.adjoint()
        target = MonomialMatrix.cyclic(n, k).to_dense(config).scaled(n)
        checks.append(Check('F D^{0:d} F^dagger = n C^{0:d} (n={1:d})'.format(k, n), conjugated == target))
    return checks


@dataclass
class Readout:
    """Amplitudes of a state along the logical basis of one readout basis,
    unnormalized, plus whether the state lies in their span"""

    basis: ReadoutBasis
    amplitudes: list
    inside: bool

    def to_dict(self) -> dict:
        return {'basis': self.basis.value, 'amplitudes': self.amplitudes, 'inside': self.inside}


def logical_readout(code: PuncturedQuantumCode, state: StateVector,
                    basis: ReadoutBasis = ReadoutBasis.COMPUTATIONAL, config: Optional[RunConfig] = None) -> Readout:
    """Exact projection of `state` onto the logical states, or onto their
    images under the transversal Fourier transform"""
    targets = list(code.logical_states)
    if basis is ReadoutBasis.FOURIER:
        config = resolve(config)
        f = DenseMatrix.fourier(code.n, config)
        targets = [apply_dense([f] * code.l, target, config) for target in targets]
    amplitudes = [target.inner(state) for target in targets]
    norm = targets[0].norm2()
    projection = StateVector(state.shape)
    for target, amplitude in zip(targets, amplitudes):
        if not amplitude.is_zero():
            projection = projection + target.scaled(amplitude)
    inside = (state.scaled(norm) - projection).is_zero()
    return Readout(basis, amplitudes, inside)
