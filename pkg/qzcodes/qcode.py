"""Quantum codes built from a pair of classical codes over Z_n.

C and D are codes of length l + 1 whose last coordinate is punctured. The
logical states are the uniform superpositions over the cosets C'_0 + i e'_1,
and errors are indexed by pairs (x, y) acting as E(x, y)|z> = w^(x.z)|z+y>.
"""

from __future__ import annotations

import logging
import math
import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional, Sequence

import numpy

from qzcodes.common import Convention
from qzcodes.config import RunConfig, resolve
from qzcodes.cyclotomic import CycInt
from qzcodes.errors import (ConstructionError, DecoderMiss, DimensionMismatch, DualityChainError,
                            SizeGuardExceeded, SyndromeCollision)
from qzcodes.exactmat import MonomialMatrix, StateVector, apply_mono, inner_product, proportional
from qzcodes.report import Check
from qzcodes.utils import Vector, add, as_vector, check_entries, dot, scale, sub
from qzcodes.zncodes import (LinearCodeZn, coset_leaders, dual, duality_chain, find_e1, last_coord_surjective,
                             min_weight, puncture_last, shorten_last)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErrorIndex:
    """Index (x, y) of the tensor error operator E(x, y); x is the phase part
    and y the shift part"""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, 'x', as_vector(self.x))
        object.__setattr__(self, 'y', as_vector(self.y))
        if len(self.x) != len(self.y):
            raise DimensionMismatch(len(self.x), len(self.y), 'phase and shift part length')

    @classmethod
    def identity(cls, length: int) -> ErrorIndex:
        return cls((0,) * length, (0,) * length)

    @classmethod
    def phase(cls, x: Sequence[int]) -> ErrorIndex:
        return cls(x, (0,) * len(x))

    @classmethod
    def shift(cls, y: Sequence[int]) -> ErrorIndex:
        return cls((0,) * len(y), y)

    @property
    def length(self) -> int:
        return len(self.x)

    @property
    def weight(self) -> int:
        return sum(1 for a, b in zip(self.x, self.y) if a or b)

    def sort_key(self) -> tuple:
        return self.weight, self.x, self.y

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.y)

    def add(self, other: ErrorIndex, n: int) -> ErrorIndex:
        return ErrorIndex(add(self.x, other.x, n), add(self.y, other.y, n))

    def sub(self, other: ErrorIndex, n: int) -> ErrorIndex:
        return ErrorIndex(sub(self.x, other.x, n), sub(self.y, other.y, n))

    def site_operators(self, n: int) -> list[MonomialMatrix]:
        return [_site_operator(n, a, b) for a, b in zip(self.x, self.y)]

    def to_dict(self) -> dict:
        return {'x': list(self.x), 'y': list(self.y)}

    def __str__(self):
        return '(x={0:s}, y={1:s})'.format(''.join(map(str, self.x)), ''.join(map(str, self.y)))


_SITE_CACHE = {}


def _site_operator(n: int, x: int, y: int) -> MonomialMatrix:
    key = (n, x % n, y % n)
    if key not in _SITE_CACHE:
        _SITE_CACHE[key] = MonomialMatrix(n, n, [(j + y) % n for j in range(n)], [(x * j) % n for j in range(n)])
    return _SITE_CACHE[key]


def symplectic_product(d: ErrorIndex, d_prime: ErrorIndex, n: int) -> int:
    """Exponent s with E(d') E(d) = w^s E(d) E(d'), namely y.x' - x.y'"""
    if d.length != d_prime.length:
        raise DimensionMismatch(d.length, d_prime.length, 'error index length')
    return (dot(d.y, d_prime.x, n) - dot(d.x, d_prime.y, n)) % n


def count_error_indices(n: int, length: int, max_weight: int, min_weight: int = 0) -> int:
    return sum(math.comb(length, w) * (n * n - 1) ** w for w in range(min_weight, min(max_weight, length) + 1))


def iter_index_batches(n: int, length: int, max_weight: int, min_weight: int = 0,
                       cap: Optional[int] = None) -> Iterator[tuple[numpy.ndarray, numpy.ndarray]]:
    """Yields (X, Y) arrays holding every error index with weight in
    [min_weight, max_weight], one batch per support"""
    total = count_error_indices(n, length, max_weight, min_weight)
    if cap is not None and total > cap:
        raise SizeGuardExceeded('scan_cap', total, cap)
    for w in range(min_weight, min(max_weight, length) + 1):
        if w == 0:
            yield numpy.zeros((1, length), dtype=numpy.int64), numpy.zeros((1, length), dtype=numpy.int64)
            continue
        grid = numpy.indices((n * n - 1,) * w).reshape(w, -1).T + 1
        for support in combinations(range(length), w):
            xs = numpy.zeros((len(grid), length), dtype=numpy.int64)
            ys = numpy.zeros((len(grid), length), dtype=numpy.int64)
            xs[:, support] = grid // n
            ys[:, support] = grid % n
            yield xs, ys


def iter_error_indices(n: int, length: int, max_weight: int, min_weight: int = 0,
                       cap: Optional[int] = None) -> list[ErrorIndex]:
    """All error indices with weight in [min_weight, max_weight], ordered by
    weight, then x, then y"""
    indices = []
    for xs, ys in iter_index_batches(n, length, max_weight, min_weight, cap):
        indices.extend(ErrorIndex(x, y) for x, y in zip(xs.tolist(), ys.tolist()))
    indices.sort(key=ErrorIndex.sort_key)
    return indices


@dataclass(frozen=True, eq=False)
class PuncturedQuantumCode:
    """Quantum code on l sites of dimension n with n logical states.

    Immutable once built; the logical states are computed on first use.
    """

    n: int
    l: int
    c: LinearCodeZn
    d: LinearCodeZn
    c_prime: LinearCodeZn
    c_prime_0: LinearCodeZn
    d_prime: LinearCodeZn
    d_prime_0: LinearCodeZn
    e1: Vector
    e1_prime: Vector
    convention: Convention
    generators: tuple

    @property
    def shape(self) -> tuple:
        return (self.n,) * self.l

    @property
    def k_logical(self) -> int:
        return self.n

    @property
    def phase_space(self) -> LinearCodeZn:
        return self.c_prime_0 if self.convention is Convention.LITERAL else self.d_prime_0

    @property
    def shift_space(self) -> LinearCodeZn:
        return self.d_prime_0 if self.convention is Convention.LITERAL else self.c_prime_0

    def e_prime(self, i: int) -> Vector:
        return scale(i, self.e1_prime, self.n)

    @cached_property
    def logical_states(self) -> tuple:
        states = []
        for i in range(self.n):
            support = (self.c_prime_0.words + numpy.array(self.e_prime(i), dtype=numpy.int64)) % self.n
            states.append(StateVector.uniform(self.shape, (as_vector(row) for row in support)))
        return tuple(states)

    @cached_property
    def coset_labels(self) -> dict:
        """Maps each word of C' to the k with word in C'_0 + k e'_1"""
        labels = {}
        for k in range(self.n):
            offset = numpy.array(self.e_prime(k), dtype=numpy.int64)
            for row in (self.c_prime_0.words + offset) % self.n:
                labels[as_vector(row)] = k
        return labels

    def is_stabilizer(self, d: ErrorIndex) -> bool:
        return d.x in self.phase_space and d.y in self.shift_space

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'l': self.l,
            'k_logical': self.k_logical,
            'convention': self.convention.value,
            'e1_prime': list(self.e1_prime),
            'generators': [g.to_dict() for g in self.generators],
        }


def _stabilizer_generators(convention: Convention, c_prime_0: LinearCodeZn, d_prime_0: LinearCodeZn) -> tuple:
    phase, shift = (c_prime_0, d_prime_0) if convention is Convention.LITERAL else (d_prime_0, c_prime_0)
    generators = [ErrorIndex.phase(g) for g in phase.generators]
    generators.extend(ErrorIndex.shift(g) for g in shift.generators)
    return tuple(generators)


def _generators_commute(generators: Sequence[ErrorIndex], n: int) -> Optional[tuple]:
    for i, g in enumerate(generators):
        for h in generators[i + 1:]:
            if symplectic_product(g, h, n):
                return g, h
    return None


def build_code(c: LinearCodeZn, d: Optional[LinearCodeZn] = None, convention: Convention = Convention.AUTO,
               config: Optional[RunConfig] = None) -> PuncturedQuantumCode:
    """Builds the punctured quantum code of (C, D); D defaults to the dual of
    C. Raises with the name of the first failing check."""
    config = resolve(config)
    convention = Convention.from_identifier(convention)
    n, length = c.modulus, c.length
    if length < 2:
        raise ConstructionError('length', 'C needs length at least 2')
    if not last_coord_surjective(c):
        raise ConstructionError('last coordinate surjective')
    e1 = find_e1(c)

    if d is None:
        d = dual(c, config)
    else:
        if (d.modulus, d.length) != (n, length):
            raise ConstructionError('D shape', 'D must have modulus {0:d} and length {1:d}'.format(n, length))
        if d != dual(c, config):
            warnings.warn('D is not the dual of C; the construction is verified per instance', UserWarning)

    c_prime, c_prime_0 = puncture_last(c), shorten_last(c)
    d_prime, d_prime_0 = puncture_last(d), shorten_last(d)
    for name, holds in duality_chain(c, d, config).items():
        if not holds:
            raise DualityChainError(name)
    # Parity checks for C' and C'_0 rely on the reverse inclusions too
    if dual(d_prime_0, config) != c_prime:
        raise DualityChainError("dual(D'_0) = C'")
    if dual(d_prime, config) != c_prime_0:
        raise DualityChainError("dual(D') = C'_0")

    e1_prime = e1[:-1]
    for i in range(1, n):
        if scale(i, e1_prime, n) in c_prime_0:
            raise ConstructionError('disjoint logical cosets', 'e\'_{0:d} lies in C\'_0'.format(i))

    candidates = [Convention.LITERAL, Convention.SWAPPED] if convention is Convention.AUTO else [convention]
    for candidate in candidates:
        generators = _stabilizer_generators(candidate, c_prime_0, d_prime_0)
        clash = _generators_commute(generators, n)
        if clash is not None:
            logger.info('convention %s: generators %s and %s do not commute', candidate.value, clash[0], clash[1])
            continue
        code = PuncturedQuantumCode(n, length - 1, c, d, c_prime, c_prime_0, d_prime, d_prime_0,
                                    e1, e1_prime, candidate, generators)
        if verify_eigenspace(code).passed:
            logger.info('built code n=%d l=%d with %d generators, convention %s',
                        n, length - 1, len(generators), candidate.value)
            return code
        logger.info('convention %s fails the eigenspace check', candidate.value)
    raise ConstructionError('eigenspace', 'no generator convention among {0:s} stabilizes the logical states'.format(
        ', '.join(candidate.value for candidate in candidates)))


def logical_state(code: PuncturedQuantumCode, i: int) -> StateVector:
    if not 0 <= i < code.n:
        raise ValueError('logical label {0!r} outside Z_{1:d}'.format(i, code.n))
    return code.logical_states[i]


def apply_error(d: ErrorIndex, state: StateVector) -> StateVector:
    n = state.shape[0] if state.shape else 1
    if d.length != state.sites:
        raise DimensionMismatch(state.sites, d.length, 'number of sites')
    return apply_mono(d.site_operators(n), state)


def apply_error_adjoint(d: ErrorIndex, state: StateVector) -> StateVector:
    n = state.shape[0] if state.shape else 1
    if d.length != state.sites:
        raise DimensionMismatch(state.sites, d.length, 'number of sites')
    return apply_mono([op.adjoint() for op in d.site_operators(n)], state)


def syndrome_state(code: PuncturedQuantumCode, c_x: Sequence[int], d_y: Sequence[int], i: int) -> StateVector:
    """sum over z in C'_0 of w^(c_x.z) |z + e'_i + d_y>"""
    n = code.n
    check_entries(c_x, n)
    check_entries(d_y, n)
    offset = add(code.e_prime(i), d_y, n)
    amplitudes = {}
    for row in code.c_prime_0.words:
        z = as_vector(row)
        amplitudes[add(z, offset, n)] = CycInt.root(n, dot(c_x, z, n))
    return StateVector(code.shape, amplitudes)


def syndrome_states(code: PuncturedQuantumCode, config: Optional[RunConfig] = None) -> list[tuple]:
    """Every (c_x, d_y, i, state) with c_x running over coset leaders of D'
    and d_y over coset leaders of C'"""
    phase_leaders = list(coset_leaders(code.d_prime, config))
    shift_leaders = list(coset_leaders(code.c_prime, config))
    return [(c_x, d_y, i, syndrome_state(code, c_x, d_y, i))
            for c_x in phase_leaders for d_y in shift_leaders for i in range(code.n)]


@dataclass
class EigenspaceReport:
    eigenvalues: list
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def verify_eigenspace(code: PuncturedQuantumCode) -> EigenspaceReport:
    """Checks E_g |i_L> = lambda_g |i_L> exactly, with lambda_g the same for
    every logical label i"""
    eigenvalues = []
    witness = None
    for index, g in enumerate(code.generators):
        value = None
        for i, state in enumerate(code.logical_states):
            image = apply_error(g, state)
            first = state.support()[0]
            candidate = image[first]
            if candidate.is_zero() or image != state.scaled(candidate):
                witness = {'generator': index, 'logical': i}
                value = None
                break
            if value is None:
                value = candidate
            elif value != candidate:
                witness = {'generator': index, 'logical': i, 'eigenvalue differs': True}
                value = None
                break
        eigenvalues.append(value)
        if witness is not None:
            break

    report = EigenspaceReport(eigenvalues)
    report.checks.append(Check('eigenspace', witness is None, witness, eigenvalues if witness is None else None))
    clash = _generators_commute(code.generators, code.n)
    report.checks.append(Check('generators commute', clash is None, None if clash is None else [str(g) for g in clash]))
    return report


def character_sum(code: PuncturedQuantumCode, x: Sequence[int]) -> CycInt:
    """sum over z in C'_0 of w^(x.z), by direct summation"""
    exponents = (code.c_prime_0.words @ numpy.array(x, dtype=numpy.int64)) % code.n
    return CycInt(code.n, numpy.bincount(exponents, minlength=code.n).tolist())


@dataclass
class KLReport:
    """Knill-Laflamme verdict over all pairs of errors of weight at most e.

    `lambdas` maps (a, b) to <0_L|E_a^dagger E_b|0_L> (unnormalized) and is
    None when the pair table was too large to build; `violations` lists
    (a, b, i, j) where the condition fails.
    """

    method: str
    e: int
    indices: list
    lambdas: Optional[dict]
    violations: list
    pairs: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def lambda_table(self) -> list:
        if self.lambdas is None:
            return []
        return [{'a': a.to_dict(), 'b': b.to_dict(), 'lambda': value}
                for (a, b), value in self.lambdas.items() if not value.is_zero()]

    def to_check(self) -> Check:
        witness = None
        if self.violations:
            a, b, i, j = self.violations[0]
            witness = {'a': a.to_dict(), 'b': b.to_dict(), 'i': i, 'j': j}
        return Check('knill-laflamme ({0:s}, e={1:d})'.format(self.method, self.e), self.passed, witness,
                     {'pairs': self.pairs, 'violations': len(self.violations)})


def _kl_violations(a, b, matrix, n) -> list:
    violations = []
    for i in range(n):
        for j in range(n):
            if i != j and not matrix[i][j].is_zero():
                violations.append((a, b, i, j))
            elif i == j and i and matrix[i][i] != matrix[0][0]:
                violations.append((a, b, i, i))
    return violations


def kl_matrix(code: PuncturedQuantumCode, a: ErrorIndex, b: ErrorIndex) -> list:
    """<i_L|E_a^dagger E_b|j_L> for all i, j by state algebra"""
    left = [apply_error(a, state) for state in code.logical_states]
    right = [apply_error(b, state) for state in code.logical_states]
    return [[inner_product(u, v) for v in right] for u in left]


def kl_check_exhaustive(code: PuncturedQuantumCode, e: int, indices: Optional[Sequence[ErrorIndex]] = None,
                        config: Optional[RunConfig] = None) -> KLReport:
    config = resolve(config)
    if indices is None:
        indices = iter_error_indices(code.n, code.l, e, cap=config.scan_cap)
    images = [[apply_error(a, state) for state in code.logical_states] for a in indices]
    lambdas = {}
    violations = []
    for a, left in zip(indices, images):
        for b, right in zip(indices, images):
            matrix = [[inner_product(u, v) for v in right] for u in left]
            lambdas[(a, b)] = matrix[0][0]
            violations.extend(_kl_violations(a, b, matrix, code.n))
    logger.debug('exhaustive KL check over %d pairs: %d violations', len(indices) ** 2, len(violations))
    return KLReport('exhaustive', e, list(indices), lambdas, violations, len(indices) ** 2)


class _CodeTests:
    """Vectorized membership tests for the codes of a punctured code"""

    def __init__(self, code: PuncturedQuantumCode):
        self.n = code.n
        self.c_prime_0_checks = numpy.array(code.c_prime_0.generators, dtype=numpy.int64).reshape(-1, code.l)
        self.d_prime_0_checks = numpy.array(code.d_prime_0.generators, dtype=numpy.int64).reshape(-1, code.l)
        self.d_prime_checks = numpy.array(code.d_prime.generators, dtype=numpy.int64).reshape(-1, code.l)
        self.e1_prime = numpy.array(code.e1_prime, dtype=numpy.int64)

    def _orthogonal(self, rows, checks):
        if not len(checks):
            return numpy.ones(len(rows), dtype=bool)
        return ((rows @ checks.T) % self.n == 0).all(axis=1)

    def in_d_prime(self, xs):
        return self._orthogonal(xs, self.c_prime_0_checks)

    def in_c_prime(self, ys):
        return self._orthogonal(ys, self.d_prime_0_checks)

    def in_c_prime_0(self, ys):
        return self._orthogonal(ys, self.d_prime_checks)

    def logical_violation(self, xs, ys):
        """Differences (x, y) that act on the logical states other than as a
        label-independent scalar"""
        trivial = self.in_c_prime_0(ys) & ((xs @ self.e1_prime) % self.n == 0)
        return self.in_d_prime(xs) & self.in_c_prime(ys) & ~trivial


def kl_element(code: PuncturedQuantumCode, a: ErrorIndex, b: ErrorIndex, i: int, j: int) -> CycInt:
    """<i_L|E_a^dagger E_b|j_L> in closed form. E_a^dagger E_b equals
    w^(-x_a.y) E(x, y) for (x, y) = b - a, and its matrix element is a coset
    membership test times a character sum over C'_0."""
    n = code.n
    x = sub(b.x, a.x, n)
    y = sub(b.y, a.y, n)
    label = code.coset_labels.get(y)
    if label is None or label != (i - j) % n:
        return CycInt.zero()
    if any(dot(x, g, n) for g in code.c_prime_0.generators):
        return CycInt.zero()
    exponent = -dot(a.x, y, n) + j * dot(x, code.e1_prime, n)
    return CycInt.root(n, exponent) * len(code.c_prime_0)


def kl_check_fast(code: PuncturedQuantumCode, e: int, config: Optional[RunConfig] = None) -> KLReport:
    """Knill-Laflamme check without building states. The pair table is
    computed when it has at most `kl_table_cap` entries; the verdict always
    comes from scanning the differences of weight at most 2e."""
    config = resolve(config)
    n = code.n
    indices = iter_error_indices(n, code.l, e, cap=config.scan_cap)
    pairs = len(indices) ** 2

    if pairs <= config.kl_table_cap:
        lambdas = {}
        violations = []
        for a in indices:
            for b in indices:
                matrix = [[kl_element(code, a, b, i, j) for j in range(n)] for i in range(n)]
                lambdas[(a, b)] = matrix[0][0]
                violations.extend(_kl_violations(a, b, matrix, n))
        return KLReport('fast', e, indices, lambdas, violations, pairs)

    tests = _CodeTests(code)
    violations = []
    for xs, ys in iter_index_batches(n, code.l, 2 * e, 0, config.scan_cap):
        mask = tests.logical_violation(xs, ys)
        if mask.any():
            row = int(numpy.argmax(mask))
            difference = ErrorIndex(xs[row].tolist(), ys[row].tolist())
            # Split the difference into two errors of weight at most e
            support = [s for s in range(code.l) if difference.x[s] or difference.y[s]]
            first = set(support[:e])
            a = ErrorIndex([0 if s in first else (-difference.x[s]) % n for s in range(code.l)],
                           [0 if s in first else (-difference.y[s]) % n for s in range(code.l)])
            b = ErrorIndex([difference.x[s] if s in first else 0 for s in range(code.l)],
                           [difference.y[s] if s in first else 0 for s in range(code.l)])
            violations.append((a, b, None, None))
            break
    logger.info('fast KL check by differences of weight <= %d: %s', 2 * e, 'fail' if violations else 'pass')
    return KLReport('fast', e, indices, None, violations, pairs)


@dataclass
class DistanceCertificate:
    e: int
    checks: list = field(default_factory=list)
    logical_witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def distance_certificate(code: PuncturedQuantumCode, e: int, config: Optional[RunConfig] = None) -> DistanceCertificate:
    """Certifies that every error of weight at most e is correctable, once
    through the minimum weights of C' and D' and once by scanning for
    indices of weight at most 2e that commute with every generator"""
    config = resolve(config)
    n = code.n
    certificate = DistanceCertificate(e)
    bound = 2 * e + 1
    weights = {"C'": min_weight(code.c_prime), "D'": min_weight(code.d_prime)}
    by_weight = all(w >= bound for w in weights.values())
    certificate.checks.append(Check('min weight >= {0:d}'.format(bound), by_weight, None, weights))

    if e == 0:
        certificate.checks.append(Check('orthogonal scan', True, None, {'scanned': 0}))
        return certificate

    gx = numpy.array([g.x for g in code.generators], dtype=numpy.int64).reshape(-1, code.l)
    gy = numpy.array([g.y for g in code.generators], dtype=numpy.int64).reshape(-1, code.l)
    x_code, y_code = (code.c_prime, code.d_prime) if code.convention is Convention.LITERAL else (code.d_prime, code.c_prime)
    found = []
    membership = True
    scanned = 0
    try:
        for xs, ys in iter_index_batches(n, code.l, 2 * e, 1, config.scan_cap):
            scanned += len(xs)
            syndromes = (xs @ gy.T - ys @ gx.T) % n if len(gx) else numpy.zeros((len(xs), 0), dtype=numpy.int64)
            for row in numpy.flatnonzero((syndromes == 0).all(axis=1)):
                d = ErrorIndex(xs[row].tolist(), ys[row].tolist())
                membership = membership and d.x in x_code and d.y in y_code
                found.append(d)
    except SizeGuardExceeded as error:
        logger.warning('orthogonal scan skipped: %s', error)
        certificate.checks.append(Check('orthogonal scan', by_weight, None,
                                        {'note': 'scan guard exceeded, minimum weights decide'}))
        return certificate

    certificate.logical_witnesses = [d for d in found if not code.is_stabilizer(d)]
    scan_passes = not found
    certificate.checks.append(Check('orthogonal scan', scan_passes, str(found[0]) if found else None,
                                    {'scanned': scanned, 'orthogonal': len(found),
                                     'logical': len(certificate.logical_witnesses)}))
    certificate.checks.append(Check('orthogonal indices lie in the dual codes', membership))
    certificate.checks.append(Check('certificates agree', scan_passes == by_weight))
    return certificate


def syndrome_of(d: ErrorIndex, code: PuncturedQuantumCode) -> tuple:
    return tuple(symplectic_product(g, d, code.n) for g in code.generators)


@dataclass
class Decoder:
    e: int
    table: dict
    strict: bool
    syndrome_length: int

    def lookup(self, syndrome: Sequence[int]) -> ErrorIndex:
        key = tuple(syndrome)
        if key not in self.table:
            raise DecoderMiss(key)
        return self.table[key]

    def __len__(self):
        return len(self.table)


def build_decoder(code: PuncturedQuantumCode, e: int, strict: Optional[bool] = None,
                  config: Optional[RunConfig] = None) -> Decoder:
    """Syndrome table mapping each syndrome to its correction. Errors of
    weight at most e must have distinct syndromes; outside strict mode the
    remaining syndromes get the minimum weight index that produces them."""
    config = resolve(config)
    strict = config.strict_decoder if strict is None else strict
    n = code.n
    table = {}
    for d in iter_error_indices(n, code.l, e, cap=config.scan_cap):
        syndrome = syndrome_of(d, code)
        if syndrome in table:
            raise SyndromeCollision(table[syndrome], d, syndrome)
        table[syndrome] = d

    total = n ** len(code.generators)
    if not strict:
        gx = numpy.array([g.x for g in code.generators], dtype=numpy.int64).reshape(-1, code.l)
        gy = numpy.array([g.y for g in code.generators], dtype=numpy.int64).reshape(-1, code.l)
        weight = e + 1
        scanned = 0
        while len(table) < total and weight <= code.l:
            level = count_error_indices(n, code.l, weight, weight)
            if scanned + level > config.scan_cap:
                logger.warning('decoder fill stopped at weight %d: %d of %d syndromes', weight, len(table), total)
                break
            scanned += level
            found = []
            for xs, ys in iter_index_batches(n, code.l, weight, weight):
                syndromes = (gy @ xs.T - gx @ ys.T).T % n if len(gx) else numpy.zeros((len(xs), 0), dtype=numpy.int64)
                for row, syndrome in enumerate(map(tuple, syndromes.tolist())):
                    if syndrome not in table:
                        found.append((xs[row].tolist(), ys[row].tolist(), syndrome))
            for x, y, syndrome in sorted(found):
                if syndrome not in table:
                    table[syndrome] = ErrorIndex(x, y)
            weight += 1
    logger.info('decoder for e=%d covers %d of %d syndromes', e, len(table), total)
    return Decoder(e, table, strict, len(code.generators))


def logical_apply(code: PuncturedQuantumCode, a: int, b: int, state: StateVector) -> StateVector:
    """|C'_0| times the logical error w^(a i)|i> -> |i+b> applied to the code
    space component of `state`"""
    result = StateVector(code.shape)
    for i, basis in enumerate(code.logical_states):
        overlap = inner_product(basis, state)
        if not overlap.is_zero():
            result = result + code.logical_states[(i + b) % code.n].scaled(overlap.times_root(a * i, code.n))
    return result


@dataclass
class Recovery:
    recovered: StateVector
    correction: ErrorIndex
    residual: ErrorIndex
    logical: tuple
    valid: bool
    consistent: bool


def recover(code: PuncturedQuantumCode, decoder: Decoder, corrupted: StateVector, actual_error: ErrorIndex) -> Recovery:
    """Applies the adjoint of the decoder's correction for the syndrome of
    `actual_error` and identifies the logical error left behind"""
    n = code.n
    correction = decoder.lookup(syndrome_of(actual_error, code))
    recovered = apply_error_adjoint(correction, corrupted)
    residual = actual_error.sub(correction, n)

    label = code.coset_labels.get(residual.y)
    orthogonal = not any(dot(residual.x, g, n) for g in code.c_prime_0.generators)
    valid = label is not None and orthogonal
    logical = (dot(residual.x, code.e1_prime, n), label) if valid else (None, None)

    consistent = False
    if valid:
        original = apply_error_adjoint(actual_error, corrupted)
        consistent = proportional(recovered, logical_apply(code, logical[0], logical[1], original)) is not None
    return Recovery(recovered, correction, residual, logical, valid, consistent)


@dataclass
class SweepResult:
    max_weight: int
    tried: int = 0
    recovered: int = 0
    missed: int = 0
    invalid: int = 0
    residuals: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'max_weight': self.max_weight,
            'tried': self.tried,
            'recovered': self.recovered,
            'missed': self.missed,
            'invalid': self.invalid,
            'residuals': {'{0},{1}'.format(a, b): count for (a, b), count in sorted(self.residuals.items())},
        }


def sweep(code: PuncturedQuantumCode, decoder: Decoder, max_weight: int,
          config: Optional[RunConfig] = None) -> SweepResult:
    """Runs recover on every error of weight at most `max_weight` applied to
    every logical basis state"""
    config = resolve(config)
    result = SweepResult(max_weight)
    for d in iter_error_indices(code.n, code.l, max_weight, cap=config.scan_cap):
        for state in code.logical_states:
            result.tried += 1
            try:
                recovery = recover(code, decoder, apply_error(d, state), d)
            except DecoderMiss:
                result.missed += 1
                continue
            if not recovery.valid or not recovery.consistent:
                result.invalid += 1
                continue
            result.residuals[recovery.logical] += 1
            if recovery.logical == (0, 0):
                result.recovered += 1
            else:
                result.witnesses.setdefault(recovery.logical, d)
    return result
