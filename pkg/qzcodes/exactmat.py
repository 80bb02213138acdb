"""Exact matrices and sparse state vectors over :py:class:`CycInt`.

:py:class:`MonomialMatrix` holds every operator of the error bases
(permutation plus root-of-unity phases), :py:class:`DenseMatrix` holds the
unnormalized Fourier matrix and anything else that is not monomial, and
:py:class:`StateVector` is a sparse map from basis index vectors to
amplitudes. Basis indices are big-endian mixed radix: site 0 is the most
significant digit.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, Union

import numpy

from qzcodes.config import RunConfig, resolve
from qzcodes.cyclotomic import CycInt
from qzcodes.errors import DimensionMismatch, SizeGuardExceeded
from qzcodes.utils import decode_index, encode_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ratio:
    """Evidence that u = (num / den) v, kept as a pair since the ring has no
    division"""

    num: CycInt
    den: CycInt

    def equals(self, value) -> bool:
        """True if num / den equals `value`"""
        return self.num == CycInt.coerce(value) * self.den

    def same_as(self, other: Ratio) -> bool:
        return self.num * other.den == other.num * self.den

    def __str__(self):
        return '({0!s}) / ({1!s})'.format(self.num, self.den)


class MonomialMatrix:
    """Generalized permutation matrix acting as M|j> = zeta_m^(p_j) |perm(j)>.

    Instances are immutable and hashable; equality and hashing use the
    canonical key in which the phase order is reduced as far as possible.
    """

    __slots__ = ('_dim', '_order', '_perm', '_phases', '_key')

    def __init__(self, dim: int, order: int, perm: Sequence[int], phases: Optional[Sequence[int]] = None):
        if dim < 1:
            raise ValueError('dimension must be positive, got {0!r}'.format(dim))
        if order < 1:
            raise ValueError('phase order must be positive, got {0!r}'.format(order))
        perm = tuple(int(p) for p in perm)
        if len(perm) != dim or sorted(perm) != list(range(dim)):
            raise ValueError('{0!r} is not a permutation of {1:d} points'.format(perm, dim))
        phases = (0,) * dim if phases is None else tuple(int(p) % order for p in phases)
        if len(phases) != dim:
            raise DimensionMismatch(dim, len(phases), 'phase vector length')

        self._dim = dim
        self._order = order
        self._perm = perm
        self._phases = phases
        self._key = None

    @classmethod
    def identity(cls, dim: int, order: int = 1) -> MonomialMatrix:
        return cls(dim, order, range(dim))

    @classmethod
    def shift(cls, n: int, power: int = 1) -> MonomialMatrix:
        """X^power with X|z> = |z+1 mod n>"""
        return cls(n, 1, [(j + power) % n for j in range(n)])

    @classmethod
    def cyclic(cls, n: int, power: int = 1) -> MonomialMatrix:
        """C^power for the cyclic permutation C|z> = |z-1 mod n>, the inverse
        of :py:meth:`shift`"""
        return cls.shift(n, -power)

    @classmethod
    def clock(cls, n: int, power: int = 1) -> MonomialMatrix:
        """D^power with D|z> = w^z |z>, w = zeta_n"""
        return cls(n, n, range(n), [(power * j) % n for j in range(n)])

    @classmethod
    def from_entries(cls, order: int, rows: Sequence[Sequence[Optional[int]]]) -> MonomialMatrix:
        """Builds the matrix from its rows, written as they would be printed:
        `None` marks a zero entry, an integer k marks the entry zeta_order^k."""
        dim = len(rows)
        perm = [None] * dim
        phases = [0] * dim
        for i, row in enumerate(rows):
            if len(row) != dim:
                raise DimensionMismatch(dim, len(row), 'row length')
            for j, entry in enumerate(row):
                if entry is None:
                    continue
                if perm[j] is not None:
                    raise ValueError('column {0:d} has more than one nonzero entry'.format(j))
                perm[j] = i
                phases[j] = entry
        if any(p is None for p in perm):
            raise ValueError('every column needs exactly one nonzero entry')
        return cls(dim, order, perm, phases)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def order(self) -> int:
        return self._order

    @property
    def perm(self) -> tuple[int, ...]:
        return self._perm

    @property
    def phases(self) -> tuple[int, ...]:
        return self._phases

    def lift(self, order: int) -> MonomialMatrix:
        if order % self._order:
            raise ValueError('cannot lift phase order {0:d} to {1:d}'.format(self._order, order))
        step = order // self._order
        return MonomialMatrix(self._dim, order, self._perm, [p * step for p in self._phases])

    def reduced(self) -> MonomialMatrix:
        """Same matrix with the smallest phase order that expresses it"""
        g = math.gcd(self._order, *self._phases)
        if g == 1:
            return self
        return MonomialMatrix(self._dim, self._order // g, self._perm, [p // g for p in self._phases])

    def canonical_key(self) -> tuple:
        if self._key is None:
            r = self.reduced()
            self._key = (r._dim, r._order, r._perm, r._phases)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return 'MonomialMatrix(dim={0:d}, order={1:d}, perm={2!r}, phases={3!r})'.format(
            self._dim, self._order, self._perm, self._phases)

    def _common(self, other: MonomialMatrix) -> tuple[MonomialMatrix, MonomialMatrix]:
        if self._dim != other._dim:
            raise DimensionMismatch(self._dim, other._dim)
        order = math.lcm(self._order, other._order)
        return self.lift(order), other.lift(order)

    def compose(self, other: MonomialMatrix) -> MonomialMatrix:
        """Matrix product self * other (other is applied first)"""
        a, b = self._common(other)
        perm = [a._perm[b._perm[j]] for j in range(a._dim)]
        phases = [b._phases[j] + a._phases[b._perm[j]] for j in range(a._dim)]
        return MonomialMatrix(a._dim, a._order, perm, phases)

    def __matmul__(self, other):
        if isinstance(other, MonomialMatrix):
            return self.compose(other)
        if isinstance(other, DenseMatrix):
            return DenseMatrix._trusted(self._dense_entries()) @ other
        return NotImplemented

    def adjoint(self) -> MonomialMatrix:
        perm = [0] * self._dim
        phases = [0] * self._dim
        for j, image in enumerate(self._perm):
            perm[image] = j
            phases[image] = -self._phases[j]
        return MonomialMatrix(self._dim, self._order, perm, phases)

    def power(self, exponent: int) -> MonomialMatrix:
        base = self if exponent >= 0 else self.adjoint()
        result = MonomialMatrix.identity(self._dim, self._order)
        for _ in range(abs(exponent)):
            result = result.compose(base)
        return result

    def trace(self) -> CycInt:
        coeffs = [0] * self._order
        for j, image in enumerate(self._perm):
            if image == j:
                coeffs[self._phases[j]] += 1
        return CycInt(self._order, coeffs)

    def sign(self) -> int:
        seen = [False] * self._dim
        parity = 0
        for start in range(self._dim):
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self._perm[j]
                length += 1
            if length:
                parity += length - 1
        return -1 if parity % 2 else 1

    def det_exponent(self) -> tuple[int, int]:
        """Returns (k, M) with det = zeta_M^k; the sign of the permutation is
        folded into the exponent, doubling M when the order is odd"""
        total = sum(self._phases)
        if self.sign() == 1:
            return total % self._order, self._order
        if self._order % 2 == 0:
            return (total + self._order // 2) % self._order, self._order
        return (2 * total + self._order) % (2 * self._order), 2 * self._order

    def det(self) -> CycInt:
        exponent, order = self.det_exponent()
        return CycInt.root(order, exponent)

    def times_phase(self, exponent: int, order: Optional[int] = None) -> MonomialMatrix:
        """Scalar multiple zeta^exponent * self; `order` defaults to the
        matrix phase order"""
        if order is None:
            order = self._order
        common = math.lcm(self._order, order)
        lifted = self.lift(common)
        step = common // order
        return MonomialMatrix(self._dim, common, self._perm, [p + exponent * step for p in lifted._phases])

    def tensor(self, other: MonomialMatrix) -> MonomialMatrix:
        order = math.lcm(self._order, other._order)
        a, b = self.lift(order), other.lift(order)
        nb = b._dim
        perm = []
        phases = []
        for ja in range(a._dim):
            for jb in range(nb):
                perm.append(a._perm[ja] * nb + b._perm[jb])
                phases.append(a._phases[ja] + b._phases[jb])
        return MonomialMatrix(a._dim * nb, order, perm, phases)

    def projective_phase(self, other: MonomialMatrix) -> Optional[CycInt]:
        """Returns w with self = w * other, or None when the two are not
        proportional"""
        a, b = self._common(other)
        if a._perm != b._perm:
            return None
        differences = {(x - y) % a._order for x, y in zip(a._phases, b._phases)}
        if len(differences) != 1:
            return None
        return CycInt.root(a._order, differences.pop())

    def _dense_entries(self) -> numpy.ndarray:
        entries = numpy.empty((self._dim, self._dim), dtype=object)
        zero = CycInt.zero(self._order)
        entries.fill(zero)
        for j, image in enumerate(self._perm):
            entries[image, j] = CycInt.root(self._order, self._phases[j])
        return entries

    def to_dense(self, config: Optional[RunConfig] = None) -> DenseMatrix:
        _check_dense_dim(self._dim, config)
        return DenseMatrix._trusted(self._dense_entries())


def _check_dense_dim(dim: int, config: Optional[RunConfig] = None) -> None:
    cap = resolve(config).dense_dim_cap
    if dim > cap:
        raise SizeGuardExceeded('dense_dim_cap', dim, cap)


def _square(entries) -> numpy.ndarray:
    array = numpy.array(entries, dtype=object)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionMismatch('square matrix', array.shape, 'shape')
    return _coerce(array).astype(object)


_conj = numpy.frompyfunc(lambda value: value.conj(), 1, 1)
_coerce = numpy.frompyfunc(CycInt.coerce, 1, 1)


class DenseMatrix:
    """Square matrix of :py:class:`CycInt` entries backed by a numpy object
    array. Construction checks the dimension against `dense_dim_cap`;
    arithmetic between guarded matrices keeps their dimension."""

    __slots__ = ('_entries',)

    def __init__(self, entries, config: Optional[RunConfig] = None):
        array = _square(entries)
        _check_dense_dim(array.shape[0], config)
        self._entries = array

    @classmethod
    def _trusted(cls, entries) -> DenseMatrix:
        obj = cls.__new__(cls)
        obj._entries = _square(entries)
        return obj

    @classmethod
    def identity(cls, n: int, config: Optional[RunConfig] = None) -> DenseMatrix:
        return MonomialMatrix.identity(n).to_dense(config)

    @classmethod
    def zeros(cls, n: int, config: Optional[RunConfig] = None) -> DenseMatrix:
        entries = numpy.empty((n, n), dtype=object)
        entries.fill(CycInt.zero())
        return cls(entries, config)

    @classmethod
    def fourier(cls, n: int, config: Optional[RunConfig] = None) -> DenseMatrix:
        """Unnormalized Fourier matrix F_ij = w^(ij)"""
        return cls([[CycInt.root(n, i * j) for j in range(n)] for i in range(n)], config)

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> numpy.ndarray:
        return self._entries.copy()

    def __getitem__(self, index):
        return self._entries[index]

    def _check(self, other: DenseMatrix) -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(self.dim, other.dim)

    def __matmul__(self, other):
        if isinstance(other, MonomialMatrix):
            other = DenseMatrix._trusted(other._dense_entries())
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        self._check(other)
        return DenseMatrix._trusted(numpy.dot(self._entries, other._entries))

    def __add__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        self._check(other)
        return DenseMatrix._trusted(self._entries + other._entries)

    def __sub__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        self._check(other)
        return DenseMatrix._trusted(self._entries - other._entries)

    def scaled(self, factor) -> DenseMatrix:
        factor = CycInt.coerce(factor)
        return DenseMatrix._trusted(self._entries * factor)

    def adjoint(self) -> DenseMatrix:
        return DenseMatrix._trusted(_conj(self._entries.T))

    def trace(self) -> CycInt:
        total = CycInt.zero()
        for i in range(self.dim):
            total = total + self._entries[i, i]
        return total

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self._entries.flat)

    def __eq__(self, other):
        if isinstance(other, MonomialMatrix):
            other = DenseMatrix._trusted(other._dense_entries())
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for a, b in zip(self._entries.flat, other._entries.flat))

    __hash__ = None

    def proportional_to(self, other: DenseMatrix) -> Optional[Ratio]:
        """Returns the ratio s with self = s * other, decided by
        cross-multiplication, or None when no such nonzero s exists"""
        self._check(other)
        pivot = None
        for index, (a, b) in enumerate(zip(self._entries.flat, other._entries.flat)):
            if a.is_zero() != b.is_zero():
                return None
            if pivot is None and not a.is_zero():
                pivot = index
        if pivot is None:
            return None
        u0 = self._entries.flat[pivot]
        v0 = other._entries.flat[pivot]
        for a, b in zip(self._entries.flat, other._entries.flat):
            if not a.is_zero() and a * v0 != u0 * b:
                return None
        return Ratio(u0, v0)

    def __repr__(self):
        rows = ['[' + ', '.join(str(entry) for entry in row) + ']' for row in self._entries]
        return 'DenseMatrix([' + ', '.join(rows) + '])'


Operator = Union[MonomialMatrix, DenseMatrix]


def to_dense(a: Operator, config: Optional[RunConfig] = None) -> DenseMatrix:
    """Dense form of `a`, checked against `dense_dim_cap` of `config`"""
    if isinstance(a, DenseMatrix):
        _check_dense_dim(a.dim, config)
        return a
    return a.to_dense(config)


def dense_scalar_check(a: Operator, b: Operator, config: Optional[RunConfig] = None) -> Optional[Ratio]:
    config = resolve(config)
    return to_dense(a, config).proportional_to(to_dense(b, config))


class StateVector:
    """Sparse state over a product of sites.

    `shape` lists the site dimensions; amplitudes are keyed by index vectors.
    Zero amplitudes are never stored.
    """

    __slots__ = ('_shape', '_amplitudes')

    def __init__(self, shape: Sequence[int], amplitudes: Optional[Mapping] = None):
        self._shape = tuple(int(d) for d in shape)
        if any(d < 1 for d in self._shape):
            raise ValueError('site dimensions must be positive, got {0!r}'.format(self._shape))
        self._amplitudes = {}
        if amplitudes:
            for index, amplitude in amplitudes.items():
                vector = self._vector(index)
                amplitude = CycInt.coerce(amplitude)
                if not amplitude.is_zero():
                    self._amplitudes[vector] = amplitude

    def _vector(self, index) -> tuple[int, ...]:
        if isinstance(index, (int, numpy.integer)):
            return decode_index(int(index), self._shape)
        vector = tuple(int(i) for i in index)
        if len(vector) != len(self._shape):
            raise DimensionMismatch(len(self._shape), len(vector), 'number of sites')
        for digit, dim in zip(vector, self._shape):
            if not 0 <= digit < dim:
                raise ValueError('index {0!r} outside the site dimensions {1!r}'.format(vector, self._shape))
        return vector

    @classmethod
    def _trusted(cls, shape: tuple[int, ...], amplitudes: dict) -> StateVector:
        obj = object.__new__(cls)
        obj._shape = shape
        obj._amplitudes = {index: value for index, value in amplitudes.items() if not value.is_zero()}
        return obj

    @classmethod
    def basis(cls, shape: Sequence[int], index) -> StateVector:
        return cls(shape, {index if not isinstance(index, list) else tuple(index): CycInt.one()})

    @classmethod
    def uniform(cls, shape: Sequence[int], support: Iterable[Sequence[int]]) -> StateVector:
        """Unnormalized sum of the given basis states, all amplitudes 1"""
        one = CycInt.one()
        return cls(shape, {tuple(vector): one for vector in support})

    @property
    def shape(self) -> tuple[int, ...]:
        return self._shape

    @property
    def dim(self) -> int:
        return math.prod(self._shape)

    @property
    def sites(self) -> int:
        return len(self._shape)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._amplitudes)

    def items(self) -> Iterator[tuple[tuple[int, ...], CycInt]]:
        for index in sorted(self._amplitudes):
            yield index, self._amplitudes[index]

    def __getitem__(self, index) -> CycInt:
        return self._amplitudes.get(self._vector(index), CycInt.zero())

    def __len__(self):
        return len(self._amplitudes)

    def index_of(self, vector: Sequence[int]) -> int:
        return encode_index(vector, self._shape)

    def is_zero(self) -> bool:
        return not self._amplitudes

    def _check(self, other: StateVector) -> None:
        if self._shape != other._shape:
            raise DimensionMismatch(self._shape, other._shape, 'state shape')

    def __add__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        self._check(other)
        result = dict(self._amplitudes)
        for index, amplitude in other._amplitudes.items():
            result[index] = result[index] + amplitude if index in result else amplitude
        return StateVector._trusted(self._shape, result)

    def __sub__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return StateVector._trusted(self._shape, {index: -value for index, value in self._amplitudes.items()})

    def scaled(self, factor) -> StateVector:
        factor = CycInt.coerce(factor)
        return StateVector._trusted(self._shape, {index: value * factor for index, value in self._amplitudes.items()})

    def times_root(self, exponent: int, order: int) -> StateVector:
        return StateVector._trusted(
            self._shape, {index: value.times_root(exponent, order) for index, value in self._amplitudes.items()})

    def map_indices(self, mapping: Callable[[tuple[int, ...]], tuple[int, ...]]) -> StateVector:
        """Applies a bijection of basis indices"""
        result = {}
        for index, amplitude in self._amplitudes.items():
            image = tuple(mapping(index))
            if image in result:
                raise ValueError('index map is not injective at {0!r}'.format(image))
            result[image] = amplitude
        return StateVector._trusted(self._shape, result)

    def tensor(self, other: StateVector) -> StateVector:
        result = {}
        for a, x in self._amplitudes.items():
            for b, y in other._amplitudes.items():
                result[a + b] = x * y
        return StateVector._trusted(self._shape + other._shape, result)

    def inner(self, other: StateVector) -> CycInt:
        """<self|other>, conjugate linear in self"""
        self._check(other)
        total = CycInt.zero()
        small, large = (self._amplitudes, other._amplitudes)
        for index, amplitude in small.items():
            if index in large:
                total = total + amplitude.conj() * large[index]
        return total

    def norm2(self) -> CycInt:
        return self.inner(self)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        if self._shape != other._shape or self._amplitudes.keys() != other._amplitudes.keys():
            return False
        return all(value == other._amplitudes[index] for index, value in self._amplitudes.items())

    __hash__ = None

    def __repr__(self):
        terms = ', '.join('{0!r}: {1!s}'.format(index, value) for index, value in self.items())
        return 'StateVector(shape={0!r}, {{{1:s}}})'.format(self._shape, terms)


def inner_product(u: StateVector, v: StateVector) -> CycInt:
    return u.inner(v)


def proportional(u: StateVector, v: StateVector) -> Optional[Ratio]:
    """Returns (u_a0, v_a0) at the first support index a0 when u = s * v for a
    nonzero scalar s, otherwise None. Decided without division."""
    if u.shape != v.shape:
        raise DimensionMismatch(u.shape, v.shape, 'state shape')
    support = u.support()
    if not support or support != v.support():
        return None
    first = support[0]
    u0 = u[first]
    v0 = v[first]
    for index in support[1:]:
        if u[index] * v0 != u0 * v[index]:
            return None
    return Ratio(u0, v0)


def apply_mono(ops: Sequence[MonomialMatrix], state: StateVector) -> StateVector:
    """Applies the tensor product of the per-site monomial operators"""
    if tuple(op.dim for op in ops) != state.shape:
        raise DimensionMismatch(state.shape, tuple(op.dim for op in ops), 'site dimensions')
    order = math.lcm(*(op.order for op in ops)) if ops else 1
    steps = [order // op.order for op in ops]
    result = {}
    for index, amplitude in state.items():
        image = tuple(op.perm[digit] for op, digit in zip(ops, index))
        exponent = sum(op.phases[digit] * step for op, digit, step in zip(ops, index, steps))
        result[image] = amplitude.times_root(exponent, order) if exponent % order else amplitude
    return StateVector._trusted(state.shape, result)


def apply_dense(ops: Sequence[Optional[Operator]], state: StateVector,
                config: Optional[RunConfig] = None) -> StateVector:
    """Applies per-site operators one site at a time; `None` means identity.
    Dense sites may split one basis term into several and are checked
    against `dense_dim_cap`."""
    if len(ops) != state.sites:
        raise DimensionMismatch(state.sites, len(ops), 'number of sites')
    config = resolve(config)
    current = state
    for site, op in enumerate(ops):
        if op is None:
            continue
        if op.dim != state.shape[site]:
            raise DimensionMismatch(state.shape[site], op.dim, 'site {0:d} dimension'.format(site))
        if isinstance(op, MonomialMatrix):
            identities = [MonomialMatrix.identity(d) for d in state.shape]
            identities[site] = op
            current = apply_mono(identities, current)
            continue
        _check_dense_dim(op.dim, config)
        entries = op.entries
        result = {}
        for index, amplitude in current.items():
            for row in range(op.dim):
                coefficient = entries[row, index[site]]
                if coefficient.is_zero():
                    continue
                image = index[:site] + (row,) + index[site + 1:]
                term = coefficient * amplitude
                result[image] = result[image] + term if image in result else term
        current = StateVector._trusted(state.shape, result)
    return current
