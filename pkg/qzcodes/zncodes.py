"""Classical linear codes over Z_n.

Brute force is the reference semantics: spans are enumerated by closure,
duals and coset leaders by scanning the ambient space Z_n^L in chunks. Both
work for composite n, where zero divisors rule out plain Gaussian
elimination. Prime n additionally gets a row-reduction path for the dual.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from typing import Iterator, Optional, Sequence

import galois
import numpy

from qzcodes.config import RunConfig, resolve
from qzcodes.errors import DualityChainError, NoUnitLastCoordinate, SizeGuardExceeded
from qzcodes.utils import Vector, as_vector, check_entries, dot, weight

logger = logging.getLogger(__name__)

INFINITE_WEIGHT = math.inf

_CHUNK = 1 << 16


def _span(n: int, length: int, generators: Sequence[Vector], cap: int) -> numpy.ndarray:
    words = numpy.zeros((1, length), dtype=numpy.int64)
    for generator in generators:
        g = numpy.array(generator, dtype=numpy.int64)
        order = n // math.gcd(n, *generator)
        if order == 1:
            continue
        words = numpy.unique(numpy.concatenate([(words + k * g) % n for k in range(order)]), axis=0)
        if len(words) > cap:
            raise SizeGuardExceeded('ambient_cap', len(words), cap)
    return words


def _digits(indices: numpy.ndarray, n: int, length: int) -> numpy.ndarray:
    powers = n ** numpy.arange(length - 1, -1, -1, dtype=numpy.int64)
    return (indices[:, None] // powers[None, :]) % n


def iter_ambient(n: int, length: int, cap: int, chunk: int = _CHUNK) -> Iterator[tuple[numpy.ndarray, numpy.ndarray]]:
    """Yields (indices, rows) chunks covering Z_n^length in lexicographic
    order"""
    total = n ** length
    if total > cap:
        raise SizeGuardExceeded('ambient_cap', total, cap)
    for start in range(0, total, chunk):
        indices = numpy.arange(start, min(total, start + chunk), dtype=numpy.int64)
        yield indices, _digits(indices, n, length)


class LinearCodeZn:
    """Additive code over Z_n given by generators.

    The codeword list is enumerated on first use and cached as a sorted
    numpy array of shape (size, length).

    :param modulus: alphabet size n, at least 2
    :param length: code length L, at least 1
    :param generators: generating vectors with entries in [0, n)
    :param codewords: optional known enumeration, trusted as is. Without
        `generators` a generating set is derived from it.
    """

    def __init__(self, modulus: int, length: int, generators: Sequence[Sequence[int]] = (),
                 codewords: Optional[numpy.ndarray] = None, config: Optional[RunConfig] = None):
        if modulus < 2:
            raise ValueError('modulus must be at least 2, got {0!r}'.format(modulus))
        if length < 1:
            raise ValueError('length must be at least 1, got {0!r}'.format(length))
        self.modulus = modulus
        self.length = length
        self.generators = tuple(as_vector(g) for g in generators)
        for g in self.generators:
            if len(g) != length:
                raise ValueError('generator {0!r} does not have length {1:d}'.format(g, length))
            check_entries(g, modulus)
        self.config = config
        self._words = None
        self._members = None
        if codewords is not None:
            words = numpy.array(codewords, dtype=numpy.int64).reshape(-1, length)
            self._words = numpy.unique(words, axis=0)
            if not self.generators:
                self.generators = tuple(reduce_generators(modulus, length, self._words, config))

    @property
    def words(self) -> numpy.ndarray:
        if self._words is None:
            cap = resolve(self.config).ambient_cap
            self._words = _span(self.modulus, self.length, self.generators, cap)
            logger.debug('enumerated %d codewords of length %d over Z_%d', len(self._words), self.length, self.modulus)
        return self._words

    def enumerate(self) -> list[Vector]:
        return [as_vector(row) for row in self.words]

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.enumerate())

    def __contains__(self, vector) -> bool:
        if self._members is None:
            self._members = frozenset(self.enumerate())
        return as_vector(vector, self.modulus) in self._members

    def __eq__(self, other):
        if not isinstance(other, LinearCodeZn):
            return NotImplemented
        return (self.modulus == other.modulus and self.length == other.length
                and numpy.array_equal(self.words, other.words))

    __hash__ = None

    def __repr__(self):
        return '<LinearCodeZn n={0:d} L={1:d} generators={2:d}>'.format(self.modulus, self.length, len(self.generators))

    def is_zero(self) -> bool:
        return len(self) == 1


def enumerate_codewords(code: LinearCodeZn) -> list[Vector]:
    return code.enumerate()


def contains(code: LinearCodeZn, vector: Sequence[int]) -> bool:
    return vector in code


def reduce_generators(n: int, length: int, words: numpy.ndarray, config: Optional[RunConfig] = None) -> list[Vector]:
    """Greedy generating set: walks the words in lexicographic order and
    keeps each one not yet in the span of those kept. For prime n the result
    is a basis."""
    cap = resolve(config).ambient_cap
    generators = []
    span = {(0,) * length}
    target = len(words)
    for row in words:
        if len(span) == target:
            break
        word = as_vector(row)
        if word in span:
            continue
        generators.append(word)
        span = {as_vector(r) for r in _span(n, length, generators, cap)}
    return generators


def dual(code: LinearCodeZn, config: Optional[RunConfig] = None) -> LinearCodeZn:
    """Dual code by brute-force scan over Z_n^L"""
    config = resolve(config)
    n, length = code.modulus, code.length
    g = numpy.array(code.generators, dtype=numpy.int64).reshape(-1, length)
    found = []
    for _, rows in iter_ambient(n, length, config.ambient_cap):
        if len(g):
            mask = ((rows @ g.T) % n == 0).all(axis=1)
            found.append(rows[mask])
        else:
            found.append(rows)
    words = numpy.concatenate(found)
    logger.debug('dual of %r has %d words', code, len(words))
    return LinearCodeZn(n, length, reduce_generators(n, length, words, config), codewords=words, config=config)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def dual_rowreduce(code: LinearCodeZn, config: Optional[RunConfig] = None) -> LinearCodeZn:
    """Dual code for prime n as the null space of the generator matrix over
    GF(n)"""
    p, length = code.modulus, code.length
    if not _is_prime(p):
        raise ValueError('row reduction needs a prime modulus, got {0:d}'.format(p))
    if not code.generators:
        basis = numpy.eye(length, dtype=numpy.int64)
    else:
        field = galois.GF(p)
        basis = field(numpy.array(code.generators, dtype=numpy.int64)).null_space()
    return LinearCodeZn(p, length, [as_vector(row) for row in numpy.asarray(basis, dtype=numpy.int64)], config=config)


def double_dual_holds(code: LinearCodeZn, config: Optional[RunConfig] = None) -> bool:
    return dual(dual(code, config), config) == code


def is_self_dual(code: LinearCodeZn, config: Optional[RunConfig] = None) -> bool:
    return dual(code, config) == code


def puncture_last(code: LinearCodeZn) -> LinearCodeZn:
    """C' : every codeword with its last coordinate deleted"""
    if code.length < 2:
        raise ValueError('cannot puncture a code of length 1')
    generators = [g[:-1] for g in code.generators]
    return LinearCodeZn(code.modulus, code.length - 1, generators, codewords=code.words[:, :-1], config=code.config)


def shorten_last(code: LinearCodeZn) -> LinearCodeZn:
    """C'_0 : the codewords with last coordinate 0, with that coordinate
    deleted"""
    if code.length < 2:
        raise ValueError('cannot shorten a code of length 1')
    words = code.words[code.words[:, -1] == 0][:, :-1]
    generators = reduce_generators(code.modulus, code.length - 1, words, code.config)
    return LinearCodeZn(code.modulus, code.length - 1, generators, codewords=words, config=code.config)


def last_coord_surjective(code: LinearCodeZn) -> bool:
    return len(numpy.unique(code.words[:, -1])) == code.modulus


def find_e1(code: LinearCodeZn) -> Vector:
    """Lexicographically least codeword whose last coordinate is 1"""
    candidates = code.words[code.words[:, -1] == 1]
    if not len(candidates):
        raise NoUnitLastCoordinate('no codeword of {0!r} has last coordinate 1'.format(code))
    return as_vector(candidates[0])


def min_weight(code: LinearCodeZn):
    """Minimum Hamming weight of a nonzero codeword, or
    :py:data:`INFINITE_WEIGHT` for the zero code"""
    weights = numpy.count_nonzero(code.words, axis=1)
    weights = weights[weights > 0]
    return int(weights.min()) if len(weights) else INFINITE_WEIGHT


class CosetLeaders(Mapping):
    """Coset leaders of a code in Z_n^L, keyed by the leader itself.

    Leaders have minimum weight in their coset, ties broken
    lexicographically. Any vector is mapped to its coset leader through its
    syndrome against a generating set of the dual code.
    """

    def __init__(self, code: LinearCodeZn, checks: numpy.ndarray, leaders: dict[int, Vector]):
        self.code = code
        self._checks = checks
        self._by_syndrome = leaders
        self._leaders = {leader: leader for leader in sorted(leaders.values(), key=lambda v: (weight(v), v))}

    def _syndrome_key(self, vector: Sequence[int]) -> int:
        n = self.code.modulus
        key = 0
        for check in self._checks:
            key = key * n + dot(check, vector, n)
        return key

    def leader_of(self, vector: Sequence[int]) -> Vector:
        return self._by_syndrome[self._syndrome_key(as_vector(vector, self.code.modulus))]

    def __getitem__(self, label):
        return self._leaders[as_vector(label)]

    def __iter__(self):
        return iter(self._leaders)

    def __len__(self):
        return len(self._leaders)


def coset_leaders(code: LinearCodeZn, config: Optional[RunConfig] = None) -> CosetLeaders:
    config = resolve(config)
    n, length = code.modulus, code.length
    checks = numpy.array(dual(code, config).generators, dtype=numpy.int64).reshape(-1, length)
    place = n ** numpy.arange(len(checks) - 1, -1, -1, dtype=numpy.int64)

    best = {}
    for indices, rows in iter_ambient(n, length, config.ambient_cap):
        keys = ((rows @ checks.T) % n) @ place if len(checks) else numpy.zeros(len(rows), dtype=numpy.int64)
        weights = numpy.count_nonzero(rows, axis=1)
        order = numpy.lexsort((indices, weights, keys))
        sorted_keys = keys[order]
        first = numpy.ones(len(order), dtype=bool)
        first[1:] = sorted_keys[1:] != sorted_keys[:-1]
        for position in order[first]:
            key = int(keys[position])
            candidate = (int(weights[position]), int(indices[position]))
            if key not in best or candidate < best[key]:
                best[key] = candidate

    expected = n ** length // len(code)
    if len(best) != expected:
        raise DualityChainError('double dual', '{0:d} syndrome classes for {1:d} cosets'.format(len(best), expected))
    leaders = {key: as_vector(_digits(numpy.array([index]), n, length)[0]) for key, (_, index) in best.items()}
    return CosetLeaders(code, checks, leaders)


def duality_chain(c: LinearCodeZn, d: LinearCodeZn, config: Optional[RunConfig] = None) -> dict[str, bool]:
    """Evaluates dual(C') = D'_0 and dual(C'_0) = D' by enumeration"""
    c_prime, c_prime_0 = puncture_last(c), shorten_last(c)
    d_prime, d_prime_0 = puncture_last(d), shorten_last(d)
    return {
        "dual(C') = D'_0": dual(c_prime, config) == d_prime_0,
        "dual(C'_0) = D'": dual(c_prime_0, config) == d_prime,
    }
