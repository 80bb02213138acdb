"""Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].

A :py:class:`CycInt` is always stored in canonical form: its coefficients are
reduced modulo the m-th cyclotomic polynomial, so two values of the same
order are equal exactly when their coefficient tuples are. Operations on
values of different orders lift both operands to the lcm of the orders.
There is no division; proportionality is decided by cross-multiplication.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Iterable, Union

import numpy

logger = logging.getLogger(__name__)


def _poly_divmod(numerator: list[int], divisor: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # Coefficient lists, lowest degree first; divisor is monic
    remainder = list(numerator)
    degree = len(divisor) - 1
    if len(remainder) - 1 < degree:
        return [0], remainder
    quotient = [0] * (len(remainder) - degree)
    for shift in range(len(remainder) - 1 - degree, -1, -1):
        leading = remainder[shift + degree]
        if leading:
            quotient[shift] = leading
            for k, coefficient in enumerate(divisor):
                remainder[shift + k] -= leading * coefficient
    return quotient, remainder[:degree]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Returns the m-th cyclotomic polynomial as its integer coefficients,
    lowest degree first. It is computed by dividing x^m - 1 by every
    cyclotomic polynomial of a proper divisor of m.

    :param m: positive order
    :type m: int
    :rtype: tuple(int)
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError('cyclotomic order must be a positive integer, got {0!r}'.format(m))

    polynomial = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            polynomial, remainder = _poly_divmod(polynomial, cyclotomic_poly(d))
            if any(remainder):
                raise ArithmeticError('x^{0:d} - 1 is not divisible by the cyclotomic polynomial of {1:d}'.format(m, d))
    return tuple(polynomial)


def _canonicalize(coeffs: list[int], order: int) -> tuple[int, ...]:
    phi = cyclotomic_poly(order)
    degree = len(phi) - 1
    for top in range(order - 1, degree - 1, -1):
        leading = coeffs[top]
        if leading:
            base = top - degree
            for k, coefficient in enumerate(phi):
                coeffs[base + k] -= leading * coefficient
    return tuple(coeffs)


def _lift(coeffs: tuple[int, ...], order: int, target: int) -> list[int]:
    if target % order:
        raise ValueError('cannot lift order {0:d} to {1:d}'.format(order, target))
    step = target // order
    lifted = [0] * target
    for k, coefficient in enumerate(coeffs):
        if coefficient:
            lifted[k * step] = coefficient
    return lifted


class CycInt:
    """Exact element sum_k a_k zeta_m^k of Z[zeta_m].

    Values are immutable and unhashable: equal values may carry different
    orders, so no order-independent hash exists without a minimal-order
    search.
    """

    __slots__ = ('_order', '_coeffs')
    __hash__ = None

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise ValueError('order must be a positive integer, got {0!r}'.format(order))

        # Positions beyond the order fold back since zeta_m^m = 1
        folded = [0] * order
        for k, coefficient in enumerate(coeffs):
            if isinstance(coefficient, bool) or not isinstance(coefficient, (int, numpy.integer)):
                raise TypeError('coefficients must be integers, got {0!r}'.format(coefficient))
            folded[k % order] += int(coefficient)
        self._order = order
        self._coeffs = _canonicalize(folded, order)

    @classmethod
    def _from_canonical(cls, order: int, coeffs: tuple[int, ...]) -> CycInt:
        obj = object.__new__(cls)
        obj._order = order
        obj._coeffs = coeffs
        return obj

    @classmethod
    def from_int(cls, value: int, order: int = 1) -> CycInt:
        return cls(order, [value])

    @classmethod
    def root(cls, order: int, exponent: int = 1) -> CycInt:
        """Returns zeta_order^exponent"""
        coeffs = [0] * order
        coeffs[exponent % order] = 1
        return cls(order, coeffs)

    @classmethod
    def zero(cls, order: int = 1) -> CycInt:
        return cls(order)

    @classmethod
    def one(cls, order: int = 1) -> CycInt:
        return cls(order, [1])

    @staticmethod
    def coerce(value: Union[CycInt, int]) -> CycInt:
        if isinstance(value, CycInt):
            return value
        if isinstance(value, (int, numpy.integer)) and not isinstance(value, bool):
            return CycInt(1, [int(value)])
        raise TypeError('cannot interpret {0!r} as a cyclotomic integer'.format(value))

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def lift(self, order: int) -> CycInt:
        """Same value, expressed in Z[zeta_order]; order must be a multiple of
        the current order"""
        if order == self._order:
            return self
        return CycInt._from_canonical(order, _canonicalize(_lift(self._coeffs, self._order, order), order))

    def _operands(self, other) -> tuple[list[int], list[int], int]:
        other = CycInt.coerce(other)
        order = math.lcm(self._order, other._order)
        return _lift(self._coeffs, self._order, order), _lift(other._coeffs, other._order, order), order

    def __add__(self, other):
        try:
            a, b, order = self._operands(other)
        except TypeError:
            return NotImplemented
        return CycInt._from_canonical(order, _canonicalize([x + y for x, y in zip(a, b)], order))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            a, b, order = self._operands(other)
        except TypeError:
            return NotImplemented
        return CycInt._from_canonical(order, _canonicalize([x - y for x, y in zip(a, b)], order))

    def __rsub__(self, other):
        try:
            return CycInt.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return CycInt._from_canonical(self._order, tuple(-x for x in self._coeffs))

    def __mul__(self, other):
        try:
            a, b, order = self._operands(other)
        except TypeError:
            return NotImplemented

        # Convolution modulo x^order - 1
        product = [0] * order
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[(i + j) % order] += x * y
        return CycInt._from_canonical(order, _canonicalize(product, order))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('only non-negative integer powers exist in the ring')
        result = CycInt.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def times_root(self, exponent: int, order: int) -> CycInt:
        """Multiplies by zeta_order^exponent without a full convolution"""
        target = math.lcm(self._order, order)
        lifted = _lift(self._coeffs, self._order, target)
        shift = (exponent % order) * (target // order)
        rotated = [0] * target
        for k, coefficient in enumerate(lifted):
            if coefficient:
                rotated[(k + shift) % target] = coefficient
        return CycInt._from_canonical(target, _canonicalize(rotated, target))

    def conj(self) -> CycInt:
        conjugate = [0] * self._order
        for k, coefficient in enumerate(self._coeffs):
            if coefficient:
                conjugate[(-k) % self._order] += coefficient
        return CycInt._from_canonical(self._order, _canonicalize(conjugate, self._order))

    def abs2(self) -> CycInt:
        return self * self.conj()

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def as_int(self):
        """Returns the value as a Python int when it is a rational integer,
        otherwise None"""
        if any(self._coeffs[1:]):
            return None
        return self._coeffs[0]

    def embed_complex(self) -> complex:
        """Floating point value under zeta_m = exp(2 pi i / m); diagnostics
        only"""
        exponents = numpy.arange(self._order)
        roots = numpy.exp(2j * numpy.pi * exponents / self._order)
        return complex(numpy.dot(numpy.array(self._coeffs, dtype=float), roots))

    def __eq__(self, other):
        try:
            a, b, _ = self._operands(other)
        except TypeError:
            return NotImplemented
        # Lifting keeps canonical forms canonical only after reduction
        order = len(a)
        return _canonicalize(a, order) == _canonicalize(b, order)

    def __repr__(self):
        return 'CycInt(order={0:d}, coeffs={1!r})'.format(self._order, self._coeffs)

    def __str__(self):
        terms = []
        for k, coefficient in enumerate(self._coeffs):
            if coefficient == 0:
                continue
            if k == 0:
                terms.append('{0:d}'.format(coefficient))
            elif k == 1:
                terms.append('{0:d}*z'.format(coefficient))
            else:
                terms.append('{0:d}*z^{1:d}'.format(coefficient, k))
        return '{0:s} (z = zeta_{1:d})'.format(' + '.join(terms) if terms else '0', self._order)


def conj(a: CycInt) -> CycInt:
    return a.conj()


def embed_complex(a: CycInt) -> complex:
    return a.embed_complex()


def zeta(order: int, exponent: int = 1) -> CycInt:
    return CycInt.root(order, exponent)
