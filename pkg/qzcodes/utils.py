"""Small helpers on integer vectors over Z_n and on basis-index encodings."""

from __future__ import annotations

import math
from typing import Sequence

Vector = tuple[int, ...]


def as_vector(values: Sequence[int], n: int | None = None) -> Vector:
    """Converts any integer sequence (including numpy rows) into a tuple of
    Python ints, optionally reduced modulo n"""
    if n is None:
        return tuple(int(value) for value in values)
    return tuple(int(value) % n for value in values)


def check_entries(vector: Sequence[int], n: int) -> None:
    for value in vector:
        if not 0 <= value < n:
            raise ValueError('entry {0!r} outside [0, {1:d})'.format(value, n))


def dot(u: Sequence[int], v: Sequence[int], n: int) -> int:
    if len(u) != len(v):
        raise ValueError('vectors of unequal length {0:d} and {1:d}'.format(len(u), len(v)))
    return sum(a * b for a, b in zip(u, v)) % n


def add(u: Sequence[int], v: Sequence[int], n: int) -> Vector:
    if len(u) != len(v):
        raise ValueError('vectors of unequal length {0:d} and {1:d}'.format(len(u), len(v)))
    return tuple((a + b) % n for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int], n: int) -> Vector:
    return add(u, neg(v, n), n)


def neg(u: Sequence[int], n: int) -> Vector:
    return tuple((-a) % n for a in u)


def scale(k: int, u: Sequence[int], n: int) -> Vector:
    return tuple((k * a) % n for a in u)


def weight(u: Sequence[int]) -> int:
    return sum(1 for a in u if a != 0)


def encode_index(vector: Sequence[int], radices: Sequence[int]) -> int:
    """Big-endian mixed radix: site 0 is the most significant digit"""
    if len(vector) != len(radices):
        raise ValueError('index vector has {0:d} sites, expected {1:d}'.format(len(vector), len(radices)))
    index = 0
    for digit, radix in zip(vector, radices):
        if not 0 <= digit < radix:
            raise ValueError('digit {0!r} outside [0, {1:d})'.format(digit, radix))
        index = index * radix + digit
    return index


def decode_index(index: int, radices: Sequence[int]) -> Vector:
    total = math.prod(radices)
    if not 0 <= index < total:
        raise ValueError('index {0:d} outside [0, {1:d})'.format(index, total))
    digits = []
    for radix in reversed(radices):
        index, digit = divmod(index, radix)
        digits.append(digit)
    return tuple(reversed(digits))
