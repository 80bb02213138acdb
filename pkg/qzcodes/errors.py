"""Exceptions raised by :py:mod:`qzcodes`.

Every error derives from :py:class:`QzCodesError` and from the builtin type
that matches its meaning, so callers can catch either one.
"""


class QzCodesError(Exception):
    """Base class of all package errors"""


class DimensionMismatch(QzCodesError, ValueError):
    def __init__(self, expected, actual, what='dimension'):
        super().__init__('{0:s} mismatch: expected {1!r}, got {2!r}'.format(what, expected, actual))
        self.expected = expected
        self.actual = actual


class SizeGuardExceeded(QzCodesError, ValueError):
    """An enumeration would exceed one of the configured size guards"""

    def __init__(self, guard, size, cap):
        super().__init__('size guard \'{0:s}\' exceeded: {1:d} > {2:d}'.format(guard, size, cap))
        self.guard = guard
        self.size = size
        self.cap = cap


class NotNice(QzCodesError, ValueError):
    def __init__(self, i, j):
        super().__init__('product of basis elements {0:d} and {1:d} is not proportional to a basis element'.format(i, j))
        self.i = i
        self.j = j


class NonAbelianIndexGroup(QzCodesError, ValueError):
    pass


class NoUnitLastCoordinate(QzCodesError, LookupError):
    pass


class DualityChainError(QzCodesError, ValueError):
    def __init__(self, check, message=None):
        super().__init__('duality chain check \'{0:s}\' failed{1:s}'.format(check, '' if message is None else ': ' + message))
        self.check = check


class ConstructionError(QzCodesError, ValueError):
    """A precondition or verification of code construction failed; `check`
    names it"""

    def __init__(self, check, message=None):
        super().__init__('check \'{0:s}\' failed{1:s}'.format(check, '' if message is None else ': ' + message))
        self.check = check


class SyndromeCollision(QzCodesError, ValueError):
    def __init__(self, first, second, syndrome):
        super().__init__('errors {0!s} and {1!s} share syndrome {2!r}'.format(first, second, syndrome))
        self.first = first
        self.second = second
        self.syndrome = syndrome


class DecoderMiss(QzCodesError, LookupError):
    def __init__(self, syndrome):
        super().__init__('no correction for syndrome {0!r}'.format(syndrome))
        self.syndrome = syndrome


class NotSelfDual(QzCodesError, ValueError):
    pass


class ImageOutsideCode(QzCodesError, ValueError):
    def __init__(self, logical, witness):
        super().__init__('image of logical state {0!r} leaves the code space (residual amplitude at {1!r})'.format(logical, witness))
        self.logical = logical
        self.witness = witness


class NoPhaseVector(QzCodesError, LookupError):
    pass


class GeneratorFileError(QzCodesError, ValueError):
    def __init__(self, line, message, path=None):
        where = 'line {0:d}'.format(line) if path is None else '{0:s}:{1:d}'.format(str(path), line)
        super().__init__('{0:s}: {1:s}'.format(where, message))
        self.line = line
        self.path = path


class CodeStoreError(QzCodesError, IOError):
    pass
