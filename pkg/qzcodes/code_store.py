from __future__ import annotations

import logging
from typing import Optional

from qzcodes.common import CodeField, Convention
from qzcodes.config import RunConfig
from qzcodes.engine.engine import Engine
from qzcodes.engine.file import FileEngine
from qzcodes.engine.json import JsonEngine
from qzcodes.errors import CodeStoreError
from qzcodes.qcode import ErrorIndex, PuncturedQuantumCode, verify_eigenspace
from qzcodes.utils import as_vector
from qzcodes.zncodes import LinearCodeZn, puncture_last, shorten_last

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

engines = {
    'jsonengine': JsonEngine,
    'fileengine': FileEngine,
}
ENGINE = 'engine'


def code_to_fields(code: PuncturedQuantumCode, description: Optional[str] = None) -> dict:
    """Every field needed to restore `code` without enumerating any space"""
    fields = {
        CodeField.FORMAT_VERSION: FORMAT_VERSION,
        CodeField.MODULUS: code.n,
        CodeField.LENGTH: code.l,
        CodeField.CONVENTION: code.convention.value,
        CodeField.E1: list(code.e1),
        CodeField.C_GENERATORS: [list(g) for g in code.c.generators],
        CodeField.D_GENERATORS: [list(g) for g in code.d.generators],
        CodeField.C_WORDS: code.c.words.tolist(),
        CodeField.D_WORDS: code.d.words.tolist(),
        CodeField.C_PRIME: code.c_prime.words.tolist(),
        CodeField.C_PRIME_0: code.c_prime_0.words.tolist(),
        CodeField.D_PRIME: code.d_prime.words.tolist(),
        CodeField.D_PRIME_0: code.d_prime_0.words.tolist(),
        CodeField.STABILIZER_GENERATORS: [list(g.x) + list(g.y) for g in code.generators],
    }
    if description is not None:
        fields[CodeField.DESCRIPTION] = description
    return fields


def code_from_fields(fields: dict, config: Optional[RunConfig] = None) -> PuncturedQuantumCode:
    missing = CodeField.get_mandatory() - set(fields)
    if missing:
        raise CodeStoreError('stored code lacks the fields {0:s}'.format(
            ', '.join(sorted(field.field_name for field in missing))))
    if fields[CodeField.FORMAT_VERSION] != FORMAT_VERSION:
        raise CodeStoreError('unsupported stored code version {0!r}'.format(fields[CodeField.FORMAT_VERSION]))

    n, l = fields[CodeField.MODULUS], fields[CodeField.LENGTH]
    try:
        c = LinearCodeZn(n, l + 1, fields[CodeField.C_GENERATORS], codewords=fields[CodeField.C_WORDS], config=config)
        d = LinearCodeZn(n, l + 1, fields[CodeField.D_GENERATORS], codewords=fields[CodeField.D_WORDS], config=config)
        convention = Convention.from_identifier(fields[CodeField.CONVENTION])
    except ValueError as error:
        raise CodeStoreError('stored code is malformed: {0!s}'.format(error)) from error

    derived = {
        CodeField.C_PRIME: puncture_last(c),
        CodeField.C_PRIME_0: shorten_last(c),
        CodeField.D_PRIME: puncture_last(d),
        CodeField.D_PRIME_0: shorten_last(d),
    }
    for field, code in derived.items():
        if code.words.tolist() != sorted(fields[field]):
            raise CodeStoreError('stored field \'{0:s}\' does not match C and D'.format(field.field_name))

    generators = []
    for row in fields[CodeField.STABILIZER_GENERATORS]:
        if len(row) != 2 * l:
            raise CodeStoreError('stabilizer generator rows need {0:d} entries'.format(2 * l))
        generators.append(ErrorIndex(row[:l], row[l:]))

    e1 = as_vector(fields[CodeField.E1], n)
    return PuncturedQuantumCode(n, l, c, d, derived[CodeField.C_PRIME], derived[CodeField.C_PRIME_0],
                                derived[CodeField.D_PRIME], derived[CodeField.D_PRIME_0],
                                e1, e1[:-1], convention, tuple(generators))


class CodeStore:
    """A built quantum code cached on disk, so the steps of a study can run
    in separate invocations.

    Storing requires knowledge on the format which is resolved through the
    usage of storage engines (:py:obj:`Engine`), :py:obj:`JsonEngine` by
    default.
    """

    def __init__(self, path, mode='r', **options):
        self.engine = None

        engine = options.get(ENGINE, JsonEngine)
        if ENGINE in options:
            del options[ENGINE]

        # We also support engine to be passed as string
        if isinstance(engine, str):
            engine_name = engine.lower()
            if not engine_name.endswith(ENGINE):
                engine_name += ENGINE
            if engine_name not in engines:
                raise ValueError('The storage engine \'{0:s}\' does not exist'.format(engine_name))
            engine = engines[engine_name]

        if not isinstance(engine, type) or not issubclass(engine, Engine):
            raise TypeError('The storage engine has to be of type \'Engine\'')

        self.config = options.pop('config', None)
        self.engine = engine(path, mode, **options)

    def __del__(self):
        self.close()

    def __enter__(self):
        if self.engine.is_closed():
            raise ValueError('I/O operation on closed code store')
        return self

    def __exit__(self, *args):
        self.close()

    def __repr__(self):
        if self.engine is None or self.engine.is_closed():
            return '<CodeStore, closed>'
        return '<CodeStore ({0:d} fields)>'.format(len(self.engine.fields))

    def _check_open(self):
        if self.engine.is_closed():
            raise ValueError('I/O operation on closed code store')

    def is_closed(self):
        return self.engine.is_closed()

    def is_read_only(self):
        return self.engine.is_read_only()

    def close(self):
        if self.engine is not None:
            self.engine.close()

    def fields(self) -> dict:
        self._check_open()
        return dict(self.engine.fields)

    def save(self, code: PuncturedQuantumCode, description: Optional[str] = None) -> None:
        self._check_open()
        if self.engine.is_read_only():
            raise TypeError('Cannot modify code store, it is (opened) read-only')
        self.engine.update_fields(code_to_fields(code, description))
        logger.info('stored code n=%d l=%d', code.n, code.l)

    def load(self, verify: bool = False) -> PuncturedQuantumCode:
        """Restores the stored code; `verify` re-runs the eigenspace check"""
        self._check_open()
        code = code_from_fields(self.engine.fields, self.config)
        if verify and not verify_eigenspace(code).passed:
            raise CodeStoreError('stored code fails the eigenspace check')
        return code


def code_open(path, mode='r', **options) -> CodeStore:
    """Reads, modifies or creates a :py:obj:`CodeStore` with a specific storage
    engine (defaults to :py:obj:`JsonEngine`).

    :param path: path to the file or directory
    :param mode: mode how to open the store (same as the default Python
        :py:obj:`open`)
    :param options: zero or more options passed down to the storage engine.
        The storage engine can be selected with :code:`engine = 'FileEngine'`.
    :returns: instance of a new or initialized :py:obj:`CodeStore`
    """
    return CodeStore(path, mode, **options)
