"""Reads and writes the generator matrix text format.

The first line holds `n L k`; the next k lines each hold L space separated
integers in [0, n). Blank lines and lines starting with `#` are skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from qzcodes.config import RunConfig
from qzcodes.errors import GeneratorFileError
from qzcodes.zncodes import LinearCodeZn


def _integers(text: str, line: int, path) -> list[int]:
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise GeneratorFileError(line, 'expected integers, got \'{0:s}\''.format(text.strip()), path) from None


def parse_generator_text(text: str, path: Optional[str] = None, config: Optional[RunConfig] = None) -> LinearCodeZn:
    lines = [(number, content) for number, content in enumerate(text.splitlines(), start=1)
             if content.strip() and not content.lstrip().startswith('#')]
    if not lines:
        raise GeneratorFileError(1, 'missing header line \'n L k\'', path)

    number, header = lines[0]
    values = _integers(header, number, path)
    if len(values) != 3:
        raise GeneratorFileError(number, 'header must be \'n L k\', got {0:d} values'.format(len(values)), path)
    n, length, k = values
    if n < 2:
        raise GeneratorFileError(number, 'n must be at least 2, got {0:d}'.format(n), path)
    if length < 1 or k < 0:
        raise GeneratorFileError(number, 'L must be positive and k non-negative', path)

    rows = lines[1:]
    if len(rows) != k:
        last = rows[-1][0] if rows else number
        raise GeneratorFileError(last, 'expected {0:d} generator rows, found {1:d}'.format(k, len(rows)), path)

    generators = []
    for number, content in rows:
        row = _integers(content, number, path)
        if len(row) != length:
            raise GeneratorFileError(number, 'expected {0:d} entries, found {1:d}'.format(length, len(row)), path)
        for entry in row:
            if not 0 <= entry < n:
                raise GeneratorFileError(number, 'entry {0:d} outside [0, {1:d})'.format(entry, n), path)
        generators.append(tuple(row))
    return LinearCodeZn(n, length, generators, config=config)


def read_generator_file(path: Union[str, Path], config: Optional[RunConfig] = None) -> LinearCodeZn:
    path = Path(path)
    with path.open('r', encoding='utf-8') as f:
        return parse_generator_text(f.read(), str(path), config)


def format_generator_text(code: LinearCodeZn) -> str:
    lines = ['{0:d} {1:d} {2:d}'.format(code.modulus, code.length, len(code.generators))]
    lines.extend(' '.join(str(entry) for entry in row) for row in code.generators)
    return '\n'.join(lines) + '\n'


def write_generator_file(path: Union[str, Path], code: LinearCodeZn) -> None:
    with Path(path).open('w', encoding='utf-8') as f:
        f.write(format_generator_text(code))
