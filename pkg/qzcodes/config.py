"""Run configuration: size guards, decoder strictness, output format and the
slow-test opt-in. Every field can be overridden from the environment."""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from qzcodes.common import OutputFormat


def _env_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off', ''):
        return False
    raise ValueError('not a boolean flag: \'{0:s}\''.format(value))


@dataclass(frozen=True)
class RunConfig:
    """Immutable run configuration.

    +----------------+----------------------+-----------------------------------+
    | Field          | Environment variable | Meaning                           |
    +================+======================+===================================+
    | ambient_cap    | QZCODES_AMBIENT_CAP  | max size of enumerated spaces     |
    +----------------+----------------------+-----------------------------------+
    | dense_dim_cap  | QZCODES_DENSE_CAP    | max dimension of dense matrices   |
    +----------------+----------------------+-----------------------------------+
    | scan_cap       | QZCODES_SCAN_CAP     | max error indices per weight scan |
    +----------------+----------------------+-----------------------------------+
    | kl_table_cap   | QZCODES_KL_TABLE_CAP | max pairs for per-pair KL tables  |
    +----------------+----------------------+-----------------------------------+
    | strict_decoder | QZCODES_STRICT       | leave unreachable syndromes empty |
    +----------------+----------------------+-----------------------------------+
    | output_format  | QZCODES_FORMAT       | json or text                      |
    +----------------+----------------------+-----------------------------------+
    | slow           | QZCODES_SLOW         | enable slow-tier checks and tests |
    +----------------+----------------------+-----------------------------------+
    """

    ambient_cap: int = 2 ** 24
    dense_dim_cap: int = 256
    scan_cap: int = 2 ** 22
    kl_table_cap: int = 250_000
    strict_decoder: bool = False
    output_format: OutputFormat = OutputFormat.JSON
    slow: bool = False

    ENVIRONMENT = {
        'ambient_cap': ('QZCODES_AMBIENT_CAP', int),
        'dense_dim_cap': ('QZCODES_DENSE_CAP', int),
        'scan_cap': ('QZCODES_SCAN_CAP', int),
        'kl_table_cap': ('QZCODES_KL_TABLE_CAP', int),
        'strict_decoder': ('QZCODES_STRICT', _env_bool),
        'output_format': ('QZCODES_FORMAT', OutputFormat.from_identifier),
        'slow': ('QZCODES_SLOW', _env_bool),
    }

    def __post_init__(self):
        for name in ('ambient_cap', 'dense_dim_cap', 'scan_cap', 'kl_table_cap'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ValueError('{0:s} must be a positive integer, got {1!r}'.format(name, value))
        if not isinstance(self.output_format, OutputFormat):
            raise TypeError('output_format must be an OutputFormat')

    @classmethod
    def from_env(cls, environ=None) -> RunConfig:
        environ = os.environ if environ is None else environ
        values = {}
        for field, (variable, parse) in cls.ENVIRONMENT.items():
            if variable in environ:
                try:
                    values[field] = parse(environ[variable])
                except ValueError as error:
                    raise ValueError('invalid value for {0:s}: {1!s}'.format(variable, error)) from error
        return cls(**values)

    def replace(self, **changes) -> RunConfig:
        """Returns a copy with the given fields replaced, ignoring `None`
        values so unset command line flags keep their configured value"""
        return dataclasses.replace(self, **{key: value for key, value in changes.items() if value is not None})


def resolve(config: RunConfig | None) -> RunConfig:
    return RunConfig.from_env() if config is None else config
