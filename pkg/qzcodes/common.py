from enum import Enum


class ShiftClockLabeling(Enum):
    """Selects how the shift/clock basis is labeled by pairs (i, j).

    +--------+-------------------------------------------------------------+
    | Mode   | Description                                                 |
    +========+=============================================================+
    | SHIFT  | E(i, j) = D^i X^j with X|z> = |z+1>. Matches the operator   |
    |        | convention E(x, y): |z> -> w^(x.z) |z+y> of the codes.      |
    +--------+-------------------------------------------------------------+
    | CYCLIC | E(i, j) = D^i C^j with C|z> = |z-1>, the cyclic permutation |
    |        | with (C)_ab = 1 iff b = a + 1. Its multiplication table is  |
    |        | E(i,j) E(k,l) = w^(jk) E(i+k, j+l).                          |
    +--------+-------------------------------------------------------------+
    """

    SHIFT = ('shift', 1)
    CYCLIC = ('cyclic', -1)

    def __new__(cls, identifier, direction):
        obj = object.__new__(cls)
        obj._value_ = identifier
        obj.direction = direction
        return obj


class Convention(Enum):
    """Assignment of the stabilizer generator indices of a punctured code.

    LITERAL places phase parts in C'_0 and shift parts in D'_0, SWAPPED places
    phase parts in D'_0 and shift parts in C'_0. AUTO tries LITERAL first.
    """

    LITERAL = 'literal'
    SWAPPED = 'swapped'
    AUTO = 'auto'

    @staticmethod
    def from_identifier(identifier):
        if isinstance(identifier, Convention):
            return identifier
        for val in Convention:
            if identifier.lower() in (val.value, val.name.lower()):
                return val
        raise ValueError('{0!s} is not a code convention'.format(identifier))


class GateKind(Enum):
    # Enumeration Identifier   Blocks  Description
    INCREMENT = ('increment',  1,      'logical shift |i> -> |i+1>')
    PHASE     = ('phase',      1,      'logical clock |i> -> w^i |i>')
    FOURIER   = ('fourier',    1,      'logical Fourier transform, projectively')
    CADD      = ('cadd',       2,      'logical controlled add |i>|j> -> |i>|i+j>')
    CUSTOM    = ('custom',     1,      'user supplied site operators')

    def __new__(cls, identifier, blocks, description):
        obj = object.__new__(cls)
        obj._value_ = identifier
        obj.blocks = blocks
        obj.description = description
        return obj

    @staticmethod
    def from_identifier(identifier):
        for val in GateKind:
            if identifier.lower() in (val.value, val.name.lower()):
                return val
        raise ValueError('{0!s} is not a transversal gate'.format(identifier))


class ReadoutBasis(Enum):
    COMPUTATIONAL = 'computational'
    FOURIER = 'fourier'


class OutputFormat(Enum):
    JSON = 'json'
    TEXT = 'text'

    @staticmethod
    def from_identifier(identifier):
        for val in OutputFormat:
            if identifier.strip().lower() == val.value:
                return val
        raise ValueError('{0!s} is not an output format'.format(identifier))


class CodeField(Enum):
    """All fields of a cached punctured code. Engines store every mandatory
    field; optional fields are written when present. Word lists are lists of
    integer lists, scalars are plain Python values."""
    # Enumeration           Tag   Name                   Mandatory Python type Is list Description
    FORMAT_VERSION        = (0x01, 'format_version',     True,     int,        False,  'Version of the cache layout')
    MODULUS               = (0x02, 'n',                  True,     int,        False,  'Alphabet size n of Z_n')
    LENGTH                = (0x03, 'l',                  True,     int,        False,  'Number of sites of the quantum code')
    CONVENTION            = (0x04, 'convention',         True,     str,        False,  'Stabilizer generator assignment that verified')
    E1                    = (0x05, 'e1',                 True,     list,       False,  'Word of C with last coordinate 1')
    C_GENERATORS          = (0x10, 'c_generators',       True,     list,       True,   'Generators of the classical code C')
    D_GENERATORS          = (0x11, 'd_generators',       True,     list,       True,   'Generators of the classical code D')
    C_WORDS               = (0x12, 'c_words',            True,     list,       True,   'Codewords of C')
    D_WORDS               = (0x13, 'd_words',            True,     list,       True,   'Codewords of D')
    C_PRIME               = (0x14, 'c_prime',            True,     list,       True,   'Codewords of C punctured at the last coordinate')
    C_PRIME_0             = (0x15, 'c_prime_0',          True,     list,       True,   'Codewords of C shortened at the last coordinate')
    D_PRIME               = (0x16, 'd_prime',            True,     list,       True,   'Codewords of D punctured at the last coordinate')
    D_PRIME_0             = (0x17, 'd_prime_0',          True,     list,       True,   'Codewords of D shortened at the last coordinate')
    STABILIZER_GENERATORS = (0x20, 'stabilizer_generators', True,  list,       True,   'Generator indices as [x..., y...] rows')
    DESCRIPTION           = (0x30, 'description',        False,    str,        False,  'Free form description')

    def __new__(cls, tag, field_name, is_mandatory, type, is_list, description):
        obj = object.__new__(cls)
        obj._value_ = tag
        obj.field_name = field_name
        obj.is_mandatory = is_mandatory
        obj.type = type
        obj.is_list = is_list
        obj.description = description
        return obj

    @classmethod
    def has_value(cls, tag):
        return any(tag == item.value for item in cls)

    @classmethod
    def get_mandatory(cls):
        return set([field for field in cls if field.is_mandatory])

    @classmethod
    def from_field_name(cls, name):
        for field in cls:
            if field.field_name == name:
                return field
        raise ValueError('\'{0:s}\' is not a code field'.format(name))
