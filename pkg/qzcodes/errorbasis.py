"""Unitary error bases: construction, verification and operator expansion.

An error basis on an n-dimensional system is a family of n^2 unitaries E_k
with E_0 = I and tr(E_i^dagger E_j) = n delta_ij. A basis is nice when every
product E_i E_j is a root-of-unity multiple w_ij E_(i*j) of a basis element;
the indices then form a group under *.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Optional, Sequence

from qzcodes.common import ShiftClockLabeling
from qzcodes.config import RunConfig, resolve
from qzcodes.cyclotomic import CycInt
from qzcodes.errors import DimensionMismatch, NonAbelianIndexGroup, NotNice
from qzcodes.exactmat import DenseMatrix, MonomialMatrix, Operator, to_dense
from qzcodes.report import Check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErrorBasis:
    dim: int
    elements: tuple
    labels: tuple
    name: str = ''

    def __post_init__(self):
        if len(self.elements) != self.dim ** 2:
            raise DimensionMismatch(self.dim ** 2, len(self.elements), 'number of basis elements')
        if len(self.labels) != len(self.elements):
            raise DimensionMismatch(len(self.elements), len(self.labels), 'number of labels')
        for element in self.elements:
            if element.dim != self.dim:
                raise DimensionMismatch(self.dim, element.dim)
        if self.elements[0] != MonomialMatrix.identity(self.dim):
            raise ValueError('the first basis element must be the identity')

    @property
    def is_monomial(self) -> bool:
        return all(isinstance(element, MonomialMatrix) for element in self.elements)

    def index_of(self, label: Hashable) -> int:
        return self.labels.index(label)

    def __len__(self):
        return len(self.elements)


def build_shift_clock(n: int, labeling: ShiftClockLabeling = ShiftClockLabeling.SHIFT) -> ErrorBasis:
    """The n^2 operators D^i X^j (or D^i C^j under the cyclic labeling),
    labeled (i, j) and listed with i as the major index"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError('the shift/clock basis needs n >= 2, got {0!r}'.format(n))
    elements = []
    labels = []
    for i in range(n):
        for j in range(n):
            elements.append(MonomialMatrix.clock(n, i).compose(MonomialMatrix.shift(n, labeling.direction * j)))
            labels.append((i, j))
    return ErrorBasis(n, tuple(elements), tuple(labels), 'shift-clock({0:d}, {1:s})'.format(n, labeling.value))


def tensor_basis(a: ErrorBasis, b: ErrorBasis, config: Optional[RunConfig] = None) -> ErrorBasis:
    config = resolve(config)
    elements = []
    labels = []
    for ea, la in zip(a.elements, a.labels):
        for eb, lb in zip(b.elements, b.labels):
            if isinstance(ea, MonomialMatrix) and isinstance(eb, MonomialMatrix):
                elements.append(ea.tensor(eb))
            else:
                elements.append(_dense_tensor(to_dense(ea, config), to_dense(eb, config), config))
            labels.append((la, lb))
    return ErrorBasis(a.dim * b.dim, tuple(elements), tuple(labels), '{0:s} x {1:s}'.format(a.name, b.name))


def _dense_tensor(a: DenseMatrix, b: DenseMatrix, config: RunConfig) -> DenseMatrix:
    nb = b.dim
    rows = []
    for ia in range(a.dim):
        for ib in range(nb):
            rows.append([a[ia, ja] * b[ib, jb] for ja in range(a.dim) for jb in range(nb)])
    return DenseMatrix(rows, config)


def _adjoint(op: Operator) -> Operator:
    return op.adjoint()


def _product(a: Operator, b: Operator) -> Operator:
    return a @ b


def _trace(op: Operator) -> CycInt:
    return op.trace()


def verify_orthonormal(b: ErrorBasis) -> Check:
    """Checks tr(E_i^dagger E_j) = n delta_ij on all ordered pairs"""
    violations = []
    adjoints = [_adjoint(e) for e in b.elements]
    for i, ei in enumerate(adjoints):
        for j, ej in enumerate(b.elements):
            value = _trace(_product(ei, ej))
            expected = b.dim if i == j else 0
            if value != expected:
                violations.append((i, j, value))
    return Check('orthonormal', not violations, violations[0] if violations else None,
                 {'pairs': len(b) ** 2, 'violations': len(violations)})


@dataclass(frozen=True)
class StructureConstants:
    """E_i E_j = w[i][j] E_(star[i][j])"""

    basis: ErrorBasis
    w: tuple
    star: tuple

    @property
    def size(self) -> int:
        return len(self.star)

    def is_abelian(self) -> bool:
        return all(self.star[i][j] == self.star[j][i] for i in range(self.size) for j in range(i))


def _projective_key(op: MonomialMatrix) -> tuple:
    shift = op.phases[0]
    return op.perm, tuple((p - shift) % op.order for p in op.phases)


def _ring_quotient(num: CycInt, den: CycInt) -> Optional[CycInt]:
    # num / den when den has a rational integer norm dividing num * conj(den)
    norm = den.abs2().as_int()
    if not norm:
        return None
    scaled = num * den.conj()
    if any(c % norm for c in scaled.coeffs):
        return None
    return CycInt(scaled.order, [c // norm for c in scaled.coeffs])


def verify_nice(b: ErrorBasis, config: Optional[RunConfig] = None) -> StructureConstants:
    """Computes w and * for every ordered pair, raising :py:class:`NotNice`
    when a product leaves the projective basis"""
    size = len(b)
    w = [[None] * size for _ in range(size)]
    star = [[None] * size for _ in range(size)]

    if b.is_monomial:
        order = math.lcm(*(e.order for e in b.elements))
        lifted = [e.lift(order) for e in b.elements]
        lookup = {}
        for k, element in enumerate(lifted):
            key = _projective_key(element)
            if key in lookup:
                raise ValueError('basis elements {0:d} and {1:d} are proportional'.format(lookup[key], k))
            lookup[key] = k
        for i, ei in enumerate(lifted):
            for j, ej in enumerate(lifted):
                p = ei.compose(ej)
                k = lookup.get(_projective_key(p))
                if k is None:
                    raise NotNice(i, j)
                star[i][j] = k
                w[i][j] = CycInt.root(order, p.phases[0] - lifted[k].phases[0])
    else:
        config = resolve(config)
        dense = [to_dense(e, config) for e in b.elements]
        for i, ei in enumerate(dense):
            for j, ej in enumerate(dense):
                p = ei @ ej
                for k, ek in enumerate(dense):
                    ratio = p.proportional_to(ek)
                    if ratio is not None:
                        value = _ring_quotient(ratio.num, ratio.den)
                        if value is None:
                            raise ValueError('structure constant of ({0:d}, {1:d}) is outside the ring'.format(i, j))
                        star[i][j] = k
                        w[i][j] = value
                        break
                else:
                    raise NotNice(i, j)

    logger.debug('structure constants computed for %s', b.name or 'basis')
    return StructureConstants(b, tuple(tuple(row) for row in w), tuple(tuple(row) for row in star))


@dataclass
class IndexGroup:
    """Cayley table of the index group together with the axiom checks"""

    table: tuple
    checks: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def valid(self) -> bool:
        return all(check.passed for check in self.checks if check.name != 'abelian')

    @property
    def abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(i))


def index_group(sc: StructureConstants) -> IndexGroup:
    table = sc.star
    size = len(table)
    elements = range(size)
    group = IndexGroup(table)

    identity_witness = next(((0, j) for j in elements if table[0][j] != j or table[j][0] != j), None)
    group.checks.append(Check('identity at index 0', identity_witness is None, identity_witness))

    inverse_witness = next((i for i in elements if not any(table[i][j] == 0 and table[j][i] == 0 for j in elements)), None)
    group.checks.append(Check('inverses', inverse_witness is None, inverse_witness))

    associativity_witness = None
    for i, j, k in product(elements, repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            associativity_witness = (i, j, k)
            break
    group.checks.append(Check('associativity', associativity_witness is None, associativity_witness))

    modulus_witness = None
    for i, j in product(elements, repeat=2):
        if sc.w[i][j].abs2() != 1:
            modulus_witness = (i, j)
            break
    group.checks.append(Check('|w| = 1', modulus_witness is None, modulus_witness))
    group.checks.append(Check('abelian', group.abelian, None, group.abelian))
    logger.info('index group of order %d, abelian=%s', size, group.abelian)
    return group


def _det_is_one(op: Operator, config: RunConfig) -> bool:
    return op.det() == 1 if isinstance(op, MonomialMatrix) else _dense_det(to_dense(op, config)) == 1


def _dense_det(a: DenseMatrix) -> CycInt:
    # Laplace expansion along the first row; only used for small dimensions
    n = a.dim
    if n == 1:
        return a[0, 0]
    total = CycInt.zero()
    for j in range(n):
        if a[0, j].is_zero():
            continue
        minor = DenseMatrix._trusted([[a[r, c] for c in range(n) if c != j] for r in range(1, n)])
        term = a[0, j] * _dense_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def verify_very_nice(b: ErrorBasis, sc: StructureConstants, config: Optional[RunConfig] = None) -> Check:
    """Checks det(E_i) = 1 for every element and w^n = 1 for every pair"""
    config = resolve(config)
    det_failures = [i for i, element in enumerate(b.elements) if not _det_is_one(element, config)]
    root_failures = [(i, j) for i in range(len(b)) for j in range(len(b)) if sc.w[i][j] ** b.dim != 1]
    witness = None
    if det_failures:
        witness = {'det != 1': det_failures[0]}
    elif root_failures:
        witness = {'w^n != 1': root_failures[0]}
    return Check('very nice', not det_failures and not root_failures, witness,
                 {'det_failures': len(det_failures), 'root_failures': len(root_failures)})


def normalize_det(b: ErrorBasis) -> ErrorBasis:
    """Multiplies every monomial element by an exact n-th root of its inverse
    determinant, lifting the phase order where needed"""
    if not b.is_monomial:
        raise TypeError('determinant normalization needs monomial basis elements')
    elements = []
    for element in b.elements:
        exponent, order = element.det_exponent()
        # (zeta_(order n)^k)^n = zeta_order^k, so k = -exponent mod order
        elements.append(element.times_phase((-exponent) % order, order * b.dim).reduced())
    return ErrorBasis(b.dim, tuple(elements), b.labels, (b.name + ' det-normalized').strip())


# Egner's four-dimensional example, rows written out; entries are powers of i
_I4 = 4
EGNER_A = MonomialMatrix.from_entries(_I4, [
    [0, None, None, None],
    [None, 2, None, None],
    [None, None, 0, None],
    [None, None, None, 2],
])
EGNER_B = MonomialMatrix.from_entries(_I4, [
    [None, 3, None, None],
    [0, None, None, None],
    [None, None, None, 1],
    [None, None, 0, None],
])
EGNER_C = MonomialMatrix.from_entries(_I4, [
    [None, None, 0, None],
    [None, None, None, 1],
    [0, None, None, None],
    [None, 3, None, None],
])


def close_group(generators: Sequence[MonomialMatrix], limit: int = 1 << 16) -> list[MonomialMatrix]:
    """All products of the generators, deduplicated by canonical form"""
    identity = MonomialMatrix.identity(generators[0].dim)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in generators:
            image = g.compose(h)
            if image not in seen:
                seen.add(image)
                queue.append(image)
                if len(seen) > limit:
                    raise ValueError('group closure exceeds {0:d} elements'.format(limit))
    return list(seen)


def _encoding(op: MonomialMatrix, order: int) -> tuple:
    return op.perm, op.lift(order).phases


@dataclass
class EgnerReport:
    basis: ErrorBasis
    group_order: int
    center: list
    checks: list = field(default_factory=list)
    isomorphism: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def build_egner() -> EgnerReport:
    a, b, c = EGNER_A, EGNER_B, EGNER_C
    identity = MonomialMatrix.identity(4)
    minus_identity = identity.times_phase(2, 4)
    group = close_group([a, b, c])
    order = math.lcm(*(g.order for g in group))

    checks = [
        Check('|G| = 32', len(group) == 32, None, len(group)),
        Check('A^2 = I', a @ a == identity),
        Check('C^2 = I', c @ c == identity),
        Check('AB = -BA', a @ b == (b @ a).times_phase(2, 4)),
        Check('AC = CA', a @ c == c @ a),
        Check('BC = CB^-1', b @ c == c @ b.adjoint()),
        Check('B^4 = -I', b.power(4) == minus_identity),
    ]

    center = sorted((g for g in group if all(g @ h == h @ g for h in (a, b, c))), key=lambda g: _encoding(g, order))
    checks.append(Check('center = {I, -I}', set(center) == {identity, minus_identity}, None, len(center)))

    cosets = {}
    for g in group:
        coset = frozenset(g @ z for z in center)
        rep = min(coset, key=lambda m: _encoding(m, order))
        cosets[coset] = rep
    representatives = sorted(cosets.values(), key=lambda m: _encoding(m, order))
    checks.append(Check('16 coset representatives', len(representatives) == 16, None, len(representatives)))

    basis = ErrorBasis(4, tuple(representatives), tuple(range(len(representatives))), 'egner')
    report = EgnerReport(basis, len(group), center, checks)

    checks.append(verify_orthonormal(basis))
    sc = verify_nice(basis)
    group_table = index_group(sc)
    checks.extend(c for c in group_table.checks if c.name != 'abelian')
    checks.append(Check('index group nonabelian', not group_table.abelian))

    reference = z2_times_d4()
    invariants_a = group_invariants(group_table.table)
    invariants_b = group_invariants(reference)
    checks.append(Check('Z_2 x D_4 invariants', invariants_a == invariants_b, None, invariants_a))
    report.isomorphism = find_isomorphism(reference, Z2_D4_GENERATORS, group_table.table)
    checks.append(Check('Z_2 x D_4 isomorphism', report.isomorphism is not None, None,
                        None if report.isomorphism is None else [report.isomorphism[g] for g in range(16)]))
    logger.info('Egner group: order %d, center %d, %d representatives', len(group), len(center), len(representatives))
    return report


def _d4_index(a: int, r: int, s: int) -> int:
    return a * 8 + r * 2 + s


Z2_D4_GENERATORS = (_d4_index(1, 0, 0), _d4_index(0, 1, 0), _d4_index(0, 0, 1))


def z2_times_d4() -> tuple:
    """Cayley table of Z_2 x D_4 with elements z^a r^r s^s indexed
    a*8 + r*2 + s"""
    table = [[0] * 16 for _ in range(16)]
    for a1, r1, s1, a2, r2, s2 in product(range(2), range(4), range(2), range(2), range(4), range(2)):
        r = (r1 + (r2 if s1 == 0 else -r2)) % 4
        table[_d4_index(a1, r1, s1)][_d4_index(a2, r2, s2)] = _d4_index((a1 + a2) % 2, r, (s1 + s2) % 2)
    return tuple(tuple(row) for row in table)


def _element_order(table, g: int) -> int:
    order, power = 1, g
    while power != 0:
        power = table[power][g]
        order += 1
    return order


def _closure(table, generators) -> set:
    elements = {0}
    frontier = [0]
    while frontier:
        g = frontier.pop()
        for h in generators:
            image = table[g][h]
            if image not in elements:
                elements.add(image)
                frontier.append(image)
    return elements


def group_invariants(table) -> dict:
    """Order profile, center size and abelianization order"""
    size = len(table)
    orders = sorted(_element_order(table, g) for g in range(size))
    center = [g for g in range(size) if all(table[g][h] == table[h][g] for h in range(size))]
    inverse = [next(h for h in range(size) if table[g][h] == 0) for g in range(size)]
    commutators = {table[table[g][h]][table[inverse[g]][inverse[h]]] for g in range(size) for h in range(size)}
    derived = _closure(table, commutators)
    return {'order_profile': orders, 'center': len(center), 'abelianization': size // len(derived)}


def find_isomorphism(source, generators: Sequence[int], target) -> Optional[dict]:
    """Searches images of the source generators in the target group that
    extend to a bijective homomorphism; returns the element map or None"""
    size = len(source)
    if len(target) != size:
        return None
    orders = [_element_order(target, g) for g in range(size)]
    candidates = [[h for h in range(size) if orders[h] == _element_order(source, g)] for g in generators]
    for images in product(*candidates):
        mapping = {0: 0}
        queue = deque([0])
        consistent = True
        while queue and consistent:
            g = queue.popleft()
            for generator, image in zip(generators, images):
                successor = source[g][generator]
                value = target[mapping[g]][image]
                if successor in mapping:
                    if mapping[successor] != value:
                        consistent = False
                        break
                else:
                    mapping[successor] = value
                    queue.append(successor)
        if consistent and len(mapping) == size and len(set(mapping.values())) == size:
            return mapping
    return None


@dataclass(frozen=True)
class Coefficient:
    """Expansion coefficient trace / scale, kept as a pair"""

    trace: CycInt
    scale: int


def expand_operator(a: Operator, b: ErrorBasis, config: Optional[RunConfig] = None) -> list[Coefficient]:
    """Coefficients c_k of a = sum_k c_k E_k as pairs (tr(E_k^dagger a), n)"""
    if a.dim != b.dim:
        raise DimensionMismatch(b.dim, a.dim)
    config = resolve(config)
    dense = to_dense(a, config)
    return [Coefficient((to_dense(e, config).adjoint() @ dense).trace(), b.dim) for e in b.elements]


def reconstruct(coefficients: Sequence[Coefficient], b: ErrorBasis, config: Optional[RunConfig] = None) -> DenseMatrix:
    """Returns sum_k tr_k E_k, which equals n times the expanded operator"""
    if len(coefficients) != len(b):
        raise DimensionMismatch(len(b), len(coefficients), 'number of coefficients')
    config = resolve(config)
    total = DenseMatrix.zeros(b.dim, config)
    for coefficient, element in zip(coefficients, b.elements):
        if not coefficient.trace.is_zero():
            total = total + to_dense(element, config).scaled(coefficient.trace)
    return total


def verify_expansion(a: Operator, b: ErrorBasis, config: Optional[RunConfig] = None) -> Check:
    config = resolve(config)
    coefficients = expand_operator(a, b, config)
    dense = to_dense(a, config)
    reconstructed = reconstruct(coefficients, b, config) == dense.scaled(b.dim)
    norm = sum((c.trace.abs2() for c in coefficients), CycInt.zero())
    normalized = norm == (dense.adjoint() @ dense).trace() * b.dim
    return Check('expansion', reconstructed and normalized, None,
                 {'reconstruction': reconstructed, 'normalization': normalized})


def composition_coefficients(b: ErrorBasis, i: int, j: int, config: Optional[RunConfig] = None) -> list[CycInt]:
    """tr(E_k^dagger E_i E_j) for every k, which is n w_ijk"""
    config = resolve(config)
    p = to_dense(b.elements[i] @ b.elements[j], config)
    return [(to_dense(e, config).adjoint() @ p).trace() for e in b.elements]


def commutation_product(sc: StructureConstants, d: Sequence[int], d_prime: Sequence[int]) -> CycInt:
    """Scalar c with D D' = c D' D for the tensor operators D, D' whose
    per-site basis indices are d and d'"""
    if not sc.is_abelian():
        raise NonAbelianIndexGroup('the commutation product needs an abelian index group')
    if len(d) != len(d_prime):
        raise DimensionMismatch(len(d), len(d_prime), 'number of sites')
    total = CycInt.one()
    for a, b in zip(d, d_prime):
        total = total * sc.w[a][b] * sc.w[b][a].conj()
    return total


@dataclass
class ProjectiveClosure:
    order: int
    scalars: int

    @property
    def quotient(self) -> int:
        return self.order // self.scalars


def projective_closure(b: ErrorBasis, limit: int = 1 << 16) -> ProjectiveClosure:
    """Closes the basis together with zeta_n I. For a nice basis the scalar
    subgroup has index n^2; for a very nice one the order is n^3."""
    if not b.is_monomial:
        raise TypeError('group closure needs monomial basis elements')
    scalar = MonomialMatrix.identity(b.dim).times_phase(1, b.dim)
    group = close_group(list(b.elements) + [scalar], limit)
    scalars = sum(1 for g in group if g.perm == tuple(range(b.dim)) and len(set(g.phases)) == 1)
    return ProjectiveClosure(len(group), scalars)


@dataclass
class EnvironmentWeights:
    """Exact and floating weights of an operation expanded in an error basis.

    `values[i]` is sum_k |tr(E_i^dagger A_k)|^2; the identity
    sum_i values[i] = n sum_k tr(A_k^dagger A_k) holds exactly.
    `weights` are the values normalized to sum 1 (floating point).
    """

    values: list
    total: CycInt
    identity_holds: bool
    weights: list
    fidelity_amplitudes: list


def environment_weights(kraus: Sequence[Operator], b: ErrorBasis,
                        config: Optional[RunConfig] = None) -> EnvironmentWeights:
    config = resolve(config)
    dense = [to_dense(k, config) for k in kraus]
    for k in dense:
        if k.dim != b.dim:
            raise DimensionMismatch(b.dim, k.dim)
    expansions = [expand_operator(k, b, config) for k in dense]
    values = [sum((expansion[i].trace.abs2() for expansion in expansions), CycInt.zero()) for i in range(len(b))]
    total = sum(((k.adjoint() @ k).trace() for k in dense), CycInt.zero()) * b.dim
    identity_holds = sum(values, CycInt.zero()) == total
    denominator = total.embed_complex().real
    weights = [value.embed_complex().real / denominator if denominator else 0.0 for value in values]
    amplitudes = [Coefficient(k.trace(), b.dim) for k in dense]
    return EnvironmentWeights(values, total, identity_holds, weights, amplitudes)
