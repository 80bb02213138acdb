import unittest
import warnings

from qzcodes.common import Convention
from qzcodes.config import RunConfig
from qzcodes.cyclotomic import zeta
from qzcodes.errors import ConstructionError, DualityChainError, SizeGuardExceeded
from qzcodes.exactmat import StateVector, inner_product, proportional
from qzcodes.qcode import (ErrorIndex, apply_error, apply_error_adjoint, build_code, character_sum,
                           count_error_indices, distance_certificate, iter_error_indices, kl_check_exhaustive,
                           kl_check_fast, kl_element, kl_matrix, logical_state, symplectic_product, syndrome_state,
                           syndrome_states, verify_eigenspace)
from qzcodes.standardcodes import StandardCode
from qzcodes.utils import weight
from qzcodes.zncodes import LinearCodeZn, dual, min_weight


class TestErrorIndex(unittest.TestCase):

    def test_weight(self):
        d = ErrorIndex((1, 0, 0, 2), (0, 0, 1, 1))
        self.assertEqual(d.weight, 3)
        self.assertEqual(d.length, 4)
        self.assertTrue(ErrorIndex.identity(3).is_identity())
        self.assertEqual(str(ErrorIndex.shift((0, 1))), '(x=00, y=01)')

    def test_arithmetic(self):
        a = ErrorIndex((1, 2), (0, 1))
        b = ErrorIndex((2, 2), (1, 1))
        self.assertEqual(a.add(b, 3), ErrorIndex((0, 1), (1, 2)))
        self.assertEqual(a.add(b, 3).sub(b, 3), a)

    def test_symplectic_product(self):
        """E(d') E(d) = w^s E(d) E(d')"""
        n = 3
        d, d_prime = ErrorIndex.phase((1, 0)), ErrorIndex.shift((1, 0))
        self.assertEqual(symplectic_product(d, d_prime, n), 2)
        self.assertEqual(symplectic_product(d_prime, d, n), 1)
        self.assertEqual(symplectic_product(d, d, n), 0)
        state = StateVector.basis((n, n), (2, 1))
        left = apply_error(d_prime, apply_error(d, state))
        right = apply_error(d, apply_error(d_prime, state))
        self.assertEqual(left, right.times_root(symplectic_product(d, d_prime, n), n))

    def test_operator_convention(self):
        """E(x, y)|z> = w^(x.z)|z + y>"""
        state = StateVector.basis((3, 3), (1, 2))
        image = apply_error(ErrorIndex((1, 1), (1, 0)), state)
        self.assertEqual(image, StateVector((3, 3), {(2, 2): 1}))
        image = apply_error(ErrorIndex((2, 0), (0, 1)), state)
        self.assertEqual(image, StateVector((3, 3), {(1, 0): zeta(3, 2)}))
        self.assertEqual(apply_error_adjoint(ErrorIndex((2, 0), (0, 1)), image), state)

    def test_index_enumeration(self):
        indices = iter_error_indices(2, 7, 1)
        self.assertEqual(len(indices), 22)
        self.assertEqual(count_error_indices(2, 7, 1), 22)
        self.assertTrue(indices[0].is_identity())
        self.assertEqual(indices, sorted(indices, key=ErrorIndex.sort_key))
        self.assertEqual(len(iter_error_indices(3, 3, 2, min_weight=2)), 3 * 64)
        with self.assertRaises(SizeGuardExceeded):
            iter_error_indices(3, 5, 2, cap=100)


class TestSteane(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.code = build_code(StandardCode.HAMMING8.code())
        cls.indices = iter_error_indices(2, 7, 1)

    def test_parameters(self):
        code = self.code
        self.assertEqual((code.n, code.l, code.k_logical), (2, 7, 2))
        self.assertIs(code.convention, Convention.LITERAL)
        self.assertEqual(code.c_prime_0, code.d_prime_0)
        self.assertEqual(len(code.generators), 6)
        self.assertEqual(min_weight(code.c_prime), 3)
        self.assertEqual(min_weight(code.d_prime), 3)

    def test_explicit_dual_partner(self):
        c = StandardCode.HAMMING8.code()
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            code = build_code(c, dual(c), Convention.SWAPPED)
        self.assertIs(code.convention, Convention.SWAPPED)

    def test_logical_states(self):
        zero, one = logical_state(self.code, 0), logical_state(self.code, 1)
        self.assertEqual(len(zero), 8)
        self.assertTrue(all(amplitude == 1 for _, amplitude in zero.items()))
        self.assertEqual(inner_product(zero, zero), 8)
        self.assertEqual(inner_product(zero, one), 0)
        self.assertTrue(all(weight(z) % 2 == 0 for z in zero.support()))
        with self.assertRaises(ValueError):
            logical_state(self.code, 2)

    def test_eigenspace(self):
        report = verify_eigenspace(self.code)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.eigenvalues), 6)
        self.assertTrue(all(value == 1 for value in report.eigenvalues))

    def test_stabilizers(self):
        for g in self.code.generators:
            self.assertTrue(self.code.is_stabilizer(g))
        self.assertFalse(self.code.is_stabilizer(ErrorIndex.shift((1, 0, 0, 0, 0, 0, 0))))

    def test_character_sum(self):
        self.assertEqual(character_sum(self.code, (0,) * 7), 8)
        self.assertEqual(character_sum(self.code, (1, 0, 0, 0, 0, 0, 0)), 0)

    def test_kl_exhaustive(self):
        report = kl_check_exhaustive(self.code, 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.pairs, 22 * 22)
        for a in self.indices:
            self.assertEqual(report.lambdas[(a, a)], 8)

    def test_kl_fast_matches_exhaustive(self):
        exhaustive = kl_check_exhaustive(self.code, 1)
        fast = kl_check_fast(self.code, 1)
        self.assertTrue(fast.passed)
        self.assertEqual(set(fast.lambdas), set(exhaustive.lambdas))
        for key, value in exhaustive.lambdas.items():
            self.assertEqual(fast.lambdas[key], value)
        self.assertEqual(fast.lambda_table(), exhaustive.lambda_table())

    def test_kl_by_differences(self):
        """Too many pairs for a table: the verdict comes from the scan"""
        report = kl_check_fast(self.code, 1, RunConfig(kl_table_cap=10))
        self.assertTrue(report.passed)
        self.assertIsNone(report.lambdas)
        self.assertEqual(report.lambda_table(), [])

    def test_kl_element_matches_states(self):
        for a in self.indices[::3]:
            for b in self.indices[::2]:
                matrix = kl_matrix(self.code, a, b)
                for i in range(2):
                    for j in range(2):
                        self.assertEqual(kl_element(self.code, a, b, i, j), matrix[i][j])

    def test_distance(self):
        certificate = distance_certificate(self.code, 1)
        self.assertTrue(certificate.passed)
        self.assertEqual(certificate.logical_witnesses, [])

    def test_syndrome_states(self):
        states = syndrome_states(self.code)
        self.assertEqual(len(states), 128)
        self.assertEqual(len(states) * len(states[0][3]), 2 ** 7 * 8)
        vectors = [state for _, _, _, state in states]
        for position, u in enumerate(vectors):
            self.assertEqual(inner_product(u, u), 8)
            for v in vectors[position + 1:]:
                self.assertTrue(inner_product(u, v).is_zero())

    def test_syndrome_state_is_an_error_image(self):
        """|c_x, d_y, i> is E(c_x, d_y)|i_L> up to a phase"""
        c_x, d_y = (0, 0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0)
        state = syndrome_state(self.code, c_x, d_y, 1)
        image = apply_error(ErrorIndex(c_x, d_y), logical_state(self.code, 1))
        self.assertIsNotNone(proportional(state, image))


class TestOtherCodes(unittest.TestCase):

    def test_tetracode(self):
        code = build_code(StandardCode.TETRACODE.code())
        self.assertEqual((code.n, code.l), (3, 3))
        self.assertEqual(code.e1_prime, (0, 1, 2))
        self.assertEqual(len(code.c_prime_0), 3)
        self.assertTrue(verify_eigenspace(code).passed)

    def test_tetracode_detects_only(self):
        code = build_code(StandardCode.TETRACODE.code())
        certificate = distance_certificate(code, 1)
        self.assertFalse(certificate.passed)
        self.assertEqual(min_weight(code.c_prime), 2)
        self.assertTrue(certificate.logical_witnesses)

    def test_tetracode_oracles_agree(self):
        code = build_code(StandardCode.TETRACODE.code())
        exhaustive = kl_check_exhaustive(code, 1)
        fast = kl_check_fast(code, 1)
        self.assertFalse(exhaustive.passed)
        self.assertEqual(fast.passed, exhaustive.passed)
        self.assertEqual(fast.violations, exhaustive.violations)
        for key, value in exhaustive.lambdas.items():
            self.assertEqual(fast.lambdas[key], value)

    def test_tetracode_detects_single_errors(self):
        """Single errors never mix the logical states"""
        code = build_code(StandardCode.TETRACODE.code())
        identity = ErrorIndex.identity(3)
        indices = iter_error_indices(3, 3, 1)
        report = kl_check_exhaustive(code, 1, indices=[identity])
        self.assertTrue(report.passed)
        for d in indices[1:]:
            matrix = kl_matrix(code, identity, d)
            self.assertTrue(all(matrix[i][j].is_zero() for i in range(3) for j in range(3) if i != j))

    def test_even_weight_code_needs_swapped_convention(self):
        c = StandardCode.EVEN4.code()
        code = build_code(c)
        self.assertIs(code.convention, Convention.SWAPPED)
        self.assertTrue(verify_eigenspace(code).passed)
        with self.assertRaises(ConstructionError) as context:
            build_code(c, convention=Convention.LITERAL)
        self.assertEqual(context.exception.check, 'eigenspace')

    def test_preconditions(self):
        with self.assertRaises(ConstructionError) as context:
            build_code(LinearCodeZn(4, 3, [(1, 1, 2)]))
        self.assertEqual(context.exception.check, 'last coordinate surjective')
        with self.assertRaises(ConstructionError):
            build_code(LinearCodeZn(2, 1, [(1,)]))

    def test_non_dual_partner_warns(self):
        c = StandardCode.EVEN4.code()
        with self.assertWarns(UserWarning):
            try:
                build_code(c, c)
            except (ConstructionError, DualityChainError):
                pass


if __name__ == '__main__':
    unittest.main()
