import unittest

from qzcodes.common import GateKind, ReadoutBasis
from qzcodes.config import RunConfig
from qzcodes.cyclotomic import CycInt
from qzcodes.errors import NotSelfDual, SizeGuardExceeded
from qzcodes.exactmat import MonomialMatrix, StateVector
from qzcodes.qcode import build_code, logical_state
from qzcodes.standardcodes import StandardCode
from qzcodes.transversal import (compose, custom_gate, error_group_action, find_phase_vector, identity_gate,
                                 logical_cadd, logical_increment, logical_phase, logical_readout, power,
                                 transversal_fourier, verify_fourier_conjugation, verify_logical_action,
                                 verify_logical_commutation)
from qzcodes.utils import dot


class TestSteaneGates(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.code = build_code(StandardCode.HAMMING8.code())

    def test_increment(self):
        gate = logical_increment(self.code)
        self.assertIs(gate.kind, GateKind.INCREMENT)
        action = verify_logical_action(self.code, gate)
        self.assertTrue(action.passed)
        self.assertTrue(action.scalar.equals(8))
        self.assertEqual(gate.apply(logical_state(self.code, 0)), logical_state(self.code, 1))

    def test_phase(self):
        x = find_phase_vector(self.code)
        self.assertIn(x, self.code.d_prime)
        self.assertEqual(dot(x, self.code.e1_prime, 2), 1)
        action = verify_logical_action(self.code, logical_phase(self.code))
        self.assertTrue(action.passed)
        self.assertEqual(logical_phase(self.code).apply(logical_state(self.code, 1)),
                         logical_state(self.code, 1).scaled(-1))

    def test_fourier(self):
        gate, action = transversal_fourier(self.code)
        self.assertTrue(action.passed)
        self.assertFalse(action.reflected)
        self.assertEqual(action.matrix[0][0], 64)
        self.assertEqual(action.matrix[1][1], -64)
        image = gate.apply(logical_state(self.code, 0))
        self.assertEqual(image, (logical_state(self.code, 0) + logical_state(self.code, 1)).scaled(8))

    def test_controlled_add(self):
        gate = logical_cadd(self.code)
        self.assertEqual(gate.blocks, 2)
        self.assertTrue(verify_logical_action(self.code, gate).passed)
        one = logical_state(self.code, 1)
        self.assertEqual(gate.apply(one.tensor(one)), one.tensor(logical_state(self.code, 0)))

    def test_error_group(self):
        for a in range(2):
            for b in range(2):
                self.assertTrue(error_group_action(self.code, a, b).passed, (a, b))

    def test_commutation(self):
        check = verify_logical_commutation(self.code)
        self.assertTrue(check.passed)

    def test_custom_gate(self):
        flip = [[CycInt.zero(), CycInt.one()], [CycInt.one(), CycInt.zero()]]
        gate = custom_gate(self.code, [MonomialMatrix.shift(2)] * 7, flip, 'all shifts')
        self.assertTrue(verify_logical_action(self.code, gate).passed)
        self.assertTrue(verify_logical_action(self.code, identity_gate(self.code)).passed)

    def test_wrong_expectation_fails(self):
        identity = [[CycInt.one(), CycInt.zero()], [CycInt.zero(), CycInt.one()]]
        gate = custom_gate(self.code, [MonomialMatrix.shift(2)] * 7, identity)
        action = verify_logical_action(self.code, gate)
        self.assertTrue(action.inside)
        self.assertFalse(action.passed)
        self.assertIsNone(action.scalar)

    def test_gate_leaving_the_code_space(self):
        ops = [MonomialMatrix.shift(2)] + [None] * 6
        identity = [[CycInt.one(), CycInt.zero()], [CycInt.zero(), CycInt.one()]]
        action = verify_logical_action(self.code, custom_gate(self.code, ops, identity))
        self.assertFalse(action.inside)
        self.assertEqual(action.witness['logical'], 0)

    def test_powers(self):
        increment = logical_increment(self.code)
        self.assertTrue(verify_logical_action(self.code, power(increment, 2)).passed)
        self.assertEqual(power(increment, 2).apply(logical_state(self.code, 1)), logical_state(self.code, 1))
        with self.assertRaises(ValueError):
            power(increment, -1)
        with self.assertRaises(ValueError):
            compose(logical_cadd(self.code), increment)

    def test_readout(self):
        zero = logical_state(self.code, 0)
        readout = logical_readout(self.code, zero, ReadoutBasis.FOURIER)
        self.assertEqual(readout.amplitudes, [64, 64])
        self.assertTrue(readout.inside)
        readout = logical_readout(self.code, logical_state(self.code, 1))
        self.assertEqual(readout.amplitudes, [0, 8])
        self.assertTrue(readout.inside)
        readout = logical_readout(self.code, StateVector.basis(self.code.shape, 0))
        self.assertEqual(readout.amplitudes, [1, 0])
        self.assertFalse(readout.inside)


class TestTetracodeGates(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.code = build_code(StandardCode.TETRACODE.code())

    def test_increment_and_phase(self):
        self.assertTrue(verify_logical_action(self.code, logical_increment(self.code)).passed)
        self.assertEqual(find_phase_vector(self.code), (0, 2, 1))
        self.assertTrue(verify_logical_action(self.code, logical_phase(self.code)).passed)
        self.assertTrue(verify_logical_commutation(self.code).passed)

    def test_fourier_is_reflected(self):
        """F on every site realizes the logical Fourier transform with i -> -i"""
        _, action = transversal_fourier(self.code)
        self.assertTrue(action.passed)
        self.assertTrue(action.reflected)

    def test_error_group(self):
        for a in range(3):
            for b in range(3):
                self.assertTrue(error_group_action(self.code, a, b).passed, (a, b))


class TestFourier(unittest.TestCase):

    def test_conjugation(self):
        for n in range(2, 13):
            failed = [check.name for check in verify_fourier_conjugation(n) if not check.passed]
            self.assertEqual(failed, [], n)

    def test_invalid_dimension(self):
        with self.assertRaises(ValueError):
            verify_fourier_conjugation(1)

    def test_needs_self_dual_code(self):
        with self.assertRaises(NotSelfDual):
            transversal_fourier(build_code(StandardCode.EVEN4.code()))

    def test_dense_cap(self):
        small = RunConfig(dense_dim_cap=2)
        with self.assertRaises(SizeGuardExceeded):
            verify_fourier_conjugation(3, small)
        self.assertTrue(all(check.passed for check in verify_fourier_conjugation(2, small)))
        tetracode = build_code(StandardCode.TETRACODE.code())
        with self.assertRaises(SizeGuardExceeded):
            transversal_fourier(tetracode, small)
        with self.assertRaises(SizeGuardExceeded):
            logical_readout(tetracode, logical_state(tetracode, 0), ReadoutBasis.FOURIER, small)
        self.assertTrue(verify_logical_action(tetracode, logical_increment(tetracode), config=small).passed)


if __name__ == '__main__':
    unittest.main()
