import os
import unittest
from unittest import mock

import numpy

from qzcodes.config import RunConfig
from qzcodes.cyclotomic import CycInt, zeta
from qzcodes.errors import DimensionMismatch, SizeGuardExceeded
from qzcodes.exactmat import (DenseMatrix, MonomialMatrix, StateVector, apply_dense, apply_mono, dense_scalar_check,
                              inner_product, proportional, to_dense)
from qzcodes.utils import decode_index, encode_index


def random_monomial(rng, dim, order):
    return MonomialMatrix(dim, order, rng.permutation(dim).tolist(), rng.integers(0, order, size=dim).tolist())


class TestMonomialMatrix(unittest.TestCase):

    def setUp(self):
        self.rng = numpy.random.default_rng(2024)

    def test_shift_and_cyclic(self):
        """X|z> = |z+1> and C = X^-1"""
        x = MonomialMatrix.shift(5)
        self.assertEqual(x.perm, (1, 2, 3, 4, 0))
        self.assertEqual(MonomialMatrix.cyclic(5), x.adjoint())
        self.assertEqual(MonomialMatrix.cyclic(5) @ x, MonomialMatrix.identity(5))
        self.assertEqual(x.power(5), MonomialMatrix.identity(5))

    def test_clock(self):
        d = MonomialMatrix.clock(3)
        self.assertEqual(d.phases, (0, 1, 2))
        self.assertEqual(d.trace(), 0)
        self.assertEqual(d.power(3), MonomialMatrix.identity(3))

    def test_from_entries(self):
        m = MonomialMatrix.from_entries(4, [[None, 1], [0, None]])
        self.assertEqual(m.perm, (1, 0))
        self.assertEqual(m.phases, (0, 1))
        with self.assertRaises(ValueError):
            MonomialMatrix.from_entries(4, [[0, 1], [None, None]])
        with self.assertRaises(DimensionMismatch):
            MonomialMatrix.from_entries(4, [[0], [None, 0]])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            MonomialMatrix(3, 2, [0, 0, 1])
        with self.assertRaises(DimensionMismatch):
            MonomialMatrix(2, 2, [1, 0], [0])

    def test_reduced_equality(self):
        a = MonomialMatrix(2, 2, [1, 0], [1, 0])
        self.assertEqual(a, a.lift(6))
        self.assertEqual(hash(a), hash(a.lift(6)))
        self.assertEqual(a.lift(6).reduced().order, 2)

    def test_compose_with_adjoint(self):
        for _ in range(40):
            dim, order = int(self.rng.integers(1, 7)), int(self.rng.integers(1, 9))
            a = random_monomial(self.rng, dim, order)
            self.assertEqual(a @ a.adjoint(), MonomialMatrix.identity(dim))
            self.assertEqual(a.power(-2), a.adjoint() @ a.adjoint())

    def test_trace_is_cyclic(self):
        for _ in range(40):
            dim = int(self.rng.integers(1, 7))
            a = random_monomial(self.rng, dim, int(self.rng.integers(1, 9)))
            b = random_monomial(self.rng, dim, int(self.rng.integers(1, 9)))
            self.assertEqual((a @ b).trace(), (b @ a).trace())

    def test_det_is_multiplicative(self):
        for _ in range(40):
            dim = int(self.rng.integers(1, 7))
            a = random_monomial(self.rng, dim, int(self.rng.integers(1, 9)))
            b = random_monomial(self.rng, dim, int(self.rng.integers(1, 9)))
            self.assertEqual((a @ b).det(), a.det() * b.det())

    def test_det_values(self):
        self.assertEqual(MonomialMatrix.shift(2).det(), -1)
        self.assertEqual(MonomialMatrix.shift(3).det(), 1)
        self.assertEqual(MonomialMatrix.clock(2).det(), -1)
        self.assertEqual(MonomialMatrix.clock(4).det(), zeta(4, 6))

    def test_scalar_multiple(self):
        x = MonomialMatrix.shift(3)
        y = x.times_phase(1, 4)
        self.assertEqual(y.projective_phase(x), zeta(4))
        self.assertEqual(y.trace(), 0)
        self.assertIsNone(MonomialMatrix.clock(3).projective_phase(x))

    def test_tensor(self):
        x, d = MonomialMatrix.shift(2), MonomialMatrix.clock(3)
        product = x.tensor(d)
        self.assertEqual(product.dim, 6)
        self.assertEqual(to_dense(product).proportional_to(to_dense(product)).equals(1), True)
        self.assertEqual(product.trace(), x.trace() * d.trace())
        self.assertEqual((x.tensor(d)) @ (x.tensor(d)), (x @ x).tensor(d @ d))

    def test_dense_agreement(self):
        for _ in range(30):
            dim = int(self.rng.integers(1, 9))
            a = random_monomial(self.rng, dim, int(self.rng.integers(1, 7)))
            b = random_monomial(self.rng, dim, int(self.rng.integers(1, 7)))
            self.assertEqual((a @ b).to_dense(), a.to_dense() @ b.to_dense())
            self.assertEqual(a.adjoint().to_dense(), a.to_dense().adjoint())
            self.assertEqual(a.trace(), a.to_dense().trace())


class TestDenseMatrix(unittest.TestCase):

    def test_fourier_is_unitary_up_to_n(self):
        for n in range(2, 9):
            f = DenseMatrix.fourier(n)
            self.assertEqual(f @ f.adjoint(), DenseMatrix.identity(n).scaled(n))

    def test_arithmetic(self):
        a = DenseMatrix([[1, zeta(3)], [0, 2]])
        self.assertEqual(a + a, a.scaled(2))
        self.assertTrue((a - a).is_zero())
        self.assertEqual(a.trace(), 3)
        self.assertEqual(a.adjoint()[1, 0], zeta(3, 2))

    def test_scalar_check(self):
        a = DenseMatrix([[1, zeta(4)], [zeta(4), 1]])
        ratio = dense_scalar_check(a.scaled(zeta(4)), a)
        self.assertIsNotNone(ratio)
        self.assertTrue(ratio.equals(zeta(4)))
        self.assertIsNone(dense_scalar_check(a, DenseMatrix.identity(2)))

    def test_shape_checks(self):
        with self.assertRaises(DimensionMismatch):
            DenseMatrix([[1, 2, 3], [4, 5, 6]])
        with self.assertRaises(DimensionMismatch):
            DenseMatrix.identity(2) @ DenseMatrix.identity(3)

    def test_size_guard(self):
        small = RunConfig(dense_dim_cap=4)
        with self.assertRaises(SizeGuardExceeded):
            DenseMatrix.identity(5, small)
        with self.assertRaises(SizeGuardExceeded):
            MonomialMatrix.identity(8).to_dense(small)
        with self.assertRaises(SizeGuardExceeded):
            to_dense(MonomialMatrix.shift(8), small)
        with self.assertRaises(SizeGuardExceeded):
            to_dense(DenseMatrix.fourier(8), small)
        self.assertEqual(to_dense(MonomialMatrix.shift(4), small).dim, 4)
        self.assertEqual(MonomialMatrix.identity(8).to_dense().dim, 8)

    def test_size_guard_from_environment(self):
        with mock.patch.dict(os.environ, {'QZCODES_DENSE_CAP': '4'}):
            with self.assertRaises(SizeGuardExceeded):
                MonomialMatrix.identity(8).to_dense()
            with self.assertRaises(SizeGuardExceeded):
                DenseMatrix.fourier(5)
            self.assertEqual(DenseMatrix.fourier(3).dim, 3)
        self.assertEqual(MonomialMatrix.identity(8).to_dense().dim, 8)

    def test_arithmetic_keeps_guarded_dimension(self):
        f = DenseMatrix.fourier(8)
        small = RunConfig(dense_dim_cap=4)
        product = f @ MonomialMatrix.shift(8)
        self.assertEqual(product.dim, 8)
        with self.assertRaises(SizeGuardExceeded):
            dense_scalar_check(product, f, small)


class TestStateVector(unittest.TestCase):

    def test_index_encoding(self):
        radices = (3, 3, 2)
        for index in range(18):
            self.assertEqual(encode_index(decode_index(index, radices), radices), index)
        self.assertEqual(decode_index(5, radices), (0, 2, 1))
        with self.assertRaises(ValueError):
            encode_index((0, 3, 0), radices)

    def test_basis_and_items(self):
        s = StateVector.basis((2, 2), 3)
        self.assertEqual(s.support(), [(1, 1)])
        self.assertEqual(s[(1, 1)], 1)
        self.assertTrue(s[(0, 0)].is_zero())
        self.assertEqual(s.index_of((1, 1)), 3)

    def test_zero_amplitudes_are_dropped(self):
        s = StateVector((2,), {0: 1, 1: CycInt(3, [1, 1, 1])})
        self.assertEqual(len(s), 1)
        self.assertTrue((s - s).is_zero())

    def test_clock_on_two_qutrits(self):
        """D x D on |1,2> picks up zeta_3^3 = 1"""
        s = StateVector.basis((3, 3), (1, 2))
        d = MonomialMatrix.clock(3)
        self.assertEqual(apply_mono([d, d], s), s)

    def test_identity_and_shift(self):
        s = StateVector((2, 3), {(0, 1): zeta(3), (1, 2): 2})
        self.assertEqual(apply_mono([MonomialMatrix.identity(2), MonomialMatrix.identity(3)], s), s)
        shifted = apply_mono([MonomialMatrix.shift(2), MonomialMatrix.shift(3)], s)
        self.assertEqual(shifted, StateVector((2, 3), {(1, 2): zeta(3), (0, 0): 2}))
        with self.assertRaises(DimensionMismatch):
            apply_mono([MonomialMatrix.shift(2)], s)

    def test_inner_product(self):
        u = StateVector((2,), {0: 1, 1: zeta(3)})
        self.assertEqual(inner_product(u, u), 2)
        self.assertEqual(inner_product(StateVector.basis((3,), 0), StateVector.basis((3,), 1)), 0)
        self.assertEqual(inner_product(StateVector.basis((3,), 2), StateVector.basis((3,), 2)), 1)

    def test_proportional(self):
        u = StateVector((3,), {0: 1, 2: 1 + zeta(5)})
        ratio = proportional(u.scaled(zeta(5)), u)
        self.assertIsNotNone(ratio)
        self.assertTrue(ratio.equals(zeta(5)))
        self.assertIsNone(proportional(StateVector.basis((2,), 0), StateVector.basis((2,), 1)))
        self.assertIsNone(proportional(StateVector((2,)), StateVector((2,))))

    def test_unitary_preserves_inner_products(self):
        rng = numpy.random.default_rng(5)
        shape = (3, 3, 3)
        for _ in range(20):
            u = StateVector(shape, {int(k): CycInt(3, rng.integers(-2, 3, size=3).tolist())
                                    for k in rng.integers(0, 27, size=5)})
            v = StateVector(shape, {int(k): CycInt(3, rng.integers(-2, 3, size=3).tolist())
                                    for k in rng.integers(0, 27, size=5)})
            ops = [random_monomial(rng, 3, 6) for _ in shape]
            self.assertEqual(inner_product(apply_mono(ops, u), apply_mono(ops, v)), inner_product(u, v))
            self.assertEqual(apply_mono(ops, u + v), apply_mono(ops, u) + apply_mono(ops, v))

    def test_dense_application(self):
        f = DenseMatrix.fourier(2)
        s = StateVector.basis((2, 2), (0, 0))
        image = apply_dense([f, None], s)
        self.assertEqual(image, StateVector((2, 2), {(0, 0): 1, (1, 0): 1}))
        image = apply_dense([f, f], StateVector.basis((2, 2), (1, 1)))
        self.assertEqual(image[(1, 1)], 1)
        self.assertEqual(image[(0, 1)], -1)
        mixed = apply_dense([MonomialMatrix.shift(2), f], s)
        self.assertEqual(mixed, StateVector((2, 2), {(1, 0): 1, (1, 1): 1}))

    def test_dense_application_size_guard(self):
        f = DenseMatrix.fourier(3)
        s = StateVector.basis((3, 3), (0, 0))
        with self.assertRaises(SizeGuardExceeded):
            apply_dense([f, None], s, RunConfig(dense_dim_cap=2))
        self.assertEqual(len(apply_dense([f, None], s, RunConfig(dense_dim_cap=3))), 3)
        # monomial sites never go dense
        shifted = apply_dense([MonomialMatrix.shift(3), None], s, RunConfig(dense_dim_cap=2))
        self.assertEqual(shifted, StateVector.basis((3, 3), (1, 0)))

    def test_tensor(self):
        a = StateVector((2,), {0: 1, 1: -1})
        b = StateVector.basis((3,), 2)
        self.assertEqual(a.tensor(b), StateVector((2, 3), {(0, 2): 1, (1, 2): -1}))

    def test_map_indices(self):
        s = StateVector((2, 2), {(0, 1): 1, (1, 1): 1})
        self.assertEqual(s.map_indices(lambda z: (z[0], (z[0] + z[1]) % 2)),
                         StateVector((2, 2), {(0, 1): 1, (1, 0): 1}))
        with self.assertRaises(ValueError):
            s.map_indices(lambda z: (0, 0))


if __name__ == '__main__':
    unittest.main()
