import cmath
import unittest

import numpy

from qzcodes.cyclotomic import CycInt, conj, cyclotomic_poly, embed_complex, zeta

try:
    import sympy
except ImportError:
    sympy = None


class TestCyclotomicPolynomial(unittest.TestCase):

    def test_small_orders(self):
        self.assertEqual(cyclotomic_poly(1), (-1, 1))
        self.assertEqual(cyclotomic_poly(2), (1, 1))
        self.assertEqual(cyclotomic_poly(4), (1, 0, 1))
        self.assertEqual(cyclotomic_poly(6), (1, -1, 1))
        self.assertEqual(cyclotomic_poly(12), (1, 0, -1, 0, 1))

    def test_degree_is_totient(self):
        totients = {1: 1, 2: 1, 3: 2, 5: 4, 8: 4, 9: 6, 15: 8, 30: 8, 105: 48}
        for m, phi in totients.items():
            self.assertEqual(len(cyclotomic_poly(m)) - 1, phi, m)

    def test_first_non_binary_coefficient(self):
        """The 105th polynomial is the first with a coefficient -2"""
        self.assertIn(-2, cyclotomic_poly(105))

    def test_invalid_order(self):
        for m in (0, -3, 2.0, True):
            with self.assertRaises(ValueError):
                cyclotomic_poly(m)

    @unittest.skipIf(sympy is None, 'sympy is not installed')
    def test_against_sympy(self):
        x = sympy.symbols('x')
        for m in range(1, 40):
            expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
            self.assertEqual(cyclotomic_poly(m), tuple(int(c) for c in expected), m)


class TestCycInt(unittest.TestCase):

    def test_roots_sum_to_zero(self):
        for m in (2, 3, 4, 5, 6, 12):
            total = sum((zeta(m, k) for k in range(m)), CycInt.zero())
            self.assertTrue(total.is_zero(), m)

    def test_equality_across_orders(self):
        self.assertEqual(zeta(2), -1)
        self.assertEqual(zeta(4, 2), zeta(2))
        self.assertEqual(zeta(6, 2), zeta(3))
        self.assertEqual(zeta(12, 4) + zeta(12, 8), -1)
        self.assertNotEqual(zeta(4), zeta(4, 3))

    def test_canonical_form(self):
        # 1 + zeta_3 + zeta_3^2 = 0 collapses to the zero tuple
        self.assertEqual(CycInt(3, [1, 1, 1]).coeffs, (0, 0, 0))
        # Positions past the order fold back
        self.assertEqual(CycInt(3, [0, 0, 0, 1]), 1)

    def test_integer_coercion(self):
        a = zeta(5)
        self.assertEqual(a + 1 - 1, a)
        self.assertEqual(2 * a, a + a)
        self.assertEqual(1 - a, -(a - 1))
        with self.assertRaises(TypeError):
            CycInt.coerce(0.5)
        with self.assertRaises(TypeError):
            CycInt(3, [1.5])

    def test_multiplication(self):
        self.assertEqual(zeta(5, 2) * zeta(5, 4), zeta(5, 1))
        self.assertEqual(zeta(3) * zeta(4), zeta(12, 7))
        self.assertEqual(zeta(8) ** 8, 1)
        self.assertEqual(zeta(8) ** 4, -1)
        self.assertEqual(zeta(7) ** 0, 1)
        with self.assertRaises(ValueError):
            zeta(7) ** -1

    def test_times_root(self):
        a = CycInt(5, [2, 0, 1])
        self.assertEqual(a.times_root(3, 5), a * zeta(5, 3))
        self.assertEqual(a.times_root(1, 2), -a)

    def test_conj_and_abs2(self):
        self.assertEqual(conj(zeta(5)), zeta(5, 4))
        self.assertEqual((1 + zeta(3)).abs2(), 1)
        self.assertEqual((1 + zeta(4)).abs2(), 2)
        self.assertEqual(zeta(7, 3).abs2(), 1)

    def test_as_int(self):
        self.assertEqual((zeta(4) * zeta(4)).as_int(), -1)
        self.assertEqual(CycInt.from_int(7, 5).as_int(), 7)
        self.assertIsNone(zeta(3).as_int())

    def test_embedding(self):
        rng = numpy.random.default_rng(7)
        for _ in range(50):
            m = int(rng.integers(1, 13))
            a = CycInt(m, rng.integers(-4, 5, size=m).tolist())
            b = CycInt(m, rng.integers(-4, 5, size=m).tolist())
            self.assertTrue(cmath.isclose(embed_complex(a * b), embed_complex(a) * embed_complex(b), abs_tol=1e-9))
            self.assertTrue(cmath.isclose(embed_complex(a.conj()), embed_complex(a).conjugate(), abs_tol=1e-9))
        self.assertTrue(cmath.isclose(zeta(4).embed_complex(), 1j, abs_tol=1e-12))

    def test_ring_laws(self):
        rng = numpy.random.default_rng(11)
        for _ in range(30):
            values = [CycInt(m, rng.integers(-3, 4, size=m).tolist()) for m in rng.integers(1, 9, size=3).tolist()]
            a, b, c = values
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a * b).conj(), a.conj() * b.conj())

    def test_unhashable(self):
        with self.assertRaises(TypeError):
            hash(zeta(3))

    def test_invalid_order(self):
        with self.assertRaises(ValueError):
            CycInt(0)


if __name__ == '__main__':
    unittest.main()
