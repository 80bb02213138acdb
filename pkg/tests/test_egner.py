import unittest

from qzcodes.errorbasis import (EGNER_A, EGNER_B, EGNER_C, Z2_D4_GENERATORS, build_egner, close_group,
                                commutation_product, find_isomorphism, group_invariants, verify_nice,
                                verify_orthonormal, z2_times_d4)
from qzcodes.errors import NonAbelianIndexGroup
from qzcodes.exactmat import MonomialMatrix


class TestEgner(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.report = build_egner()

    def test_passes(self):
        failed = [check.name for check in self.report.checks if not check.passed]
        self.assertEqual(failed, [])
        self.assertTrue(self.report.passed)

    def test_group_order(self):
        self.assertEqual(self.report.group_order, 32)
        self.assertEqual(len(close_group([EGNER_A, EGNER_B, EGNER_C])), 32)

    def test_center(self):
        identity = MonomialMatrix.identity(4)
        self.assertEqual(set(self.report.center), {identity, identity.times_phase(2, 4)})

    def test_relations(self):
        identity = MonomialMatrix.identity(4)
        a, b, c = EGNER_A, EGNER_B, EGNER_C
        self.assertEqual(a @ a, identity)
        self.assertEqual(c @ c, identity)
        self.assertEqual(a @ b, (b @ a).times_phase(2, 4))
        self.assertEqual(a @ c, c @ a)
        self.assertEqual(b @ c, c @ b.adjoint())
        self.assertEqual(b.power(4), identity.times_phase(2, 4))

    def test_representatives(self):
        basis = self.report.basis
        self.assertEqual(len(basis), 16)
        self.assertEqual(basis.elements[0], MonomialMatrix.identity(4))
        self.assertTrue(verify_orthonormal(basis).passed)

    def test_isomorphism(self):
        mapping = self.report.isomorphism
        self.assertIsNotNone(mapping)
        self.assertEqual(sorted(mapping.values()), list(range(16)))
        reference = z2_times_d4()
        table = verify_nice(self.report.basis).star
        for g in range(16):
            for h in range(16):
                self.assertEqual(mapping[reference[g][h]], table[mapping[g]][mapping[h]])

    def test_commutation_needs_abelian_index_group(self):
        sc = verify_nice(self.report.basis)
        self.assertFalse(sc.is_abelian())
        with self.assertRaises(NonAbelianIndexGroup):
            commutation_product(sc, [1], [2])


class TestGroupTables(unittest.TestCase):

    def test_reference_group(self):
        table = z2_times_d4()
        invariants = group_invariants(table)
        self.assertEqual(invariants['center'], 4)
        self.assertEqual(invariants['abelianization'], 8)
        self.assertEqual(invariants['order_profile'].count(4), 4)

    def test_no_isomorphism_to_abelian_group(self):
        # Z_2^4 has no element of order 4
        abelian = tuple(tuple(g ^ h for h in range(16)) for g in range(16))
        self.assertIsNone(find_isomorphism(z2_times_d4(), Z2_D4_GENERATORS, abelian))

    def test_identity_isomorphism(self):
        table = z2_times_d4()
        mapping = find_isomorphism(table, Z2_D4_GENERATORS, table)
        self.assertIsNotNone(mapping)


if __name__ == '__main__':
    unittest.main()
