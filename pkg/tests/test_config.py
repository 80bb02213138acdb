import unittest

from qzcodes.common import OutputFormat
from qzcodes.config import RunConfig, resolve


class TestRunConfig(unittest.TestCase):

    def test_defaults(self):
        config = RunConfig.from_env({})
        self.assertEqual(config, RunConfig())
        self.assertFalse(config.strict_decoder)
        self.assertFalse(config.slow)
        self.assertIs(config.output_format, OutputFormat.JSON)

    def test_environment(self):
        config = RunConfig.from_env({
            'QZCODES_SCAN_CAP': '1000',
            'QZCODES_STRICT': 'yes',
            'QZCODES_FORMAT': ' Text ',
            'QZCODES_SLOW': '1',
            'UNRELATED': 'ignored',
        })
        self.assertEqual(config.scan_cap, 1000)
        self.assertTrue(config.strict_decoder)
        self.assertTrue(config.slow)
        self.assertIs(config.output_format, OutputFormat.TEXT)

    def test_invalid_environment(self):
        for environ in ({'QZCODES_SLOW': 'maybe'}, {'QZCODES_AMBIENT_CAP': 'lots'}, {'QZCODES_FORMAT': 'xml'},
                        {'QZCODES_KL_TABLE_CAP': '0'}):
            with self.assertRaises(ValueError, msg=environ):
                RunConfig.from_env(environ)

    def test_replace_keeps_unset_fields(self):
        config = RunConfig(scan_cap=10).replace(scan_cap=None, strict_decoder=True)
        self.assertEqual(config.scan_cap, 10)
        self.assertTrue(config.strict_decoder)

    def test_validation(self):
        with self.assertRaises(ValueError):
            RunConfig(dense_dim_cap=-1)
        with self.assertRaises(ValueError):
            RunConfig(ambient_cap=True)
        with self.assertRaises(TypeError):
            RunConfig(output_format='json')

    def test_resolve(self):
        config = RunConfig(scan_cap=5)
        self.assertIs(resolve(config), config)
        self.assertIsInstance(resolve(None), RunConfig)


if __name__ == '__main__':
    unittest.main()
