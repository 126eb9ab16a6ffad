import os
import unittest
from unittest import mock

from config.scroll_config import ScrollConfig, get_scroll_config, scroll_config


class TestScrollConfig(unittest.TestCase):
    def test_defaults_validate(self):
        config = ScrollConfig()
        self.assertTrue(config.validate_config())
        self.assertEqual(config.cofactor_max_size, 6)

    def test_environment_override(self):
        with mock.patch.dict(os.environ, {"SCROLL_SEED": "7", "SCROLL_MAP_DEGREE_TRIALS": "9"}):
            config = ScrollConfig()
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.map_degree_trials, 9)

    def test_invalid_counts(self):
        with self.assertRaises(ValueError):
            ScrollConfig(map_degree_trials=0).validate_config()
        with self.assertRaises(ValueError):
            ScrollConfig(seed=-1).validate_config()

    def test_global_instance(self):
        self.assertIs(get_scroll_config(), scroll_config)


if __name__ == "__main__":
    unittest.main()
