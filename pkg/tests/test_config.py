import unittest
import os
import sys
import tempfile

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules import load_config
from modules.config import DEFAULT_CONFIG, create_default_config
from modules.exceptions import ConfigError


class TestConfig(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.test_file = os.path.join(self.tmp.name, "test_config.yaml")

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, text):
        with open(self.test_file, "w", encoding="utf-8") as f:
            f.write(text)

    def test_load_config_success(self):
        self._write("display_style: a\nexhaustive_cap: 8\n")
        config = load_config(self.test_file)
        self.assertEqual(config["display_style"], "a")
        self.assertEqual(config["exhaustive_cap"], 8)
        self.assertEqual(config["identity_cap"], DEFAULT_CONFIG["identity_cap"])

    def test_empty_file_gives_defaults(self):
        self._write("")
        self.assertEqual(load_config(self.test_file), DEFAULT_CONFIG)

    def test_unknown_keys_are_ignored(self):
        self._write("browser_type: firefox\n")
        self.assertNotIn("browser_type", load_config(self.test_file))

    def test_missing_explicit_file(self):
        with self.assertRaises(ConfigError):
            load_config(os.path.join(self.tmp.name, "missing.yaml"))

    def test_invalid_values(self):
        for text in ("display_style: b\n", "log_level_console: LOUD\n", "exhaustive_cap: 1\n", "- 1\n", "a: [\n"):
            with self.subTest(text=text):
                self._write(text)
                with self.assertRaises(ConfigError):
                    load_config(self.test_file)

    def test_generated_template_round_trips(self):
        create_default_config(self.test_file)
        self.assertEqual(load_config(self.test_file), DEFAULT_CONFIG)
        with self.assertRaises(ConfigError):
            create_default_config(self.test_file)


if __name__ == "__main__":
    unittest.main()
