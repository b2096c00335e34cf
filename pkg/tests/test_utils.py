import unittest
import os
import sys
from unittest.mock import MagicMock

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.commands import UniverseSpec
from modules.combinatorics import Universe
from modules.exceptions import EXIT_INTERNAL, EXIT_VERIFY_FAILED, UsageError
from modules.utils import error_and_exit, parse_label_list


class TestParseLabelList(unittest.TestCase):
    def test_valid_list(self):
        self.assertEqual(parse_label_list("3,6,7,9"), [3, 6, 7, 9])
        self.assertEqual(parse_label_list(" 1, 2 "), [1, 2])

    def test_invalid_list(self):
        for text in ("", "3,,6", "3,-6", "x", "3;6", "²"):
            with self.subTest(text=text):
                self.assertIsNone(parse_label_list(text))


class TestUniverseSpec(unittest.TestCase):
    def test_explicit_labels(self):
        self.assertEqual(UniverseSpec.from_args("3,6,7,9").resolve(), Universe((3, 6, 7, 9)))

    def test_size(self):
        self.assertEqual(UniverseSpec.from_args(k=6).resolve(), Universe.of_size(6))

    def test_invalid(self):
        with self.assertRaises(UsageError):
            UniverseSpec.from_args("9,3").resolve()
        with self.assertRaises(UsageError):
            UniverseSpec.from_args(k=0).resolve()
        with self.assertRaises(UsageError):
            UniverseSpec.from_args()
        with self.assertRaises(UsageError):
            UniverseSpec.from_args("1,2", 2)


class TestErrorAndExit(unittest.TestCase):
    def test_logs_and_exits_with_code(self):
        logger = MagicMock()
        with self.assertRaises(SystemExit) as ctx:
            error_and_exit("致命的なエラー", logger, 3)
        self.assertEqual(ctx.exception.code, 3)
        logger.error.assert_called_once_with("致命的なエラー")

    def test_default_exit_code_is_internal_error(self):
        logger = MagicMock()
        with self.assertRaises(SystemExit) as ctx:
            error_and_exit("予期しないエラー", logger)
        self.assertEqual(ctx.exception.code, EXIT_INTERNAL)
        self.assertEqual(ctx.exception.code, 4)
        self.assertNotEqual(ctx.exception.code, EXIT_VERIFY_FAILED)


if __name__ == "__main__":
    unittest.main()
