"""
exceptions.py - アプリケーション全体で使用する例外クラスを定義するモジュール

各例外は exit_code を持ち、CLI はこの値をそのまま終了コードとして使用する。
- 0: 正常終了
- 1: 検証失敗
- 2: 使用方法・構文エラー
- 3: 意味エラー（ユニバース外のラベル、範囲外の番号、重なりなど）
- 4: 予期しない内部エラー
"""

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SEMANTIC = 3
EXIT_INTERNAL = 4


class ArsError(Exception):
    """すべてのアプリケーション例外の基底クラス"""

    exit_code = EXIT_USAGE

    def __init__(self, message, position=None):
        """
        Args:
            message (str): エラーメッセージ
            position (int): 入力文字列中の位置（0始まり）。位置を持たない場合はNone
        """
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self):
        if self.position is None:
            return self.message
        return f"{self.position + 1}文字目: {self.message}"


class UsageError(ArsError, ValueError):
    """引数やユニバース指定が不正な場合のエラー"""

    exit_code = EXIT_USAGE


class ConfigError(ArsError):
    """config.yaml の内容が不正な場合のエラー"""

    exit_code = EXIT_USAGE


class NotationSyntaxError(ArsError, ValueError):
    """記法の構文エラー（position に位置を持つ）"""

    exit_code = EXIT_USAGE


class SemanticError(ArsError, ValueError):
    """式や組合せの意味に関するエラー"""

    exit_code = EXIT_SEMANTIC


class LabelNotInUniverseError(SemanticError):
    pass


class PlaceOutOfRangeError(SemanticError):
    pass


class ClassOutOfRangeError(SemanticError):
    pass


class OverlapError(SemanticError):
    pass


class DuplicateLabelError(SemanticError):
    pass


class NotASubsetError(SemanticError):
    pass


class NotAMemberError(SemanticError):
    pass


class ExponentTooSmallError(SemanticError):
    pass


class KTooSmallError(SemanticError):
    pass


class UndefinedExponentError(SemanticError):
    pass


class IdentityViolationError(ArsError, ArithmeticError):
    """恒等式が成り立たない場合（算術のバグを意味する）"""

    exit_code = EXIT_VERIFY_FAILED
