"""
utils.py - 共通ユーティリティ関数を提供するモジュール
"""

import logging
import sys

from modules.exceptions import EXIT_INTERNAL


def error_and_exit(message, logger=None, exit_code=EXIT_INTERNAL):
    """
    致命的なエラーをログに記録して、スクリプトを終了する。

    Args:
        message (str): エラーメッセージ
        logger: 使用するロガー（省略時はルートロガー）
        exit_code (int): 終了コード（省略時は内部エラーの 4）
    """
    if logger:
        logger.error(message)
    else:
        logging.error(message)
    sys.exit(exit_code)


def parse_label_list(text):
    """
    "3,6,7,9" 形式の文字列を整数のリストに変換する。

    Args:
        text (str): カンマ区切りの整数列

    Returns:
        list: 整数のリスト。数値に変換できない要素があればNone
    """
    items = [item.strip() for item in text.split(",")]
    if not items or any(not (item.isascii() and item.isdigit()) for item in items):
        return None
    return [int(item) for item in items]
