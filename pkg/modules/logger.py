"""
logger.py - アプリケーション全体で共通使用されるロガー（logging）を設定するモジュール

機能:
- コンソール出力：標準エラー出力に色付きで視認性の高いログ（端末の場合のみ色付け）
- ファイル出力：log_file を指定した場合のみ全ログを記録
- 二重設定防止：ロガーがすでに設定済みならハンドラを追加せず、レベルのみ更新する
"""

import os
import sys
import logging

LOGGER_NAME = "ArsCombinatoria"

LOG_FORMAT = "%(levelname)-9s %(asctime)s [%(filename)s:%(lineno)d] %(message)s"

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL
}


class ColorFormatter(logging.Formatter):
    """
    コンソール出力用のカラー対応フォーマッタ
    """
    COLOR_MAP = {
        logging.DEBUG: "\033[37m",     # 白
        logging.INFO: "\033[32m",      # 緑
        logging.WARNING: "\033[33m",   # 黄
        logging.ERROR: "\033[31m",     # 赤
        logging.CRITICAL: "\033[41m"   # 背景赤
    }
    RESET = "\033[0m"

    def __init__(self, fmt, use_color=True):
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record):
        message = super().format(record)
        if not self.use_color:
            return message
        color = self.COLOR_MAP.get(record.levelno, self.RESET)
        return f"{color}{message}{self.RESET}"


def setup_logger(name=LOGGER_NAME, log_file="", console_level=logging.WARNING, file_level=logging.DEBUG):
    """
    カスタムロガーを初期化し、StreamHandler（標準エラー出力）と
    必要に応じて FileHandler（log_file）を設定して返す。

    Args:
        name (str): ロガー名
        log_file (str): ログファイルのパス（空文字の場合はファイル出力なし）
        console_level: コンソール出力のログレベル
        file_level: ファイル出力のログレベル

    Returns:
        logging.Logger: 設定済みのロガーオブジェクト
    """
    logger = logging.getLogger(name)

    # すでに設定済みの場合はレベルのみ更新
    if logger.handlers:
        _apply_levels(logger, log_file, console_level, file_level)
        return logger

    logger.setLevel(logging.DEBUG)  # 最も低いレベルに設定
    logger.propagate = False

    # コンソール用ハンドラ（色付き）
    st_handler = logging.StreamHandler(sys.stderr)
    st_handler.setLevel(console_level)
    st_handler.setFormatter(ColorFormatter(LOG_FORMAT, use_color=sys.stderr.isatty()))
    logger.addHandler(st_handler)

    if log_file:
        _add_file_handler(logger, log_file, file_level)

    return logger


def _apply_levels(logger, log_file, console_level, file_level):
    """
    既存ロガーのハンドラにレベルを再適用し、未設定のファイル出力を追加する
    """
    has_file = False
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler):
            handler.setLevel(file_level)
            has_file = True
        else:
            handler.setLevel(console_level)

    if log_file and not has_file:
        _add_file_handler(logger, log_file, file_level)


def _add_file_handler(logger, log_file, file_level):
    # ログディレクトリの作成
    log_dir = os.path.dirname(log_file)
    if log_dir and not os.path.exists(log_dir):
        os.makedirs(log_dir, exist_ok=True)

    fl_handler = logging.FileHandler(filename=log_file, encoding="utf-8")
    fl_handler.setLevel(file_level)
    fl_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(fl_handler)


def level_from_name(name, default=logging.INFO):
    """
    ログレベル名（"DEBUG" など）を logging の定数に変換する

    Args:
        name (str): ログレベル名
        default: 該当しない場合の値

    Returns:
        int: ログレベル
    """
    return LOG_LEVELS.get(str(name).upper(), default)
