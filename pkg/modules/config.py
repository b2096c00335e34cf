"""
config.py - アプリケーション設定ファイル(config.yaml)の読み込み・検証・生成を行うモジュール

主な機能:
- 設定ファイルの存在確認（存在しない場合はデフォルト値を使用）
- デフォルト設定ファイルの生成（init-config サブコマンド）
- YAML形式の読み込みと検証
"""

import os
import yaml

from modules.exceptions import ConfigError
from modules.logger import setup_logger, LOG_LEVELS

# ロガー初期化
logger = setup_logger()

DEFAULT_CONFIG_PATH = "config.yaml"

# デフォルト設定（初期値）
DEFAULT_CONFIG = {
    # ログ設定
    "log_level_console": "WARNING",  # コンソールに表示するログレベル (DEBUG/INFO/WARNING/ERROR/CRITICAL)
    "log_level_file": "DEBUG",       # ファイルに記録するログレベル
    "log_file": "",                  # ログファイルのパス（空文字の場合は出力しない）

    # 表示設定
    "display_style": "integer",      # 原始項の表示形式 ("integer" または "a")
    "table_separator": "\t",         # table 出力の列区切り

    # 検証設定
    "identity_cap": 64,              # 恒等式を検査する k の上限
    "exhaustive_cap": 10             # 全数検査を行う k の上限
}

DISPLAY_STYLES = ("integer", "a")

# YAMLファイル用のテンプレート
YAML_TEMPLATE = """# ArsCombinatoria 設定ファイル
#
# このファイルでは、アプリケーションの動作を制御するための設定を行います。
# 各設定項目の説明は、項目の横のコメントを参照してください。

#=====================================================================
# ログ設定
#=====================================================================
log_level_console: {log_level_console}  # コンソールに表示するログレベル (DEBUG/INFO/WARNING/ERROR/CRITICAL)
log_level_file: {log_level_file}  # ファイルに記録するログレベル
log_file: '{log_file}'  # ログファイルのパス（空文字の場合は出力しない）

#=====================================================================
# 表示設定
#=====================================================================
display_style: {display_style}  # 原始項の表示形式 ('integer' は 1.2.3、'a' は a1.a2.a3)
table_separator: "\\t"  # table 出力の列区切り

#=====================================================================
# 検証設定
#=====================================================================
identity_cap: {identity_cap}  # verify で恒等式を検査する k の上限
exhaustive_cap: {exhaustive_cap}  # verify で全数検査を行う k の上限
"""


def create_default_config(path=DEFAULT_CONFIG_PATH):
    """
    デフォルトの config.yaml を生成する。

    Args:
        path (str): 生成先のファイルパス

    Raises:
        ConfigError: ファイルがすでに存在する場合
    """
    if os.path.exists(path):
        raise ConfigError(f"{path} は既に存在します。上書きはしません。")

    with open(path, "w", encoding="utf-8") as f:
        f.write(YAML_TEMPLATE.format(**DEFAULT_CONFIG))

    logger.info(f"{path} にデフォルト設定を作成しました。必要に応じて編集してください。")


def load_config(path=None):
    """
    設定ファイルを読み込み、デフォルト値とマージして返す。

    Args:
        path (str): 読み込む設定ファイルのパス（省略時は config.yaml、存在しなければデフォルト値）

    Returns:
        dict: 設定内容を格納した辞書

    Raises:
        ConfigError: 明示したファイルが存在しない場合、YAMLの構文が壊れている場合、値が不正な場合
    """
    config = dict(DEFAULT_CONFIG)

    if path is None:
        path = DEFAULT_CONFIG_PATH
        if not os.path.exists(path):
            logger.debug(f"{path} が見つからないため、デフォルト設定を使用します。")
            return config
    elif not os.path.exists(path):
        raise ConfigError(f"設定ファイルが見つかりません: {path}")

    try:
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"{path} の形式に誤りがあります: {e}")

    if loaded is None:
        return config
    if not isinstance(loaded, dict):
        raise ConfigError(f"{path} の最上位はマッピングである必要があります。")

    for key, value in loaded.items():
        if key not in DEFAULT_CONFIG:
            logger.warning(f"未知の設定項目を無視します: {key}")
            continue
        config[key] = value

    validate_config(config)
    logger.debug(f"{path} を読み込みました。")
    return config


def validate_config(config):
    """
    設定値を検証する。

    Args:
        config (dict): 検証する設定

    Raises:
        ConfigError: 値が不正な場合
    """
    for key in ("log_level_console", "log_level_file"):
        if str(config[key]).upper() not in LOG_LEVELS:
            raise ConfigError(f"{key} の値が不正です: {config[key]}")

    if config["display_style"] not in DISPLAY_STYLES:
        raise ConfigError(f"display_style は {DISPLAY_STYLES} のいずれかを指定してください: {config['display_style']}")

    if not isinstance(config["log_file"], str):
        raise ConfigError("log_file は文字列で指定してください。")

    if not isinstance(config["table_separator"], str) or not config["table_separator"]:
        raise ConfigError("table_separator は空でない文字列で指定してください。")

    for key in ("identity_cap", "exhaustive_cap"):
        value = config[key]
        if isinstance(value, bool) or not isinstance(value, int) or value < 2:
            raise ConfigError(f"{key} は2以上の整数で指定してください: {value}")
