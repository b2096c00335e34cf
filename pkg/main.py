"""
main.py - 組合せ記法（番号付きのクラス、準分数、k² 個の記号からなる言語）を扱うコマンドラインツール

サブコマンド:
- enumerate: クラスの組合せを番号付きで列挙
- decode: 式を組合せの全形に復号
- forms: 組合せのすべての書き方を表示
- table: k² 個の記号からなる言語表を出力（text / json）
- verify: 不変条件の検証スイートを実行
- claims: 2^e - 1 の主張の検証と類・種の分解
- init-config: デフォルトの config.yaml を生成

依存モジュール:
- modules/logger.py: カラー付きログ出力設定
- modules/config.py: 設定ファイルの読み込みとエラー処理
- modules/commands.py: 各サブコマンドの処理

終了コード: 0 正常、1 検証失敗、2 使用方法・構文エラー、3 意味エラー、4 内部エラー
"""

import sys
import argparse
import signal

from modules import setup_logger, load_config, __version__
from modules.commands import (
    FORMATS,
    STYLES,
    UniverseSpec,
    cmd_claims,
    cmd_decode,
    cmd_enumerate,
    cmd_forms,
    cmd_table,
    cmd_verify,
)
from modules.config import create_default_config, DEFAULT_CONFIG_PATH
from modules.exceptions import ArsError, EXIT_OK, EXIT_INTERNAL
from modules.logger import level_from_name
from modules.utils import error_and_exit

EXIT_INTERRUPTED = 130


def setup(config_path=None):
    """
    アプリケーション初期設定を行う

    Args:
        config_path (str): 設定ファイルのパス（省略時は config.yaml）

    Returns:
        tuple: (config, logger)
    """
    config = load_config(config_path)

    console_level = level_from_name(config["log_level_console"])
    file_level = level_from_name(config["log_level_file"])

    logger = setup_logger(log_file=config["log_file"], console_level=console_level, file_level=file_level)
    return config, logger


def signal_handler(sig, frame):
    """
    シグナルハンドラ（Ctrl+Cなどの割り込み処理）
    """
    print("\n処理を中断します。", file=sys.stderr)
    sys.exit(EXIT_INTERRUPTED)


def _universe(args):
    return UniverseSpec.from_args(args.universe, args.k)


def _style(args, config):
    return args.style or config["display_style"]


def handle_enumerate(args, config):
    return cmd_enumerate(_universe(args), args.class_number, _style(args, config)), EXIT_OK


def handle_decode(args, config):
    return cmd_decode(args.expression, _universe(args), _style(args, config)), EXIT_OK


def handle_forms(args, config):
    return cmd_forms(args.expression, _universe(args), _style(args, config)), EXIT_OK


def handle_table(args, config):
    output = cmd_table(_universe(args), args.format, _style(args, config), config["table_separator"])
    return output, EXIT_OK


def handle_verify(args, config):
    return cmd_verify(args.k_max, config["identity_cap"], config["exhaustive_cap"])


def handle_claims(args, config):
    return cmd_claims(args.decompose, _style(args, config)), EXIT_OK


def handle_init_config(args, config):
    create_default_config(args.path)
    return f"{args.path} を作成しました。\n", EXIT_OK


def build_parser():
    """
    コマンドライン引数のパーサを作る
    """
    parser = argparse.ArgumentParser(
        prog="ars-combinatoria",
        description="番号付きの組合せクラスと準分数記法による k² 個の記号の言語を扱うツール",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="設定ファイルのパス（省略時は config.yaml）")

    universe_parent = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    group = universe_parent.add_mutually_exclusive_group(required=True)
    group.add_argument("--universe", help="原始項のラベル（例: 3,6,7,9）")
    group.add_argument("--k", type=int, help="原始項の数（ラベル 1..k）")

    style_parent = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    style_parent.add_argument("--style", choices=STYLES, default=None, help="原始項の表示形式（省略時は設定値）")

    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("enumerate", parents=[universe_parent, style_parent], allow_abbrev=False,
                              help="クラスの組合せを番号付きで列挙")
    p.add_argument("--class", dest="class_number", type=int, required=True, help="クラス番号（指数）")
    p.set_defaults(handler=handle_enumerate)

    p = subparsers.add_parser("decode", parents=[universe_parent, style_parent], allow_abbrev=False,
                              help="式を組合せの全形に復号")
    p.add_argument("expression", help="式（例: 1/2.9）")
    p.set_defaults(handler=handle_decode)

    p = subparsers.add_parser("forms", parents=[universe_parent, style_parent], allow_abbrev=False,
                              help="組合せのすべての書き方を表示")
    p.add_argument("expression", help="式（例: 3.6.9）")
    p.set_defaults(handler=handle_forms)

    p = subparsers.add_parser("table", parents=[universe_parent, style_parent], allow_abbrev=False,
                              help="言語表を出力")
    p.add_argument("--format", choices=FORMATS, default="text", help="出力形式")
    p.set_defaults(handler=handle_table)

    p = subparsers.add_parser("verify", allow_abbrev=False, help="検証スイートを実行")
    p.add_argument("--k-max", dest="k_max", type=int, required=True, help="検査する k の上限（2以上）")
    p.set_defaults(handler=handle_verify)

    p = subparsers.add_parser("claims", parents=[style_parent], allow_abbrev=False,
                              help="2^e-1 の主張の検証と類・種の分解")
    p.add_argument("--decompose", default=None, help="分解する組合せ（例: 1,2,3）")
    p.set_defaults(handler=handle_claims)

    p = subparsers.add_parser("init-config", allow_abbrev=False, help="デフォルトの config.yaml を生成")
    p.add_argument("--path", default=DEFAULT_CONFIG_PATH, help="生成先のパス")
    p.set_defaults(handler=handle_init_config)

    return parser


def run(argv=None):
    """
    コマンドを実行し、終了コードを返す。

    Args:
        argv (list): 引数（省略時は sys.argv[1:]）

    Returns:
        int: 終了コード
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse の使用方法エラー（2）と --help / --version（0）
        return e.code

    try:
        config, logger = setup(args.config)
    except ArsError as e:
        setup_logger().error(str(e))
        return e.exit_code

    logger.debug(f"STARTUP - ArsCombinatoria v{__version__}: {args.command}")

    try:
        output, code = args.handler(args, config)
    except ArsError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    sys.stdout.write(output)
    return code


def main():
    """
    アプリケーションのエントリーポイント。
    """
    signal.signal(signal.SIGINT, signal_handler)
    try:
        code = run()
    except Exception as e:
        error_and_exit(f"予期しないエラーが発生しました: {type(e).__name__}: {e}", setup_logger(), EXIT_INTERNAL)
    sys.exit(code)


if __name__ == "__main__":
    main()
