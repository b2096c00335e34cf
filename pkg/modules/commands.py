"""
commands.py - 各サブコマンドの処理を行うモジュール

各 cmd_* 関数は標準出力に書く文字列を返し、エラーは例外として送出する。
終了コードへの変換は main.py が行う。
"""

import json
from dataclasses import dataclass

from modules.claims import genus_species_decomposition, leibniz_claim_check
from modules.combinatorics import Universe, enumerate_class
from modules.exceptions import (
    EXIT_OK,
    EXIT_VERIFY_FAILED,
    ClassOutOfRangeError,
    KTooSmallError,
    UsageError,
)
from modules.logger import setup_logger
from modules.notation import STYLE_A, STYLE_INTEGER, parse, render
from modules.semantics import all_forms, decode, full_form, generate_language
from modules.utils import parse_label_list
from modules.verifier import run_checks

logger = setup_logger()

FORMAT_TEXT = "text"
FORMAT_JSON = "json"


@dataclass(frozen=True)
class UniverseSpec:
    """
    ユニバースの指定（明示的なラベル列、またはサイズ k による 1..k）
    """
    labels: tuple = None
    k: int = None

    @classmethod
    def from_args(cls, universe_text=None, k=None):
        if (universe_text is None) == (k is None):
            raise UsageError("--universe と --k のどちらか一方を指定してください。")
        if universe_text is None:
            return cls(k=k)
        labels = parse_label_list(universe_text)
        if labels is None:
            raise UsageError(f"--universe はカンマ区切りの正の整数で指定してください: {universe_text}")
        return cls(labels=tuple(labels))

    def resolve(self):
        """Universe に変換する（不正な場合は UsageError）"""
        if self.labels is not None:
            return Universe(self.labels)
        return Universe.of_size(self.k)


def format_combination(s, style=STYLE_INTEGER):
    if not s.members:
        return ""
    return render(full_form(s), style)


def cmd_enumerate(universe_spec, c, style=STYLE_INTEGER):
    """
    クラス c の組合せを "(番号) x.y.z" 形式で列挙する
    """
    universe = universe_spec.resolve()
    try:
        members = enumerate_class(universe, c)
    except ClassOutOfRangeError as e:
        raise UsageError(e.message)
    logger.info(f"クラス {c} の組合せ: {len(members)} 件")
    lines = [f"({place}) {format_combination(s, style)}".rstrip() for place, s in enumerate(members, start=1)]
    return "\n".join(lines) + "\n"


def cmd_decode(expr_text, universe_spec, style=STYLE_INTEGER):
    """
    式を復号し、組合せの全形を返す
    """
    universe = universe_spec.resolve()
    expr = parse(expr_text)
    return format_combination(decode(expr, universe), style) + "\n"


def cmd_forms(expr_text, universe_spec, style=STYLE_INTEGER):
    """
    式が表す組合せのすべての書き方を1行ずつ返す
    """
    universe = universe_spec.resolve()
    combination = decode(parse(expr_text), universe)
    forms = all_forms(combination, universe)
    logger.info(f"{render(full_form(combination))}: {len(forms)} 通りの書き方")
    return "".join(render(form, style) + "\n" for form in forms)


def cmd_table(universe_spec, output_format=FORMAT_TEXT, style=STYLE_INTEGER, separator="\t"):
    """
    言語表を出力する。

    Args:
        universe_spec (UniverseSpec): ユニバースの指定
        output_format (str): "text"（行ごとにタブ区切り）または "json"
        style (str): 原始項の表示形式（text のみ）
        separator (str): text の列区切り

    Returns:
        str: 出力文字列
    """
    # 言語表の生成
    universe = universe_spec.resolve()
    try:
        table = generate_language(universe)
    except KTooSmallError as e:
        raise UsageError(e.message)

    if table.has_caveat:
        logger.warning("k = 2 の表は記載どおりに再現しています。準分数の記号は行の組合せとは異なる組合せを表します。")

    # 出力形式に応じて整形
    if output_format == FORMAT_JSON:
        return json.dumps(table.to_dict(), ensure_ascii=False, indent=2) + "\n"
    return "".join(separator.join(row.signs(style)) + "\n" for row in table.rows)


def cmd_verify(k_max, identity_cap=64, exhaustive_cap=10):
    """
    検証スイートを実行する

    Returns:
        tuple: (出力文字列, 終了コード)
    """
    if k_max < 2:
        raise UsageError(f"--k-max は2以上で指定してください（{k_max}）。")

    # 検査の実行
    results = run_checks(k_max, identity_cap, exhaustive_cap)
    lines = [f"{r.status} {r.name}: {r.detail}" for r in results]

    # 集計（SKIP は失敗として扱わない）
    passed = sum(1 for r in results if r.passed)
    failed = sum(1 for r in results if r.failed)
    skipped = len(results) - passed - failed
    summary = f"{passed}/{len(results)} checks passed"
    if skipped:
        summary += f", {skipped} skipped"
    lines.append(summary)
    code = EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED
    return "\n".join(lines) + "\n", code


def cmd_claims(decompose_text=None, style=STYLE_INTEGER):
    """
    2^e - 1 の主張の検証結果と、必要に応じて類・種の分解を返す
    """
    # 指数 2, 3, 4 の比較
    lines = ["e\tpaper\t2^e-1\tmatch\tmethodology"]
    for e in (2, 3, 4):
        report = leibniz_claim_check(e)
        match = "yes" if report.matches else "no"
        lines.append(f"{e}\t{report.paper_count}\t{report.simpliciter_count}\t{match}\t{report.methodology.value}")

    # 類・種の分解（指数の降順）
    if decompose_text is not None:
        labels = parse_label_list(decompose_text)
        if labels is None or not labels:
            raise UsageError(f"--decompose はカンマ区切りの正の整数で指定してください: {decompose_text}")
        genus = Universe(tuple(labels)).full()
        groups = genus_species_decomposition(genus)
        lines.append("")
        for exponent, group in groups.items():
            lines.append(f"{exponent}: " + " ".join(format_combination(s, style) for s in group))
        lines.append(f"total: {sum(len(group) for group in groups.values())}")

    return "\n".join(lines) + "\n"


STYLES = (STYLE_INTEGER, STYLE_A)
FORMATS = (FORMAT_TEXT, FORMAT_JSON)
