"""
verifier.py - 不変条件の検証スイートを実行するモジュール（verify サブコマンドの本体）

各検査は (名前, 成否, 詳細) を返し、公式レベルの検査は identity_cap まで、
全数検査は exhaustive_cap までの k について行う。
"""

from dataclasses import dataclass

from tqdm import tqdm

from modules.claims import (
    complexiones_simpliciter,
    genus_species_decomposition,
    language_size,
    leibniz_claim_check,
    proposition_terms,
    semi_fractional_count,
)
from modules.combinatorics import (
    Universe,
    binomial,
    brute_force_class,
    enumerate_class,
    rank,
    unrank,
)
from modules.logger import setup_logger
from modules.notation import parse, render
from modules.semantics import all_forms, decode, encode_semi_fractional, generate_language

logger = setup_logger()

# 3.6.9 の書き方（ユニバース 3.6.7.9）
WORKED_EXAMPLE_FORMS = ["3.6.9", "1/2.9", "3/2.6", "5/2.3"]

# 36 記号の言語表の準分数部分 (分子, 残す項)
LANGUAGE_36_FRACTIONS = [
    [(1, 5), (2, 4), (4, 3), (7, 2), (11, 1)],
    [(1, 6), (3, 4), (5, 3), (8, 2), (12, 1)],
    [(2, 6), (3, 5), (6, 3), (9, 2), (13, 1)],
    [(4, 6), (5, 5), (6, 4), (10, 2), (14, 1)],
    [(7, 6), (8, 5), (9, 4), (10, 3), (15, 1)],
    [(11, 6), (12, 5), (13, 4), (14, 3), (15, 2)],
]


STATUS_PASS = "PASS"
STATUS_FAIL = "FAIL"
STATUS_SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    """
    検査結果。status は PASS / FAIL / SKIP（対象となる k がない場合）
    """
    name: str
    status: str
    detail: str

    @property
    def passed(self):
        return self.status == STATUS_PASS

    @property
    def failed(self):
        return self.status == STATUS_FAIL


def check_proposition_identity(k_max):
    for k in range(2, k_max + 1):
        terms = proposition_terms(k)
        if terms.total != k * k:
            return False, f"k = {k}: {terms.full_forms} + {terms.semi_fractional} ≠ {k * k}"
    return True, f"k = 2..{k_max}"


def check_bijection(k_max):
    for k in range(1, k_max + 1):
        universe = Universe.of_size(k)
        for c in range(0, k + 1):
            oracle = brute_force_class(universe, c)
            if enumerate_class(universe, c) != oracle:
                return False, f"k = {k}, c = {c}: 列挙順がオラクルと一致しません"
            for place, s in enumerate(oracle, start=1):
                if rank(s, universe) != place:
                    return False, f"k = {k}, c = {c}: rank({list(s.members)}) ≠ {place}"
                if unrank(c, place, universe) != s:
                    return False, f"k = {k}, c = {c}: unrank({place}) ≠ {list(s.members)}"
            if len(oracle) != binomial(k, c):
                return False, f"k = {k}, c = {c}: 個数が C({k},{c}) と一致しません"
    return True, f"k = 1..{k_max}"


def check_label_independence(k_max):
    for k in range(1, k_max + 1):
        plain = Universe.of_size(k)
        # 1..k を 1, 4, 7, ... に付け替える
        relabeled = Universe(tuple(3 * i + 1 for i in range(k)))
        for c in range(0, k + 1):
            for s in enumerate_class(plain, c):
                moved = relabeled.combination(3 * (label - 1) + 1 for label in s.members)
                if rank(s, plain) != rank(moved, relabeled):
                    return False, f"k = {k}: {list(s.members)} の番号がラベルに依存しています"
    return True, f"k = 1..{k_max}"


def check_simpliciter(k_max):
    for k in range(1, k_max + 1):
        universe = Universe.of_size(k)
        brute = sum(len(brute_force_class(universe, c)) for c in range(1, k + 1))
        if brute != complexiones_simpliciter(k):
            return False, f"k = {k}: {brute} ≠ 2^{k}-1"
    return True, f"k = 1..{k_max}"


def check_language_sizes(k_max):
    for k in range(2, k_max + 1):
        table = generate_language(Universe.of_size(k))
        if table.sign_count != language_size(k):
            return False, f"k = {k}: 記号数 {table.sign_count} ≠ {k * k}"
        if k >= 3 and table.fraction_sign_count() != semi_fractional_count(k):
            return False, f"k = {k}: 準分数形の数 {table.fraction_sign_count()} ≠ {k * (k - 1)}"
        signs = table.all_signs()
        if len(set(signs)) != len(signs):
            return False, f"k = {k}: 記号が重複しています"
    return True, f"k = 2..{k_max}"


def check_cosignification(k_max):
    # k = 2 の表は記載どおりの再現なので対象外
    if k_max < 3:
        return None, f"k = 3..{k_max}（対象なし）"
    for k in range(3, k_max + 1):
        universe = Universe.of_size(k)
        table = generate_language(universe)
        meanings = []
        for row in table.rows:
            decoded = {decode(form, universe) for form in row.forms}
            if decoded != {row.denotation}:
                return False, f"k = {k}: 行 {row.place} の記号が同じ組合せを表していません"
            meanings.append(row.denotation)
        if len(set(meanings)) != len(meanings):
            return False, f"k = {k}: 異なる行が同じ組合せを表しています"
    return True, f"k = 3..{k_max}"


def check_round_trips(k_max):
    for k in range(2, k_max + 1):
        universe = Universe.of_size(k)
        for form in (f for row in generate_language(universe).rows for f in row.forms):
            if parse(render(form)) != form:
                return False, f"k = {k}: {render(form)} の parse∘render が恒等でありません"
        for e in range(2, k + 1):
            for s in enumerate_class(universe, e):
                for x in s.members:
                    if decode(encode_semi_fractional(s, x, universe), universe) != s:
                        return False, f"k = {k}: {list(s.members)}, {x} の decode∘encode が恒等でありません"
    return True, f"k = 2..{k_max}"


def check_genus_species(k_max):
    for e in range(1, k_max + 1):
        groups = genus_species_decomposition(Universe.of_size(e).full())
        total = sum(len(group) for group in groups.values())
        if total != complexiones_simpliciter(e):
            return False, f"e = {e}: {total} ≠ 2^{e}-1"
    return True, f"e = 1..{k_max}"


def check_claims(_k_max):
    reports = [leibniz_claim_check(e) for e in (2, 3, 4)]
    matching = [report.exponent for report in reports if report.matches]
    detail = ", ".join(f"e = {r.exponent}: {r.paper_count} vs {r.simpliciter_count}" for r in reports)
    return matching == [3], detail


def check_worked_examples(_k_max):
    # 3.6.9 の4形式
    universe = Universe((3, 6, 7, 9))
    forms = [render(f) for f in all_forms(universe.combination((3, 6, 9)), universe)]
    if forms != WORKED_EXAMPLE_FORMS:
        return False, f"3.6.9 の書き方: {forms}"

    # 36 記号の表の準分数部分
    six = Universe.of_size(6)
    for row, expected in zip(generate_language(six).rows, LANGUAGE_36_FRACTIONS):
        pairs = [(form.atoms[0].place, form.atoms[1].label) for form in row.forms[1:]]
        if pairs != expected:
            return False, f"36 記号の表の行 {row.place}: {pairs}"
    return True, "3.6.9 の4形式、36 記号の表"


def build_checks(k_max, identity_cap=64, exhaustive_cap=10):
    """
    実行する検査のリストを作る

    Args:
        k_max (int): 検査する k の上限
        identity_cap (int): 公式レベルの検査の上限
        exhaustive_cap (int): 全数検査の上限

    Returns:
        list: (名前, 関数, 上限) のリスト
    """
    formula = min(k_max, identity_cap)
    exhaustive = min(k_max, exhaustive_cap)
    return [
        ("proposition-identity", check_proposition_identity, formula),
        ("rank-unrank-bijection", check_bijection, exhaustive),
        ("label-independence", check_label_independence, exhaustive),
        ("complexiones-simpliciter", check_simpliciter, exhaustive),
        ("language-size", check_language_sizes, exhaustive),
        ("co-signification", check_cosignification, exhaustive),
        ("round-trips", check_round_trips, exhaustive),
        ("genus-species", check_genus_species, exhaustive),
        ("leibniz-claim", check_claims, exhaustive),
        ("worked-examples", check_worked_examples, exhaustive),
    ]


def run_checks(k_max, identity_cap=64, exhaustive_cap=10):
    """
    検証スイートを実行する。進捗は端末の場合のみ標準エラー出力に表示する。

    Returns:
        list: CheckResult のリスト
    """
    results = []
    checks = build_checks(k_max, identity_cap, exhaustive_cap)
    for name, check, limit in tqdm(checks, desc="verify", unit="check", disable=None, leave=False):
        try:
            passed, detail = check(limit)
        except Exception as e:
            logger.error(f"{name} の実行中にエラー: {type(e).__name__}: {e}")
            passed, detail = False, f"{type(e).__name__}: {e}"
        # None は対象となる k がなかったことを表す
        if passed is None:
            status = STATUS_SKIP
        else:
            status = STATUS_PASS if passed else STATUS_FAIL
        logger.info(f"{name}: {status} ({detail})")
        results.append(CheckResult(name, status, detail))
    return results
