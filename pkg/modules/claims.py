"""
claims.py - 数え上げに関する主張（計数公式・命題の二項恒等式・2^k-1 の主張の検証）を扱うモジュール

派生項の数について、指数 2, 3, 4 ではそれぞれ別の方法で数えられている:
- e = 2: 2つの原始項を書く（原始項の組）→ 2
- e = 3: 類と種による部分集合の数え上げ → 7
- e = 4: 3項組合せの準分数形の式 → 16
2^e - 1（complexiones simpliciter）と一致するのは e = 3 のときだけである。
"""

from dataclasses import dataclass
from enum import Enum

from modules.combinatorics import Universe, binomial, enumerate_class
from modules.exceptions import IdentityViolationError, KTooSmallError, UndefinedExponentError, UsageError
from modules.logger import setup_logger
from modules.semantics import generate_language

logger = setup_logger()


class Methodology(Enum):
    """派生項の数え方"""
    PRIMITIVE_PAIR = "primitive-pair"
    GENUS_SPECIES = "genus-species"
    SEMI_FRACTIONAL = "semi-fractional"


@dataclass(frozen=True)
class DerivedTermCount:
    exponent: int
    count: int
    methodology: Methodology


@dataclass(frozen=True)
class ClaimReport:
    """
    派生項の数と 2^e - 1 の比較結果
    """
    exponent: int
    paper_count: int
    simpliciter_count: int
    methodology: Methodology

    @property
    def matches(self):
        return self.paper_count == self.simpliciter_count


@dataclass(frozen=True)
class PropositionTerms:
    """言語の大きさの内訳: 全形 C(k,k-1) 個と準分数形 C(k,k-1)·C(k-1,k-2) 個"""
    k: int
    full_forms: int
    semi_fractional: int

    @property
    def total(self):
        return self.full_forms + self.semi_fractional


def _check_positive(k, minimum):
    if isinstance(k, bool) or not isinstance(k, int):
        raise UsageError(f"整数が必要です: {k!r}")
    if k < minimum:
        raise KTooSmallError(f"k は {minimum} 以上である必要があります（k = {k}）。")


def complexiones_simpliciter(k):
    """空でない組合せの総数 2^k - 1 を返す"""
    _check_positive(k, 1)
    return (1 << k) - 1


def proposition_terms(k):
    """
    言語の記号数を公式どおりに内訳つきで計算する

    Args:
        k (int): 原始項の数（k ≥ 2）

    Returns:
        PropositionTerms: 全形と準分数形の数
    """
    _check_positive(k, 2)
    rows = binomial(k, k - 1)
    return PropositionTerms(k, rows, rows * binomial(k - 1, k - 2))


def language_size(k):
    """
    言語の記号数 k² を返す。

    C(k,k-1)·(1 + C(k-1,k-2)) を別に計算し、k² と一致することを確認する。

    Raises:
        IdentityViolationError: 一致しない場合（算術のバグを意味する）
    """
    terms = proposition_terms(k)
    if terms.total != k * k:
        raise IdentityViolationError(f"k = {k}: {terms.total} ≠ {k * k}")
    return k * k


def semi_fractional_count(k):
    """準分数形の記号数 k(k-1) を返す"""
    return proposition_terms(k).semi_fractional


def genus_species_decomposition(s):
    """
    組合せの空でない部分集合を指数ごとに分類する（類・中間の類・種）。

    Args:
        s (Combination): 組合せ（指数 1 以上）

    Returns:
        dict: 指数 → 辞書式順の Combination のリスト（指数の降順）
    """
    if s.exponent < 1:
        raise KTooSmallError("空の組合せは分解できません。")
    local = Universe(s.members)
    return {e: enumerate_class(local, e) for e in range(s.exponent, 0, -1)}


def paper_derived_term_count(e):
    """
    指数 e の組合せから派生する項の数を、指数ごとの数え方で返す。

    Args:
        e (int): 指数（2, 3, 4 のみ）

    Returns:
        DerivedTermCount: 数と数え方

    Raises:
        UndefinedExponentError: e が 2, 3, 4 以外の場合
    """
    if e == 2:
        # 原始項を2つ書く
        pair = Universe.of_size(2).full()
        count = len(pair.members)
        methodology = Methodology.PRIMITIVE_PAIR
    elif e == 3:
        genus = Universe.of_size(3).full()
        count = sum(len(group) for group in genus_species_decomposition(genus).values())
        methodology = Methodology.GENUS_SPECIES
    elif e == 4:
        count = generate_language(Universe.of_size(4)).sign_count
        methodology = Methodology.SEMI_FRACTIONAL
    else:
        raise UndefinedExponentError(f"指数 {e} の派生項の数は定義されていません（2, 3, 4 のみ）。")

    logger.debug(f"指数 {e}: 派生項 {count}（{methodology.value}）")
    return DerivedTermCount(e, count, methodology)


def leibniz_claim_check(e):
    """
    指数 e の派生項の数と 2^e - 1 を比較する

    Returns:
        ClaimReport: 比較結果（一致するのは e = 3 のみ）
    """
    derived = paper_derived_term_count(e)
    return ClaimReport(e, derived.count, complexiones_simpliciter(e), derived.methodology)
