"""
combinatorics.py - 組合せのクラスを列挙・順位付け（rank）・逆順位付け（unrank）するモジュール

このモジュールでは、以下の機能を提供:
- 番号付けされた原始項の集合（Universe）
- 組合せ（Combination）とクラス参照（ClassRef）
- 二項係数、クラスの辞書式列挙
- 組合せ数系（二項係数の和）による rank / unrank
- テスト・検証用の全列挙オラクル

すべての演算は整数のみで行い、浮動小数点は使用しない。
Python の int は任意精度のため、オーバーフローは発生しない。
"""

import math
from dataclasses import dataclass
from itertools import combinations

from modules.exceptions import (
    ClassOutOfRangeError,
    NotASubsetError,
    PlaceOutOfRangeError,
    UsageError,
)
from modules.logger import setup_logger

logger = setup_logger()


def binomial(n, m):
    """
    二項係数 C(n, m) を返す。m > n の場合は 0。

    Args:
        n (int): 0以上の整数
        m (int): 0以上の整数

    Returns:
        int: C(n, m)
    """
    if n < 0 or m < 0:
        raise ValueError(f"二項係数の引数は0以上である必要があります: C({n}, {m})")
    return math.comb(n, m)


@dataclass(frozen=True)
class Universe:
    """
    番号付けされた k 個の原始項からなるクラス

    labels は昇順・重複なし・すべて1以上。
    """
    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise UsageError("ユニバースには少なくとも1つのラベルが必要です。")
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, int) or label < 1:
                raise UsageError(f"ラベルは1以上の整数である必要があります: {label!r}")
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise UsageError(f"ラベルは重複なしの昇順である必要があります: {list(labels)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_positions", {label: i for i, label in enumerate(labels)})

    @classmethod
    def of_size(cls, k):
        """ラベル 1..k のユニバースを返す"""
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise UsageError(f"k は1以上の整数である必要があります: {k!r}")
        return cls(tuple(range(1, k + 1)))

    @property
    def k(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._positions

    def position(self, label):
        """
        ラベルのユニバース内での位置（0始まり）を返す

        Raises:
            NotASubsetError: ラベルがユニバースに含まれない場合
        """
        try:
            return self._positions[label]
        except KeyError:
            raise NotASubsetError(f"ラベル {label} はユニバース {list(self.labels)} に含まれていません。")

    def combination(self, members):
        """ユニバースに属するラベルから Combination を作る（順不同可）"""
        members = tuple(sorted(members))
        for label in members:
            self.position(label)
        return Combination(members)

    def full(self):
        return Combination(self.labels)


@dataclass(frozen=True, order=True)
class Combination:
    """
    ユニバースの部分集合。exponent（指数）は要素数で、クラス番号に等しい

    空の組合せ（con0nation）も正当な値として扱う。
    """
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        if any(a >= b for a, b in zip(members, members[1:])):
            raise UsageError(f"組合せの要素は重複なしの昇順である必要があります: {list(members)}")
        object.__setattr__(self, "members", members)

    @property
    def exponent(self):
        return len(self.members)

    def __contains__(self, label):
        return label in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def without(self, label):
        return Combination(tuple(m for m in self.members if m != label))

    def union(self, other):
        return Combination(tuple(sorted(set(self.members) | set(other.members))))


@dataclass(frozen=True)
class ClassRef:
    """
    クラス内の位置を指す参照（分子 = クラス内の番号、分母 = クラス番号）
    """
    class_number: int
    place: int

    def check(self, universe):
        """
        ユニバースに対して範囲を検証する

        Raises:
            ClassOutOfRangeError: 1 ≤ c ≤ k でない場合
            PlaceOutOfRangeError: 1 ≤ p ≤ C(k, c) でない場合
        """
        _check_class(self.class_number, universe, allow_zero=False)
        size = binomial(universe.k, self.class_number)
        if not 1 <= self.place <= size:
            raise PlaceOutOfRangeError(
                f"番号 {self.place} はクラス {self.class_number} の範囲外です（1〜{size}）。"
            )


def _check_class(c, universe, allow_zero=True):
    lower = 0 if allow_zero else 1
    if not lower <= c <= universe.k:
        raise ClassOutOfRangeError(f"クラス {c} は範囲外です（{lower}〜{universe.k}）。")


def enumerate_class(universe, c):
    """
    クラス c のすべての組合せを辞書式の昇順で返す。番号は1始まりの位置。

    Args:
        universe (Universe): ユニバース
        c (int): クラス番号（0 ≤ c ≤ k）

    Returns:
        list: Combination のリスト（長さ C(k, c)）
    """
    _check_class(c, universe)
    # ラベルは昇順なので combinations の出力順がそのまま辞書式順になる
    return [Combination(members) for members in combinations(universe.labels, c)]


def rank(s, universe):
    """
    組合せのクラス内での番号（1始まり）を返す。

    組合せ数系により O(k) で計算する:
    位置 a_0 < a_1 < ... の組合せについて、辞書式の番号は
    C(k, c) - Σ C(k-1-a_i, c-i)

    Args:
        s (Combination): 組合せ
        universe (Universe): ユニバース

    Returns:
        int: クラス |s| 内での番号

    Raises:
        NotASubsetError: s がユニバースの部分集合でない場合
    """
    k = universe.k
    c = s.exponent
    positions = [universe.position(label) for label in s.members]
    colex = sum(binomial(k - 1 - a, c - i) for i, a in enumerate(positions))
    return binomial(k, c) - colex


def unrank(c, p, universe):
    """
    クラス c の p 番目の組合せを返す（rank の逆写像）。

    Args:
        c (int): クラス番号
        p (int): クラス内の番号
        universe (Universe): ユニバース

    Returns:
        Combination: 組合せ

    Raises:
        ClassOutOfRangeError: c が範囲外の場合
        PlaceOutOfRangeError: p が範囲外の場合
    """
    _check_class(c, universe)
    k = universe.k
    size = binomial(k, c)
    if not 1 <= p <= size:
        raise PlaceOutOfRangeError(f"番号 {p} はクラス {c} の範囲外です（1〜{size}）。")

    remaining = size - p
    x = k
    members = []
    for i in range(c):
        m = c - i
        x -= 1
        while binomial(x, m) > remaining:
            x -= 1
        remaining -= binomial(x, m)
        members.append(universe.labels[k - 1 - x])
    return Combination(tuple(members))


def class_ref(s, universe):
    """組合せを ClassRef（クラス番号と番号）に変換する"""
    return ClassRef(s.exponent, rank(s, universe))


def resolve(ref, universe):
    """ClassRef が指す組合せを返す"""
    ref.check(universe)
    return unrank(ref.class_number, ref.place, universe)


def brute_force_class(universe, c):
    """
    ビット列による全部分集合の列挙から、クラス c を辞書式に並べて返す（オラクル）

    enumerate_class とは独立した方法で列挙するため、検証に使用する。
    """
    k = universe.k
    found = []
    for mask in range(1 << k):
        if bin(mask).count("1") != c:
            continue
        found.append(tuple(universe.labels[i] for i in range(k) if mask & (1 << i)))
    found.sort()
    return [Combination(members) for members in found]


def rank_by_enumeration(s, universe):
    """列挙を走査して番号を求める（O(C(k, c))、オラクル用）"""
    for place, candidate in enumerate(brute_force_class(universe, s.exponent), start=1):
        if candidate == s:
            return place
    raise NotASubsetError(f"{list(s.members)} はユニバース {list(universe.labels)} の部分集合ではありません。")
