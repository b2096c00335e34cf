"""
semantics.py - 式の意味（復号・符号化・同値判定）と k² 個の記号からなる言語の生成を行うモジュール

このモジュールでは、以下の機能を提供:
- 式を組合せに復号する decode（厳密モードでは各項の表す集合が互いに素であることを要求）
- 組合せを「準分数 + 単純項」の形に符号化する encode_semi_fractional
- 組合せのすべての書き方を返す all_forms
- 2つの式の同値判定 equivalent
- 言語表（LanguageTable）の生成 generate_language
"""

from dataclasses import dataclass

from modules.combinatorics import ClassRef, Combination, class_ref, resolve, unrank
from modules.exceptions import (
    ClassOutOfRangeError,
    DuplicateLabelError,
    ExponentTooSmallError,
    KTooSmallError,
    LabelNotInUniverseError,
    NotAMemberError,
    OverlapError,
    PlaceOutOfRangeError,
)
from modules.logger import setup_logger
from modules.notation import (
    STYLE_INTEGER,
    Expression,
    Fraction,
    Simple,
    full_form_expression,
    render,
    render_atom,
)

logger = setup_logger()


def _atom_denotation(atom, universe):
    """1つの項が表す組合せを返す"""
    if isinstance(atom, Simple):
        if atom.label not in universe:
            raise LabelNotInUniverseError(
                f"ラベル {atom.label} はユニバース {list(universe.labels)} に含まれていません。",
                _position(atom),
            )
        return Combination((atom.label,))

    # 準分数はクラス参照として解決する
    ref = ClassRef(atom.class_number, atom.place)
    try:
        return resolve(ref, universe)
    except (ClassOutOfRangeError, PlaceOutOfRangeError) as e:
        raise type(e)(f"{render_atom(atom)}: {e.message}", _position(atom))


def _position(atom):
    return atom.offset if atom.offset >= 0 else None


def decode(expr, universe, strict=True):
    """
    式を組合せに復号する。

    準分数 p/c はクラス c の p 番目の組合せ、単純項 x は {x} を表し、
    式全体はそれらの和集合を表す。

    Args:
        expr (Expression): 式
        universe (Universe): ユニバース
        strict (bool): True の場合、各項の表す集合が互いに素であることを要求する

    Returns:
        Combination: 復号した組合せ

    Raises:
        LabelNotInUniverseError, ClassOutOfRangeError, PlaceOutOfRangeError:
            項がユニバースに対して不正な場合
        DuplicateLabelError: 同じ単純項が2回以上書かれている場合（厳密モード）
        OverlapError: 項の表す集合が重なる場合（厳密モード）
    """
    seen = {}
    result = Combination(())
    for atom in expr.atoms:
        denotation = _atom_denotation(atom, universe)

        # 重なりの検査（厳密モードのみ）
        if strict:
            for label in denotation.members:
                if label not in seen:
                    continue
                previous = seen[label]
                if isinstance(atom, Simple) and isinstance(previous, Simple):
                    raise DuplicateLabelError(f"単純項 {label} が重複しています。", _position(atom))
                raise OverlapError(
                    f"{render(Expression.of(previous))} と {render(Expression.of(atom))} が"
                    f"ともに {label} を含んでいます。",
                    _position(atom),
                )
            for label in denotation.members:
                seen[label] = atom
        result = result.union(denotation)

    logger.debug(f"decode: {render(expr)} -> {list(result.members)}")
    return result


def full_form(s):
    """組合せの全形（すべての原始項を昇順に並べた式）を返す"""
    return full_form_expression(s.members)


def encode_semi_fractional(s, x, universe):
    """
    組合せ s を、x を単純項として残し、残りをクラス e-1 の準分数で書いた式に符号化する。

    Args:
        s (Combination): 組合せ（指数 2 以上）
        x (int): 単純項として残すラベル（s の要素）
        universe (Universe): ユニバース

    Returns:
        Expression: [Fraction(rank(s∖{x}), e-1), Simple(x)]

    Raises:
        NotAMemberError: x が s の要素でない場合
        ExponentTooSmallError: s の指数が 2 未満の場合
    """
    if x not in s:
        raise NotAMemberError(f"{x} は {list(s.members)} の要素ではありません。")
    if s.exponent < 2:
        raise ExponentTooSmallError(f"指数 {s.exponent} の組合せには準分数形がありません。")
    ref = class_ref(s.without(x), universe)
    return Expression.of(Fraction(ref.place, ref.class_number), Simple(x))


def all_forms(s, universe):
    """
    組合せのすべての書き方を返す。

    指数 e ≥ 2 の場合は全形と e 個の準分数形（分子の昇順）の計 e+1 個、
    e = 1 の場合は単純項1つのみ。

    Args:
        s (Combination): 組合せ
        universe (Universe): ユニバース

    Returns:
        list: Expression のリスト
    """
    if s.exponent < 1:
        raise ExponentTooSmallError("空の組合せには書き方がありません。")
    for label in s.members:
        if label not in universe:
            raise LabelNotInUniverseError(f"ラベル {label} はユニバース {list(universe.labels)} に含まれていません。")

    # 先頭は全形
    forms = [full_form(s)]
    if s.exponent == 1:
        return forms

    # 準分数形は分子の昇順
    semi = [encode_semi_fractional(s, x, universe) for x in s.members]
    semi.sort(key=lambda expr: expr.atoms[0].place)
    return forms + semi


def equivalent(e1, e2, universe):
    """
    2つの式が同じ組合せを表すかどうかを返す（復号エラーはそのまま送出）
    """
    return decode(e1, universe) == decode(e2, universe)


@dataclass(frozen=True)
class LanguageRow:
    """
    言語表の1行（同じ意味を持つ記号の並び）

    caveat が True の行は、準分数の記号が行の組合せとは異なる組合せを表す
    （k = 2 の表をそのまま再現した場合）。
    """
    place: int
    denotation: Combination
    forms: tuple
    caveat: bool = False

    def signs(self, style=STYLE_INTEGER):
        return [render(form, style) for form in self.forms]


@dataclass(frozen=True)
class LanguageTable:
    """
    k 行 × k 個の記号からなる言語表
    """
    universe: object
    rows: tuple

    @property
    def sign_count(self):
        return sum(len(row.forms) for row in self.rows)

    @property
    def has_caveat(self):
        return any(row.caveat for row in self.rows)

    def all_signs(self, style=STYLE_INTEGER):
        return [sign for row in self.rows for sign in row.signs(style)]

    def fraction_sign_count(self):
        return sum(1 for row in self.rows for form in row.forms if form.fractions)

    def to_dict(self):
        """
        JSON 出力用の辞書（キー順は固定）を返す
        """
        data = {
            "universe": list(self.universe.labels),
            "k": self.universe.k,
            "sign_count": self.sign_count,
            "caveat": self.has_caveat,
            "rows": [
                {
                    "place": row.place,
                    "denotation": list(row.denotation.members),
                    "forms": row.signs(),
                    "caveat": row.caveat,
                }
                for row in self.rows
            ],
        }
        if self.has_caveat:
            data["caveat_note"] = (
                "k=2 rows reproduce the printed table literally; their fraction signs "
                "decode to the whole universe, not to the row's 1-nion."
            )
        return data


def _literal_k2_table(universe):
    """
    k = 2 の表をそのまま再現する: (1) a1 と 1/1 a2、(2) a2 と 2/1 a1
    """
    first, second = universe.labels
    rows = (
        LanguageRow(1, Combination((first,)),
                    (Expression.of(Simple(first)), Expression.of(Fraction(1, 1), Simple(second))), True),
        LanguageRow(2, Combination((second,)),
                    (Expression.of(Simple(second)), Expression.of(Fraction(2, 1), Simple(first))), True),
    )
    return LanguageTable(universe, rows)


def generate_language(universe):
    """
    k² 個の記号からなる言語表を生成する。

    k ≥ 3 では、クラス k-1 の k 個の組合せを辞書式順に行とし、
    各行は all_forms による k 個の記号を持つ。k = 2 は表をそのまま再現する。

    Args:
        universe (Universe): ユニバース（k ≥ 2）

    Returns:
        LanguageTable: 言語表

    Raises:
        KTooSmallError: k < 2 の場合
    """
    k = universe.k
    if k < 2:
        raise KTooSmallError(f"言語表には k ≥ 2 が必要です（k = {k}）。")
    if k == 2:
        logger.debug("k = 2 の表は記載どおりに再現します（caveat 付き）。")
        return _literal_k2_table(universe)

    # クラス k-1 の組合せを辞書式順に1行ずつ
    rows = []
    for place in range(1, k + 1):
        denotation = unrank(k - 1, place, universe)
        rows.append(LanguageRow(place, denotation, tuple(all_forms(denotation, universe))))

    table = LanguageTable(universe, tuple(rows))
    logger.debug(f"言語表を生成しました: k = {k}, 記号数 = {table.sign_count}")
    return table
