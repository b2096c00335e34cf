"""
notation.py - 単純項と準分数からなる式の字句解析・構文解析・出力を行うモジュール

文法（正規形）:
    expr     := atom ("." atom)*
    atom     := fraction | simple
    fraction := INT "/" INT
    simple   := INT
    INT      := 先頭が0でない数字列（値は1以上）

トークン間の空白は無視し、それ以外の文字は受け付けない。
構文解析は文脈自由で、ユニバースへの所属や番号の範囲は semantics モジュールで検査する。
"""

from dataclasses import dataclass, field

from modules.exceptions import NotationSyntaxError, UsageError

SEPARATOR = "."
FRACTION_BAR = "/"

STYLE_INTEGER = "integer"
STYLE_A = "a"


@dataclass(frozen=True)
class Simple:
    """原始項そのものを書いた項（例: 9）"""
    label: int
    offset: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        _check_numeral(self.label)


@dataclass(frozen=True)
class Fraction:
    """準分数 p/c（クラス c の p 番目の組合せ）"""
    place: int
    class_number: int
    offset: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        _check_numeral(self.place)
        _check_numeral(self.class_number)


@dataclass(frozen=True)
class Expression:
    """
    式 = 単純項と準分数の並び（1つ以上、書かれた順を保持）
    """
    atoms: tuple

    def __post_init__(self):
        atoms = tuple(self.atoms)
        if not atoms:
            raise UsageError("式には少なくとも1つの項が必要です。")
        for atom in atoms:
            if not isinstance(atom, (Simple, Fraction)):
                raise UsageError(f"式の項は Simple か Fraction である必要があります: {atom!r}")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def of(cls, *atoms):
        return cls(atoms)

    @property
    def fractions(self):
        return [atom for atom in self.atoms if isinstance(atom, Fraction)]

    def __str__(self):
        return render(self)


def _check_numeral(value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise UsageError(f"数字は1以上の整数である必要があります: {value!r}")


# トークン種別
INT = "INT"
DOT = "DOT"
SLASH = "SLASH"
END = "END"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text):
    """
    文字列をトークン列に分解する。

    Args:
        text (str): 入力文字列

    Returns:
        list: Token のリスト（末尾に END を含む）

    Raises:
        NotationSyntaxError: 許可されていない文字、先頭0の数字がある場合
    """
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif ch == SEPARATOR:
            tokens.append(Token(DOT, ch, i))
            i += 1
        elif ch == FRACTION_BAR:
            tokens.append(Token(SLASH, ch, i))
            i += 1
        elif "0" <= ch <= "9":
            start = i
            while i < n and "0" <= text[i] <= "9":
                i += 1
            digits = text[start:i]
            if digits[0] == "0":
                raise NotationSyntaxError(f"数字は1以上で、先頭に0は書けません: '{digits}'", start)
            tokens.append(Token(INT, digits, start))
        else:
            raise NotationSyntaxError(f"使用できない文字です: {ch!r}", i)
    tokens.append(Token(END, "", n))
    return tokens


class Parser:
    """再帰下降による式の構文解析器"""

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.current
        self.index += 1
        return token

    def _expect(self, kind, what):
        token = self.current
        if token.kind != kind:
            found = "入力の終わり" if token.kind == END else f"'{token.text}'"
            raise NotationSyntaxError(f"{what}が必要ですが、{found}がありました。", token.offset)
        return self._advance()

    def parse_expr(self):
        if self.current.kind == END:
            raise NotationSyntaxError("式が空です。", self.current.offset)
        atoms = [self.parse_atom()]
        while self.current.kind == DOT:
            self._advance()
            atoms.append(self.parse_atom())
        if self.current.kind != END:
            raise NotationSyntaxError(f"'{self.current.text}' の位置に区切り '.' が必要です。", self.current.offset)
        return Expression(tuple(atoms))

    def parse_atom(self):
        first = self._expect(INT, "数字")
        if self.current.kind != SLASH:
            return Simple(_to_int(first), offset=first.offset)
        self._advance()
        denominator = self._expect(INT, "分母の数字")
        return Fraction(_to_int(first), _to_int(denominator), offset=first.offset)


def _to_int(token):
    try:
        return int(token.text)
    except ValueError:
        # 桁数が int の変換上限を超える場合
        raise NotationSyntaxError(f"数字が長すぎます（{len(token.text)}桁）。", token.offset)


def parse(text):
    """
    文字列を式に変換する。

    Args:
        text (str): 入力文字列（例: "1/2.9"）

    Returns:
        Expression: 構文解析した式

    Raises:
        NotationSyntaxError: 構文エラー（position に位置を持つ）
    """
    if not isinstance(text, str):
        raise NotationSyntaxError(f"文字列が必要です: {type(text).__name__}", 0)
    return Parser(text).parse_expr()


def render_atom(atom, style=STYLE_INTEGER):
    if isinstance(atom, Fraction):
        return f"{atom.place}{FRACTION_BAR}{atom.class_number}"
    if style == STYLE_A:
        return f"a{atom.label}"
    return str(atom.label)


def render(expr, style=STYLE_INTEGER):
    """
    式を文字列にする。style="integer" が正規形で、parse(render(e)) == e が成り立つ。

    Args:
        expr (Expression): 式
        style (str): "integer"（正規形）または "a"（a1, a2, ... 表示）

    Returns:
        str: 文字列表現
    """
    return SEPARATOR.join(render_atom(atom, style) for atom in expr.atoms)


# 組み込みの print と衝突しない別名
print_expression = render


def full_form_expression(members):
    """組合せの要素を昇順の単純項として並べた式（全形）を返す"""
    return Expression(tuple(Simple(label) for label in members))
