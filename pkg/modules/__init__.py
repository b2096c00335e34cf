"""
modules パッケージの初期化スクリプト
他のモジュールのファンクションをここでインポートすることで
modules.関数名 として使用できるようにする
"""

from modules.logger import setup_logger
from modules.config import load_config
from modules.version import __version__
from modules.combinatorics import Universe, Combination, ClassRef, binomial, enumerate_class, rank, unrank
from modules.notation import Expression, Simple, Fraction, parse, render, print_expression
from modules.semantics import decode, encode_semi_fractional, all_forms, equivalent, generate_language
from modules.claims import (
    complexiones_simpliciter,
    language_size,
    semi_fractional_count,
    paper_derived_term_count,
    leibniz_claim_check,
    genus_species_decomposition,
)
