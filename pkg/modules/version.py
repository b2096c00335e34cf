"""
version.py - アプリケーションのバージョン情報を定義するモジュール
"""

__version__ = "1.0.0"
