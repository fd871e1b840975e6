"""Shared test data, importable from test modules without going through conftest."""

from __future__ import annotations

# One local word bound to both `is` and `==`, the classic lossy pack: the
# reverse direction folds two English operators into one word, and the
# forward direction can only pick the first binding back.
CONFLATED_YAML = """\
code: ur
name: Urdu (conflated)
direction: rtl
keywords:
  لکھو: print
  اگر: if
  ورنہ: else
  ہے: is
  ہے: "=="
"""

WALKTHROUGH_UR = """\
x = ۲
اگر x == ۲:
    لکھو("yeh do hai")
ورنہ:
    لکھو("yeh do nahi hai")
"""

WALKTHROUGH_EN = """\
x = 2
if x == 2:
    print("yeh do hai")
else:
    print("yeh do nahi hai")
"""
