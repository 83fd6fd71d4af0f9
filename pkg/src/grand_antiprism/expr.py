"""Exact evaluation of small golden-field expressions such as ``-tau/2``."""

from __future__ import annotations

import ast

from .golden import SIGMA, SQRT5, TAU, GoldenNumber

__all__ = ["ExpressionError", "parse_golden"]

NAMES = {"tau": TAU, "sigma": SIGMA, "sqrt5": SQRT5}


class ExpressionError(ValueError):
    pass


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return GoldenNumber(node.value)
    if isinstance(node, ast.Name):
        try:
            return NAMES[node.id]
        except KeyError:
            raise ExpressionError(f"unknown name {node.id!r}") from None
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if not b:
                raise ExpressionError("division by zero")
            return a / b
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)}")


def parse_golden(text: str) -> GoldenNumber:
    """Evaluate integers, ``p/q`` fractions, ``tau``, ``sigma``, ``sqrt5``,
    ``+ - * /`` and parentheses exactly."""
    src = text.strip()
    if not src:
        raise ExpressionError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}") from exc
    return _eval(tree)
