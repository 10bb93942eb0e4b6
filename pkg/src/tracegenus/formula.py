"""Integer arithmetic expressions used in catalog data files.

Family files describe framings and knot parameters as strings such as
``"k**2+3*k+l+1"``.  They are parsed with :mod:`ast` and only integer
literals, names, ``+ - *`` and non-negative integer powers are accepted.
"""

import ast
from functools import lru_cache

from .errors import ValidationError

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
}


def _check(node, names):
    if isinstance(node, ast.Expression):
        _check(node.body, names)
    elif isinstance(node, ast.Constant):
        if type(node.value) is not int:
            raise ValidationError(f"non-integer literal {node.value!r}")
    elif isinstance(node, ast.Name):
        names.add(node.id)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        _check(node.operand, names)
    elif isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        _check(node.left, names)
        _check(node.right, names)
    elif isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
        _check(node.left, names)
        if not (isinstance(node.right, ast.Constant) and type(node.right.value) is int
                and node.right.value >= 0):
            raise ValidationError("exponents must be non-negative integer literals")
    else:
        raise ValidationError(f"unsupported syntax in formula: {ast.dump(node)}")


@lru_cache(maxsize=None)
def _parse(expr):
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise ValidationError(f"cannot parse formula {expr!r}") from exc
    names = set()
    _check(tree, names)
    return compile(tree, "<formula>", "eval"), frozenset(names)


def variables(expr):
    return set(_parse(str(expr))[1])


def evaluate(expr, env):
    code, names = _parse(str(expr))
    missing = names - set(env)
    if missing:
        raise ValidationError(f"formula {expr!r} needs values for {sorted(missing)}")
    return eval(code, {"__builtins__": {}}, dict(env))


def _padd(p, q, sign=1):
    out = dict(p)
    for mono, c in q.items():
        out[mono] = out.get(mono, 0) + sign * c
        if not out[mono]:
            del out[mono]
    return out


def _pmul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            exps = dict(m1)
            for name, e in m2:
                exps[name] = exps.get(name, 0) + e
            mono = tuple(sorted(exps.items()))
            out[mono] = out.get(mono, 0) + c1 * c2
            if not out[mono]:
                del out[mono]
    return out


def _poly(node):
    if isinstance(node, ast.Expression):
        return _poly(node.body)
    if isinstance(node, ast.Constant):
        return {(): node.value} if node.value else {}
    if isinstance(node, ast.Name):
        return {((node.id, 1),): 1}
    if isinstance(node, ast.UnaryOp):
        p = _poly(node.operand)
        return {m: -c for m, c in p.items()} if isinstance(node.op, ast.USub) else p
    left = _poly(node.left)
    if isinstance(node.op, ast.Pow):
        out = {(): 1}
        for _ in range(node.right.value):
            out = _pmul(out, left)
        return out
    right = _poly(node.right)
    if isinstance(node.op, ast.Add):
        return _padd(left, right)
    if isinstance(node.op, ast.Sub):
        return _padd(left, right, -1)
    return _pmul(left, right)


def polynomial(expr):
    """Expand a formula into ``{monomial: coefficient}``.

    A monomial is a sorted tuple of ``(name, exponent)`` pairs; the constant
    term has the empty tuple as key.
    """
    _parse(str(expr))
    return _poly(ast.parse(str(expr), mode="eval"))


def split_linear(expr, var):
    """Write ``expr`` as ``c1 * var + c0``.

    Returns ``(c1, c0)`` as polynomials in the other variables, or ``None``
    when ``var`` appears with degree above one.
    """
    c1, c0 = {}, {}
    for mono, c in polynomial(expr).items():
        exps = dict(mono)
        e = exps.pop(var, 0)
        rest = tuple(sorted(exps.items()))
        if e == 0:
            c0[rest] = c
        elif e == 1:
            c1[rest] = c
        else:
            return None
    return c1, c0
