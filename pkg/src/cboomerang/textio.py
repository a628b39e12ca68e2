"""Text syntax for field elements and polynomials.

Elements: decimal integers over prime fields, generator expressions such
as ``g^3+g^2+g`` over extensions. Polynomial terms are ``*``-separated
factors (``3*x^2``, ``z*x^6``); non-integer coefficients must be wrapped
in parentheses, e.g. ``(g^2+1)*x^3``.
"""

from __future__ import annotations

import re

_CANON = str.maketrans({"−": "-", "·": "*", " ": "", "\t": ""})


def _canonical(text: str) -> str:
    return text.translate(_CANON).replace("**", "^")


def _split_terms(text: str):
    """Yield (sign, term) pairs, splitting on top-level + and -."""
    text = _canonical(text)
    if not text:
        raise ValueError("empty expression")
    terms = []
    depth = 0
    sign = 1
    start = 0
    i = 0
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        start = i = 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-":
            if i == start:
                raise ValueError(f"misplaced sign in {text!r}")
            terms.append((sign, text[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    if start >= len(text):
        raise ValueError(f"trailing sign in {text!r}")
    terms.append((sign, text[start:]))
    return terms


_GEN_TERM = re.compile(r"^(?:(\d+)\*?)?([A-Za-z]\w*)?(?:\^(\d+))?$")


def parse_element(ctx, text: str) -> int:
    """Parse one field element."""
    total = 0
    for sign, term in _split_terms(text):
        m = _GEN_TERM.match(term)
        if not m or (m.group(2) is None and m.group(1) is None):
            raise ValueError(f"cannot parse element term {term!r}")
        coeff_s, name, exp_s = m.groups()
        coeff = int(coeff_s) if coeff_s else 1
        if name is None:
            if exp_s is not None:
                raise ValueError(f"cannot parse element term {term!r}")
            value = ctx.from_int(coeff)
        else:
            if ctx.n == 1 or name != ctx.gen_name:
                raise ValueError(f"unknown symbol {name!r} for {ctx!r}")
            value = ctx.mul(ctx.from_int(coeff), ctx.pow(ctx.encode([0, 1]), int(exp_s or 1)))
        if sign < 0:
            value = ctx.neg(value)
        total = ctx.add(total, value)
    return total


def parse_terms(ctx, text: str, varnames) -> dict:
    """Parse a polynomial; returns {exponent tuple: coefficient}."""
    varnames = list(varnames)
    out = {}
    for sign, term in _split_terms(text):
        coeff = 1
        exps = [0] * len(varnames)
        for factor in _split_factors(term):
            if factor.startswith("("):
                if not factor.endswith(")"):
                    raise ValueError(f"unbalanced parentheses in {factor!r}")
                coeff = ctx.mul(coeff, parse_element(ctx, factor[1:-1]))
            elif factor[0].isdigit():
                coeff = ctx.mul(coeff, ctx.from_int(int(factor)))
            else:
                name, _, exp_s = factor.partition("^")
                if name not in varnames:
                    raise ValueError(f"unknown variable {name!r}; expected one of {varnames}")
                exps[varnames.index(name)] += int(exp_s) if exp_s else 1
        if sign < 0:
            coeff = ctx.neg(coeff)
        key = tuple(exps)
        total = ctx.add(out.get(key, 0), coeff)
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _split_factors(term: str):
    factors = []
    depth = 0
    start = 0
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            factors.append(term[start:i])
            start = i + 1
    factors.append(term[start:])
    if any(not f for f in factors):
        raise ValueError(f"empty factor in {term!r}")
    return factors


def _is_compound(ctx, text: str) -> bool:
    return ctx.n > 1 and ("+" in text or "*" in text or text == ctx.gen_name or "^" in text)


def format_coeff_prefix(ctx, coeff) -> str:
    """Coefficient as a display prefix; '' means an implicit 1."""
    if coeff == 1:
        return ""
    text = ctx.format_elt(coeff)
    if _is_compound(ctx, text):
        return f"({text})*"
    return f"{text}*"


def format_constant(ctx, coeff) -> str:
    """Constant term display, parenthesized when it would re-parse as
    several terms."""
    text = ctx.format_elt(coeff)
    return f"({text})" if _is_compound(ctx, text) else text
