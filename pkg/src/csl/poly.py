"""Dense univariate polynomials over an exact base field.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.
"""

import re
from fractions import Fraction


def trim(coeffs, F):
    c = [F(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(p):
    return len(p) - 1


def add(p, q, F):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)], F)


def sub(p, q, F):
    return add(p, scale(q, -1, F), F)


def scale(p, s, F):
    return trim([s * x for x in p], F)


def mul(p, q, F):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out, F)


def shift(p, k, F):
    """Multiply by X^k."""
    return trim([0] * k + list(p), F) if p else ()


def divmod_(p, q, F):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [0] * max(len(p) - len(q) + 1, 0)
    inv_lead = F.inv(q[-1])
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        f = F(r[-1] * inv_lead)
        quo[k] = f
        for i, b in enumerate(q):
            r[i + k] = F(r[i + k] - f * b)
        r = list(trim(r, F))
    return trim(quo, F), tuple(r)


def rem(p, q, F):
    return divmod_(p, q, F)[1]


def monic(p, F):
    if not p:
        return ()
    return scale(p, F.inv(p[-1]), F)


def gcd(p, q, F):
    while q:
        p, q = q, rem(p, q, F)
    return monic(p, F)


def gcd_many(polys, F):
    g = ()
    for p in polys:
        g = gcd(g, p, F)
    return g


def one(F):
    return (F(1),)


def x_power(k, F):
    return tuple([F(0)] * k + [F(1)])


def to_str(p, var="X"):
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        elif mono:
            s = f"{c}*{mono}"
        else:
            s = str(c)
        terms.append(s)
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(X(?:\^(\d+))?)?$")


def parse(text, F):
    """Parse a polynomial in X: rational/integer coefficients, ``X``, ``^``,
    ``+``, ``-``, ``*``. No parentheses and no general evaluation.
    """
    s = text.replace(" ", "").replace("x", "X").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in parts) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for sign, body in parts:
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {body!r} in {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2) is None:
            k = 0
        else:
            k = int(m.group(3)) if m.group(3) else 1
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    n = max(coeffs) + 1
    return trim([F(coeffs.get(i, 0)) for i in range(n)], F)
