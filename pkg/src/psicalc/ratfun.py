"""Exact rational-function field over the deformation symbol q.

Values are ratios of Fraction-coefficient polynomials kept canonical:
the denominator is monic, numerator and denominator are coprime, and a
zero numerator forces denominator 1.  Equality is therefore syntactic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd

from .poly import Poly

_F0 = Fraction(0)
_F1 = Fraction(1)

_PZERO = Poly()
_PONE = Poly((_F1,))


def fpoly(coeffs) -> Poly:
    """Fraction-coefficient polynomial in q from ints/Fractions."""
    return Poly([Fraction(c) for c in coeffs])


def _divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise ZeroDivisionError("zero divisor")
    db = b.degree
    if a.degree < db:
        return _PZERO, a
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    monic = lead == 1
    qt = [_F0] * (a.degree - db + 1)
    for i in range(len(qt) - 1, -1, -1):
        c = rem[i + db]
        if c:
            f = c if monic else c / lead
            qt[i] = f
            for k in range(db):
                bk = b.coeffs[k]
                if bk:
                    rem[i + k] -= f * bk
            rem[i + db] = _F0
    return Poly(qt), Poly(rem[:db])


def _monic(p: Poly) -> Poly:
    lc = p.coeffs[-1]
    if lc == 1:
        return p
    return Poly([c / lc for c in p.coeffs])


def _int_clear(p: Poly) -> list[int]:
    """Integer coefficient list proportional to p (denominators cleared)."""
    den = 1
    for c in p.coeffs:
        d = c.denominator
        den = den * d // _int_gcd(den, d)
    return [int(c * den) for c in p.coeffs]


def _int_primitive(cs: list[int]) -> list[int]:
    g = 0
    for v in cs:
        g = _int_gcd(g, v)
    if g > 1:
        cs = [v // g for v in cs]
    if cs[-1] < 0:
        cs = [-v for v in cs]
    return cs


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # remainder of (a scaled by powers of b's leading coefficient) mod b;
    # scalar factors are irrelevant for gcd purposes
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    for i in range(len(r) - 1 - db, -1, -1):
        top = r[i + db]
        if not top:
            continue
        # r <- lb*r - top * x^i * b, cancelling the x^(i+db) coefficient
        if lb != 1:
            for k in range(len(r)):
                r[k] *= lb
        for k in range(db):
            r[i + k] -= top * b[k]
        r[i + db] = 0
    while r and not r[-1]:
        r.pop()
    return r


def _gcd_poly(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rational field, via an integer remainder sequence."""
    if a.is_zero():
        return _monic(b) if b else b
    if b.is_zero():
        return _monic(a)
    if a.degree == 0 or b.degree == 0:
        return _PONE
    ai = _int_primitive(_int_clear(a))
    bi = _int_primitive(_int_clear(b))
    if len(ai) < len(bi):
        ai, bi = bi, ai
    while bi:
        r = _int_pseudo_rem(ai, bi)
        ai, bi = bi, _int_primitive(r) if r else []
    if len(ai) == 1:
        return _PONE
    lead = Fraction(ai[-1])
    return Poly([Fraction(v) / lead for v in ai])


def _exact_div(a: Poly, b: Poly) -> Poly:
    q, r = _divmod_poly(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


class RationalFunction:
    """Canonical num/den pair of Fraction-coefficient polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_PONE, *, _raw: bool = False):
        if _raw:
            self.num = num
            self.den = den
            return
        num = _as_fpoly(num)
        den = _as_fpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero divisor")
        if num.is_zero():
            self.num, self.den = _PZERO, _PONE
            return
        g = _gcd_poly(num, den)
        if g.degree > 0:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        lc = den.coeffs[-1]
        if lc != 1:
            num = Poly([c / lc for c in num.coeffs])
            den = _monic(den)
        self.num, self.den = num, den

    # -- basic protocol ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num.coeffs == o.num.coeffs and self.den.coeffs == o.den.coeffs

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self.render()!r})"

    def __str__(self):
        return self.render()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den == _PONE:
                return RationalFunction(self.num + o.num, _PONE, _raw=True)
            num = self.num + o.num
            if num.is_zero():
                return ZERO
            g = _gcd_poly(num, self.den)
            if g.degree < 1:
                return RationalFunction(num, self.den, _raw=True)
            return RationalFunction(_exact_div(num, g), _exact_div(self.den, g), _raw=True)
        if self.den == _PONE:
            return RationalFunction(self.num * o.den + o.num, o.den, _raw=True)
        if o.den == _PONE:
            return RationalFunction(o.num * self.den + self.num, self.den, _raw=True)
        # denominator-gcd form: only the common factor can cancel afterwards
        g = _gcd_poly(self.den, o.den)
        if g.degree < 1:
            num = self.num * o.den + o.num * self.den
            if num.is_zero():
                return ZERO
            return RationalFunction(num, self.den * o.den, _raw=True)
        t1 = _exact_div(self.den, g)
        t2 = _exact_div(o.den, g)
        num = self.num * t2 + o.num * t1
        if num.is_zero():
            return ZERO
        den = self.den * t2
        g2 = _gcd_poly(num, g)
        if g2.degree < 1:
            return RationalFunction(num, den, _raw=True)
        return RationalFunction(_exact_div(num, g2), _exact_div(den, g2), _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _raw=True)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.num.coeffs or not o.num.coeffs:
            return ZERO
        if self.den == _PONE and o.den == _PONE:
            return RationalFunction(self.num * o.num, _PONE, _raw=True)
        n1, d2 = _cross_cancel(self.num, o.den)
        n2, d1 = _cross_cancel(o.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2, _raw=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num.coeffs:
            raise ZeroDivisionError("zero divisor")
        num, den = self.den, self.num
        lc = den.coeffs[-1]
        if lc != 1:
            num = Poly([c / lc for c in num.coeffs])
            den = _monic(den)
        return RationalFunction(num, den, _raw=True)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        k = n
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    # -- evaluation and rendering -------------------------------------------

    def eval_q(self, point) -> Fraction:
        """Evaluate at a rational value of q; denominator must not vanish."""
        point = Fraction(point)
        d = self.den.eval_at(point)
        if d == 0:
            raise ZeroDivisionError("zero divisor")
        return self.num.eval_at(point) / d

    def render(self) -> str:
        if not self.num.coeffs:
            return "0"
        ni, di = _clear_to_int(self.num, self.den)
        ns = _int_poly_str(ni)
        if di == [1]:
            return ns
        return f"({ns})/({_int_poly_str(di)})"


def _as_fpoly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly((Fraction(v),)) if v else _PZERO
    raise TypeError(f"cannot build a polynomial from {type(v).__name__}")


def _coerce(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, (int, Fraction)):
        if not v:
            return ZERO
        return RationalFunction(Poly((Fraction(v),)), _PONE, _raw=True)
    return None


def _cross_cancel(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den == _PONE or num.degree < 1:
        return num, den
    g = _gcd_poly(num, den)
    if g.degree < 1:
        return num, den
    return _exact_div(num, g), _exact_div(den, g)


ZERO = RationalFunction(_PZERO, _PONE, _raw=True)
ONE = RationalFunction(_PONE, _PONE, _raw=True)
QSYM = RationalFunction(Poly((_F0, _F1)), _PONE, _raw=True)


def rf(value) -> RationalFunction:
    """Coerce an int/Fraction/Poly into the rational-function field."""
    got = _coerce(value)
    if got is not None:
        return got
    if isinstance(value, Poly):
        return RationalFunction(value, _PONE)
    raise TypeError(f"cannot coerce {type(value).__name__} to RationalFunction")


# -- canonical text form --------------------------------------------------


def _clear_to_int(num: Poly, den: Poly) -> tuple[list[int], list[int]]:
    lcm = 1
    for c in num.coeffs + den.coeffs:
        d = c.denominator
        lcm = lcm * d // _int_gcd(lcm, d)
    ni = [int(c * lcm) for c in num.coeffs]
    di = [int(c * lcm) for c in den.coeffs]
    g = 0
    for v in ni + di:
        g = _int_gcd(g, abs(v))
    if g > 1:
        ni = [v // g for v in ni]
        di = [v // g for v in di]
    if di[-1] < 0:
        ni = [-v for v in ni]
        di = [-v for v in di]
    return ni, di


def _int_poly_str(cs: list[int]) -> str:
    parts = []
    for k, c in enumerate(cs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(\(|\)|\+|-|\*|/|\^|q|\d+)")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse rational function near {text[pos:pos + 8]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_int_poly(tokens: list[str]) -> Poly:
    coeffs: dict[int, Fraction] = {}
    i = 0
    sign = 1
    n = len(tokens)
    while i < n:
        t = tokens[i]
        if t == "+":
            sign = 1
            i += 1
            continue
        if t == "-":
            sign = -sign
            i += 1
            continue
        mag = 1
        power = 0
        seen = False
        if t.isdigit():
            mag = int(t)
            seen = True
            i += 1
            if i < n and tokens[i] == "*":
                i += 1
        if i < n and tokens[i] == "q":
            power = 1
            seen = True
            i += 1
            if i < n and tokens[i] == "^":
                if i + 1 >= n or not tokens[i + 1].isdigit():
                    raise ValueError("missing exponent after '^'")
                power = int(tokens[i + 1])
                i += 2
        if not seen:
            raise ValueError(f"unexpected token {t!r} in polynomial")
        coeffs[power] = coeffs.get(power, _F0) + sign * mag
        sign = 1
    if not coeffs:
        raise ValueError("empty polynomial")
    top = max(coeffs)
    return Poly([coeffs.get(k, _F0) for k in range(top + 1)])


def parse_ratfun(text: str) -> RationalFunction:
    """Parse the canonical text form: a polynomial in q, optionally /(poly).

    Accepts e.g. "1+q+q^2", "-q", "3", "1/2", "(1-q^3)/(1-q)".
    """
    tokens = _tokenize(text)
    depth = 0
    split = None
    for i, t in enumerate(tokens):
        if t == "(":
            depth += 1
        elif t == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        elif t == "/" and depth == 0:
            if split is not None:
                raise ValueError("more than one top-level '/'")
            split = i
    if depth != 0:
        raise ValueError("unbalanced parentheses")

    def strip(ts: list[str]) -> list[str]:
        if len(ts) >= 2 and ts[0] == "(" and ts[-1] == ")":
            inner_depth = 0
            for t in ts[:-1]:
                if t == "(":
                    inner_depth += 1
                elif t == ")":
                    inner_depth -= 1
                    if inner_depth == 0:
                        return ts
            return ts[1:-1]
        return ts

    if split is None:
        return RationalFunction(_parse_int_poly(strip(tokens)))
    num = _parse_int_poly(strip(tokens[:split]))
    den = _parse_int_poly(strip(tokens[split + 1:]))
    return RationalFunction(num, den)
