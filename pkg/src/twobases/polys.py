"""Dense univariate polynomials with exact coefficients.

A polynomial is a tuple of coefficients in ascending order of degree with no
trailing zeros; the zero polynomial is the empty tuple.  Coefficients are ints
or Fractions.  Everything here is exact; floats never enter.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence

Poly = tuple  # alias for readability in signatures


def trim(coeffs: Iterable) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-a for a in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def shift(p: Poly, k: int) -> Poly:
    """Multiply by x**k."""
    if not p:
        return ()
    return (0,) * k + tuple(p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def eval_at(p: Poly, x):
    """Horner evaluation; exact for int/Fraction x."""
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def derivative(p: Poly) -> Poly:
    return trim(i * a for i, a in enumerate(p) if i > 0)


def divmod_exact(p: Poly, q: Poly):
    """Quotient and remainder over the rationals.  q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in p]
    d = len(q) - 1
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(0, len(p) - d)
    for i in range(len(p) - 1, d - 1, -1):
        if r[i] == 0:
            continue
        c = r[i] / lead
        quot[i - d] = c
        for j, b in enumerate(q):
            r[i - d + j] -= c * b
    return trim(quot), trim(r)


def content(p: Poly) -> Fraction:
    """Positive rational c with p / c primitive integral; content(0) = 0."""
    if not p:
        return Fraction(0)
    num = 0
    den = 1
    for a in p:
        f = Fraction(a)
        num = _int_gcd(num, f.numerator)
        den = den * f.denominator // _int_gcd(den, f.denominator)
    return Fraction(num, den)


def to_int_poly(p: Poly, keep_sign: bool = True) -> Poly:
    """Primitive integer polynomial proportional to p (positive multiplier)."""
    if not p:
        return ()
    c = content(p)
    out = tuple(int(Fraction(a) / c) for a in p)
    if not keep_sign:
        raise ValueError("keep_sign=False unsupported")
    return out


def monicize(p: Poly) -> Poly:
    """Divide by the leading coefficient (result over Fractions)."""
    if not p:
        return ()
    lead = Fraction(p[-1])
    return tuple(Fraction(a) / lead for a in p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive integer gcd with positive leading coefficient."""
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    if not a:
        return ()
    a = to_int_poly(a)
    if a[-1] < 0:
        a = neg(a)
    return a


def squarefree_part(p: Poly) -> Poly:
    """p with repeated factors collapsed; primitive integral, sign of p kept."""
    p = trim(p)
    if degree(p) <= 0:
        return to_int_poly(p) if p else ()
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return to_int_poly(p)
    q, r = divmod_exact(p, g)
    assert not r
    return to_int_poly(q)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(p: Poly) -> list:
    """Sturm chain of a squarefree p, entries primitive integral."""
    p0 = to_int_poly(p)
    chain = [p0]
    d = derivative(p0)
    if d:
        chain.append(to_int_poly(d))
    while len(chain[-1]) > 1:
        _, r = divmod_exact(chain[-2], chain[-1])
        if not r:
            break
        chain.append(to_int_poly(neg(r)))
    return chain


def sign_variations(chain: Sequence[Poly], x) -> int:
    signs = [s for s in (_sign(eval_at(p, x)) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(p: Poly, a, b, chain=None) -> int:
    """Number of distinct real roots of p in (a, b], endpoints rational."""
    if not (a < b):
        raise ValueError("need a < b")
    sf = squarefree_part(p)
    if not sf:
        raise ValueError("zero polynomial")
    root_at_b = eval_at(sf, b) == 0
    if root_at_b:
        sf, r = divmod_exact(sf, (-Fraction(b), Fraction(1)))
        assert not r
        sf = to_int_poly(sf) if sf else ()
    if sf and eval_at(sf, a) == 0:
        sf2, r = divmod_exact(sf, (-Fraction(a), Fraction(1)))
        assert not r
        sf = to_int_poly(sf2) if sf2 else ()
    if not sf or len(sf) == 1:
        return int(root_at_b)
    ch = sturm_chain(sf)
    return sign_variations(ch, a) - sign_variations(ch, b) + int(root_at_b)


def isolate_roots(p: Poly, lo, hi) -> list:
    """Disjoint rational intervals (l, h], each holding one distinct root of p,
    covering all roots in (lo, hi].  Ordered left to right."""
    lo, hi = Fraction(lo), Fraction(hi)
    total = count_roots_halfopen(p, lo, hi)
    out = []

    def split(l, h, n):
        if n == 0:
            return
        if n == 1:
            out.append((l, h))
            return
        m = (l + h) / 2
        nl = count_roots_halfopen(p, l, m)
        split(l, m, nl)
        split(m, h, n - nl)

    split(lo, hi, total)
    return out


def refine_root(p: Poly, lo, hi, eps) -> tuple:
    """Shrink an isolating interval (lo, hi] (known to hold exactly one root)
    until its width is < eps."""
    lo, hi = Fraction(lo), Fraction(hi)
    sf = squarefree_part(p)
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        if count_roots_halfopen(sf, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def interval_eval(p: Poly, lo, hi) -> tuple:
    """Enclosure of p over [lo, hi] by interval Horner; exact rational bounds."""
    alo, ahi = Fraction(0), Fraction(0)
    for a in reversed(p):
        prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(prods) + a, max(prods) + a
    return alo, ahi


def factor_int(p: Poly) -> list:
    """Irreducible factors of a nonzero integer polynomial.

    Returns [(factor, multiplicity)] with each factor a primitive integer
    tuple (ascending) with positive leading coefficient.  Content and overall
    sign are dropped.
    """
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([int(c) for c in p])), x)
    _, factors = poly.factor_list()
    out = []
    for f, m in factors:
        coeffs = [int(c) for c in reversed(f.all_coeffs())]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        out.append((tuple(coeffs), int(m)))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def poly_text(p: Poly, var: str = "q") -> str:
    """Human-readable rendering, highest degree first."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        a = p[i]
        if a == 0:
            continue
        mag = abs(a)
        if i == 0:
            term = f"{mag}"
        elif i == 1:
            term = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            term = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(term if a > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if a > 0 else f"- {term}")
    return " ".join(parts)
