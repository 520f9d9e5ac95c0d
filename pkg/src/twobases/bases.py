"""Bases as exact real algebraic numbers, and expansions of 1.

An AlgBase carries an integer polynomial and a shrinking rational bracket
isolating one root in (1, 2].  All sign decisions are exact: either the
number is rational and we compare directly, or we refine the bracket until
an interval evaluation excludes zero.  FieldElem gives exact arithmetic in
Q(q) for quasi-greedy remainders and expansion counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .errors import DomainError, UnsupportedBaseError
from .words import EPSeq, eval_seq

# ---------------------------------------------------------------------------
# number field arithmetic


class NumberField:
    """Q(q) for an AlgBase q with irreducible minimal polynomial."""

    def __init__(self, base: "AlgBase"):
        self.base = base
        self.minpoly = base.minpoly()
        self.deg = len(self.minpoly) - 1
        if self.deg < 1:
            raise DomainError("degenerate minimal polynomial")
        # x^deg = -(m_0 + m_1 x + ...)/m_deg, precomputed for reduction
        lead = Fraction(self.minpoly[-1])
        self._red = tuple(-Fraction(c) / lead for c in self.minpoly[:-1])

    def reduce(self, coeffs) -> tuple:
        c = [Fraction(a) for a in coeffs]
        for i in range(len(c) - 1, self.deg - 1, -1):
            top = c.pop()
            if top:
                for j, r in enumerate(self._red):
                    c[i - self.deg + j] += top * r
        c += [Fraction(0)] * (self.deg - len(c))
        return tuple(c)

    def elem(self, coeffs) -> "FieldElem":
        return FieldElem(self, self.reduce(coeffs))

    def zero(self) -> "FieldElem":
        return self.elem(())

    def one(self) -> "FieldElem":
        return self.elem((1,))

    def base_elem(self) -> "FieldElem":
        return self.elem((0, 1))

    def from_rational(self, r) -> "FieldElem":
        return self.elem((Fraction(r),))


class FieldElem:
    """Element of Q(q), held as a reduced coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"FieldElem{self.coeffs}"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise DomainError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.elem(polys.mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        # extended Euclid: u*self + v*minpoly = g (a nonzero constant)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        a = polys.trim(self.coeffs)
        b = tuple(Fraction(c) for c in self.field.minpoly)
        s0, s1 = (Fraction(1),), ()
        while b:
            q, r = polys.divmod_exact(a, b)
            a, b = b, r
            s0, s1 = s1, polys.sub(s0, polys.mul(q, s1))
        # a is a nonzero constant since minpoly is irreducible
        if len(a) != 1:
            raise DomainError("minimal polynomial not irreducible")
        return self.field.elem(polys.scale(s0, 1 / Fraction(a[0])))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def sign(self) -> int:
        """Exact sign of the represented real number."""
        if self.is_zero():
            return 0
        # nonzero reduced coeffs + irreducible minpoly => value is nonzero
        base = self.field.base
        p = polys.trim(self.coeffs)
        while True:
            lo, hi = base.bracket()
            vlo, vhi = polys.interval_eval(p, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            base.refine((hi - lo) / 2)


# ---------------------------------------------------------------------------
# algebraic bases


class AlgBase:
    """A real algebraic number q in (1, 2], the base of the expansions."""

    def __init__(self, poly, lo, hi, *, exact=None, alpha_hint=None, _verified=False):
        self.poly = polys.to_int_poly(polys.trim(poly))
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self.exact_rational = exact
        self.alpha_hint = alpha_hint
        self._minpoly = None
        self._field = None
        if exact is None:
            if not _verified:
                raise DomainError("use a from_* constructor")
            # endpoint signs for pure sign bisection
            self._slo = _sgn(polys.eval_at(self.poly, self._lo))
            self._shi = _sgn(polys.eval_at(self.poly, self._hi))
            if self._slo * self._shi >= 0:
                raise DomainError("bracket endpoints must straddle the root")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, r) -> "AlgBase":
        r = Fraction(r)
        if not (1 < r <= 2):
            raise DomainError(f"base must lie in (1,2], got {r}")
        poly = polys.to_int_poly((-r.numerator, r.denominator))
        self = cls.__new__(cls)
        self.poly = poly
        self._lo = self._hi = r
        self.exact_rational = r
        self.alpha_hint = None
        self._minpoly = poly
        self._field = None
        return self

    @classmethod
    def from_poly(cls, poly, lo, hi, alpha_hint=None) -> "AlgBase":
        """Bracket verified by a root count: exactly one root in (lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        if not (1 <= lo < hi <= 2):
            raise DomainError("bracket must satisfy 1 <= lo < hi <= 2")
        p = polys.trim(poly)
        if polys.degree(p) < 1:
            raise DomainError("need a nonconstant polynomial")
        if polys.count_roots_halfopen(p, lo, hi) != 1:
            raise DomainError("polynomial must have exactly one root in (lo, hi]")
        sf = polys.squarefree_part(p)
        if polys.eval_at(sf, hi) == 0:
            return cls(p, lo, hi, exact=hi, alpha_hint=alpha_hint)
        # the one root is simple in sf and interior, so sf straddles it
        return cls(sf, lo, hi, alpha_hint=alpha_hint, _verified=True)

    @classmethod
    def from_bracket(cls, poly, lo, hi, alpha_hint=None) -> "AlgBase":
        """Bracket trusted by the caller (a monotonicity argument must
        guarantee a unique root in (lo, hi]); only the sign change is checked.
        Avoids Sturm chains, so it scales to large degrees."""
        lo, hi = Fraction(lo), Fraction(hi)
        if not (1 <= lo < hi <= 2):
            raise DomainError("bracket must satisfy 1 <= lo < hi <= 2")
        p = polys.trim(poly)
        if polys.eval_at(p, hi) == 0:
            return cls(p, lo, hi, exact=hi, alpha_hint=alpha_hint)
        return cls(p, lo, hi, alpha_hint=alpha_hint, _verified=True)

    # -- bracket handling --------------------------------------------------

    def bracket(self, width=None) -> tuple:
        if width is not None:
            self.refine(width)
        if self.exact_rational is not None:
            return self.exact_rational, self.exact_rational
        return self._lo, self._hi

    def refine(self, width) -> "AlgBase":
        if self.exact_rational is not None:
            return self
        width = Fraction(width)
        lo, hi, slo = self._lo, self._hi, self._slo
        while hi - lo >= width:
            mid = (lo + hi) / 2
            s = _sgn(polys.eval_at(self.poly, mid))
            if s == 0:
                self.exact_rational = mid
                self._lo = self._hi = mid
                return self
            if s == slo:
                lo = mid
            else:
                hi = mid
        self._lo, self._hi, self._slo = lo, hi, slo
        return self

    def __float__(self):
        lo, hi = self.bracket(Fraction(1, 10**17))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"AlgBase({polys.poly_text(self.minpoly() if self._minpoly else self.poly)} ~ {float(self):.6f})"

    # -- exact identity ----------------------------------------------------

    def minpoly(self) -> tuple:
        """Irreducible primitive polynomial with positive leading coefficient."""
        if self._minpoly is None:
            if self.exact_rational is not None:
                r = self.exact_rational
                self._minpoly = polys.to_int_poly((-r.numerator, r.denominator))
            else:
                cands = [f for f, _ in polys.factor_int(self.poly)]
                hits = [
                    f
                    for f in cands
                    if polys.degree(f) >= 1
                    and polys.count_roots_halfopen(f, self._lo, self._hi) == 1
                ]
                assert len(hits) == 1, "bracket must isolate one root"
                self._minpoly = hits[0]
        return self._minpoly

    def field(self) -> NumberField:
        if self._field is None:
            self._field = NumberField(self)
        return self._field

    def as_field_elem(self) -> FieldElem:
        return self.field().base_elem()

    def cmp(self, other: "AlgBase") -> int:
        a, b = self, other
        if a.exact_rational is not None and b.exact_rational is not None:
            return _sgn(a.exact_rational - b.exact_rational)
        if b.exact_rational is not None:
            return a.cmp_rational(b.exact_rational)
        if a.exact_rational is not None:
            return -b.cmp_rational(a.exact_rational)
        # try to separate the brackets
        for _ in range(4):
            alo, ahi = a.bracket()
            blo, bhi = b.bracket()
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            w = min(ahi - alo, bhi - blo, Fraction(1, 2))
            a.refine(w / 4)
            b.refine(w / 4)
        # persistent overlap: decide equality through minimal polynomials
        if a.exact_rational is not None or b.exact_rational is not None:
            return a.cmp(b)
        ma, mb = a.minpoly(), b.minpoly()
        if ma == mb:
            lo = min(a._lo, b._lo)
            hi = max(a._hi, b._hi)
            if polys.count_roots_halfopen(ma, lo, hi) == 1:
                return 0
        # distinct algebraic numbers: refinement must separate them
        while True:
            alo, ahi = a.bracket()
            blo, bhi = b.bracket()
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            a.refine((ahi - alo) / 4)
            b.refine((bhi - blo) / 4)

    def same_value(self, other: "AlgBase") -> bool:
        return self.cmp(other) == 0

    def cmp_rational(self, r) -> int:
        r = Fraction(r)
        if self.exact_rational is not None:
            return _sgn(self.exact_rational - r)
        while True:
            lo, hi = self.bracket()
            if r <= lo:
                return 1
            if r > hi:
                return -1
            if polys.eval_at(self.poly, r) == 0:
                # unique root in the bracket, and r is a root inside it
                self.exact_rational = r
                self._lo = self._hi = r
                return 0
            self.refine((hi - lo) / 2)

    # -- output ------------------------------------------------------------

    def decimal(self, digits: int = 14) -> str:
        """Decimal string with `digits` fractional digits, all certified."""
        if self.exact_rational is not None:
            return _dec_str(self.exact_rational, digits)
        self.refine(Fraction(1, 10 ** (digits + 2)))
        while True:
            lo, hi = self.bracket()
            a, b = _dec_str(lo, digits), _dec_str(hi, digits)
            if a == b:
                return a
            self.refine((hi - lo) / 4)

    def to_json(self, digits: int = 14) -> dict:
        lo, hi = self.bracket(Fraction(1, 10 ** (digits + 2)))
        return {
            "minpoly": list(self.minpoly()),
            "interval": [str(lo), str(hi)],
            "approx": self.decimal(digits),
        }


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _dec_str(fr: Fraction, digits: int) -> str:
    scaled = fr * 10**digits
    n, rem = divmod(scaled.numerator, scaled.denominator)
    # round half up; certification loops make the tie case immaterial
    if 2 * rem >= scaled.denominator:
        n += 1
    if digits == 0:
        return str(n)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 10**digits}.{n % 10**digits:0{digits}d}"


# ---------------------------------------------------------------------------
# expansions of 1


def _one_and_q(q: AlgBase):
    """Representation-appropriate (1, q) pair for exact remainder arithmetic."""
    if q.exact_rational is not None:
        return Fraction(1), q.exact_rational
    fld = q.field()
    return fld.one(), fld.base_elem()


def _sign_of(x) -> int:
    if isinstance(x, FieldElem):
        return x.sign()
    return _sgn(x)


def alpha_digits(q: AlgBase, n: int) -> str:
    """First n digits of the quasi-greedy expansion of 1: digit 1 exactly
    when the remainder stays strictly positive afterwards."""
    if n < 1:
        raise DomainError("need n >= 1")
    r, qe = _one_and_q(q)
    out = []
    for _ in range(n):
        t = qe * r - 1
        if _sign_of(t) > 0:
            out.append("1")
            r = t
        else:
            out.append("0")
            r = qe * r
    return "".join(out)


def beta_digits(q: AlgBase, n: int):
    """Greedy expansion of 1.  Returns (word, finite); when finite, the word
    is the full expansion b with beta = b 0^inf."""
    if n < 1:
        raise DomainError("need n >= 1")
    r, qe = _one_and_q(q)
    out = []
    for _ in range(n):
        t = qe * r - 1
        s = _sign_of(t)
        if s >= 0:
            out.append("1")
            r = t
            if s == 0:
                return "".join(out), True
        else:
            out.append("0")
            r = qe * r
    return "".join(out), False


def alpha_epseq(q: AlgBase, max_steps: int = 4096) -> EPSeq:
    """Quasi-greedy expansion as an eventually periodic sequence, found by
    exact cycle detection on the remainder orbit."""
    if q.alpha_hint is not None:
        return q.alpha_hint
    r, qe = _one_and_q(q)
    seen = {}
    digits = []
    for step in range(max_steps):
        if r in seen:
            k = seen[r]
            seq = EPSeq("".join(digits[:k]), "".join(digits[k:]))
            q.alpha_hint = seq
            return seq
        seen[r] = step
        t = qe * r - 1
        if _sign_of(t) > 0:
            digits.append("1")
            r = t
        else:
            digits.append("0")
            r = qe * r
    raise UnsupportedBaseError(
        f"no remainder cycle within {max_steps} steps; "
        "quasi-greedy expansion not detected to be eventually periodic"
    )


def parry_check(s: EPSeq) -> bool:
    """Is s the quasi-greedy expansion of 1 for some base in (1, 2]?
    Required: infinitely many ones, and every tail after a zero digit stays
    lexicographically at most the whole sequence."""
    from .words import lex_cmp, shift

    if s.per == "0":
        raise DomainError("sequence must have infinitely many ones")
    if s.digit(0) != 1:
        return False
    for n in range(1, len(s.pre) + len(s.per) + 1):
        if s.digit(n - 1) == 0 and lex_cmp(shift(s, n), s) > 0:
            return False
    return True


def base_from_alpha(s: EPSeq) -> AlgBase:
    """The unique base whose quasi-greedy expansion of 1 equals s."""
    if not parry_check(s):
        raise DomainError(f"{s} fails the quasi-greedy admissibility condition")
    k, p = len(s.pre), len(s.per)
    # clear denominators of eval_seq(s, q) = 1:
    #   P_pre(q) (q^p - 1) + P_per(q) - q^k (q^p - 1) = 0
    ppre = polys.trim(int(c) for c in reversed(s.pre))
    pper = polys.trim(int(c) for c in reversed(s.per))
    qp1 = polys.add(polys.shift((1,), p), (-1,))
    F = polys.add(polys.mul(ppre, qp1), pper)
    F = polys.sub(F, polys.shift(qp1, k))
    F = polys.neg(F)  # make the leading coefficient positive
    if polys.eval_at(F, 2) == 0:
        base = AlgBase.from_rational(2)
        base.alpha_hint = s
        return base
    # series value strictly decreases in q, so the root is unique; find a
    # bracket by walking toward 1 until the sign flips
    lo = Fraction(3, 2)
    while polys.eval_at(F, lo) >= 0:
        lo = 1 + (lo - 1) / 2
    return AlgBase.from_bracket(F, lo, Fraction(2), alpha_hint=s)


def cmp_seq_alpha(t: EPSeq, q: AlgBase, max_steps: int = 100000) -> int:
    """Lexicographic comparison of t with the quasi-greedy expansion of 1,
    certified without assuming that expansion is eventually periodic.

    Walks both digit streams; a repeated (position class, remainder) pair
    proves equality, a digit mismatch decides the order.  Terminates for
    every eventually periodic t."""
    if q.alpha_hint is not None:
        from .words import lex_cmp

        return lex_cmp(t, q.alpha_hint)
    r, qe = _one_and_q(q)
    k, p = len(t.pre), len(t.per)
    seen = set()
    for i in range(max_steps):
        cls = i if i < k else k + (i - k) % p
        state = (cls, r)
        if state in seen:
            return 0
        seen.add(state)
        d = qe * r - 1
        if _sign_of(d) > 0:
            a = 1
            nr = d
        else:
            a = 0
            nr = qe * r
        ti = t.digit(i)
        if ti != a:
            return -1 if ti < a else 1
        r = nr
    raise UnsupportedBaseError(f"comparison unresolved after {max_steps} digits")
