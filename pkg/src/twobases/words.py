"""Binary words and eventually periodic sequences.

Finite words are plain strings over {0,1}.  Infinite sequences are stored as
EPSeq(pre, per) meaning pre followed by per repeated forever, always held in
canonical form: primitive period, shortest preperiod.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DomainError

LT, EQ, GT = -1, 0, 1


def _check_word(w: str, name: str = "word") -> None:
    if any(ch not in "01" for ch in w):
        raise DomainError(f"{name} must consist of digits 0/1, got {w!r}")


def reflect(s):
    """Complement every digit.  Works on words (str) and EPSeqs."""
    if isinstance(s, EPSeq):
        return EPSeq(reflect(s.pre), reflect(s.per))
    table = str.maketrans("01", "10")
    return s.translate(table)


def word_inc(w: str) -> str:
    """w+ : increment the last digit (which must be 0)."""
    if not w or w[-1] != "0":
        raise DomainError(f"word_inc needs a nonempty word ending in 0, got {w!r}")
    return w[:-1] + "1"


def word_dec(w: str) -> str:
    """w- : decrement the last digit (which must be 1)."""
    if not w or w[-1] != "1":
        raise DomainError(f"word_dec needs a nonempty word ending in 1, got {w!r}")
    return w[:-1] + "0"


def word_cmp(u: str, v: str) -> int:
    """Compare u and v as left-infinite-padded words: u < v iff u0^inf < v0^inf.

    Digits compare as integers, so a transient digit '2' (from incrementing a
    word ending in 1) is handled too.
    """
    n = max(len(u), len(v))
    for i in range(n):
        a = u[i] if i < len(u) else "0"
        b = v[i] if i < len(v) else "0"
        if a != b:
            return LT if a < b else GT
    return EQ


def thue_morse(n: int) -> str:
    """First n digits of the truncated Thue-Morse sequence (1-indexed)."""
    if n < 1:
        raise DomainError("need n >= 1")
    return "".join(str(bin(i).count("1") & 1) for i in range(1, n + 1))


def _primitive(per: str) -> str:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            return per[:d]
    return per


@dataclass(frozen=True)
class EPSeq:
    """Eventually periodic 0/1 sequence pre (per)^inf, canonicalized."""

    pre: str
    per: str

    def __post_init__(self):
        _check_word(self.pre, "preperiod")
        _check_word(self.per, "period")
        if not self.per:
            raise DomainError("period must be nonempty")
        pre, per = self.pre, _primitive(self.per)
        # shortest preperiod: rotate the period window left while possible
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    # -- basic access ------------------------------------------------------

    def digit(self, i: int) -> int:
        """0-based digit."""
        if i < len(self.pre):
            return int(self.pre[i])
        return int(self.per[(i - len(self.pre)) % len(self.per)])

    def prefix(self, n: int) -> str:
        k = len(self.pre)
        if n <= k:
            return self.pre[:n]
        reps = (n - k) // len(self.per) + 1
        return (self.pre + self.per * reps)[:n]

    def __str__(self):
        return format_epseq(self)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.pre and self.per == "0"

    def starts_with(self, w: str) -> bool:
        return self.prefix(len(w)) == w


ZERO_SEQ = EPSeq("", "0")
ONE_SEQ = EPSeq("", "1")


def from_word(w: str) -> EPSeq:
    """The sequence w 0^inf."""
    return EPSeq(w, "0")


def prepend(w: str, s: EPSeq) -> EPSeq:
    return EPSeq(w + s.pre, s.per)


def shift(s: EPSeq, n: int) -> EPSeq:
    """Drop the first n digits."""
    if n < 0:
        raise DomainError("shift needs n >= 0")
    if n <= len(s.pre):
        return EPSeq(s.pre[n:], s.per)
    k = (n - len(s.pre)) % len(s.per)
    return EPSeq("", s.per[k:] + s.per[:k])


def lex_cmp(a: EPSeq, b: EPSeq) -> int:
    """First-difference comparison, certified by the periodicity bound."""
    bound = (
        max(len(a.pre), len(b.pre))
        + lcm(len(a.per), len(b.per))
        + max(len(a.per), len(b.per))
    )
    for i in range(bound):
        x, y = a.digit(i), b.digit(i)
        if x != y:
            return LT if x < y else GT
    return EQ


def check_generator(w: str) -> bool:
    """Admissibility test for a component generator a_1..a_m.

    Both chains must hold for every rotation point 0 < i <= m:
      reflect(a_i..a_m a_1..a_{i-1})      <= (a_1..a_m)+
      (a_i..a_m)+ reflect(a_1..a_{i-1})   <= (a_1..a_m)+
    The increment may produce a transient digit 2; comparisons use the
    zero-padded word order.
    """
    if not w:
        raise DomainError("generator must be nonempty")
    _check_word(w, "generator")
    m = len(w)

    def inc_free(u: str) -> str:
        return u[:-1] + str(int(u[-1]) + 1)

    top = inc_free(w)
    for i in range(m):
        rot = w[i:] + w[:i]
        if word_cmp(reflect(rot), top) == GT:
            return False
        if word_cmp(inc_free(w[i:]) + reflect(w[:i]), top) == GT:
            return False
    return True


class ComponentSpec:
    """A connected component of the complement of the closure of the univoque
    base set, identified by its generator word (the alpha period of the left
    endpoint)."""

    def __init__(self, generator: str):
        if not check_generator(generator):
            raise DomainError(f"{generator!r} is not a valid generator")
        self.generator = generator
        self._omegas = [word_inc(generator)]

    def __repr__(self):
        return f"ComponentSpec({self.generator!r})"

    def omega(self, n: int) -> str:
        """n-th doubling word; length 2^n * len(generator)."""
        if n < 0:
            raise DomainError("need n >= 0")
        while len(self._omegas) <= n:
            w = self._omegas[-1]
            self._omegas.append(w + word_inc(reflect(w)))
        return self._omegas[n]

    def omega_minus(self, n: int) -> str:
        return word_dec(self.omega(n))

    def alpha_word(self, n: int) -> EPSeq:
        """Quasi-greedy expansion at the n-th ladder base, as a sequence."""
        if n == 0:
            return EPSeq("", self.generator) if self.generator != "0" else ZERO_SEQ
        return EPSeq("", self.omega_minus(n))


GEN0 = ComponentSpec("0")


# -- series evaluation -----------------------------------------------------


def eval_seq(s: EPSeq, q):
    """Exact value of sum_i s_i q^{-i} (digits 1-indexed).

    Rational q (int/Fraction, or an exact-rational algebraic base) gives a
    Fraction; an algebraic base gives an element of its number field.
    """
    from .bases import AlgBase

    if isinstance(q, AlgBase):
        if q.exact_rational is not None:
            q = q.exact_rational
        else:
            return _eval_seq_field(s, q)
    q = Fraction(q)
    if q <= 1:
        raise DomainError("base must exceed 1")
    x = 1 / q
    head = Fraction(0)
    for ch in reversed(s.pre):
        head = (head + int(ch)) * x
    tail = Fraction(0)
    for ch in reversed(s.per):
        tail = (tail + int(ch)) * x
    k, p = len(s.pre), len(s.per)
    return head + x**k * tail / (1 - x**p)


def _eval_seq_field(s: EPSeq, q):
    fld = q.field()
    one = fld.one()
    x = fld.base_elem().inv()
    head = fld.zero()
    for ch in reversed(s.pre):
        head = (head + int(ch) * one) * x
    tail = fld.zero()
    for ch in reversed(s.per):
        tail = (tail + int(ch) * one) * x
    xk = x ** len(s.pre)
    xp = x ** len(s.per)
    return head + xk * tail * (one - xp).inv()


# -- text form -------------------------------------------------------------


def format_epseq(s: EPSeq) -> str:
    if s.is_zero():
        return "0*"
    return f"{s.pre}({s.per})"


def parse_epseq(text: str) -> EPSeq:
    """Accepts pre(per), (per), 0*, w* (w then 0^inf), or a bare finite word."""
    t = text.strip().replace(" ", "")
    if not t:
        raise DomainError("empty sequence text")
    if t.endswith("*"):
        body = t[:-1]
        _check_word(body, "sequence")
        return from_word(body) if body else ZERO_SEQ
    if "(" in t:
        if not t.endswith(")") or t.count("(") != 1:
            raise DomainError(f"malformed sequence text {text!r}")
        pre, per = t[:-1].split("(")
        return EPSeq(pre, per)
    _check_word(t, "sequence")
    return from_word(t)
