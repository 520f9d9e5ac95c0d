"""Size of the unique-expansion language, and local smallness of the
two-expansion spectrum.

For a base q in (1, 2] whose quasi-greedy expansion alpha of 1 is eventually
periodic, the words with no visible tail violation form a regular language:
a state remembers, for every comparison opened at an earlier digit, how far
the stream has agreed with alpha (against the reflected digits when the
opening digit was a one).  Wrapping the agreement length into alpha's
preperiod-plus-period window keeps the state space finite.

Path counts, cycle structure and the Perron root of the transition matrix
then give exact word counts, a zero-entropy certificate, and certified
two-sided entropy bounds.  The language is closed under subwords, so the
count W_n of length-n words is submultiplicative and (log W_n)/n is a
certified upper bound for the entropy at every single n; dividing entropy by
log q turns it into an enclosure for the Hausdorff dimension of the set of
uniquely expandable points.  The counted language exceeds the
unique-expansion sequences only by the countably many streams whose tail
agrees with alpha forever, so no growth rate changes.

The local bound for the two-expansion spectrum rests on monotonicity of the
language in the base: any larger base with a manageable automaton bounds the
entropy on a whole neighbourhood, and a two-expansion base is pinned down by
a pair of unique-expansion tails, which costs at most twice the entropy per
log of the contraction.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import polys
from .bases import AlgBase, alpha_epseq, base_from_alpha, parry_check
from .errors import DomainError, NotFoundWithinBoundsError, UnsupportedBaseError
from .words import EPSeq, ComponentSpec, GEN0

__all__ = [
    "UqAutomaton",
    "uq_automaton",
    "build_automaton",
    "path_counts",
    "brute_count_words",
    "EntropyResult",
    "entropy",
    "dim_U",
    "overapprox_pool",
    "b2_local_bound",
]

STATE_CAP = 4096


@dataclass(frozen=True)
class UqAutomaton:
    """Transition structure of the no-visible-violation words for one alpha.

    states[i] is the pair of frozen agreement-length sets (opened by zeros,
    opened by ones); edges[i] lists (digit, target) moves that stay alive.
    Index 0 is the start state with nothing pending."""

    alpha: EPSeq
    states: tuple
    edges: tuple

    @property
    def size(self) -> int:
        return len(self.states)

    def matrix(self) -> list:
        A = [[0] * self.size for _ in range(self.size)]
        for s, es in enumerate(self.edges):
            for _b, t in es:
                A[s][t] += 1
        return A


def uq_automaton(alpha: EPSeq, cap: int = STATE_CAP) -> UqAutomaton:
    """Subset automaton tracking every unresolved comparison against alpha."""
    if alpha.digit(0) != 1:
        raise DomainError("alpha must start with digit one")
    if alpha.per == "0":
        raise DomainError("alpha must carry infinitely many ones")
    m, p = len(alpha.pre), len(alpha.per)

    def wrap(l):
        return l if l < m + p else m + ((l - m) % p)

    def step(state, b):
        P0, P1 = state
        n0, n1 = set(), set()
        for l in P0:
            a = alpha.digit(l)
            if b > a:
                return None
            if b == a:
                n0.add(wrap(l + 1))
        for l in P1:
            a = alpha.digit(l)
            e = 1 - b
            if e > a:
                return None
            if e == a:
                n1.add(wrap(l + 1))
        (n0 if b == 0 else n1).add(0)
        return frozenset(n0), frozenset(n1)

    start = (frozenset(), frozenset())
    index = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        s = queue.popleft()
        out = []
        for b in (0, 1):
            t = step(s, b)
            if t is None:
                continue
            if t not in index:
                if len(index) >= cap:
                    raise UnsupportedBaseError("automaton exceeded the state cap")
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            out.append((b, index[t]))
        edges.append(tuple(out))
    return UqAutomaton(alpha, tuple(order), tuple(edges))


def build_automaton(q: AlgBase, cap: int = STATE_CAP) -> UqAutomaton:
    """Automaton of the unique-expansion words of base q.  Needs the
    quasi-greedy expansion of 1 to be eventually periodic."""
    return uq_automaton(alpha_epseq(q), cap)


def path_counts(aut: UqAutomaton, n: int) -> list:
    """Numbers of alive words of lengths 1..n, counted along automaton paths."""
    if n < 1:
        raise DomainError("need n >= 1")
    vec = [0] * aut.size
    vec[0] = 1
    out = []
    for _ in range(n):
        nxt = [0] * aut.size
        for s, es in enumerate(aut.edges):
            x = vec[s]
            if x:
                for _b, t in es:
                    nxt[t] += x
        vec = nxt
        out.append(sum(vec))
    return out


def brute_count_words(alpha: EPSeq, n: int) -> int:
    """Reference count of the length-n alive words, checked window by window.

    A word dies when some tail, reflected if it follows a one, exceeds the
    visible prefix of alpha at the first disagreeing digit.  No automaton."""
    if n < 1:
        raise DomainError("need n >= 1")
    apre = [alpha.digit(i) for i in range(n)]
    total = 0
    for bits in itertools.product((0, 1), repeat=n):
        ok = True
        for i in range(n):
            b = bits[i]
            for t in range(n - i - 1):
                e = bits[i + 1 + t] if b == 0 else 1 - bits[i + 1 + t]
                if e != apre[t]:
                    if e > apre[t]:
                        ok = False
                    break
            if not ok:
                break
        total += ok
    return total


# ---------------------------------------------------------------------------
# entropy


@dataclass(frozen=True)
class EntropyResult:
    """Certified natural-log entropy data of the alive-word language.

    lower and upper enclose the entropy; n_bound is the single-length bound
    (log W_nmax)/nmax, always an upper bound on its own."""

    states: int
    lower: Fraction
    upper: Fraction
    n_bound: Fraction
    nmax: int
    zero: bool = False
    growth: AlgBase | None = None
    charpoly: tuple = ()

    def to_json(self) -> dict:
        out = {
            "states": self.states,
            "entropy_log": [str(self.lower), str(self.upper)],
            "n_bound": str(self.n_bound),
            "nmax": self.nmax,
            "zero": self.zero,
        }
        if self.growth is not None:
            out["growth"] = self.growth.to_json()
        if self.charpoly:
            out["charpoly"] = list(self.charpoly)
        return out


def _sccs(edges) -> list:
    """Strongly connected components, Tarjan, iterative."""
    n = len(edges)
    index = [None] * n
    low = [0] * n
    on = [False] * n
    stack, comps = [], []
    counter = [0]
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(edges[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for _b, w in it:
                if index[w] is None:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on[w] = True
                    work.append((w, iter(edges[w])))
                    advanced = True
                    break
                if on[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _cycles_only(aut: UqAutomaton) -> bool:
    """True when every strongly connected piece is a lone state or one simple
    cycle; path counts then grow at most polynomially."""
    for comp in _sccs(aut.edges):
        members = set(comp)
        for s in comp:
            inside = sum(1 for _b, t in aut.edges[s] if t in members)
            if inside > 1:
                return False
    return True


def _charpoly(aut: UqAutomaton) -> tuple:
    import sympy

    M = sympy.Matrix(aut.matrix())
    desc = M.charpoly().all_coeffs()
    return polys.trim(int(c) for c in reversed(desc))


def _perron_root(cp) -> AlgBase:
    """Largest real root of the characteristic polynomial in (1, 2]."""
    best = None
    for g, _ in polys.factor_int(cp):
        if polys.degree(g) < 1:
            continue
        if polys.degree(g) == 1:
            r = Fraction(-g[0], g[1])
            if 1 < r <= 2:
                cand = AlgBase.from_rational(r)
                if best is None or cand.cmp(best) > 0:
                    best = cand
            continue
        for a, b in polys.isolate_roots(g, Fraction(1), Fraction(2)):
            cand = AlgBase.from_bracket(g, a, b)
            if best is None or cand.cmp(best) > 0:
                best = cand
    if best is None:
        raise DomainError("no growth root in (1, 2] despite branching cycles")
    return best


def _frac_from_mpf(t) -> Fraction:
    sign, man, exp, _bc = t
    if man == 0:
        if exp != 0:
            raise DomainError("nonfinite interval endpoint")
        return Fraction(0)
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def _log_bounds(x: Fraction, prec: int = 120) -> tuple:
    """Certified rational bounds around log x for a positive rational x."""
    if x <= 0:
        raise DomainError("log needs a positive argument")
    old = mpmath.iv.prec
    mpmath.iv.prec = prec
    try:
        val = mpmath.iv.log(mpmath.iv.mpf(x.numerator) / mpmath.iv.mpf(x.denominator))
        a, b = val._mpi_
        return _frac_from_mpf(a), _frac_from_mpf(b)
    finally:
        mpmath.iv.prec = old


def _matvec(edges, vec) -> list:
    out = [0] * len(edges)
    for s, es in enumerate(edges):
        x = vec[s]
        if x:
            for _b, t in es:
                out[t] += x
    return out


def entropy(target, nmax: int = 24, exact_cap: int = 64,
            cap: int = STATE_CAP) -> EntropyResult:
    """Certified entropy of the alive-word language of a base or an alpha.

    Simple-cycle structure certifies zero exactly.  Small automata get the
    exact Perron root from the characteristic polynomial; larger ones fall
    back on word counts: (log W_n)/n from above at n = 4*nmax, a diagonal
    return count of the transition matrix from below.  n_bound always
    reports the word-count bound at nmax itself.
    """
    if nmax < 1:
        raise DomainError("need nmax >= 1")
    alpha = target if isinstance(target, EPSeq) else alpha_epseq(target)
    aut = uq_automaton(alpha, cap)
    counts = path_counts(aut, 4 * nmax)
    n_bound = _log_bounds(Fraction(counts[nmax - 1]))[1] / nmax
    if _cycles_only(aut):
        return EntropyResult(aut.size, Fraction(0), Fraction(0), n_bound,
                             nmax, zero=True)
    if aut.size <= exact_cap:
        cp = _charpoly(aut)
        lam = _perron_root(cp)
        lo, hi = lam.bracket(Fraction(1, 10 ** 25))
        lo = max(lo, Fraction(1))
        return EntropyResult(aut.size, max(_log_bounds(lo)[0], Fraction(0)),
                             _log_bounds(hi)[1], n_bound, nmax,
                             growth=lam, charpoly=cp)
    upper = _log_bounds(Fraction(counts[4 * nmax - 1]))[1] / (4 * nmax)
    # a state reachable with many paths is a good bet for the dominant piece
    fwd = [0] * aut.size
    fwd[0] = 1
    for _ in range(8):
        fwd = _matvec(aut.edges, fwd)
    s_star = max(range(aut.size), key=lambda s: (fwd[s], -s))
    basis = [0] * aut.size
    basis[s_star] = 1
    for _ in range(4 * nmax):
        basis = _matvec(aut.edges, basis)
    lower = Fraction(0)
    if basis[s_star] > 1:
        lower = max(_log_bounds(Fraction(basis[s_star]))[0] / (4 * nmax),
                    Fraction(0))
    return EntropyResult(aut.size, lower, upper, n_bound, nmax)


# ---------------------------------------------------------------------------
# over-approximant pool and dimension


def _tm_prefix(comp: ComponentSpec, length: int) -> str:
    k = 1
    while 2 ** k < length:
        k += 1
    return comp.omega(k)[:length]


def overapprox_pool(comp: ComponentSpec = GEN0, N: int = 6, M: int = 48) -> list:
    """Bases with eventually periodic alpha for sandwiching entropy targets:
    the accumulation ladder from below, bases whose alpha repeats a prefix of
    the generator limit word (these exist on both sides of the accumulation
    point), and 2 itself.  Sorted increasingly, duplicates removed."""
    from .enum_b2 import qn_ladder

    import functools

    pool = [e.base for e in qn_ladder(comp, N)]
    tau = _tm_prefix(comp, 4 * M)
    for m in range(1, M + 1):
        s = EPSeq("", tau[:m])
        if parry_check(s):
            pool.append(base_from_alpha(s))
    pool.append(AlgBase.from_rational(2))
    pool.sort(key=functools.cmp_to_key(lambda a, b: a.cmp(b)))
    out = [pool[0]]
    for b in pool[1:]:
        if b.cmp(out[-1]) != 0:
            out.append(b)
    return out


def dim_U(q: AlgBase, nmax: int = 24, exact_cap: int = 64,
          pool=None) -> tuple:
    """Certified rational enclosure of the Hausdorff dimension of the set of
    points with a unique expansion in base q.

    When the quasi-greedy expansion of 1 in base q is not detected to be
    eventually periodic, the entropy is sandwiched between pool neighbours
    instead (the language only grows with the base)."""
    try:
        ent = entropy(q, nmax, exact_cap)
    except UnsupportedBaseError:
        return _dim_sandwich(q, nmax, exact_cap, pool)
    if ent.zero:
        return Fraction(0), Fraction(0)
    if ent.growth is not None and ent.growth.cmp(q) == 0:
        return Fraction(1), Fraction(1)
    qlo, qhi = q.bracket(Fraction(1, 10 ** 25))
    log_lo = _log_bounds(qlo)[0]
    log_hi = _log_bounds(qhi)[1]
    if log_lo <= 0:
        raise DomainError("base bracket must stay above 1")
    lower = max(ent.lower / log_hi, Fraction(0))
    upper = min(ent.upper / log_lo, Fraction(1))
    return lower, upper


def _dim_sandwich(q: AlgBase, nmax: int, exact_cap: int, pool) -> tuple:
    pool = overapprox_pool() if pool is None else list(pool)
    below = None
    above = None
    for r in pool:
        c = r.cmp(q)
        if c <= 0:
            below = r
        if c >= 0 and above is None:
            above = r
    if above is None:
        raise DomainError("pool must contain a base at least q")
    qlo, qhi = q.bracket(Fraction(1, 10 ** 25))
    log_lo = _log_bounds(qlo)[0]
    log_hi = _log_bounds(qhi)[1]
    if log_lo <= 0:
        raise DomainError("base bracket must stay above 1")
    lower = Fraction(0)
    if below is not None:
        lower = max(entropy(below, nmax, exact_cap).lower / log_hi, Fraction(0))
    upper = min(entropy(above, nmax, exact_cap).upper / log_lo, Fraction(1))
    return lower, upper


# ---------------------------------------------------------------------------
# local bound for the two-expansion spectrum


def _certified_geq(r: AlgBase, q: AlgBase, delta: Fraction, depth: int = 40) -> bool:
    """Bracket separation proof of r >= q + delta; False when not provable."""
    eps = Fraction(1, 10 ** 6)
    for _ in range(depth):
        if r.bracket()[0] >= q.bracket()[1] + delta:
            return True
        if r.bracket()[1] < q.bracket()[0] + delta:
            return False
        r.refine(eps)
        q.refine(eps)
        eps /= 16
    return False


def b2_local_bound(q: AlgBase, delta, pool=None, nmax: int = 24,
                   exact_cap: int = 64) -> tuple:
    """Certified enclosure of the dimension bound for two-expansion bases
    within distance delta of q: twice the unique-expansion entropy just above
    the window, per log of the contraction just below it.

    Soundness needs 0 < delta < (2 - q)/3 and q - delta > 1.  Each base in
    the window is pinned down by a pair of tails alive for every base up to
    q + delta, so any pool base above q + delta caps the count of such pairs
    and 2 * entropy(pool base) / log(q - delta) dominates the dimension of
    the spectrum piece.  The returned pair encloses the bound itself; its
    upper end is the certified dimension bound."""
    delta = Fraction(delta)
    if delta <= 0:
        raise DomainError("delta must be positive")
    if q.cmp_rational(2 - 3 * delta) >= 0:
        raise DomainError("delta must stay below (2 - q) / 3")
    if q.cmp_rational(1 + delta) <= 0:
        raise DomainError("q - delta must stay above 1")
    pool = overapprox_pool() if pool is None else list(pool)
    chosen = None
    for r in pool:
        if _certified_geq(r, q, delta):
            chosen = r
            break
    if chosen is None:
        raise NotFoundWithinBoundsError("no pool base certified above q + delta")
    h_up = entropy(chosen, nmax, exact_cap).upper
    qlo, qhi = q.bracket(Fraction(1, 10 ** 25))
    log_lo = _log_bounds(qlo - delta)[0]
    if log_lo <= 0:
        raise DomainError("q - delta must stay above 1")
    hi = 2 * h_up / log_lo
    lo = Fraction(0)
    best_below = None
    for r in pool:
        if r.cmp(q) <= 0:
            best_below = r
    if best_below is not None:
        h_lo = entropy(best_below, nmax, exact_cap).lower
        lo = max(2 * h_lo / _log_bounds(qhi - delta)[1], Fraction(0))
    return lo, hi
