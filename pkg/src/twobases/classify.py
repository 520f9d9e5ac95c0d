"""Membership tests against the quasi-greedy expansion, and the four-way
classification of bases.

The sequence-level tests compare shifted tails with alpha(q) through the
certified streaming comparator, so they work even when alpha(q) is not
eventually periodic (e.g. at the smallest two-expansion base).  The base
classifier itself inspects shifts of alpha(q) and therefore does require an
eventually periodic alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bases import AlgBase, alpha_epseq, cmp_seq_alpha, _one_and_q, _sign_of
from .errors import DomainError, UnsupportedBaseError
from .words import EPSeq, eval_seq, lex_cmp, parse_epseq, reflect, shift


class BaseTag(Enum):
    IN_U = "U"
    UBAR_MINUS_U = "Ubar\\U"
    V_MINUS_UBAR = "V\\Ubar"
    NOT_V = "not-V"


@dataclass(frozen=True)
class BaseClass:
    tag: BaseTag
    evidence: dict
    alpha: EPSeq | None = None

    def to_json(self) -> dict:
        out = {"class": self.tag.value, "evidence": self.evidence}
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        return out


def is_univoque_seq(s: EPSeq, q: AlgBase) -> bool:
    """Does s encode a uniquely-expandable point of base q?

    Tail after each 0 must stay strictly below alpha(q); reflected tail
    after each 1 likewise.  One period window of shifts suffices.
    """
    window = len(s.pre) + len(s.per)
    for i in range(window):
        t = shift(s, i + 1)
        if s.digit(i) == 1:
            t = reflect(t)
        if cmp_seq_alpha(t, q) >= 0:
            return False
    return True


def in_Vq_seq(s: EPSeq, q: AlgBase) -> bool:
    """Weak variant: tails may touch alpha(q) but not exceed it."""
    window = len(s.pre) + len(s.per)
    for i in range(window):
        t = shift(s, i + 1)
        if s.digit(i) == 1:
            t = reflect(t)
        if cmp_seq_alpha(t, q) > 0:
            return False
    return True


def in_A_prime(s: EPSeq, q: AlgBase) -> bool:
    """Member of the zero-leading half of the unique-expansion sequences."""
    return s.digit(0) == 0 and is_univoque_seq(s, q)


def classify_base(q: AlgBase, max_steps: int = 4096) -> BaseClass:
    """Placement of q among the univoque set, its closure, and the
    uniquely-doubly-expandable set, per the nested shift conditions."""
    if q.exact_rational == 2:
        return BaseClass(BaseTag.IN_U, {"special": "q=2"}, EPSeq("", "1"))
    alpha = alpha_epseq(q, max_steps)
    ralpha = reflect(alpha)
    window = len(alpha.pre) + len(alpha.per)
    fails = {"strict_upper": None, "weak_upper": None,
             "strict_lower": None, "weak_lower": None}
    for n in range(1, window + 1):
        t = shift(alpha, n)
        up = lex_cmp(t, alpha)
        lo = lex_cmp(ralpha, t)
        if up >= 0 and fails["strict_upper"] is None:
            fails["strict_upper"] = n
        if up > 0 and fails["weak_upper"] is None:
            fails["weak_upper"] = n
        if lo >= 0 and fails["strict_lower"] is None:
            fails["strict_lower"] = n
        if lo > 0 and fails["weak_lower"] is None:
            fails["weak_lower"] = n
    evidence = {"window": window, "first_fail": fails}
    if fails["strict_upper"] is None and fails["strict_lower"] is None:
        tag = BaseTag.IN_U
    elif fails["weak_upper"] is None and fails["strict_lower"] is None:
        tag = BaseTag.UBAR_MINUS_U
    elif fails["weak_upper"] is None and fails["weak_lower"] is None:
        tag = BaseTag.V_MINUS_UBAR
    else:
        tag = BaseTag.NOT_V
    return BaseClass(tag, evidence, alpha)


# ---------------------------------------------------------------------------
# expansion counting for a single point


@dataclass(frozen=True)
class CountResult:
    """Number of expansions of a point: pinned down, or bounded from below."""

    value: int
    exact: bool = True

    def __repr__(self):
        return f"{'Exact' if self.exact else 'AtLeast'}({self.value})"


def count_expansions(x, q: AlgBase, cap: int = 8, max_states: int = 4096) -> CountResult:
    """How many digit sequences over {0, 1} evaluate to x in base q.

    x may be an eventually periodic sequence (or its string form), whose value
    is taken at q, or a rational.  Remainders are tracked exactly in Q(q), so
    the branching graph is finite or the state budget trips.  A reachable
    cycle that touches a branching state certifies infinitely many expansions,
    reported as the lower bound cap + 1.
    """
    if cap < 1:
        raise DomainError("need cap >= 1")
    if isinstance(x, str):
        x = parse_epseq(x)
    if isinstance(x, EPSeq):
        val = eval_seq(x, q)
    elif q.exact_rational is not None:
        val = Fraction(x)
    else:
        val = q.field().from_rational(Fraction(x))
    one, qe = _one_and_q(q)
    lim = (qe - one).inv() if hasattr(qe, "inv") else Fraction(1) / (qe - 1)
    if _sign_of(val) < 0 or _sign_of(lim - val) < 0:
        return CountResult(0)

    # breadth-first closure of the remainder graph
    children = {}
    queue = [val]
    while queue:
        r = queue.pop()
        if r in children:
            continue
        t = qe * r
        outs = []
        if _sign_of(lim - t) >= 0:
            outs.append(t)
        if _sign_of(t - one) >= 0:
            outs.append(t - one)
        children[r] = tuple(outs)
        if len(children) > max_states:
            raise UnsupportedBaseError("remainder graph exceeded the state budget")
        queue.extend(c for c in outs if c not in children)

    cyclic = _cyclic_states(children)
    if any(len(children[s]) > 1 for s in cyclic):
        return CountResult(cap + 1, exact=False)
    # remaining graph: cycles are exit-free, everything else is acyclic
    counts = {s: 1 for s in cyclic}
    seen = set(cyclic)
    stack = [(val, False)]
    while stack:  # post-order over the acyclic part
        s, expanded = stack.pop()
        if s in seen:
            continue
        if expanded:
            seen.add(s)
            counts[s] = sum(counts[c] for c in children[s])
        else:
            stack.append((s, True))
            stack.extend((c, False) for c in children[s] if c not in seen)
    return CountResult(counts[val])


def _cyclic_states(children) -> set:
    """States lying on some cycle of the remainder graph (Tarjan)."""
    index, low, on, stack = {}, {}, set(), []
    cyclic, counter = set(), [0]

    def strong(v0):
        work = [(v0, iter(children[v0]))]
        index[v0] = low[v0] = counter[0]
        counter[0] += 1
        stack.append(v0)
        on.add(v0)
        while work:
            v, it = work[-1]
            adv = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on.add(w)
                    work.append((w, iter(children[w])))
                    adv = True
                    break
                if w in on:
                    low[v] = min(low[v], index[w])
            if adv:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                if len(comp) > 1 or any(c == v for c in children[v]):
                    cyclic.update(comp)

    for s in children:
        if s not in index:
            strong(s)
    return cyclic
