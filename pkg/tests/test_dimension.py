"""Alive-word automaton, topological entropy enclosures, Hausdorff dimension
of the unique-expansion set, and the local two-expansion bound."""

import math
from fractions import Fraction

import pytest

from twobases.bases import AlgBase, alpha_epseq, base_from_alpha, parry_check
from twobases.dimension import (
    b2_local_bound, brute_count_words, build_automaton, dim_U, entropy,
    overapprox_pool, path_counts, uq_automaton,
)
from twobases.errors import DomainError
from twobases.words import EPSeq, thue_morse

PHI = AlgBase.from_poly((-1, -1, 1), Fraction(3, 2), Fraction(17, 10))
Q_F = AlgBase.from_poly((-1, 1, -2, 1), Fraction(17, 10), Fraction(9, 5))
PHI3 = base_from_alpha(EPSeq("", "110"))
FAT4 = base_from_alpha(EPSeq("", "1110"))
TWO = AlgBase.from_rational(2)
ALPHAS = [EPSeq("", p) for p in ("10", "1100", "110", "1110", "11010011")]


def test_automaton_counts_match_brute_force():
    for a in ALPHAS:
        aut = uq_automaton(a)
        got = path_counts(aut, 9)
        want = [brute_count_words(a, n) for n in range(1, 10)]
        assert got == want


def test_build_automaton_uses_quasi_greedy_expansion():
    for q in (PHI, Q_F, PHI3, TWO):
        assert build_automaton(q).alpha == alpha_epseq(q)
    aut = build_automaton(PHI3)
    assert aut.size == 7


def test_counts_submultiplicative_on_doubling():
    # W(2n) <= W(n)^2 exactly, which is the finite-level certificate that
    # every (log W(n))/n upper-bounds the growth rate
    for a in ALPHAS:
        counts = path_counts(uq_automaton(a), 24)
        for n in range(1, 13):
            assert counts[2 * n - 1] <= counts[n - 1] ** 2


def test_entropy_zero_certificates():
    for q in (PHI, Q_F):
        r = entropy(q)
        assert r.zero and r.lower == 0 == r.upper and r.growth is None


def test_entropy_exact_values():
    r = entropy(PHI3)
    assert not r.zero
    assert r.lower <= r.upper and r.upper - r.lower < Fraction(1, 10**15)
    assert abs(r.lower - Fraction(4812118250, 10**10)) < Fraction(1, 10**9)
    assert r.growth.minpoly() == (-1, -1, 1)   # golden-ratio growth
    r = entropy(TWO)
    assert abs(r.lower - Fraction(6931471805, 10**10)) < Fraction(1, 10**9)
    assert r.growth.cmp_rational(2) == 0
    r = entropy(FAT4)
    assert r.growth.minpoly() == (-1, -1, -1, 1)
    assert abs(r.lower - Fraction(609378, 10**6)) < Fraction(1, 10**5)


def test_entropy_n_bound_dominates():
    for q in (PHI, Q_F, PHI3, FAT4, TWO):
        r = entropy(q)
        assert r.upper <= r.n_bound


def test_entropy_json_shape():
    j = entropy(PHI3).to_json()
    assert set(j) >= {"states", "entropy_log", "n_bound", "nmax", "zero"}
    lo, hi = (Fraction(t) for t in j["entropy_log"])
    assert lo <= hi
    assert j["growth"]["minpoly"] == [-1, -1, 1]


def test_dimension_frozen():
    lo, hi = dim_U(TWO)
    assert (lo, hi) == (1, 1)
    assert dim_U(Q_F) == (0, 0)
    lo, hi = dim_U(PHI3)
    assert Fraction(7896772330, 10**10) <= lo <= hi <= Fraction(7896772331, 10**10)


def test_dimension_sandwich_for_unsupported_alpha():
    # the smallest two-expansion base has an aperiodic expansion of 1; both
    # ladder neighbours carry zero entropy, so the enclosure collapses
    q_s = AlgBase.from_poly((-1, -1, -2, 0, 1), Fraction(17, 10), Fraction(9, 5))
    assert dim_U(q_s) == (0, 0)
    lo, hi = dim_U(AlgBase.from_rational(Fraction(19, 10)))
    assert Fraction(74, 100) < lo <= hi <= 1


def test_overapprox_pool_structure():
    pool = overapprox_pool()
    for a, b in zip(pool, pool[1:]):
        assert a.cmp(b) < 0
    assert pool[-1].cmp_rational(2) == 0
    assert any(p.same_value(PHI3) for p in pool)
    # an admissible base within 4e-6 above the univoque threshold exists
    close = [p for p in pool
             if p.cmp_rational(Fraction(178723166, 10**8)) > 0
             and p.cmp_rational(Fraction(178723200, 10**8)) < 0]
    assert close and close[0].decimal(10) == "1.7872319133"


def test_pool_entropy_monotone():
    pool = overapprox_pool()
    rs = [entropy(p, nmax=12) for p in pool]
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            assert rs[i].lower <= rs[j].upper


def test_local_bound_certifies_below_one():
    q20 = base_from_alpha(EPSeq("", thue_morse(20)))
    assert parry_check(EPSeq("", thue_morse(20)))
    assert q20.decimal(10) == "1.7872319133"
    lo, hi = b2_local_bound(q20, Fraction(1, 10**6))
    assert 0 <= lo <= hi < 1
    assert float(hi) < 0.42


def test_local_bound_validation():
    q20 = base_from_alpha(EPSeq("", thue_morse(20)))
    with pytest.raises(DomainError):
        b2_local_bound(q20, Fraction(-1))
    with pytest.raises(DomainError):
        b2_local_bound(q20, Fraction(1, 2))       # exceeds (2 - q)/3
    with pytest.raises(DomainError):
        b2_local_bound(AlgBase.from_rational(Fraction(51, 50)), Fraction(1, 25))
