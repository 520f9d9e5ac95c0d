"""Sequence membership tests, four-way base classification, and exact
expansion counting."""

import random
from fractions import Fraction

import pytest

from twobases.bases import AlgBase, base_from_alpha
from twobases.classify import (
    BaseTag, CountResult, classify_base, count_expansions, in_A_prime,
    in_Vq_seq, is_univoque_seq,
)
from twobases.enum_b2 import enum_reprs, qn_ladder, repr_to_seq
from twobases.errors import UnsupportedBaseError
from twobases.words import ComponentSpec, EPSeq, parse_epseq, reflect

GEN0 = ComponentSpec("0")
PHI = AlgBase.from_poly((-1, -1, 1), Fraction(3, 2), Fraction(17, 10))
Q_S = AlgBase.from_poly((-1, -1, -2, 0, 1), Fraction(17, 10), Fraction(9, 5))
Q_F = AlgBase.from_poly((-1, 1, -2, 1), Fraction(17, 10), Fraction(9, 5))
PHI3 = base_from_alpha(EPSeq("", "110"))
FAT4 = base_from_alpha(EPSeq("", "1110"))
TWO = AlgBase.from_rational(2)


def test_membership_examples():
    assert in_A_prime(parse_epseq("0*"), AlgBase.from_rational(Fraction(3, 2)))
    assert in_A_prime(parse_epseq("0(10)"), Q_S)
    assert in_A_prime(parse_epseq("00(10)"), Q_S)
    assert not in_A_prime(parse_epseq("(10)"), Q_S)   # leading digit 1
    assert is_univoque_seq(parse_epseq("(10)"), Q_S)
    # at the golden ratio nothing with mixed digits survives
    assert not is_univoque_seq(parse_epseq("0(10)"), PHI)
    assert is_univoque_seq(parse_epseq("0*"), PHI)
    assert is_univoque_seq(parse_epseq("(1)"), PHI)


def test_weak_vs_strict_membership():
    # alpha itself touches the bound: weak holds, strict fails
    a = parse_epseq("(1100)")
    assert in_Vq_seq(a, Q_F) and not is_univoque_seq(a, Q_F)
    rng = random.Random(5001)
    for _ in range(200):
        pre = "".join(rng.choice("01") for _ in range(rng.randrange(0, 4)))
        per = "".join(rng.choice("01") for _ in range(rng.randrange(1, 5)))
        s = EPSeq(pre, per)
        q = rng.choice((PHI, Q_F, PHI3, FAT4, TWO))
        if is_univoque_seq(s, q):
            assert in_Vq_seq(s, q)


def test_reflection_closure():
    rng = random.Random(5002)
    bases = (PHI, Q_F, PHI3, FAT4, TWO, Q_S)
    hits = 0
    for _ in range(500):
        pre = "".join(rng.choice("01") for _ in range(rng.randrange(0, 5)))
        per = "".join(rng.choice("01") for _ in range(rng.randrange(1, 6)))
        s = EPSeq(pre, per)
        q = rng.choice(bases)
        lhs = is_univoque_seq(s, q)
        assert lhs == is_univoque_seq(reflect(s), q)
        hits += lhs
    assert hits > 0   # the suite exercised both outcomes


def test_membership_monotone_in_base():
    # unique-expansion sequences persist in every larger base
    pool = [repr_to_seq(v, GEN0) for v in enum_reprs(1, 4)]
    pool += [parse_epseq("0" * j + "(10)") for j in range(1, 6)]
    small = [s for s in pool if in_A_prime(s, Q_S)]
    assert len(small) >= 4
    for s in small:
        for q in (Q_F, PHI3, FAT4, TWO):
            assert is_univoque_seq(s, q)


def test_classify_frozen_tags():
    assert classify_base(TWO).tag is BaseTag.IN_U
    assert classify_base(PHI).tag is BaseTag.V_MINUS_UBAR
    assert classify_base(Q_F).tag is BaseTag.V_MINUS_UBAR
    assert classify_base(PHI3).tag is BaseTag.UBAR_MINUS_U
    assert classify_base(FAT4).tag is BaseTag.UBAR_MINUS_U
    low = base_from_alpha(EPSeq("", "100"))
    assert classify_base(low).tag is BaseTag.NOT_V
    assert BaseTag.UBAR_MINUS_U.value == "Ubar\\U"


def test_classify_evidence_flags_monotone():
    # a strict condition failing no later than its weak partner, for every
    # supported base in the battery
    battery = [PHI, Q_F, PHI3, FAT4,
               base_from_alpha(EPSeq("", "100")),
               base_from_alpha(EPSeq("", "10")),
               base_from_alpha(EPSeq("", "111000"))]
    battery += [e.base for e in qn_ladder(GEN0, 4)]
    for q in battery:
        fails = classify_base(q).evidence["first_fail"]
        for kind in ("upper", "lower"):
            s, w = fails[f"strict_{kind}"], fails[f"weak_{kind}"]
            if w is not None:
                assert s is not None and s <= w


def test_classify_ladder_bases():
    for entry in qn_ladder(GEN0, 6):
        cls = classify_base(entry.base)
        assert cls.tag is BaseTag.V_MINUS_UBAR
        assert cls.tag is not BaseTag.NOT_V


def test_classify_unsupported():
    with pytest.raises(UnsupportedBaseError):
        classify_base(Q_S)
    with pytest.raises(UnsupportedBaseError):
        classify_base(AlgBase.from_rational(Fraction(3, 2)), max_steps=300)


def test_count_expansions_frozen():
    assert count_expansions("100(10)", Q_S, cap=3) == CountResult(2)
    assert count_expansions(Fraction(1, 2), TWO) == CountResult(2)
    assert count_expansions(Fraction(1, 3), TWO) == CountResult(1)
    assert count_expansions(Fraction(1), TWO) == CountResult(1)   # only 1^inf
    assert count_expansions(Fraction(1), PHI, cap=5) == CountResult(6, exact=False)
    assert count_expansions(Fraction(3), TWO) == CountResult(0)
    assert count_expansions(Fraction(-1, 7), TWO) == CountResult(0)


def test_count_expansions_sequence_input():
    # string and parsed inputs agree; the counted point is the value
    s = parse_epseq("0(10)")
    assert count_expansions(s, Q_S, cap=3) == count_expansions("0(10)", Q_S, cap=3)
    # a uniquely expandable point of q_s
    assert count_expansions("0(10)", Q_S, cap=3) == CountResult(1)


def test_count_respects_cap():
    r = count_expansions(Fraction(1), PHI, cap=2)
    assert r == CountResult(3, exact=False) and not r.exact
