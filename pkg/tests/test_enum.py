"""Ladder bases, block-profile enumeration, interval sweeps for
two-expansion bases, and derived-order certification."""

import math

import pytest

from twobases.b2core import udiff_generate, B2Witness
from twobases.bases import beta_digits
from twobases.classify import CountResult, count_expansions, is_univoque_seq
from twobases.enum_b2 import (
    LadderEntry, ReprVector, derived_order_bound, enum_B2, enum_reprs,
    min_derived, pair_weight, qn_ladder, repr_to_seq,
)
from twobases.errors import DomainError
from twobases.words import ComponentSpec, EPSeq, format_epseq, parse_epseq, prepend, word_dec

GEN0 = ComponentSpec("0")
INF = math.inf

LADDER_DECIMALS = ["1.6180339887", "1.7548776662", "1.7845989334",
                   "1.7872069628", "1.7872316479"]


def test_ladder_frozen():
    lad = qn_ladder(GEN0, 5)
    assert [e.n for e in lad] == [1, 2, 3, 4, 5]
    assert [e.base.decimal(10) for e in lad] == LADDER_DECIMALS
    assert lad[0].base.minpoly() == (-1, -1, 1)
    assert lad[1].base.minpoly() == (-1, 1, -2, 1)
    for a, b in zip(lad, lad[1:]):
        assert a.base.cmp(b.base) < 0


def test_ladder_expansions_consistent():
    for e in qn_ladder(GEN0, 5):
        w = GEN0.omega(e.n)
        assert e.beta_word == w
        assert e.alpha == EPSeq("", word_dec(w))
        assert beta_digits(e.base, len(w) + 4) == (w, True)
    with pytest.raises(DomainError):
        qn_ladder(GEN0, 0)


def test_ladder_other_component():
    lad = qn_ladder(ComponentSpec("110"), 2)
    assert lad[0].beta_word == "111001"
    assert lad[0].base.decimal(10) == "1.8667603992"


def test_enum_reprs_counts_and_shape():
    counts = {1: 5, 2: 49, 3: 533, 4: 5857}
    for n, want in counts.items():
        vs = enum_reprs(n, 4)
        assert len(vs) == want
        for v in vs:
            assert len(v.j) == len(v.k) + 1
            assert v.j[-1] is INF or v.j[-1] == INF
            assert len(v.s) == max(len(v.k) - 1, 0)
            assert all(kk < n for kk in v.k) or n == 1
    # deterministic ordering
    assert enum_reprs(2, 4) == enum_reprs(2, 4)


def test_repr_vector_validation():
    with pytest.raises(DomainError):
        ReprVector((0,), (), (2, 3))       # finite final count
    with pytest.raises(DomainError):
        repr_to_seq(ReprVector((0,), (), (0, INF)), GEN0)
    v = ReprVector((0,), (), (2, INF))
    assert (v.m, v.top_k) == (1, 0)
    z = ReprVector((), (), (INF,))
    assert z.top_k == -1 and format_epseq(repr_to_seq(z, GEN0)) == "0*"
    assert pair_weight(v, z) == 1 + 0


def test_udiff_assembly_examples():
    # 0^2 (10)^inf
    assert udiff_generate(GEN0, "", (0,), (), (2, INF)) == parse_epseq("0(01)")
    # 0 (10)^0 (1 00) (1100)^inf, the bridge spelling
    assert udiff_generate(GEN0, "0", (0, 1), (1,), (0, 0, INF)) \
        == parse_epseq("0(1001)")
    assert udiff_generate(GEN0, "", (0, 1), (1,), (1, 0, INF)) \
        == parse_epseq("0(1001)")
    # 0 (1100)^inf
    assert udiff_generate(GEN0, "0", (1,), (), (0, INF)) == parse_epseq("(0110)")


def test_repr_sequences_admissible_above_interval():
    lad = qn_ladder(GEN0, 3)
    for n in (1, 2):
        for v in enum_reprs(n, 3):
            s = repr_to_seq(v, GEN0)
            assert s.digit(0) == 0
            assert is_univoque_seq(s, lad[n].base)


def test_omega_never_a_factor():
    # the level word itself is excluded from every sequence of its interval;
    # its reflection is not, which is why only the word itself is tested
    reflected_hits = 0
    for n in (1, 2, 3):
        om = GEN0.omega(n)
        rom = om.translate(str.maketrans("01", "10"))
        for v in enum_reprs(n, 4):
            s = repr_to_seq(v, GEN0)
            horizon = len(s.pre) + 2 * len(s.per) + len(om)
            w = "".join(str(s.digit(i)) for i in range(horizon))
            assert om not in w
            reflected_hits += rom in w
    assert reflected_hits > 0


def test_enum_B2_first_interval():
    wits = enum_B2(1, 6)
    assert [w.root.decimal(10) for w in wits] == ["1.7106440950", "1.7548776662"]
    assert [w.minpoly for w in wits] == [(-1, -1, -2, 0, 1), (-1, 1, -2, 1)]
    assert all(w.admissible for w in wits)
    assert all(w.derived_order == 0 for w in wits)
    assert all(w.repr_vectors for w in wits)
    # deterministic output
    again = enum_B2(1, 6)
    assert [format_epseq(w.c) for w in wits] == [format_epseq(w.c) for w in again]


def test_enum_B2_second_interval():
    lad = qn_ladder(GEN0, 3)
    wits = enum_B2(2, 4)
    assert len(wits) == 45
    assert wits[0].root.decimal(10) == "1.7573507340"
    assert wits[-1].root.decimal(10) == "1.7840722141"
    for a, b in zip(wits, wits[1:]):
        assert a.root.cmp(b.root) < 0
    assert len({w.minpoly for w in wits}) == len(wits)
    assert all(w.admissible for w in wits)
    for w in wits:
        assert lad[1].base.cmp(w.root) < 0 and w.root.cmp(lad[2].base) <= 0
    # isolated witnesses are dense in the picture: order-0 ones show up here
    orders = {w.derived_order for w in wits}
    assert 0 in orders and max(orders) >= 2


def test_enum_B2_witnesses_count_two():
    for w in enum_B2(1, 6):
        assert count_expansions(prepend("1", w.c), w.root, cap=3) == CountResult(2)


def test_derived_order_bound():
    w = enum_B2(1, 6)[0]
    assert derived_order_bound(w, 1) == 0
    assert derived_order_bound(w, 3) == 4
    bare = B2Witness(parse_epseq("0*"), parse_epseq("0*"), None, (), False)
    with pytest.raises(DomainError):
        derived_order_bound(bare, 1)


def test_min_derived_small_orders():
    assert min_derived(0, 6, 5).minpoly() == (-1, -1, -2, 0, 1)
    assert min_derived(1, 6, 5).minpoly() == (-1, 1, -2, 1)
    assert min_derived(2, 6, 5).minpoly() == (-1, 1, -2, 1)
    q3 = min_derived(3, 6, 5)
    assert q3.decimal(10) == "1.7850659171"
    lad = qn_ladder(GEN0, 4)
    assert lad[2].base.cmp(q3) < 0 < lad[3].base.cmp(q3)
    with pytest.raises(DomainError):
        min_derived(-1)
