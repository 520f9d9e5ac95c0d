"""Words, eventually periodic sequences, generator components, evaluation."""

import random
from fractions import Fraction

import pytest

from twobases.errors import DomainError
from twobases.words import (
    EPSeq, ComponentSpec, GEN0, ZERO_SEQ, ONE_SEQ,
    reflect, word_inc, word_dec, word_cmp, thue_morse, from_word, prepend,
    shift, lex_cmp, check_generator, eval_seq, format_epseq, parse_epseq,
)


def _random_epseq(rng, maxlen=6):
    pre = "".join(rng.choice("01") for _ in range(rng.randint(0, maxlen)))
    per = "".join(rng.choice("01") for _ in range(rng.randint(1, maxlen)))
    return EPSeq(pre, per)


# -- words ------------------------------------------------------------------


def test_reflect_involution_words_and_seqs():
    rng = random.Random(2001)
    for _ in range(300):
        w = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        assert reflect(reflect(w)) == w
        s = _random_epseq(rng)
        assert reflect(reflect(s)) == s


def test_word_inc_dec():
    assert word_inc("10") == "11"
    assert word_dec("11") == "10"
    assert word_dec("1101") == "1100"
    rng = random.Random(2002)
    for _ in range(200):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 10)))
        if w.endswith("0"):
            assert word_dec(word_inc(w)) == w
        else:
            with pytest.raises(DomainError):
                word_inc(w)
            assert word_inc(word_dec(w)) == w


def test_thue_morse_prefix():
    assert thue_morse(16) == "1101001100101101"
    assert thue_morse(4) == "1101"
    # doubling self-similarity: t(2n) digits come from recursion
    t32 = thue_morse(32)
    assert t32[:16] == thue_morse(16)


def test_epseq_canonical():
    assert EPSeq("", "1100").per == "1100"
    assert EPSeq("", "11").per == "1"              # primitive period
    assert EPSeq("00", "10") == EPSeq("0", "01")   # preperiod rotated away
    assert EPSeq("1100", "1100") == EPSeq("", "1100")
    with pytest.raises(DomainError):
        EPSeq("", "")
    with pytest.raises(DomainError):
        EPSeq("2", "1")


def test_epseq_digits_prefix():
    s = EPSeq("00", "10")
    assert [s.digit(i) for i in range(6)] == [0, 0, 1, 0, 1, 0]
    assert s.prefix(7) == "0010101"
    assert from_word("101") == EPSeq("101", "0")
    assert ZERO_SEQ.digit(5) == 0 and ONE_SEQ.digit(5) == 1


def test_shift_prepend():
    s = EPSeq("01", "10")
    assert shift(s, 1) == EPSeq("1", "10")
    assert shift(s, 2) == EPSeq("", "10")
    assert shift(s, 3) == EPSeq("", "01")
    assert prepend("11", s) == EPSeq("1101", "10")
    rng = random.Random(2003)
    for _ in range(200):
        t = _random_epseq(rng)
        n = rng.randint(0, 8)
        u = shift(t, n)
        for i in range(12):
            assert u.digit(i) == t.digit(i + n)


def test_lex_cmp_total_order():
    rng = random.Random(2004)
    seqs = [_random_epseq(rng) for _ in range(40)]
    for a in seqs:
        assert lex_cmp(a, a) == 0
        for b in seqs:
            assert lex_cmp(a, b) == -lex_cmp(b, a)
            # agreement with digitwise comparison over a long window
            for i in range(40):
                da, db = a.digit(i), b.digit(i)
                if da != db:
                    assert lex_cmp(a, b) == (1 if da > db else -1)
                    break
            else:
                assert lex_cmp(a, b) == 0


def test_lex_cmp_consistent_with_value():
    # at the top base every digit outweighs all later ones, so lexicographic
    # order transfers to values (non-strict: 0111... and 1000... share one)
    rng = random.Random(2005)
    q = Fraction(2)
    for _ in range(200):
        a, b = _random_epseq(rng), _random_epseq(rng)
        if lex_cmp(a, b) <= 0:
            assert eval_seq(a, q) <= eval_seq(b, q)


def test_eval_geometric_identities():
    q = Fraction(9, 5)
    assert eval_seq(ZERO_SEQ, q) == 0
    assert eval_seq(ONE_SEQ, q) == 1 / (q - 1)
    assert eval_seq(EPSeq("", "10"), q) == q / (q * q - 1)
    assert eval_seq(from_word("1"), q) == 1 / q
    # shift identity: eval(shift(s,n)) = q^n eval(s) - q^n (first n digits)
    rng = random.Random(2006)
    for _ in range(100):
        s = _random_epseq(rng)
        n = rng.randint(0, 6)
        head = sum(s.digit(i) * q ** -(i + 1) for i in range(n))
        assert eval_seq(shift(s, n), q) == q ** n * (eval_seq(s, q) - head)


def test_parse_format_roundtrip():
    for text in ["00(10)", "(1100)", "101*", "0*", "(1)"]:
        s = parse_epseq(text)
        assert parse_epseq(format_epseq(s)) == s
    assert parse_epseq("00(10)") == EPSeq("00", "10")
    assert parse_epseq("11") == from_word("11")
    with pytest.raises(DomainError):
        parse_epseq("(01")
    with pytest.raises(DomainError):
        parse_epseq("")


# -- generator components ---------------------------------------------------


def test_check_generator():
    assert check_generator("0")
    assert check_generator("10")
    assert not check_generator("01")
    assert check_generator("110")
    assert not check_generator("11")   # ends in 1: increment overflows order
    with pytest.raises(DomainError):
        check_generator("")


def test_omega_recursion_and_prefix():
    comp = GEN0
    assert comp.omega(0) == "1"
    assert comp.omega(1) == "11"
    assert comp.omega(2) == "1101"
    assert comp.omega(3) == "11010011"
    assert comp.omega(4) == "1101001100101101"
    for n in range(6):
        w = comp.omega(n)
        assert comp.omega(n + 1)[: len(w)] == w
        assert comp.omega(n + 1) == w + word_inc(reflect(w))


def test_omega_equals_thue_morse():
    assert GEN0.omega(4) == thue_morse(16)
    assert GEN0.omega(6) == thue_morse(64)


def test_omega_other_generators():
    comp = ComponentSpec("10")
    assert comp.omega(0) == "11"
    assert comp.omega(1) == "1101"
    assert comp.omega(2) == "11010011"
    comp3 = ComponentSpec("110")
    assert comp3.omega(0) == "111"
    assert comp3.omega(1) == "111001"


def test_doubling_word_two_sided_chain():
    # for each generator and n <= 8: with w = omega_n of length L, every
    # proper tail theta_{i+1}..theta_L lies in (reflect(prefix), prefix]
    for gen in ("0", "10", "110"):
        comp = ComponentSpec(gen)
        for n in range(0, 9 if gen == "0" else 6):
            w = comp.omega(n)
            L = len(w)
            for i in range(1, L):
                tail = w[i:]
                head = w[: L - i]
                assert word_cmp(tail, head) <= 0
                assert word_cmp(reflect(head), tail) < 0
