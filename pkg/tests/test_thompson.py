import itertools
import random

import pytest

from thompson_leavitt import thompson, words
from thompson_leavitt.words import Expansion, RootedWord


def _symbol(n, r, pairs):
    dom = Expansion([words.parse_rooted_word(d, n, r) for d, _ in pairs], n, r)
    ran = Expansion([words.parse_rooted_word(w, n, r) for _, w in pairs], n, r)
    return thompson.Symbol(dom, ran)


def test_reduce_collapses_a_child_block():
    # the pairs 1.11->1.21, 1.12->1.22 collapse to 1.1->1.2
    s = _symbol(2, 1, [("1.11", "1.21"), ("1.12", "1.22"), ("1.2", "1.1")])
    t = thompson.reduce(s)
    expected = _symbol(2, 1, [("1.1", "1.2"), ("1.2", "1.1")])
    assert t.pairs() == expected.pairs()
    # sanity: both act identically on every word of length 3
    for tail in itertools.product((1, 2), repeat=3):
        w = RootedWord(1, tail)
        assert thompson.apply_to_word(s, w) == thompson.apply_to_word(t, w)


def test_reduce_is_idempotent_and_order_independent():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randint(2, 3)
        r = rng.randint(1, 2)
        a = thompson.random_symbol(n, r, 5, rng)
        raw = thompson.Symbol(a.domain, a.range)
        ref = thompson.reduce(raw)
        assert thompson.reduce(ref).pairs() == ref.pairs()
        for k in range(5):
            got = thompson.reduce(raw, rng=random.Random(k))
            assert got.pairs() == ref.pairs()


def test_compose_on_words():
    rng = random.Random(32)
    for _ in range(60):
        n, r = 2, 2
        a = thompson.random_symbol(n, r, 4, rng)
        b = thompson.random_symbol(n, r, 4, rng)
        c = thompson.compose(a, b)
        # deep enough to factor through a, then through b after applying a
        depth = (max(len(v.tail) for v in a.domain)
                 + max(len(v.tail) for v in b.domain)
                 + max(len(v.tail) for v in c.domain))
        # compose means: apply a first, then b
        for _ in range(50):
            w = RootedWord(rng.randint(1, r),
                           tuple(rng.randint(1, n) for _ in range(depth)))
            assert (thompson.apply_to_word(c, w)
                    == thompson.apply_to_word(b, thompson.apply_to_word(a, w)))


def test_identity_and_inverse():
    rng = random.Random(33)
    for n, r in ((2, 1), (3, 2), (4, 3)):
        e = thompson.identity_symbol(n, r)
        assert thompson.equals(thompson.compose(e, e), e)
        for _ in range(30):
            a = thompson.random_symbol(n, r, 5, rng)
            assert thompson.equals(thompson.compose(a, thompson.invert(a)), e)
            assert thompson.equals(thompson.compose(thompson.invert(a), a), e)


def test_text_parse_round_trip():
    rng = random.Random(34)
    for _ in range(100):
        n = rng.randint(2, 4)
        r = rng.randint(1, 3)
        a = thompson.random_symbol(n, r, 5, rng)
        assert thompson.parse_symbol(a.text()).pairs() == a.pairs()


def test_parse_symbol_reports_line_numbers():
    with pytest.raises(ValueError, match="line 1"):
        thompson.parse_symbol("h n=2 r=1\n1. -> 1.\n")
    with pytest.raises(ValueError, match="line 3"):
        thompson.parse_symbol("g n=2 r=1\n1.1 -> 1.2\n1.2 -> 1.3\n")
    with pytest.raises(ValueError):
        # domain side is not a complete prefix code
        thompson.parse_symbol("g n=2 r=1\n1.1 -> 1.1\n1.1 -> 1.2\n")


def test_random_symbol_is_reproducible():
    a = thompson.random_symbol(3, 2, 6, seed=99)
    b = thompson.random_symbol(3, 2, 6, seed=99)
    assert a.pairs() == b.pairs()


def test_equals_ignores_presentation():
    # the same map presented on a finer domain partition
    a = _symbol(2, 1, [("1.1", "1.2"), ("1.2", "1.1")])
    b = _symbol(2, 1, [("1.11", "1.21"), ("1.12", "1.22"), ("1.2", "1.1")])
    assert thompson.equals(a, b)
    c = _symbol(2, 1, [("1.1", "1.1"), ("1.2", "1.2")])
    assert not thompson.equals(a, c)
