import random

import pytest

from thompson_leavitt import words
from thompson_leavitt.words import RootedWord


def test_parse_rooted_word_digits():
    assert words.parse_rooted_word("1.212", 2, 1) == RootedWord(1, (2, 1, 2))
    assert words.parse_rooted_word("2.", 3, 2) == RootedWord(2, ())
    assert words.parse_rooted_word("3.13", 3, 3) == RootedWord(3, (1, 3))


def test_parse_rooted_word_comma_form():
    w = words.parse_rooted_word("1.10,2,11", 12, 1)
    assert w == RootedWord(1, (10, 2, 11))
    assert w.text(12) == "1.10,2,11"


def test_parse_rooted_word_rejects_bad_input():
    with pytest.raises(ValueError):
        words.parse_rooted_word("3.1", 2, 2)  # root out of range
    with pytest.raises(ValueError):
        words.parse_rooted_word("1.3", 2, 1)  # letter out of range
    with pytest.raises(ValueError):
        words.parse_rooted_word("noperiod", 2, 1)


def test_text_round_trip_random():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 11)
        r = rng.randint(1, 4)
        w = RootedWord(rng.randint(1, r),
                       tuple(rng.randint(1, n) for _ in range(rng.randint(0, 5))))
        assert words.parse_rooted_word(w.text(n), n, r) == w


def test_is_prefix():
    assert words.is_prefix(RootedWord(1, (2,)), RootedWord(1, (2, 1)))
    assert words.is_prefix(RootedWord(1, ()), RootedWord(1, (2, 1)))
    assert not words.is_prefix(RootedWord(1, (2, 1)), RootedWord(1, (2,)))
    assert not words.is_prefix(RootedWord(2, ()), RootedWord(1, (2,)))
    assert words.is_prefix(RootedWord(1, (2,)), RootedWord(1, (2,)))


def test_trivial_expansion():
    B = words.trivial_expansion(2, 3)
    assert list(B) == [RootedWord(1, ()), RootedWord(2, ()), RootedWord(3, ())]
    assert words.is_expansion(B, 2, 3)


def test_simple_expand_replaces_by_children():
    B = words.simple_expand(words.trivial_expansion(2, 1), 0)
    assert list(B) == [RootedWord(1, (1,)), RootedWord(1, (2,))]
    C = words.simple_expand(B, 1)
    assert list(C) == [RootedWord(1, (1,)), RootedWord(1, (2, 1)),
                       RootedWord(1, (2, 2))]
    assert words.is_expansion(C, 2, 1)


def test_is_expansion_rejects_prefix_violations_and_gaps():
    n, r = 2, 1
    # prefix violation: a word and its ancestor both present
    assert not words.is_expansion(
        [RootedWord(1, ()), RootedWord(1, (1,))], n, r)
    # incomplete: missing the sibling 1.2
    assert not words.is_expansion([RootedWord(1, (1,))], n, r)
    # wrong multiset despite correct Kraft sum needs the prefix check too
    assert not words.is_expansion(
        [RootedWord(1, (1,)), RootedWord(1, (1,))], n, r)


def _common_expansion_oracle(B, C):
    """A common refinement computed the slow way: keep every element of
    either expansion that sits at or below an element of the other."""
    out = set()
    for v in B:
        if any(words.is_prefix(u, v) for u in C):
            out.add(v)
    for v in C:
        if any(words.is_prefix(u, v) for u in B):
            out.add(v)
    return tuple(sorted(out))


def test_common_expansion_matches_oracle():
    rng = random.Random(17)
    for _ in range(150):
        n = rng.randint(2, 4)
        r = rng.randint(1, 3)
        B = words.trivial_expansion(n, r)
        for _ in range(rng.randint(0, 5)):
            B = words.simple_expand(B, rng.randrange(len(B)))
        C = words.trivial_expansion(n, r)
        for _ in range(rng.randint(0, 5)):
            C = words.simple_expand(C, rng.randrange(len(C)))
        D = words.common_expansion(B, C)
        assert words.is_expansion(D, n, r)
        assert tuple(D.sorted()) == _common_expansion_oracle(B, C)


def test_common_expansion_frozen_case():
    n, r = 2, 1
    B = words.Expansion([RootedWord(1, (1,)), RootedWord(1, (2,))], n, r)
    C = words.Expansion([RootedWord(1, (1, 1)), RootedWord(1, (1, 2)),
                         RootedWord(1, (2,))], n, r)
    D = words.common_expansion(B, C)
    assert tuple(D.sorted()) == tuple(C.sorted())


def test_factor():
    n, r = 2, 1
    B = words.Expansion([RootedWord(1, (1,)), RootedWord(1, (2,))], n, r)
    k, alpha = words.factor(RootedWord(1, (2, 1, 1)), B)
    assert (k, alpha) == (1, (1, 1))
    assert B[k].extend(alpha) == RootedWord(1, (2, 1, 1))
    with pytest.raises(words.NoPrefixError):
        words.factor(RootedWord(2, (1,)), B)
