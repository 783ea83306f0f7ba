"""Words over an n-letter alphabet, rooted words, and complete prefix codes.

A rooted word lives in one of r trees: it has a root index in [1, r] and a
tail of letters in [1, n].  An Expansion is a finite complete prefix code,
i.e. a set of rooted words reachable from the r bare roots by repeatedly
replacing a word u with its n children u.1, ..., u.n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple


class NoPrefixError(ValueError):
    """Raised when a rooted word does not extend any element of a code."""


class RootedWord(NamedTuple):
    root: int
    tail: tuple[int, ...]

    def child(self, letter: int) -> "RootedWord":
        return RootedWord(self.root, self.tail + (letter,))

    def extend(self, word: tuple[int, ...]) -> "RootedWord":
        return RootedWord(self.root, self.tail + tuple(word))

    def text(self, n: int) -> str:
        if n <= 9:
            return "%d.%s" % (self.root, "".join(str(a) for a in self.tail))
        return "%d.%s" % (self.root, ",".join(str(a) for a in self.tail))


def parse_rooted_word(text: str, n: int, r: int) -> RootedWord:
    """Inverse of RootedWord.text; validates letter and root ranges."""
    head, sep, rest = text.partition(".")
    if not sep:
        raise ValueError("malformed rooted word %r (missing '.')" % text)
    root = int(head)
    if not 1 <= root <= r:
        raise ValueError("root %d out of range [1, %d] in %r" % (root, r, text))
    if not rest:
        tail: tuple[int, ...] = ()
    elif n <= 9:
        tail = tuple(int(c) for c in rest)
    else:
        tail = tuple(int(p) for p in rest.split(","))
    if any(not 1 <= a <= n for a in tail):
        raise ValueError("letter out of range [1, %d] in %r" % (n, text))
    return RootedWord(root, tail)


def is_prefix(u: RootedWord, v: RootedWord) -> bool:
    """True iff v = u.alpha for some (possibly empty) word alpha."""
    return u.root == v.root and v.tail[: len(u.tail)] == u.tail


def _check_params(n: int, r: int) -> None:
    if n < 2:
        raise ValueError("arity n must be >= 2, got %d" % n)
    if r < 1:
        raise ValueError("root count r must be >= 1, got %d" % r)


class Expansion:
    """An ordered complete prefix code over (n, r).

    Elements are pairwise prefix-incomparable and, per root, their Kraft sum
    (n to the minus tail length) is exactly 1.  Order is significant: symbols
    pair expansions positionally.
    """

    __slots__ = ("elements", "n", "r")

    def __init__(self, elements: Iterable[RootedWord], n: int, r: int,
                 _validated: bool = False):
        _check_params(n, r)
        elems = tuple(elements)
        if not _validated and not _is_complete_prefix_code(elems, n, r):
            raise ValueError("not a complete prefix code over (n=%d, r=%d): %s"
                             % (n, r, [w.text(n) for w in elems]))
        self.elements = elems
        self.n = n
        self.r = r

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k: int) -> RootedWord:
        return self.elements[k]

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Expansion) and self.n == other.n
                and self.r == other.r and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.elements, self.n, self.r))

    def __repr__(self) -> str:
        return "Expansion([%s], n=%d, r=%d)" % (
            ", ".join(w.text(self.n) for w in self.elements), self.n, self.r)

    def sorted(self) -> "Expansion":
        """Canonical order: root-major, then lexicographic tail."""
        return Expansion(sorted(self.elements), self.n, self.r, _validated=True)


def trivial_expansion(n: int, r: int) -> Expansion:
    """The bare roots x_1, ..., x_r."""
    return Expansion([RootedWord(i, ()) for i in range(1, r + 1)], n, r,
                     _validated=True)


def _is_complete_prefix_code(elems: tuple[RootedWord, ...], n: int, r: int) -> bool:
    seen = set(elems)
    if len(seen) != len(elems):
        return False
    for w in elems:
        if w.root < 1 or w.root > r:
            return False
        if any(not 1 <= a <= n for a in w.tail):
            return False
    # Prefix-freeness: no proper ancestor of an element is also an element.
    for w in elems:
        for k in range(len(w.tail)):
            if RootedWord(w.root, w.tail[:k]) in seen:
                return False
    # Completeness per root, by exact Kraft sums.
    kraft = [Fraction(0)] * (r + 1)
    for w in elems:
        kraft[w.root] += Fraction(1, n ** len(w.tail))
    return all(kraft[i] == 1 for i in range(1, r + 1))


def is_expansion(elements: Iterable[RootedWord], n: int, r: int) -> bool:
    """True iff the words form a complete prefix code over (n, r)."""
    _check_params(n, r)
    return _is_complete_prefix_code(tuple(elements), n, r)


def simple_expand(B: Expansion, k: int) -> Expansion:
    """Replace element k by its n children, in place positionally."""
    if not 0 <= k < len(B):
        raise IndexError("index %d out of range for expansion of size %d"
                         % (k, len(B)))
    u = B[k]
    children = [u.child(a) for a in range(1, B.n + 1)]
    elems = B.elements[:k] + tuple(children) + B.elements[k + 1:]
    return Expansion(elems, B.n, B.r, _validated=True)


def common_expansion(B: Expansion, C: Expansion) -> Expansion:
    """Least common refinement of two complete prefix codes.

    Keeps each element of either code that extends an element of the other;
    result is canonically ordered.
    """
    if (B.n, B.r) != (C.n, C.r):
        raise ValueError("mismatched (n, r): (%d, %d) vs (%d, %d)"
                         % (B.n, B.r, C.n, C.r))
    out = set()
    for u in B:
        if any(is_prefix(v, u) for v in C):
            out.add(u)
    for v in C:
        if any(is_prefix(u, v) for u in B):
            out.add(v)
    return Expansion(sorted(out), B.n, B.r, _validated=True)


def factor(v: RootedWord, B: Expansion) -> tuple[int, tuple[int, ...]]:
    """Unique (k, alpha) with B[k].alpha = v.

    Raises NoPrefixError when v lies strictly above the code (no element of
    B is a prefix of v).
    """
    for k, u in enumerate(B):
        if is_prefix(u, v):
            return k, v.tail[len(u.tail):]
    raise NoPrefixError("%s does not extend any element of %r"
                        % (v.text(B.n), B))
