"""Elements of the Higman-Thompson group G_{n,r} as symbols.

A symbol pairs two equal-size expansions positionally: domain[t] maps to
range[t].  Composition goes through a common expansion of the first range
and the second domain; compose(a, b) applies a first, then b.  Canonical
representatives are fully reduced (no collapsible child n-tuple) and sorted
by domain, which solves the word problem by structural comparison.
"""

from __future__ import annotations

import random

from .words import (Expansion, RootedWord, common_expansion, factor,
                    parse_rooted_word, simple_expand, trivial_expansion)


class Symbol:
    """A G_{n,r} element: equal-size domain/range expansions, paired by index."""

    __slots__ = ("domain", "range", "n", "r")

    def __init__(self, domain: Expansion, range_: Expansion):
        if (domain.n, domain.r) != (range_.n, range_.r):
            raise ValueError("domain and range live over different (n, r)")
        if len(domain) != len(range_):
            raise ValueError("size mismatch: |domain|=%d, |range|=%d"
                             % (len(domain), len(range_)))
        self.domain = domain
        self.range = range_
        self.n = domain.n
        self.r = domain.r

    def pairs(self) -> list[tuple[RootedWord, RootedWord]]:
        return list(zip(self.domain.elements, self.range.elements))

    def __repr__(self) -> str:
        return "Symbol(n=%d, r=%d, %s)" % (
            self.n, self.r,
            ", ".join("%s->%s" % (d.text(self.n), w.text(self.n))
                      for d, w in self.pairs()))

    def text(self) -> str:
        """Line-oriented text form; inverse of parse_symbol."""
        lines = ["g n=%d r=%d" % (self.n, self.r)]
        lines.extend("%s -> %s" % (d.text(self.n), w.text(self.n))
                     for d, w in self.pairs())
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Symbol):
            return NotImplemented
        return equals(self, other)

    def __hash__(self) -> int:
        s = reduce(self)
        return hash((s.n, s.r, s.domain.elements, s.range.elements))


def make_symbol(domain: Expansion, range_: Expansion) -> Symbol:
    return Symbol(domain, range_)


def identity_symbol(n: int, r: int) -> Symbol:
    e = trivial_expansion(n, r)
    return Symbol(e, e)


def _from_pairs(pairs, n: int, r: int) -> Symbol:
    dom = Expansion([d for d, _ in pairs], n, r, _validated=True)
    rng = Expansion([w for _, w in pairs], n, r, _validated=True)
    return Symbol(dom, rng)


def _collapse_groups(pairs, n: int):
    """Index groups {u.1..u.n} -> {v.1..v.n} that can collapse to u -> v."""
    by_parent: dict[tuple, dict[int, int]] = {}
    for t, (d, _) in enumerate(pairs):
        if d.tail:
            key = (d.root, d.tail[:-1])
            by_parent.setdefault(key, {})[d.tail[-1]] = t
    groups = []
    for (root, stem), kids in by_parent.items():
        if len(kids) != n or set(kids) != set(range(1, n + 1)):
            continue
        r1 = pairs[kids[1]][1]
        if not r1.tail or r1.tail[-1] != 1:
            continue
        vroot, vstem = r1.root, r1.tail[:-1]
        if all(pairs[kids[a]][1] == RootedWord(vroot, vstem + (a,))
               for a in range(2, n + 1)):
            groups.append((RootedWord(root, stem), RootedWord(vroot, vstem),
                           [kids[a] for a in range(1, n + 1)]))
    return groups


def reduce(s: Symbol, rng: random.Random | None = None) -> Symbol:
    """Canonical reduced symbol: collapse child tuples until none remains.

    `rng` randomizes which collapse fires first (confluence testing only).
    """
    pairs = s.pairs()
    while True:
        groups = _collapse_groups(pairs, s.n)
        if not groups:
            break
        if rng is not None:
            groups = [groups[rng.randrange(len(groups))]]
        drop = set()
        new_pairs = []
        for u, v, idxs in groups:
            drop.update(idxs)
            new_pairs.append((u, v))
        pairs = [p for t, p in enumerate(pairs) if t not in drop] + new_pairs
    pairs.sort(key=lambda p: p[0])
    return _from_pairs(pairs, s.n, s.r)


def compose(a: Symbol, b: Symbol) -> Symbol:
    """Apply a, then b (the right-action convention)."""
    if (a.n, a.r) != (b.n, b.r):
        raise ValueError("cannot compose over different (n, r)")
    E = common_expansion(a.range, b.domain)
    pairs = []
    for e in E:
        k, alpha = factor(e, a.range)
        d = a.domain[k].extend(alpha)
        k2, alpha2 = factor(e, b.domain)
        w = b.range[k2].extend(alpha2)
        pairs.append((d, w))
    return reduce(_from_pairs(pairs, a.n, a.r))


def invert(a: Symbol) -> Symbol:
    return reduce(Symbol(a.range, a.domain))


def equals(a: Symbol, b: Symbol) -> bool:
    if (a.n, a.r) != (b.n, b.r):
        return False
    ra, rb = reduce(a), reduce(b)
    return (ra.domain.elements == rb.domain.elements
            and ra.range.elements == rb.range.elements)


def apply_to_word(s: Symbol, w: RootedWord) -> RootedWord:
    """Image of a rooted word deep enough to factor through the domain."""
    k, alpha = factor(w, s.domain)
    return s.range[k].extend(alpha)


def random_symbol(n: int, r: int, depth: int = 6,
                  seed: int | random.Random = 0) -> Symbol:
    """Seed-deterministic random element of G_{n,r}.

    Builds domain and range by `depth` random simple expansions each, then
    pairs them through a random permutation and reduces.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    dom = trivial_expansion(n, r)
    for _ in range(depth):
        dom = simple_expand(dom, rng.randrange(len(dom)))
    ran = trivial_expansion(n, r)
    for _ in range(depth):
        ran = simple_expand(ran, rng.randrange(len(ran)))
    perm = list(range(len(ran)))
    rng.shuffle(perm)
    pairs = [(dom[t], ran[perm[t]]) for t in range(len(dom))]
    return reduce(_from_pairs(pairs, n, r))


def parse_symbol(text: str) -> Symbol:
    """Parse the line-oriented symbol format (see Symbol.text)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty symbol text")
    head = lines[0].split()
    if (len(head) != 3 or head[0] != "g" or not head[1].startswith("n=")
            or not head[2].startswith("r=")):
        raise ValueError("line 1: expected header 'g n=<int> r=<int>', got %r"
                         % lines[0])
    n = int(head[1][2:])
    r = int(head[2][2:])
    pairs = []
    for lineno, ln in enumerate(lines[1:], start=2):
        left, sep, right = ln.partition("->")
        if not sep:
            raise ValueError("line %d: expected '<word> -> <word>', got %r"
                             % (lineno, ln))
        try:
            d = parse_rooted_word(left.strip(), n, r)
            w = parse_rooted_word(right.strip(), n, r)
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from exc
        pairs.append((d, w))
    dom = Expansion([d for d, _ in pairs], n, r)
    ran = Expansion([w for _, w in pairs], n, r)
    return Symbol(dom, ran)
