"""Exact arithmetic in the Leavitt algebra L_n.

Generators x_1..x_n, y_1..y_n subject to x_i y_j = delta_ij and
sum_j y_j x_j = 1.  A monomial y_I x_J stores both multiindices left to
right; the algebra product x_J (as an element) is x_{j_k} ... x_{j_1}, so
concatenation of J-indices composes x-products in reverse:
x_J * x_J' = x_{J' ++ J}.

Elements are kept in a canonical linear basis: monomials y_I x_J where I
and J do not both end in the top letter n.  The only oriented relation is

    y_{I.n} x_{J.n}  ->  y_I x_J - sum_{k<n} y_{I.k} x_{J.k}

which strictly shrinks the total length of forbidden monomials, so the
rewrite terminates; confluence is property-tested.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional


class Monomial(NamedTuple):
    I: tuple[int, ...]
    J: tuple[int, ...]

    def star(self) -> "Monomial":
        return Monomial(self.J, self.I)

    def degree(self) -> int:
        return len(self.I) + len(self.J)

    def text(self) -> str:
        parts = []
        if self.I:
            parts.append("y[%s]" % ",".join(str(a) for a in self.I))
        if self.J:
            parts.append("x[%s]" % ",".join(str(a) for a in self.J))
        return "".join(parts) or "1"


ONE_MONOMIAL = Monomial((), ())


def x_gen(i: int) -> Monomial:
    """The generator x_i as a monomial."""
    return Monomial((), (i,))


def y_gen(i: int) -> Monomial:
    """The generator y_i as a monomial."""
    return Monomial((i,), ())


def mono_mul(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Product (y_{a.I} x_{a.J})(y_{b.I} x_{b.J}); None when it vanishes.

    The inner product x_{a.J} y_{b.I} collapses iff one index sequence is a
    prefix of the other (both read left to right); otherwise the defining
    relations kill it.
    """
    aJ, bI = a.J, b.I
    la, lb = len(aJ), len(bI)
    if la <= lb:
        if bI[:la] != aJ:
            return None
        return Monomial(a.I + bI[la:], b.J)
    if aJ[:lb] != bI:
        return None
    return Monomial(a.I, b.J + aJ[lb:])


class PForm:
    """A coefficient-one sum of monomials (possibly empty, meaning 0)."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[Monomial] = ()):
        # canonical (sorted) order, so equality is equality of sums
        self.pairs = tuple(sorted(pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PForm) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def is_zero(self) -> bool:
        return not self.pairs

    def star(self) -> "PForm":
        return PForm(m.star() for m in self.pairs)

    def mul(self, other: "PForm") -> "PForm":
        out = []
        for a in self.pairs:
            for b in other.pairs:
                m = mono_mul(a, b)
                if m is not None:
                    out.append(m)
        return PForm(out)

    def text(self) -> str:
        if not self.pairs:
            return "0"
        return " ".join("+1·%s" % m.text() for m in self.pairs)

    def __repr__(self) -> str:
        return "PForm(%s)" % self.text()


PFORM_ONE = PForm([ONE_MONOMIAL])
PFORM_ZERO = PForm()


def _is_forbidden(m: Monomial, n: int) -> bool:
    return bool(m.I) and bool(m.J) and m.I[-1] == n and m.J[-1] == n


def _rewrite(m: Monomial, n: int) -> list[tuple[int, Monomial]]:
    I, J = m.I[:-1], m.J[:-1]
    out = [(1, Monomial(I, J))]
    for k in range(1, n):
        out.append((-1, Monomial(I + (k,), J + (k,))))
    return out


class AlgebraElement:
    """An element of L_n in canonical normal form.

    Immutable; terms map basis monomials to nonzero integer coefficients.
    """

    __slots__ = ("terms", "n")

    def __init__(self, terms: dict[Monomial, int], n: int):
        self.terms = terms
        self.n = n

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.n))

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {ONE_MONOMIAL: 1}

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            bits.append("%s%d·%s" % ("+" if c > 0 else "-", abs(c), m.text()))
        return " ".join(bits)

    def __repr__(self) -> str:
        return "AlgebraElement(%s, n=%d)" % (self.text(), self.n)


def normalize(terms, n: int, rng=None) -> AlgebraElement:
    """Canonical normal form of a term list, PForm, or AlgebraElement.

    `rng`, when given, randomizes the order in which forbidden monomials are
    rewritten (used to property-test confluence); the result must not depend
    on it.
    """
    if isinstance(terms, AlgebraElement):
        return terms
    if isinstance(terms, PForm):
        pending = [(1, m) for m in terms.pairs]
    else:
        pending = [(int(c), m) for c, m in terms]
    acc: dict[Monomial, int] = {}
    while pending:
        if rng is not None:
            k = rng.randrange(len(pending))
            pending[k], pending[-1] = pending[-1], pending[k]
        c, m = pending.pop()
        if c == 0:
            continue
        if _is_forbidden(m, n):
            pending.extend((c * c2, m2) for c2, m2 in _rewrite(m, n))
            continue
        c2 = acc.get(m, 0) + c
        if c2:
            acc[m] = c2
        else:
            del acc[m]
    return AlgebraElement(acc, n)


def zero(n: int) -> AlgebraElement:
    return AlgebraElement({}, n)


def one(n: int) -> AlgebraElement:
    return AlgebraElement({ONE_MONOMIAL: 1}, n)


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise ValueError("mismatched arities %d vs %d" % (a.n, b.n))
    terms = dict(a.terms)
    for m, c in b.terms.items():
        c2 = terms.get(m, 0) + c
        if c2:
            terms[m] = c2
        else:
            del terms[m]
    return AlgebraElement(terms, a.n)


def neg(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement({m: -c for m, c in a.terms.items()}, a.n)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise ValueError("mismatched arities %d vs %d" % (a.n, b.n))
    out = []
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = mono_mul(ma, mb)
            if m is not None:
                out.append((ca * cb, m))
    return normalize(out, a.n)


def star(a: AlgebraElement) -> AlgebraElement:
    # The basis is star-stable (the forbidden condition is symmetric in I, J).
    return AlgebraElement({m.star(): c for m, c in a.terms.items()}, a.n)


def equals(a: AlgebraElement, b: AlgebraElement) -> bool:
    return a == b


def is_one(a: AlgebraElement) -> bool:
    return a.is_one()
