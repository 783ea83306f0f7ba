"""The mutually inverse maps between G_{n,r} and the unitary P-matrices.

A reduced symbol with pair (x_i.I -> x_j.J) contributes the monomial
y_I x_J to entry (i, j): rows index domain roots, columns range roots.
The inverse map reads P-form entries back as symbol pairs (direct mode),
or, for a matrix in normal form of unknown provenance, probes columns with
deep y-words until every probe collapses to a single y-monomial (evaluate
mode).
"""

from __future__ import annotations

from itertools import product

from . import leavitt, matrices, thompson, words
from .leavitt import Monomial, PForm
from .matrices import LMatrix, NotUnitaryError, UnitaryPMatrix
from .thompson import Symbol
from .words import Expansion, RootedWord


class NotInGroupImageError(ValueError):
    """The matrix could not be recognized as the image of a group element."""


def symbol_to_matrix(g: Symbol) -> UnitaryPMatrix:
    """The r x r unitary P-matrix attached to a symbol."""
    g = thompson.reduce(g)
    r = g.r
    grid = [[[] for _ in range(r)] for _ in range(r)]
    for d, w in g.pairs():
        grid[d.root - 1][w.root - 1].append(Monomial(d.tail, w.tail))
    base = LMatrix(r, r, g.n, [[PForm(cell) for cell in row] for row in grid])
    return UnitaryPMatrix(base)


def _direct_mode(X: LMatrix) -> Symbol:
    s = X.rows
    pairs = []
    for i in range(s):
        for j in range(s):
            entry = X.entries[i][j]
            for m in entry.pairs:
                pairs.append((RootedWord(i + 1, m.I), RootedWord(j + 1, m.J)))
    dom = [d for d, _ in pairs]
    ran = [w for _, w in pairs]
    if not words.is_expansion(dom, X.n, s) or not words.is_expansion(ran, X.n, s):
        raise NotInGroupImageError(
            "P-form entries do not assemble into a pair of expansions")
    sym = Symbol(Expansion(dom, X.n, s, _validated=True),
                 Expansion(ran, X.n, s, _validated=True))
    return thompson.reduce(sym)


def _evaluate_mode(X: LMatrix, cap: int) -> Symbol:
    s = X.rows
    n = X.n
    nf = X.nf()
    k0 = max((len(m.J) for row in nf for e in row for m in e.terms), default=0)
    for k in range(k0, k0 + cap + 1):
        pairs = []
        ok = True
        for j in range(s):
            if not ok:
                break
            for J in product(range(1, n + 1), repeat=k):
                probe = leavitt.AlgebraElement({Monomial(J, ()): 1}, n)
                hits = []
                for i in range(s):
                    v = leavitt.mul(nf[i][j], probe)
                    if not v.is_zero():
                        hits.append((i, v))
                if len(hits) != 1:
                    ok = False
                    break
                i, v = hits[0]
                if len(v.terms) != 1:
                    ok = False
                    break
                (m, c), = v.terms.items()
                if c != 1 or m.J != ():
                    ok = False
                    break
                pairs.append((RootedWord(i + 1, m.I), RootedWord(j + 1, J)))
        if not ok:
            continue
        dom = [d for d, _ in pairs]
        ran = [w for _, w in pairs]
        if not words.is_expansion(dom, n, s) or not words.is_expansion(ran, n, s):
            continue
        sym = thompson.reduce(Symbol(Expansion(dom, n, s, _validated=True),
                                     Expansion(ran, n, s, _validated=True)))
        if symbol_to_matrix(sym).base == X:
            return sym
        raise NotInGroupImageError("probe symbol fails the round trip")
    raise NotInGroupImageError(
        "no clean column probes within depth cap %d" % cap)


def matrix_to_symbol(X: LMatrix | UnitaryPMatrix, mode: str = "direct",
                     cap: int = 8) -> Symbol:
    """Symbol of a unitary matrix; inverse of symbol_to_matrix.

    direct mode reads off P-form entries; evaluate mode recognizes a
    normal-form matrix by probing (exponential in the probe depth, which is
    capped at k0 + cap).
    """
    if isinstance(X, UnitaryPMatrix):
        X = X.base
    if not X.is_square():
        raise NotUnitaryError("matrix is not square")
    if mode == "direct":
        if not X.is_pform():
            raise NotInGroupImageError("direct mode needs P-form entries")
        return _direct_mode(X)
    if mode == "evaluate":
        if not matrices.is_unitary(X):
            raise NotUnitaryError("XX* = X*X = I fails")
        return _evaluate_mode(X, cap)
    raise ValueError("mode must be 'direct' or 'evaluate', got %r" % mode)
