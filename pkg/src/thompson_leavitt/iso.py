"""Explicit isomorphisms between matrix sizes over L_n, and between groups.

Three layers:

  * shift_up / shift_down: the exact size-(n-1) shift M_r(L_n) = M_s(L_n),
    realized by conjugation with U = diag(I_{r-1}, column(x_1..x_n)).
  * build_generators: n matrices X_1..X_n in M_d(L_n) (gcd(d, n-1) = 1)
    satisfying the defining relations of L_n, with the free slots of the
    templates filled from a fixed inventory of x-monomials by deterministic
    backtracking search; generation of M_d(L_n) is certified by a bounded
    span search rather than assumed.
  * group_iso: composes the two through the symbol/matrix correspondence to
    carry G_{n,r} onto G_{n,s} whenever gcd(n-1, r) = gcd(n-1, s).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import correspondence, leavitt, matrices, thompson
from .leavitt import Monomial, PForm
from .matrices import LMatrix, mat_mul, mat_star
from .thompson import Symbol


class NotIsomorphicError(ValueError):
    """The gcd criterion rules the requested isomorphism out."""


class SearchExhaustedError(RuntimeError):
    """The generator-assignment search ran out of budget."""


def classify(n: int, r: int, m: int, s: int) -> bool:
    """True iff G_{n,r} and G_{m,s} are isomorphic."""
    if n < 2 or m < 2 or r < 1 or s < 1:
        raise ValueError("need n, m >= 2 and r, s >= 1")
    return m == n and math.gcd(n - 1, r) == math.gcd(n - 1, s)


@dataclass(frozen=True)
class IsoPlan:
    """Multiplier and shift count landing M_r(L_n) in M_s(L_n)."""
    n: int
    r: int
    s: int
    l: int
    shift_steps: int


def find_l(n: int, r: int, s: int) -> IsoPlan:
    """Smallest l >= 1 with gcd(l, n-1) = 1 and l*r = s (mod n-1)."""
    if n < 2 or r < 1 or s < 1:
        raise ValueError("need n >= 2 and r, s >= 1")
    g = math.gcd(n - 1, r)
    if g != math.gcd(n - 1, s):
        raise NotIsomorphicError(
            "gcd(n-1, r) = %d != %d = gcd(n-1, s)" % (g, math.gcd(n - 1, s)))
    for l in range(1, max(2, n)):
        if math.gcd(l, n - 1) == 1 and (l * r - s) % (n - 1) == 0:
            return IsoPlan(n, r, s, l, (s - l * r) // (n - 1))
    raise AssertionError("no multiplier found; unreachable when gcds agree")


# ---------------------------------------------------------------------------
# Size shifts


def _shift_factor(r: int, n: int) -> LMatrix:
    """U = diag(I_{r-1}, column(x_1..x_n)), an (r+n-1) x r isometry."""
    s = r + n - 1
    grid = [[leavitt.PFORM_ZERO for _ in range(r)] for _ in range(s)]
    for i in range(r - 1):
        grid[i][i] = leavitt.PFORM_ONE
    for t in range(n):
        grid[r - 1 + t][r - 1] = PForm([leavitt.x_gen(t + 1)])
    return LMatrix(s, r, n, grid)


def shift_up(A: LMatrix) -> LMatrix:
    """The ring isomorphism M_r(L_n) -> M_{r+n-1}(L_n), A -> U A U*."""
    if not A.is_square():
        raise ValueError("shift_up needs a square matrix")
    U = _shift_factor(A.rows, A.n)
    return mat_mul(mat_mul(U, A), mat_star(U))


def shift_down(B: LMatrix) -> LMatrix:
    """Inverse shift M_s(L_n) -> M_{s-(n-1)}(L_n), B -> U* B U."""
    if not B.is_square():
        raise ValueError("shift_down needs a square matrix")
    r = B.rows - (B.n - 1)
    if r < 1:
        raise ValueError("matrix size %d too small to shift down by %d"
                         % (B.rows, B.n - 1))
    U = _shift_factor(r, B.n)
    return mat_mul(mat_mul(mat_star(U), B), U)


# ---------------------------------------------------------------------------
# Generator matrices for L_n = M_d(L_n)


def the_list(d: int, n: int) -> list[Monomial]:
    """The slot inventory: x_1^{d-1}, then x_j x_1^t for t = d-2 .. 0.

    As index words (x_W with W read left to right under the reversal
    convention): 1^{d-1}, then 1^t j for j = 2..n.  These words form a
    complete prefix code, which is what makes sum y_W x_W = 1 come out for
    free once every slot is filled bijectively.
    """
    out = [Monomial((), (1,) * (d - 1))]
    for t in range(d - 2, -1, -1):
        for j in range(2, n + 1):
            out.append(Monomial((), (1,) * t + (j,)))
    return out


def _decompose(d: int, n: int) -> tuple[int, int]:
    """q, rho with n = q d + rho, q >= 1, 2 <= rho <= d."""
    m = n % d
    if m == 0:
        q, rho = n // d - 1, d
    elif m == 1:
        raise ValueError("n = 1 (mod d) admits no template decomposition")
    else:
        q, rho = n // d, m
    if q < 1:
        raise ValueError("d = %d does not fit below n = %d" % (d, n))
    return q, rho


def _template_slots(d: int, n: int, q: int, rho: int) -> list[tuple[int, int]]:
    """Free a-positions (generator index, row), in deterministic order."""
    slots = [(q + 2, u) for u in range(rho - 1, d + 1)]
    for i in range(q + 3, n + 1):
        slots.extend((i, u) for u in range(1, d + 1))
    return slots


def _build_x_matrices(d, n, q, rho, assignment) -> list[LMatrix]:
    """Instantiate the template matrices X_1..X_n with the given slot fill."""
    def blank():
        return [[leavitt.PFORM_ZERO for _ in range(d)] for _ in range(d)]

    mats = []
    for i in range(1, q + 1):
        g = blank()
        for j in range(1, d + 1):
            g[j - 1][0] = PForm([leavitt.x_gen((i - 1) * d + j)])
        mats.append(LMatrix(d, d, n, g))
    # X_{q+1}: shifted ones below the x-column.
    g = blank()
    for i in range(1, d - rho + 1):
        g[i + rho - 1][i] = leavitt.PFORM_ONE
    for t in range(1, rho + 1):
        g[t - 1][0] = PForm([leavitt.x_gen(q * d + t)])
    mats.append(LMatrix(d, d, n, g))
    # X_{q+2}: ones diagonal ending at (rho-2, d-1), slots in column d.
    g = blank()
    off = d - rho + 1
    for j in range(1, rho - 1):
        g[j - 1][j + off - 1] = leavitt.PFORM_ONE
    for u in range(rho - 1, d + 1):
        g[u - 1][d - 1] = PForm([assignment[(q + 2, u)]])
    mats.append(LMatrix(d, d, n, g))
    # X_i for i >= q+3: a full slot column d.
    for i in range(q + 3, n + 1):
        g = blank()
        for u in range(1, d + 1):
            g[u - 1][d - 1] = PForm([assignment[(i, u)]])
        mats.append(LMatrix(d, d, n, g))
    return mats


def _relations_hold(X: list[LMatrix], d: int, n: int) -> bool:
    """Exact check of X_i X_j* = delta_ij I and sum X_j* X_j = I."""
    Y = [mat_star(x) for x in X]
    for i in range(n):
        for j in range(n):
            prod = mat_mul(X[i], Y[j])
            if i == j:
                if not matrices.is_identity(prod):
                    return False
            else:
                for row in prod.nf():
                    if any(not e.is_zero() for e in row):
                        return False
    acc = [[leavitt.zero(n) for _ in range(d)] for _ in range(d)]
    for j in range(n):
        prod = mat_mul(Y[j], X[j]).nf()
        for u in range(d):
            for v in range(d):
                acc[u][v] = leavitt.add(acc[u][v], prod[u][v])
    one, zero_ = leavitt.one(n), leavitt.zero(n)
    return all(acc[u][v] == (one if u == v else zero_)
               for u in range(d) for v in range(d))


def _matrix_vector(M: LMatrix):
    v = {}
    for i, row in enumerate(M.nf()):
        for j, e in enumerate(row):
            for m, c in e.terms.items():
                v[(i, j, m)] = Fraction(c)
    return v


def _vec_reduce(v, basis):
    v = dict(v)
    while v:
        p = min(v)
        if p not in basis:
            return v, p
        coef = v[p]
        for k, c in basis[p].items():
            c2 = v.get(k, Fraction(0)) - coef * c
            if c2:
                v[k] = c2
            else:
                v.pop(k, None)
    return v, None


def _span_contains(v, basis) -> bool:
    res, _ = _vec_reduce(v, basis)
    return not res


class _GenAction:
    """Left/right multiplication by a fixed matrix, on coordinate vectors.

    Vectors are sparse maps (row, col, basis monomial) -> integer; actions
    cache the normalized single-coordinate products, which is what makes
    the span search tractable.
    """

    def __init__(self, M: LMatrix, n: int):
        self.n = n
        self.left: dict[int, list] = {}
        self.right: dict[int, list] = {}
        for i, row in enumerate(M.nf()):
            for j, e in enumerate(row):
                for m, c in e.terms.items():
                    self.left.setdefault(j, []).append((i, m, c))
                    self.right.setdefault(i, []).append((j, m, c))
        self._lcache: dict = {}
        self._rcache: dict = {}

    def _hits(self, k: int, m: Monomial, entries, cache, flip: bool):
        key = (k, m)
        hits = cache.get(key)
        if hits is None:
            hits = []
            for idx, gm, cg in entries.get(k, ()):
                mm = (leavitt.mono_mul(gm, m) if not flip
                      else leavitt.mono_mul(m, gm))
                if mm is None:
                    continue
                for m2, c2 in leavitt.normalize([(1, mm)], self.n).terms.items():
                    hits.append((idx, m2, cg * c2))
            cache[key] = hits
        return hits

    def act_left(self, v: dict) -> dict:
        out: dict = {}
        for (k, j, m), cv in v.items():
            for i, m2, c in self._hits(k, m, self.left, self._lcache, False):
                kk = (i, j, m2)
                nv = out.get(kk, 0) + cv * c
                if nv:
                    out[kk] = nv
                else:
                    del out[kk]
        return out

    def act_right(self, v: dict) -> dict:
        out: dict = {}
        for (i, k, m), cv in v.items():
            for j, m2, c in self._hits(k, m, self.right, self._rcache, True):
                kk = (i, j, m2)
                nv = out.get(kk, 0) + cv * c
                if nv:
                    out[kk] = nv
                else:
                    del out[kk]
        return out


def check_generation(X: list[LMatrix], d: int, n: int, span_bound: int = 8,
                     degree_cap: int = 4) -> bool:
    """Bounded certificate that the X/Y matrices generate M_d(L_n).

    Grows the linear span of two-sided generator products up to the given
    product length, discarding values whose normal forms exceed the degree
    cap, and tests containment of every matrix unit e_ij and every
    x_k e_{1,1}.  Once a witness is certified inside the span it joins the
    multiplier set (it is a proven member of the subalgebra), which keeps
    the remaining witnesses reachable through low-degree products.  Success
    certifies generation of the witnesses; failure only means the bounded
    search did not find them.
    """
    gens = [_GenAction(M, n) for M in X]
    gens += [_GenAction(mat_star(M), n) for M in X]
    witnesses = [{(i, j, leavitt.ONE_MONOMIAL): 1}
                 for i in range(d) for j in range(d)]
    witnesses += [{(0, 0, Monomial((), (k,))): 1} for k in range(1, n + 1)]

    basis: dict = {}

    def absorb(v: dict) -> bool:
        if not v or max(m.degree() for (_, _, m) in v) > degree_cap:
            return False
        res, p = _vec_reduce(v, basis)
        if p is None:
            return False
        coef = Fraction(res[p])
        basis[p] = {k: c / coef for k, c in res.items()}
        return True

    def promote() -> int:
        # Move proven witnesses into the multiplier set.
        remaining = []
        for v in witnesses:
            if _span_contains(v, basis):
                grid = [[leavitt.zero(n)] * d for _ in range(d)]
                for (i, j, m), c in v.items():
                    grid[i][j] = leavitt.AlgebraElement({m: c}, n)
                gens.append(_GenAction(LMatrix(d, d, n, grid), n))
            else:
                remaining.append(v)
        witnesses[:] = remaining
        return len(remaining)

    seeds = [{(i, i, leavitt.ONE_MONOMIAL): 1 for i in range(d)}]
    for M in X:
        seeds.append(_matrix_vector(M))
        seeds.append(_matrix_vector(mat_star(M)))
    frontier = [v for v in seeds if absorb(v)]
    prev = promote()
    if prev == 0:
        return True
    stalls = 0
    for _ in range(2, span_bound + 1):
        new_frontier = []
        for g in gens:
            for f in frontier:
                for v in (g.act_left(f), g.act_right(f)):
                    if absorb(v):
                        new_frontier.append(v)
        left = promote()
        if left == 0:
            return True
        stalls = stalls + 1 if left >= prev else 0
        prev = left
        if stalls >= 2 or not new_frontier:
            return False
        frontier = new_frontier
    return False


@dataclass
class GeneratorSet:
    """Images of x_1..x_n (and their stars) in M_d(L_n)."""
    n: int
    d: int
    d_core: int
    shifts: int
    q: int
    rho: int
    X: list[LMatrix]
    Y: list[LMatrix]
    assignment: dict[tuple[int, int], Monomial]
    generation_verified: bool

    def to_json(self) -> str:
        import json
        return json.dumps({
            "n": self.n, "d": self.d, "q": self.q, "rho": self.rho,
            "generation_verified": self.generation_verified,
            "assignment": {"a[%d,%d]" % k: m.text()
                           for k, m in sorted(self.assignment.items())},
            "X": [x.to_json() for x in self.X],
        })


def _trivial_generator_set(n: int) -> GeneratorSet:
    X = [LMatrix(1, 1, n, [[PForm([leavitt.x_gen(i)])]])
         for i in range(1, n + 1)]
    return GeneratorSet(n, 1, 1, 0, 0, 0, X, [mat_star(x) for x in X], {},
                        generation_verified=True)


def build_generators(d: int, n: int, search_budget: int = 10000,
                     check_gen: bool = True, span_bound: int = 8,
                     degree_cap: int = 4) -> GeneratorSet:
    """Generator matrices realizing L_n = M_d(L_n) (needs gcd(d, n-1) = 1).

    Slot fills are tried in deterministic lexicographic order; each
    candidate is screened against the exact defining relations and then,
    optionally, the bounded generation certificate.  A relation-correct set
    whose generation could not be certified within budget is returned with
    generation_verified=False rather than discarded.
    """
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    if math.gcd(d, n - 1) != 1:
        raise NotIsomorphicError("gcd(d, n-1) = %d != 1"
                                 % math.gcd(d, n - 1))
    d_core = d if d < n else ((d - 1) % (n - 1)) + 1
    shifts = (d - d_core) // (n - 1)
    if d_core == 1:
        gs = _trivial_generator_set(n)
    else:
        gs = _search_generators(d_core, n, search_budget, check_gen,
                                span_bound, degree_cap)
    if shifts == 0:
        return gs
    X = gs.X
    for _ in range(shifts):
        X = [shift_up(x) for x in X]
    return GeneratorSet(n, d, d_core, shifts, gs.q, gs.rho, X,
                        [mat_star(x) for x in X], gs.assignment,
                        gs.generation_verified)


def _search_generators(d, n, search_budget, check_gen, span_bound,
                       degree_cap) -> GeneratorSet:
    q, rho = _decompose(d, n)
    slots = _template_slots(d, n, q, rho)
    inventory = the_list(d, n)
    if len(slots) != len(inventory):
        raise ValueError(
            "slot count %d != inventory size %d for (d=%d, n=%d)"
            % (len(slots), len(inventory), d, n))
    fallback = None
    tried = 0
    for perm in itertools.permutations(range(len(inventory))):
        if tried >= search_budget:
            break
        tried += 1
        assignment = {slot: inventory[perm[k]] for k, slot in enumerate(slots)}
        X = _build_x_matrices(d, n, q, rho, assignment)
        if not _relations_hold(X, d, n):
            continue
        verified = (not check_gen) or check_generation(X, d, n, span_bound,
                                                       degree_cap)
        gs = GeneratorSet(n, d, d, 0, q, rho, X, [mat_star(x) for x in X],
                          assignment, generation_verified=verified)
        if verified or not check_gen:
            return gs
        if fallback is None:
            fallback = gs
    if fallback is not None:
        return fallback
    raise SearchExhaustedError(
        "no relation-satisfying assignment within budget %d for (d=%d, n=%d)"
        % (search_budget, d, n))


# ---------------------------------------------------------------------------
# The entry embedding and the composite isomorphisms


def embed_entry(a, G: GeneratorSet) -> LMatrix:
    """Image of an L_n element under x_i -> X_i, y_j -> Y_j.

    Accepts a PForm or an AlgebraElement; the monomial y_I x_J maps to the
    product of Y's along I times the product of X's realizing x_J (reversal
    convention: x_J = x_{j_k}...x_{j_1}).
    """
    d, n = G.d, G.n

    def embed_monomial(m: Monomial) -> LMatrix:
        M = matrices.identity(d, n)
        for i in m.I:
            M = mat_mul(M, G.Y[i - 1])
        for j in reversed(m.J):
            M = mat_mul(M, G.X[j - 1])
        return M

    if isinstance(a, PForm):
        grid = [[[] for _ in range(d)] for _ in range(d)]
        for m in a.pairs:
            block = embed_monomial(m)
            for i in range(d):
                for j in range(d):
                    grid[i][j].extend(block.entries[i][j].pairs)
        return LMatrix(d, d, n, [[PForm(c) for c in row] for row in grid])
    acc = [[leavitt.zero(n) for _ in range(d)] for _ in range(d)]
    for m, c in a.terms.items():
        block = embed_monomial(m).nf()
        for i in range(d):
            for j in range(d):
                term = leavitt.AlgebraElement(
                    {mm: c * cc for mm, cc in block[i][j].terms.items()}, n)
                acc[i][j] = leavitt.add(acc[i][j], term)
    return LMatrix(d, d, n, acc)


def matrix_iso(plan: IsoPlan, G: GeneratorSet, A: LMatrix) -> LMatrix:
    """The composite M_r(L_n) -> M_s(L_n): entrywise embed, then shifts."""
    if A.rows != plan.r or A.cols != plan.r or A.n != plan.n:
        raise ValueError("matrix does not match the plan (%d x %d over L_%d)"
                         % (plan.r, plan.r, plan.n))
    if G.d != plan.l or G.n != plan.n:
        raise ValueError("generator set does not match the plan")
    l = plan.l
    size = plan.r * l
    grid = [[None] * size for _ in range(size)]
    for i in range(plan.r):
        for j in range(plan.r):
            block = embed_entry(A.entries[i][j], G)
            for u in range(l):
                for v in range(l):
                    grid[i * l + u][j * l + v] = block.entries[u][v]
    B = LMatrix(size, size, plan.n, grid)
    for _ in range(plan.shift_steps):
        B = shift_up(B)
    for _ in range(-plan.shift_steps):
        B = shift_down(B)
    return B


class GroupIsomorphism:
    """The isomorphism G_{n,r} -> G_{n,s} of the gcd classification.

    Built once (including the generator search when the multiplier exceeds
    1) and then applied to any number of symbols.
    """

    def __init__(self, n: int, r: int, s: int, search_budget: int = 10000,
                 check_gen: bool = True, span_bound: int = 8,
                 degree_cap: int = 4):
        self.plan = find_l(n, r, s)
        if self.plan.l == 1:
            self.generators = _trivial_generator_set(n)
        else:
            self.generators = build_generators(
                self.plan.l, n, search_budget, check_gen, span_bound,
                degree_cap)

    def __call__(self, g: Symbol) -> Symbol:
        plan = self.plan
        if (g.n, g.r) != (plan.n, plan.r):
            raise ValueError("symbol lives over (%d, %d), plan expects "
                             "(%d, %d)" % (g.n, g.r, plan.n, plan.r))
        X = correspondence.symbol_to_matrix(g)
        B = matrix_iso(plan, self.generators, X.base)
        try:
            return correspondence.matrix_to_symbol(B, mode="direct")
        except correspondence.NotInGroupImageError:
            return correspondence.matrix_to_symbol(B, mode="evaluate")

    def image_matrix(self, g: Symbol) -> LMatrix:
        """The intermediate s x s P-matrix (used by the CLI dump)."""
        X = correspondence.symbol_to_matrix(g)
        return matrix_iso(self.plan, self.generators, X.base)


def group_iso(n: int, r: int, s: int, **kwargs) -> GroupIsomorphism:
    return GroupIsomorphism(n, r, s, **kwargs)
