"""Root data with explicit root and coroot vectors, and their Weyl groups.

A root datum is (X, Phi, X^vee, Phi^vee) with X = Z^rank and the standard dot
pairing.  Roots are stored as explicit vectors so that non-semisimple groups
(GL(n), central tori) are first-class.  The simply-laced length convention is
"every root is long".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact_lattice import LatticeMap, dot, vadd, vneg, vsub


class WeylCapError(RuntimeError):
    pass


class RootDatum:
    """Rank, roots, and coroots; index i of `roots` pairs with index i of `coroots`."""

    __slots__ = ("rank", "roots", "coroots", "_index")

    def __init__(self, rank: int, roots, coroots):
        self.rank = int(rank)
        self.roots = tuple(tuple(int(x) for x in r) for r in roots)
        self.coroots = tuple(tuple(int(x) for x in c) for c in coroots)
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must correspond one to one")
        for v in self.roots + self.coroots:
            if len(v) != self.rank:
                raise ValueError("root or coroot of wrong rank")
        self._index = {r: i for i, r in enumerate(self.roots)}
        if len(self._index) != len(self.roots):
            raise ValueError("duplicate roots")

    def root_index(self, v) -> int:
        return self._index[tuple(v)]

    def is_root(self, v) -> bool:
        return tuple(v) in self._index

    def coroot_of(self, v):
        return self.coroots[self._index[tuple(v)]]

    def pairing(self, i: int, j: int) -> int:
        """<root_i, coroot_j>."""
        return dot(self.roots[i], self.coroots[j])

    def reflection(self, i: int) -> LatticeMap:
        """s_i on X: x -> x - <x, coroot_i> root_i."""
        a = self.roots[i]
        av = self.coroots[i]
        n = self.rank
        return LatticeMap([[ (1 if r == c else 0) - a[r] * av[c] for c in range(n)]
                           for r in range(n)])

    def coreflection(self, i: int) -> LatticeMap:
        """s_i on X^vee: y -> y - <root_i, y> coroot_i."""
        a = self.roots[i]
        av = self.coroots[i]
        n = self.rank
        return LatticeMap([[ (1 if r == c else 0) - av[r] * a[c] for c in range(n)]
                           for r in range(n)])

    def __eq__(self, other):
        return (isinstance(other, RootDatum) and self.rank == other.rank
                and self.roots == other.roots and self.coroots == other.coroots)

    def __hash__(self):
        return hash((self.rank, self.roots, self.coroots))

    def __repr__(self):
        return f"RootDatum(rank={self.rank}, {len(self.roots)} roots)"


class BasedRootDatum:
    """A root datum with a chosen simple system (indices into `roots`)."""

    __slots__ = ("datum", "simple_indices")

    def __init__(self, datum: RootDatum, simple_indices):
        self.datum = datum
        self.simple_indices = tuple(int(i) for i in simple_indices)

    @property
    def simple_roots(self):
        return tuple(self.datum.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self):
        return tuple(self.datum.coroots[i] for i in self.simple_indices)

    def simple_coefficients(self, v):
        """Coefficients of v in the simple roots, or None if outside their span."""
        simples = self.simple_roots
        if not simples:
            return None if any(v) else ()
        cols = [list(s) for s in simples]
        n = self.datum.rank
        aug = [[Fraction(cols[j][i]) for j in range(len(simples))] + [Fraction(v[i])]
               for i in range(n)]
        k = len(simples)
        row = 0
        pivots = []
        for col in range(k):
            piv = next((i for i in range(row, n) if aug[i][col] != 0), None)
            if piv is None:
                continue
            aug[row], aug[piv] = aug[piv], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [x * inv for x in aug[row]]
            for i in range(n):
                if i != row and aug[i][col] != 0:
                    f = aug[i][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
            pivots.append(col)
            row += 1
        coeffs = [Fraction(0)] * k
        for r, col in enumerate(pivots):
            coeffs[col] = aug[r][k]
        for i in range(row, n):
            if aug[i][k] != 0:
                return None
        # verify (handles deficient pivot structure)
        acc = (0,) * n
        for c, s in zip(coeffs, simples):
            if c.denominator != 1:
                return None
            acc = vadd(acc, tuple(int(c) * x for x in s))
        return tuple(int(c) for c in coeffs) if acc == tuple(v) else None

    def positive_roots(self):
        """Roots whose simple-root coefficients are all nonnegative."""
        out = []
        for i, r in enumerate(self.datum.roots):
            c = self.simple_coefficients(r)
            if c is not None and all(x >= 0 for x in c):
                out.append(i)
        return tuple(out)

    def height(self, v) -> int:
        c = self.simple_coefficients(v)
        if c is None:
            raise ValueError("not in the root lattice of the base")
        return sum(c)

    def __eq__(self, other):
        return (isinstance(other, BasedRootDatum) and self.datum == other.datum
                and self.simple_indices == other.simple_indices)

    def __hash__(self):
        return hash((self.datum, self.simple_indices))

    def __repr__(self):
        return f"BasedRootDatum(rank={self.datum.rank}, {len(self.simple_indices)} simples)"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self):
        return self.ok


def validate(rd: RootDatum | BasedRootDatum) -> ValidationReport:
    """Check the root-datum axioms; for a based datum also check the base."""
    base = None
    if isinstance(rd, BasedRootDatum):
        base = rd
        rd = rd.datum
    problems = []
    root_set = set(rd.roots)
    for i, (a, av) in enumerate(zip(rd.roots, rd.coroots)):
        if dot(a, av) != 2:
            problems.append(f"<root {i}, its coroot> = {dot(a, av)} != 2")
        if vneg(a) not in root_set:
            problems.append(f"root {i} has no negative")
        for c in (2, 3):
            if tuple(c * x for x in a) in root_set:
                problems.append(f"root system not reduced at root {i}")
    # negation must match up coroots too
    for a, av in zip(rd.roots, rd.coroots):
        na = vneg(a)
        if na in root_set and rd.coroot_of(na) != vneg(av):
            problems.append("coroot of -a is not -coroot(a)")
    # reflections permute roots, coreflections permute coroots compatibly
    for i in range(len(rd.roots)):
        if problems:
            break
        s = rd.reflection(i)
        sv = rd.coreflection(i)
        for a, av in zip(rd.roots, rd.coroots):
            sa = s(a)
            if sa not in root_set:
                problems.append(f"reflection {i} does not permute the roots")
                break
            if rd.coroot_of(sa) != sv(av):
                problems.append(f"coreflection {i} incompatible with reflection")
                break
    if base is not None and not problems:
        for i in base.simple_indices:
            if i < 0 or i >= len(rd.roots):
                problems.append("simple index out of range")
        if not problems:
            for r in rd.roots:
                c = base.simple_coefficients(r)
                if c is None or not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                    problems.append(f"root {r} is not one-signed over the base")
                    break
    return ValidationReport(not problems, tuple(problems))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: matrix on X plus its canonical reduced word.

    The word is the lexicographically least reduced expression in the simple
    reflections (indices into the base's simple list); the matrix equals the
    left-to-right product of those reflections.
    """

    matrix: LatticeMap
    word: tuple[int, ...]

    def __len__(self):
        return len(self.word)


def _matrix_group_closure(gens: list[LatticeMap], cap: int, rank: int):
    """BFS closure of a finite integer matrix group.

    Returns (matrices as LatticeMap list, canonical lex-least words), in
    breadth-first order starting at the identity.  numpy int64 is safe here:
    all groups in scope have entries far below overflow.
    """
    n = rank
    if not gens or n == 0:
        return [LatticeMap.identity(n)], [()]
    gen_arr = [np.array(g.rows, dtype=np.int64) for g in gens]
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes(): 0}
    mats = [ident]
    words = [()]
    frontier = [0]
    while frontier:
        stack = np.stack([mats[i] for i in frontier])
        prods = [stack @ g for g in gen_arr]
        new_frontier = []
        for pos, idx in enumerate(frontier):
            for gi in range(len(gen_arr)):
                m = prods[gi][pos]
                key = m.tobytes()
                if key not in seen:
                    if len(mats) >= cap:
                        raise WeylCapError(f"group size exceeds cap {cap}")
                    seen[key] = len(mats)
                    mats.append(m)
                    words.append(words[idx] + (gi,))
                    new_frontier.append(len(mats) - 1)
        frontier = new_frontier
    if int(np.abs(np.stack(mats)).max()) > 10**9:
        raise AssertionError("matrix entries grew unexpectedly large")
    out = [LatticeMap(m.tolist()) for m in mats]
    return out, words


def weyl_group(rd: RootDatum | BasedRootDatum, cap: int = 1_000_000) -> list[WeylElement]:
    """All Weyl elements with canonical words, breadth-first from the identity."""
    base = rd if isinstance(rd, BasedRootDatum) else based_from_datum(rd)
    gens = [base.datum.reflection(i) for i in base.simple_indices]
    mats, words = _matrix_group_closure(gens, cap, base.datum.rank)
    return [WeylElement(m, w) for m, w in zip(mats, words)]


def _positivity_functional(rd: RootDatum):
    """Deterministic integer functional nonzero on every root."""
    if not rd.roots:
        return (1,) * rd.rank
    t = 2
    while True:
        f = tuple(t**i for i in range(rd.rank))
        if all(dot(f, r) != 0 for r in rd.roots):
            return f
        t += 1


@lru_cache(maxsize=None)
def based_from_datum(rd: RootDatum) -> BasedRootDatum:
    """Choose a base: positives from a generic functional, simples indecomposable."""
    f = _positivity_functional(rd)
    pos = [r for r in rd.roots if dot(f, r) > 0]
    pos_set = set(pos)
    simples = []
    for a in pos:
        if not any(vsub(a, b) in pos_set for b in pos if b != a):
            simples.append(rd.root_index(a))
    simples.sort()
    return BasedRootDatum(rd, tuple(simples))


@lru_cache(maxsize=None)
def invariant_inner_product(rd: RootDatum):
    """Weyl- and automorphism-invariant form on X (x) Q as a Fraction matrix.

    Built from the coroots componentwise, then scaled so long roots in every
    irreducible component have squared length 2.  Positive semidefinite with
    radical exactly the central directions.
    """
    n = rd.rank
    comps = _components(rd)
    b = [[Fraction(0)] * n for _ in range(n)]
    for comp in comps:
        raw = [[0] * n for _ in range(n)]
        for i in comp:
            av = rd.coroots[i]
            for r in range(n):
                for c in range(n):
                    raw[r][c] += av[r] * av[c]
        lengths = []
        for i in comp:
            a = rd.roots[i]
            lengths.append(sum(a[r] * raw[r][c] * a[c] for r in range(n) for c in range(n)))
        scale = Fraction(2, max(lengths))
        for r in range(n):
            for c in range(n):
                b[r][c] += scale * raw[r][c]
    return tuple(tuple(row) for row in b)


def form_value(form, u, v) -> Fraction:
    return sum(Fraction(u[r]) * form[r][c] * v[c] for r in range(len(u)) for c in range(len(v)))


@lru_cache(maxsize=None)
def _components(rd: RootDatum):
    """Irreducible components as tuples of root indices (non-orthogonality classes)."""
    m = len(rd.roots)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(i + 1, m):
            if dot(rd.roots[i], rd.coroots[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for g in sorted(groups.values()))


@lru_cache(maxsize=None)
def length_classes(rd: RootDatum):
    """Map root index -> "short" or "long" within its irreducible component.

    In simply-laced components every root is long by convention.
    """
    form = invariant_inner_product(rd)
    out = {}
    for comp in _components(rd):
        lens = {i: form_value(form, rd.roots[i], rd.roots[i]) for i in comp}
        lo = min(lens.values())
        hi = max(lens.values())
        for i in comp:
            out[i] = "long" if (lo == hi or lens[i] == hi) else "short"
    return out


def classify_length(rd: RootDatum, root) -> str:
    """Length class of one root; "long" everywhere in simply-laced components."""
    if not rd.is_root(root):
        raise ValueError("not a root of this datum")
    return length_classes(rd)[rd.root_index(root)]


def _recognize_component(rd: RootDatum, comp) -> tuple[str, int]:
    """Cartan type of one irreducible component, canonical low-rank labels.

    The B2 = C2 coincidence is reported as C2; D3 comes out as A3 and D2 can
    never appear (it is not irreducible).
    """
    sub = RootDatum(rd.rank, [rd.roots[i] for i in comp], [rd.coroots[i] for i in comp])
    base = based_from_datum(sub)
    simples = list(base.simple_indices)
    n = len(simples)
    pair = {}
    for a in range(n):
        for b in range(n):
            pair[a, b] = dot(sub.roots[simples[b]], sub.coroots[simples[a]])
    bonds = {}
    adj = {a: [] for a in range(n)}
    for a in range(n):
        for b in range(a + 1, n):
            k = pair[a, b] * pair[b, a]
            if k:
                bonds[a, b] = k
                adj[a].append(b)
                adj[b].append(a)
    if n == 1:
        return ("A", 1)
    if len(bonds) != n - 1:
        raise ValueError("component diagram is not a tree")
    degs = sorted(len(v) for v in adj.values())
    triple = [e for e, k in bonds.items() if k == 3]
    double = [e for e, k in bonds.items() if k == 2]
    if triple:
        if n == 2 and not double:
            return ("G", 2)
        raise ValueError("unrecognized diagram with a triple bond")
    if double:
        if len(double) > 1 or degs[-1] > 2:
            raise ValueError("unrecognized doubly-laced diagram")
        a, b = double[0]
        ends = [v for v in (a, b) if len(adj[v]) == 1]
        if n == 2:
            return ("C", 2)
        if not ends:
            if n == 4:
                return ("F", 4)
            raise ValueError("double bond strictly inside a chain: not finite type")
        # walk from the non-end side; end node short vs long decides B vs C
        end = ends[0] if len(ends) == 1 else None
        if end is None:
            raise ValueError("rank >= 3 chain cannot have both double-bond nodes terminal")
        other = b if end == a else a
        # <long, short coroot> = -2: if pair[end][other] = -2 the end is short
        end_is_short = pair[end, other] == -2
        return ("B", n) if end_is_short else ("C", n)
    # simply laced
    if degs[-1] > 3 or degs.count(3) > 1:
        raise ValueError("unrecognized simply-laced diagram")
    if degs[-1] <= 2:
        return ("A", n)
    center = next(v for v in adj if len(adj[v]) == 3)
    arms = []
    for start in adj[center]:
        ln = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        arms.append(ln)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", arms[2] + 3)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", arms[2] + 4)
    raise ValueError("unrecognized branched diagram")


def cartan_type(rd: RootDatum | BasedRootDatum):
    """Multiset of irreducible types plus the central torus rank.

    Returns (sorted tuple of (family, rank) pairs, central_rank).
    """
    if isinstance(rd, BasedRootDatum):
        rd = rd.datum
    comps = _components(rd)
    types = sorted(_recognize_component(rd, c) for c in comps)
    semis = sum(r for _, r in types)
    return tuple(types), rd.rank - semis


_TYPE_ALIASES = {
    ("B", 1): ("A", 1), ("C", 1): ("A", 1),
    ("B", 2): ("C", 2),
    ("D", 2): None,  # splits into A1 + A1 and never appears as one component
    ("D", 3): ("A", 3),
}


def normalize_type(t: tuple[str, int]) -> tuple[str, int]:
    return _TYPE_ALIASES.get(t, t) or t


def same_type(a, b) -> bool:
    """Compare type lists up to the classical low-rank coincidences."""
    na = sorted(normalize_type(t) for t in a)
    nb = sorted(normalize_type(t) for t in b)
    return na == nb


def is_closed_subsystem(rd: RootDatum, subset) -> bool:
    """subset (root vectors) is symmetric and closed under sums staying in Phi."""
    sub = {tuple(v) for v in subset}
    allr = set(rd.roots)
    if not sub <= allr:
        raise ValueError("subset contains non-roots")
    for a in sub:
        if vneg(a) not in sub:
            return False
    for a in sub:
        for b in sub:
            s = vadd(a, b)
            if s in allr and s not in sub:
                return False
    return True


def generate_datum(rank: int, simple_roots, simple_coroots, cap: int = 100_000) -> BasedRootDatum:
    """Close a simple system under its own reflections into a full based datum.

    Roots come out in breadth-first discovery order starting from the simples,
    so the construction is deterministic in the input order.
    """
    simples = [tuple(int(x) for x in r) for r in simple_roots]
    cosimples = [tuple(int(x) for x in c) for c in simple_coroots]
    pairs = {}
    order = []
    for a, av in zip(simples, cosimples):
        if a not in pairs:
            pairs[a] = av
            order.append(a)
    frontier = list(order)
    while frontier:
        nxt = []
        for a in frontier:
            av = pairs[a]
            for s, sv in zip(simples, cosimples):
                k = dot(a, sv)
                b = vsub(a, tuple(k * x for x in s))
                if b not in pairs:
                    if len(pairs) >= cap:
                        raise ValueError("root closure exceeds cap; input is not finite type")
                    bv = vsub(av, tuple(dot(s, av) * x for x in sv))
                    pairs[b] = bv
                    order.append(b)
                    nxt.append(b)
        frontier = nxt
    for a in list(order):
        na = vneg(a)
        if na not in pairs:
            pairs[na] = vneg(pairs[a])
            order.append(na)
    rd = RootDatum(rank, order, [pairs[a] for a in order])
    return BasedRootDatum(rd, tuple(rd.root_index(a) for a in simples))


def dual_root_datum(rd: RootDatum) -> RootDatum:
    """Swap roots and coroots; exact involution."""
    return RootDatum(rd.rank, rd.coroots, rd.roots)


def dual_based(base: BasedRootDatum) -> BasedRootDatum:
    return BasedRootDatum(dual_root_datum(base.datum), base.simple_indices)
