"""Finite group actions on a based root datum as (diagram, torus twist) pairs.

The automorphism attached to gamma is Int(t_gamma) composed with the pinned
automorphism of the diagram part, so it is determined by a lattice map on X
plus a torsion cocharacter modulo the center.  Everything downstream (folding,
norms, conorms) consumes actions in this normal form.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chevalley import build_structure_constants, propagate_scalars
from .exact_lattice import LatticeMap, TorsionVector
from .root_datum import BasedRootDatum, ValidationReport


class FiniteGroup:
    """Explicit multiplication table; element 0 is the identity."""

    __slots__ = ("size", "table", "names")

    def __init__(self, table, names=None):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.size = len(self.table)
        self.names = tuple(names) if names else tuple(str(i) for i in range(self.size))
        n = self.size
        if any(len(r) != n for r in self.table) or len(self.names) != n:
            raise ValueError("malformed multiplication table")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("element 0 is not an identity")
        for i in range(n):
            if not any(self.table[i][j] == 0 for j in range(n)):
                raise ValueError(f"element {i} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValueError("multiplication is not associative")

    def mult(self, i, j):
        return self.table[i][j]

    def inverse(self, i):
        return next(j for j in range(self.size) if self.table[i][j] == 0)

    def order_of(self, i):
        k, cur = 1, i
        while cur != 0:
            cur = self.table[cur][i]
            k += 1
        return k

    def elements(self):
        return range(self.size)

    def is_cyclic(self):
        return any(self.order_of(i) == self.size for i in range(self.size))

    def subgroup_closure(self, gens):
        out = {0}
        frontier = list(out)
        gens = list(gens)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in out:
                        out.add(b)
                        nxt.append(b)
            frontier = nxt
        return tuple(sorted(out))

    def is_subgroup(self, elems):
        s = set(elems)
        return 0 in s and all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, elems):
        s = set(elems)
        if not self.is_subgroup(s):
            return False
        return all(self.table[self.table[g][h]][self.inverse(g)] in s
                   for g in range(self.size) for h in s)

    def quotient_by(self, normal_elems):
        """Quotient group, coset index per element, and one representative per coset."""
        if not self.is_normal(normal_elems):
            raise ValueError("subgroup is not normal")
        s = set(normal_elems)
        coset_of = [-1] * self.size
        reps = []
        for g in range(self.size):
            if coset_of[g] >= 0:
                continue
            idx = len(reps)
            reps.append(g)
            for h in s:
                coset_of[self.table[g][h]] = idx
        m = len(reps)
        table = [[coset_of[self.table[reps[a]][reps[b]]] for b in range(m)] for a in range(m)]
        return FiniteGroup(table), tuple(coset_of), tuple(reps)

    @classmethod
    def trivial(cls):
        return cls(((0,),), names=("e",))

    @classmethod
    def cyclic(cls, n):
        return cls(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
                   names=tuple(f"g{i}" if i else "e" for i in range(n)))

    @classmethod
    def from_permutations(cls, perms, names=None):
        """Group of permutation tuples; perms[0] must be the identity."""
        perms = [tuple(p) for p in perms]
        index = {p: i for i, p in enumerate(perms)}
        if len(index) != len(perms):
            raise ValueError("duplicate permutations")
        if perms[0] != tuple(range(len(perms[0]))):
            raise ValueError("first permutation must be the identity")
        table = []
        for p in perms:
            row = []
            for q in perms:
                comp = tuple(p[q[i]] for i in range(len(p)))
                if comp not in index:
                    raise ValueError("permutations not closed under composition")
                row.append(index[comp])
            table.append(row)
        return cls(table, names=names)


class GammaAction:
    """diagram[i] acts on X, twist[i] is a torsion cocharacter; index 0 = identity."""

    __slots__ = ("group", "base", "diagram", "twist", "_sc", "_pinned_cache", "_co_cache")

    def __init__(self, group: FiniteGroup, base: BasedRootDatum, diagram, twist=None):
        self.group = group
        self.base = base
        rank = base.datum.rank
        self.diagram = tuple(diagram[i] for i in range(group.size))
        if twist is None:
            self.twist = tuple(TorsionVector.zero(rank) for _ in range(group.size))
        else:
            tw = []
            for i in range(group.size):
                if isinstance(twist, dict):
                    t = twist.get(i, TorsionVector.zero(rank))
                else:
                    t = twist[i]
                if not isinstance(t, TorsionVector):
                    t = TorsionVector.from_fractions(t)
                tw.append(t)
            self.twist = tuple(tw)
        simple_set = set(base.simple_roots)
        for i, d in enumerate(self.diagram):
            if {tuple(d(s)) for s in simple_set} != simple_set:
                raise ValueError(f"diagram part {i} does not preserve the base")
        self._sc = None
        self._pinned_cache = {}
        self._co_cache = {}

    @property
    def sc(self):
        if self._sc is None:
            self._sc = build_structure_constants(self.base)
        return self._sc

    def coaction(self, i) -> LatticeMap:
        """Action of element i on the cocharacter lattice."""
        if i not in self._co_cache:
            self._co_cache[i] = self.diagram[i].inverse_transpose()
        return self._co_cache[i]

    def act_root(self, i, root):
        return tuple(self.diagram[i](root))

    def pinned_scalars(self, i):
        if i not in self._pinned_cache:
            self._pinned_cache[i] = propagate_scalars(self.sc, self.diagram[i])
        return self._pinned_cache[i]

    def __eq__(self, other):
        """Same diagrams and same twist pairings against every root."""
        if not isinstance(other, GammaAction):
            return NotImplemented
        if self.base != other.base or self.group.table != other.group.table:
            return False
        if self.diagram != other.diagram:
            return False
        roots = self.base.datum.roots
        for t1, t2 in zip(self.twist, other.twist):
            if any(t1.pairing(r) != t2.pairing(r) for r in roots):
                return False
        return True

    def __repr__(self):
        return f"GammaAction(|Gamma|={self.group.size}, rank={self.base.datum.rank})"


def validate_action(a: GammaAction) -> ValidationReport:
    problems = []
    rd = a.base.datum
    root_set = set(rd.roots)
    coroot_set = set(rd.coroots)
    for i, d in enumerate(a.diagram):
        if {tuple(d(r)) for r in root_set} != root_set:
            problems.append(f"diagram part {i} does not permute the roots")
            continue
        co = a.coaction(i)
        if {tuple(co(c)) for c in coroot_set} != coroot_set:
            problems.append(f"coaction of {i} does not permute the coroots")
        else:
            for r in rd.roots:
                if tuple(co(rd.coroot_of(r))) != rd.coroot_of(tuple(d(r))):
                    problems.append(f"element {i} maps coroot of {r} inconsistently")
                    break
    if a.diagram[0] != LatticeMap.identity(rd.rank):
        problems.append("identity element has a nontrivial diagram part")
    for i in range(a.group.size):
        for j in range(a.group.size):
            if a.diagram[a.group.mult(i, j)] != a.diagram[i] @ a.diagram[j]:
                problems.append(f"diagram is not a homomorphism at ({i},{j})")
    if not problems:
        for i in range(a.group.size):
            for j in range(a.group.size):
                k = a.group.mult(i, j)
                moved = a.twist[j].apply(a.coaction(i))
                combined = a.twist[i] + moved
                for r in rd.roots:
                    if a.twist[k].pairing(r) != combined.pairing(r):
                        problems.append(
                            f"twist cocycle fails at ({i},{j}) on root {r}")
                        break
    return ValidationReport(not problems, tuple(problems))


def pinned_projection(a: GammaAction) -> GammaAction:
    """Forget the torus twists; same diagram parts, hence same action on T."""
    return GammaAction(a.group, a.base, a.diagram)


def root_orbit(a: GammaAction, root):
    r = tuple(root)
    return tuple(sorted({a.act_root(i, r) for i in a.group.elements()}))


def root_stabilizer(a: GammaAction, root):
    r = tuple(root)
    return tuple(i for i in a.group.elements() if a.act_root(i, r) == r)


def root_space_scalar(a: GammaAction, i, root) -> Fraction:
    """Exponent c with phi(gamma) X_root = zeta^c X_{gamma root}.

    Sum of the pinned part's propagated scalar and the twist contribution,
    which is the pairing of the image root with the twist (Int(t) scales the
    beta root space by beta(t), applied after the pinned map).
    """
    r = tuple(root)
    pinned = a.pinned_scalars(i)[r]
    return (pinned + a.twist[i].pairing(a.act_root(i, r))) % 1


@dataclass(frozen=True)
class ComponentStabilizerRecord:
    component_index: int
    stabilizer: tuple
    image_order: int
    cyclic: bool
    faithful: bool
    trivial: bool


@dataclass(frozen=True)
class StabilizerReport:
    holds: bool
    components: tuple
    witness: int | None  # index of first component with non-cyclic image

    def __bool__(self):
        return self.holds


def stabilizer_hypothesis(a: GammaAction) -> StabilizerReport:
    """Per irreducible component: is the stabilizer's image cyclic, and faithful?

    "holds" means every component's induced automorphism group is cyclic;
    faithfulness and triviality are reported per component for the callers
    that need the stronger or weaker reading.
    """
    from .root_datum import _components

    rd = a.base.datum
    comps = _components(rd)
    records = []
    witness = None
    for ci, comp in enumerate(comps):
        comp_roots = frozenset(rd.roots[k] for k in comp)
        stab = [i for i in a.group.elements()
                if all(a.act_root(i, r) in comp_roots for r in comp_roots)]
        ordered = sorted(comp_roots)
        perms = {}
        for i in stab:
            perms[i] = tuple(ordered.index(a.act_root(i, r)) for r in ordered)
        image = set(perms.values())
        # the image is cyclic iff some induced permutation has full order
        def perm_order(p):
            k, cur = 1, p
            ident = tuple(range(len(ordered)))
            while cur != ident:
                cur = tuple(p[x] for x in cur)
                k += 1
            return k

        cyclic = any(perm_order(p) == len(image) for p in image)
        kernel = [i for i in stab if perms[i] == tuple(range(len(ordered)))]
        faithful = len(kernel) == 1
        trivial = len(image) == 1
        records.append(ComponentStabilizerRecord(
            ci, tuple(stab), len(image), cyclic, faithful, trivial))
        if not cyclic and witness is None:
            witness = ci
    return StabilizerReport(witness is None, tuple(records), witness)
