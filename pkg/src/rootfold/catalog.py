"""Named root data, actions, and isogenies with the conventions fixed once.

Classical groups use Euclidean coordinates (characters of the diagonal
torus); exceptional groups and simply connected forms are generated from
Cartan matrices with Bourbaki node numbering.  Exceptional types above rank
six are deliberately absent.

Two presets are found by bounded search over small-denominator twists the
first time they are requested and then cached: the inner twist of the split
involution of adjoint E6 whose fold is C4 rather than F4, and the twisted
symmetric-group action on D4 whose fold drops to A2 and breaks the
short-root inclusion that cyclic stabilizers would guarantee.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .classes import rotation_action
from .duality_conorm import Isogeny, validate_isogeny
from .exact_lattice import LatticeMap, TorsionVector, dot
from .folding import fold, restricted_root_comparison
from .gamma_action import FiniteGroup, GammaAction, validate_action
from .root_datum import (
    BasedRootDatum,
    RootDatum,
    cartan_type,
    generate_datum,
    same_type,
)

_HALF = Fraction(1, 2)


def _cartan_a(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
            for i in range(n)]


def _cartan_b(n):
    c = _cartan_a(n)
    c[n - 2][n - 1] = -2
    return c


def _cartan_c(n):
    c = _cartan_a(n)
    c[n - 1][n - 2] = -2
    return c


def _cartan_d(n):
    c = _cartan_a(n)
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    return c


_CARTAN_G2 = [[2, -1], [-3, 2]]
_CARTAN_F4 = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
# Bourbaki E6: chain 1-3-4-5-6 with node 2 attached to 4
_CARTAN_E6 = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
]


def _cartan_for(family, rank):
    if family == "A":
        return _cartan_a(rank)
    if family == "B":
        return _cartan_b(rank)
    if family == "C":
        return _cartan_c(rank)
    if family == "D":
        return _cartan_d(rank)
    if family == "G" and rank == 2:
        return _CARTAN_G2
    if family == "F" and rank == 4:
        return _CARTAN_F4
    if family == "E" and rank == 6:
        return _CARTAN_E6
    if family == "E" and rank in (7, 8):
        raise ValueError(f"E{rank} is outside the catalog")
    raise ValueError(f"no Cartan matrix for type {family}{rank}")


@lru_cache(maxsize=None)
def simply_connected(family, rank) -> BasedRootDatum:
    """Weight-coordinate datum: simple root j is Cartan row j, coroot j is e_j."""
    c = _cartan_for(family, rank)
    roots = [tuple(c[j]) for j in range(rank)]
    coroots = [tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)]
    return generate_datum(rank, roots, coroots)


@lru_cache(maxsize=None)
def adjoint(family, rank) -> BasedRootDatum:
    """Root-coordinate datum: simple root j is e_j, coroot j is Cartan column j."""
    c = _cartan_for(family, rank)
    roots = [tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)]
    coroots = [tuple(c[i][j] for i in range(rank)) for j in range(rank)]
    return generate_datum(rank, roots, coroots)


def _e(n, i, s=1):
    v = [0] * n
    v[i] = s
    return tuple(v)


def _vsum(a, b):
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def gl(n) -> BasedRootDatum:
    roots, coroots = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                r = _vsum(_e(n, i), _e(n, j, -1))
                roots.append(r)
                coroots.append(r)
    rd = RootDatum(n, roots, coroots)
    simples = tuple(rd.root_index(_vsum(_e(n, i), _e(n, i + 1, -1)))
                    for i in range(n - 1))
    return BasedRootDatum(rd, simples)


def sl(n) -> BasedRootDatum:
    return simply_connected("A", n - 1)


def pgl(n) -> BasedRootDatum:
    return adjoint("A", n - 1)


@lru_cache(maxsize=None)
def sp(n) -> BasedRootDatum:
    """Sp(2n) on its diagonal torus: long roots 2e_i, short e_i - e_j."""
    roots, coroots = [], []
    for i in range(n):
        for s in (1, -1):
            roots.append(_e(n, i, 2 * s))
            coroots.append(_e(n, i, s))
        for j in range(i + 1, n):
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                r = _vsum(_e(n, i, si), _e(n, j, sj))
                roots.append(r)
                coroots.append(r)
    rd = RootDatum(n, roots, coroots)
    simples = [rd.root_index(_vsum(_e(n, i), _e(n, i + 1, -1))) for i in range(n - 1)]
    simples.append(rd.root_index(_e(n, n - 1, 2)))
    return BasedRootDatum(rd, tuple(simples))


@lru_cache(maxsize=None)
def so(n) -> BasedRootDatum:
    """Split special orthogonal group on Z^m, m = floor(n/2)."""
    m = n // 2
    roots, coroots = [], []
    if n % 2 == 1:
        for i in range(m):
            for s in (1, -1):
                roots.append(_e(m, i, s))
                coroots.append(_e(m, i, 2 * s))
    for i in range(m):
        for j in range(i + 1, m):
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                r = _vsum(_e(m, i, si), _e(m, j, sj))
                roots.append(r)
                coroots.append(r)
    rd = RootDatum(m, roots, coroots)
    simples = [rd.root_index(_vsum(_e(m, i), _e(m, i + 1, -1))) for i in range(m - 1)]
    if n % 2 == 1:
        simples.append(rd.root_index(_e(m, m - 1)))
    else:
        simples.append(rd.root_index(_vsum(_e(m, m - 2), _e(m, m - 1))))
    return BasedRootDatum(rd, tuple(simples))


def spin(n) -> BasedRootDatum:
    """Simply connected cover of so(n), small ranks only."""
    m = n // 2
    if not 5 <= n <= 12:
        raise ValueError("spin groups are catalogued only in small rank")
    return simply_connected("B" if n % 2 else "D", m)


def e6_adjoint() -> BasedRootDatum:
    return adjoint("E", 6)


def e6_simply_connected() -> BasedRootDatum:
    return simply_connected("E", 6)


def f4() -> BasedRootDatum:
    return adjoint("F", 4)


def g2() -> BasedRootDatum:
    return adjoint("G", 2)


def d4() -> BasedRootDatum:
    return simply_connected("D", 4)


def torus(n) -> BasedRootDatum:
    return BasedRootDatum(RootDatum(n, [], []), ())


def direct_sum(b1: BasedRootDatum, b2: BasedRootDatum) -> BasedRootDatum:
    d1, d2 = b1.datum, b2.datum
    n1, n2 = d1.rank, d2.rank
    roots = [r + (0,) * n2 for r in d1.roots] + [(0,) * n1 + r for r in d2.roots]
    coroots = [r + (0,) * n2 for r in d1.coroots] + [(0,) * n1 + r for r in d2.coroots]
    rd = RootDatum(n1 + n2, roots, coroots)
    simples = ([rd.root_index(d1.roots[i] + (0,) * n2) for i in b1.simple_indices]
               + [rd.root_index((0,) * n1 + d2.roots[i]) for i in b2.simple_indices])
    return BasedRootDatum(rd, tuple(simples))


def _signed_flip(m) -> LatticeMap:
    rows = [[0] * m for _ in range(m)]
    for c in range(m):
        rows[m - 1 - c][c] = -1
    return LatticeMap(rows)


def _perm_matrix(perm) -> LatticeMap:
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        rows[p][i] = 1
    return LatticeMap(rows)


def trivial_action(base: BasedRootDatum, m: int = 1) -> GammaAction:
    g = FiniteGroup.trivial() if m == 1 else FiniteGroup.cyclic(m)
    return GammaAction(g, base, [LatticeMap.identity(base.datum.rank)] * g.size)


def pinned_gl_action(n) -> GammaAction:
    """Transpose-inverse composed with the longest permutation, pinned."""
    return GammaAction(FiniteGroup.cyclic(2), gl(n),
                       [LatticeMap.identity(n), _signed_flip(n)])


def so_twist_gl_action(n) -> GammaAction:
    """The pinned flip of GL(2k) twisted into the orthogonal form."""
    if n % 2 != 0:
        raise ValueError("the orthogonal twist needs an even general linear group")
    tw = [_HALF] * (n // 2) + [0] * (n // 2)
    return GammaAction(FiniteGroup.cyclic(2), gl(n),
                       [LatticeMap.identity(n), _signed_flip(n)],
                       [(0,) * n, tw])


def pinned_sl_action(n) -> GammaAction:
    rev = _perm_matrix(list(range(n - 2, -1, -1)))
    return GammaAction(FiniteGroup.cyclic(2), sl(n),
                       [LatticeMap.identity(n - 1), rev])


def pinned_pgl_action(n) -> GammaAction:
    rev = _perm_matrix(list(range(n - 2, -1, -1)))
    return GammaAction(FiniteGroup.cyclic(2), pgl(n),
                       [LatticeMap.identity(n - 1), rev])


def pinned_so_even_action(n) -> GammaAction:
    """The graph involution of D_m realized as one sign flip of coordinates."""
    m = n // 2
    if n % 2 != 0 or m < 3:
        raise ValueError("need an even orthogonal group of rank at least three")
    rows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    rows[m - 1][m - 1] = -1
    return GammaAction(FiniteGroup.cyclic(2), so(n),
                       [LatticeMap.identity(m), LatticeMap(rows)])


_E6_INVOLUTION = (5, 1, 4, 3, 2, 0)


def pinned_e6_action(form="adjoint") -> GammaAction:
    base = e6_adjoint() if form == "adjoint" else e6_simply_connected()
    return GammaAction(FiniteGroup.cyclic(2), base,
                       [LatticeMap.identity(6), _perm_matrix(_E6_INVOLUTION)])


_S3_PERMS = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
_D4_OUTER = (0, 2, 3)  # nodes 1, 3, 4 in coordinate positions; node 2 is position 1


def _d4_matrix(outer_perm) -> LatticeMap:
    perm = [0, 1, 2, 3]
    for k, pos in enumerate(_D4_OUTER):
        perm[pos] = _D4_OUTER[outer_perm[k]]
    return _perm_matrix(perm)


def d4_action(outer_perms, twist=None) -> GammaAction:
    g = FiniteGroup.from_permutations(list(outer_perms))
    return GammaAction(g, d4(), [_d4_matrix(p) for p in outer_perms], twist)


def triality_action() -> GammaAction:
    return d4_action(_S3_PERMS[:3])


def full_s3_action() -> GammaAction:
    return d4_action(_S3_PERMS)


def inner_block_gl4_action() -> GammaAction:
    """Inner twist of GL(4) by diag(-1,-1,1,1); the fold is the block Levi."""
    return GammaAction(FiniteGroup.cyclic(2), gl(4),
                       [LatticeMap.identity(4)] * 2,
                       [(0, 0, 0, 0), (_HALF, _HALF, 0, 0)])


def z4_composite_action() -> GammaAction:
    """Order four on GL(2) x GL(2): the generator maps (x, y) to (flip(y), x)."""
    base = direct_sum(gl(2), gl(2))
    g = LatticeMap([[0, 0, 1, 0], [0, 0, 0, 1], [0, -1, 0, 0], [-1, 0, 0, 0]])
    return GammaAction(FiniteGroup.cyclic(4), base,
                       [LatticeMap.identity(4), g, g @ g, g @ g @ g])


def product_swap_action(base_half: BasedRootDatum) -> GammaAction:
    return rotation_action(base_half, 2)


def product_rotation_action(base_half: BasedRootDatum, m: int) -> GammaAction:
    return rotation_action(base_half, m)


@lru_cache(maxsize=None)
def twisted_e6_c4_action() -> GammaAction:
    """Inner twist of the pinned E6 involution folding to C4 instead of F4.

    Found by searching two-torsion twists; the choice is cached, and the
    search re-verifies the fold type each time it runs.
    """
    a = pinned_e6_action("adjoint")
    rd = a.base.datum
    sc = a.pinned_scalars(1)
    fixed = [r for r in rd.roots if a.act_root(1, r) == r]
    for bits in iproduct((0, 1), repeat=6):
        t = TorsionVector(bits, 2)
        alive = sum(1 for r in fixed if (sc[r] + t.pairing(r)) % 1 == 0)
        if alive != 8:
            continue
        cand = GammaAction(a.group, a.base, a.diagram, [(0,) * 6, t])
        if not validate_action(cand).ok:
            continue
        try:
            fd = fold(cand)
        except (ValueError, AssertionError):
            continue
        types, central = cartan_type(fd.fixed)
        if central == 0 and same_type(types, (("C", 4),)):
            return cand
    raise RuntimeError("no two-torsion twist of E6 folds to C4")


def _d4_orbit_data():
    """Triality-fixed roots of D4 and one (representative, stabilizer) per
    length-three orbit of the full graph symmetry."""
    group = FiniteGroup.from_permutations(_S3_PERMS)
    mats = [_d4_matrix(p) for p in _S3_PERMS]
    pinned = GammaAction(group, d4(), mats)
    rd = pinned.base.datum
    fixed = [r for r in rd.roots
             if all(pinned.act_root(i, r) == r for i in range(6))]
    orbit_reps = []
    seen = set(fixed)
    for r in rd.roots:
        if r in seen:
            continue
        orb = {pinned.act_root(i, r) for i in range(6)}
        seen |= orb
        rep, stab = next((o, i) for o in sorted(orb) for i in (3, 4, 5)
                         if pinned.act_root(i, o) == o)
        orbit_reps.append((rep, stab))
    return pinned, fixed, orbit_reps


@lru_cache(maxsize=None)
def twisted_triality_a2_action() -> GammaAction:
    """Inner twist of the cyclic triality whose fold is A2, not G2.

    The twist kills every triality-fixed root; the six orbit restrictions
    survive and form the short hexagon.  Found by searching order-three
    twists of the generator and cached afterwards.
    """
    a = triality_action()
    rd = a.base.datum
    fixed = [r for r in rd.roots if a.act_root(1, r) == r]
    for bits in iproduct((0, 1, 2), repeat=4):
        t = TorsionVector(bits, 3)
        if any(t.pairing(f) == 0 for f in fixed):
            continue
        tw = [TorsionVector.zero(4), t, t + t.apply(a.coaction(1))]
        cand = GammaAction(a.group, a.base, a.diagram, tw)
        if not validate_action(cand).ok:
            continue
        try:
            fd = fold(cand)
        except (ValueError, AssertionError):
            continue
        types, central = cartan_type(fd.fixed)
        if central == 0 and same_type(types, (("A", 2),)):
            return cand
    raise RuntimeError("no order-three twist of the triality folds to A2")


@lru_cache(maxsize=None)
def s3_twisted_d4_action() -> GammaAction:
    """Twisted full graph symmetry of D4 that drops short restricted roots.

    With a non-cyclic stabilizer the short roots of the pinned fold need not
    all survive.  The cocycle constraints tie each orbit of short roots to a
    fixed long root, so the searched twist removes matched long-short pairs
    and the fold lands strictly inside G2; the short-inclusion report then
    carries a concrete missing root.  Found by bounded search over
    small-denominator twists of the two generators and cached.
    """
    pinned, fixed, orbit_reps = _d4_orbit_data()
    group, base, mats = pinned.group, pinned.base, list(pinned.diagram)
    r_idx, s_idx = 1, 3

    def extend(t_r, t_s):
        tw = {0: TorsionVector.zero(4), r_idx: t_r, s_idx: t_s}
        changed = True
        while changed:
            changed = False
            for g in (r_idx, s_idx):
                for h, th in list(tw.items()):
                    gh = group.mult(g, h)
                    if gh not in tw:
                        tw[gh] = tw[g] + th.apply(pinned.coaction(g))
                        changed = True
        return [tw[i] for i in range(6)] if len(tw) == 6 else None

    thirds = [TorsionVector(b, 3) for b in iproduct((0, 1, 2), repeat=4)]
    quarters = [TorsionVector(b, 4) for b in iproduct((0, 1, 2, 3), repeat=4)]
    for t_r in thirds:
        for t_s in quarters:
            tw = extend(t_r, t_s)
            if tw is None:
                continue
            if all(tw[stab].pairing(rep) == 0 for rep, stab in orbit_reps):
                continue
            try:
                cand = GammaAction(group, base, mats, tw)
            except ValueError:
                continue
            if not validate_action(cand).ok:
                continue
            try:
                rep = restricted_root_comparison(cand)
            except (ValueError, AssertionError):
                continue
            if not rep.underline_short_in_phi and rep.missing_short is not None:
                return cand
    raise RuntimeError("no small twist of the D4 graph symmetry drops a short root")


def _rational_inverse(cols):
    n = len(cols)
    m = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        inv[c] = [x / pv for x in inv[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[c])]
    return inv


def based_isomorphism(source: BasedRootDatum, target: BasedRootDatum):
    """Unimodular character-lattice map identifying two based data, or None.

    Tries every assignment of target simple roots to source simple roots and
    solves for the matrix sending one simple system to the other; a hit must
    be integral, unimodular, and carry all roots and coroots across.  Used to
    pin down which isogeny form a folded datum is.
    """
    from itertools import permutations
    n = target.datum.rank
    if (source.datum.rank != n or len(target.simple_indices) != n
            or len(source.simple_indices) != n):
        return None
    inv = _rational_inverse(target.simple_roots)
    if inv is None:
        return None
    src = source.simple_roots
    for perm in permutations(range(len(src))):
        cols = [src[p] for p in perm]
        rows = [[sum(Fraction(cols[k][i]) * inv[k][j] for k in range(n))
                 for j in range(n)] for i in range(n)]
        if any(x.denominator != 1 for row in rows for x in row):
            continue
        m = LatticeMap([[int(x) for x in row] for row in rows])
        if abs(m.det()) != 1:
            continue
        phi = Isogeny(source, target, m)
        if validate_isogeny(phi).ok:
            return m
    return None


def isogeny_sl_to_pgl(n) -> Isogeny:
    """Characters of PGL(n) are the root lattice inside the weights of SL(n)."""
    c = _cartan_a(n - 1)
    m = LatticeMap([[c[i][j] for j in range(n - 1)] for i in range(n - 1)])
    return Isogeny(sl(n), pgl(n), m)


def isogeny_sl_gl1_to_gl(n) -> Isogeny:
    src = direct_sum(sl(n), torus(1))
    cols = []
    for i in range(n):
        w = [0] * (n - 1)
        if i < n - 1:
            w[i] += 1
        if i > 0:
            w[i - 1] -= 1
        cols.append(tuple(w) + (1,))
    return Isogeny(src, gl(n), LatticeMap.from_columns(cols, n))


def isogeny_spin_to_so(n) -> Isogeny:
    """Pair each coordinate character against the simple coroots of so(n)."""
    target = so(n)
    m_rank = n // 2
    cols = []
    for i in range(m_rank):
        cols.append(tuple(dot(_e(m_rank, i), cv) for cv in target.simple_coroots))
    return Isogeny(spin(n), target, LatticeMap.from_columns(cols, m_rank))


def sl_gl1_flip_action(n) -> GammaAction:
    """Transpose-inverse on SL(n) x GL(1), compatible with the GL(n) flip."""
    base = direct_sum(sl(n), torus(1))
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[n - 2 - i][i] = 1
    rows[n - 1][n - 1] = -1
    return GammaAction(FiniteGroup.cyclic(2), base,
                       [LatticeMap.identity(n), LatticeMap(rows)])


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    action: GammaAction
    expected_fold: tuple | None


_FIXED_PRESETS = {
    "e6ad-pinned": (lambda: pinned_e6_action("adjoint"),
                    "split involution of adjoint E6", (("F", 4),)),
    "e6sc-pinned": (lambda: pinned_e6_action("sc"),
                    "split involution of simply connected E6", (("F", 4),)),
    "e6ad-twisted-c4": (twisted_e6_c4_action,
                        "inner twist of the E6 involution", (("C", 4),)),
    "d4-triality": (triality_action, "cyclic triality on D4", (("G", 2),)),
    "d4-full-s3": (full_s3_action, "full graph symmetry on D4", (("G", 2),)),
    "d4-twisted-a2": (twisted_triality_a2_action,
                      "inner twist of the triality", (("A", 2),)),
    "d4-s3-twisted": (s3_twisted_d4_action,
                      "short-dropping twist of the graph symmetry", None),
    "gl4-inner-block": (inner_block_gl4_action,
                        "inner two-torsion twist of GL(4)", None),
    "gl2gl2-z4": (z4_composite_action,
                  "order-four mixing of two GL(2) factors", None),
}


def preset_names():
    fixed = sorted(_FIXED_PRESETS)
    families = ["gl<n>-pinned", "gl<2k>-so-twist", "sl<n>-pinned", "pgl<n>-pinned",
                "so<2k>-pinned", "gl<n>-trivial-z<m>", "gl<n>-product-swap"]
    return fixed + families


_NAMED_GROUPS = {
    "e6ad": e6_adjoint, "e6sc": e6_simply_connected,
    "f4": f4, "g2": g2, "d4": d4,
}

_GROUP_FAMILIES = {
    "gl": gl, "sl": sl, "pgl": pgl, "sp": lambda n: sp(n // 2),
    "so": so, "spin": spin, "torus": torus,
}


def group_datum(name: str) -> BasedRootDatum:
    """A based root datum by short name: gl4, sl3, sp6, so7, spin8, e6ad, ..."""
    if name in _NAMED_GROUPS:
        return _NAMED_GROUPS[name]()
    for prefix, builder in sorted(_GROUP_FAMILIES.items(),
                                  key=lambda kv: -len(kv[0])):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            n = int(name[len(prefix):])
            if prefix == "sp" and n % 2:
                raise ValueError(f"sp{n}: symplectic groups have even matrix size")
            return builder(n)
    raise ValueError(f"unknown group {name!r}")


def preset(name: str) -> Preset:
    if name in _FIXED_PRESETS:
        builder, desc, expected = _FIXED_PRESETS[name]
        return Preset(name, desc, builder(), expected)
    parts = name.split("-")
    head = parts[0]
    try:
        if head.startswith("gl") and parts[1:] == ["pinned"]:
            n = int(head[2:])
            return Preset(name, f"transpose-inverse flip of GL({n})",
                          pinned_gl_action(n), (("C", n // 2),) if n % 2 == 0 else None)
        if head.startswith("gl") and parts[1:] == ["so", "twist"]:
            n = int(head[2:])
            exp = ((("A", 1), ("A", 1)) if n == 4 else (("D", n // 2),))
            return Preset(name, f"orthogonal twist of the GL({n}) flip",
                          so_twist_gl_action(n), exp)
        if head.startswith("sl") and parts[1:] == ["pinned"]:
            n = int(head[2:])
            exp = (("B", (n - 1) // 2),) if n % 2 == 1 else (("C", n // 2),)
            return Preset(name, f"diagram involution of SL({n})",
                          pinned_sl_action(n), exp)
        if head.startswith("pgl") and parts[1:] == ["pinned"]:
            n = int(head[3:])
            return Preset(name, f"diagram involution of PGL({n})",
                          pinned_pgl_action(n), None)
        if head.startswith("so") and parts[1:] == ["pinned"]:
            n = int(head[2:])
            return Preset(name, f"graph involution of SO({n})",
                          pinned_so_even_action(n), (("B", n // 2 - 1),))
        if head.startswith("gl") and len(parts) == 3 and parts[1] == "trivial":
            n = int(head[2:])
            m = int(parts[2].lstrip("z"))
            return Preset(name, f"trivial order-{m} action on GL({n})",
                          trivial_action(gl(n), m), None)
        if head.startswith("gl") and parts[1:] == ["product", "swap"]:
            n = int(head[2:])
            return Preset(name, f"swap of two GL({n}) factors",
                          product_swap_action(gl(n)), None)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed preset name {name!r}") from exc
    raise ValueError(f"unknown preset {name!r}")


GOLDEN_FOLDS = {
    "gl4-pinned": (("C", 2),),
    "gl6-pinned": (("C", 3),),
    "gl8-pinned": (("C", 4),),
    "gl4-so-twist": (("A", 1), ("A", 1)),
    "gl6-so-twist": (("D", 3),),
    "sl3-pinned": (("B", 1),),
    "sl5-pinned": (("B", 2),),
    "sl7-pinned": (("B", 3),),
    "e6ad-pinned": (("F", 4),),
    "e6ad-twisted-c4": (("C", 4),),
    "d4-triality": (("G", 2),),
    "d4-full-s3": (("G", 2),),
    "d4-twisted-a2": (("A", 2),),
}
