"""Root datum of the fixed-point subgroup of a finite action.

Cocharacters of the folded torus are the fixed sublattice of the source
cocharacters; characters are the coinvariants of the source characters.  The
corestriction basis is normalized so the two sides pair by the standard dot
product, which keeps every later norm/conorm identity a literal matrix
identity.

A restricted root survives (beta = i^* alpha lies in the folded system) iff
every stabilizer element acts with scalar one on the alpha root space; the
folded coroot is the orbit sum of source coroots times a multiplier in {1, 2}
fixed by the pairing normalization.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact_lattice import (
    LatticeMap,
    coinvariant_quotient,
    dot,
    fixed_sublattice,
    right_inverse,
    vadd,
)
from .gamma_action import (
    GammaAction,
    pinned_projection,
    root_orbit,
    root_space_scalar,
    root_stabilizer,
    stabilizer_hypothesis,
)
from .root_datum import (
    BasedRootDatum,
    RootDatum,
    length_classes,
    validate,
)


@dataclass(frozen=True)
class FoldedRootRecord:
    root: tuple
    coroot: tuple
    orbit: tuple
    source_rep: tuple
    multiplier: int


class FoldedDatum:
    __slots__ = ("source", "fixed", "fixed_base", "restriction", "corestriction",
                 "provenance")

    def __init__(self, source, fixed, fixed_base, restriction, corestriction, provenance):
        self.source = source
        self.fixed = fixed
        self.fixed_base = fixed_base
        self.restriction = restriction
        self.corestriction = corestriction
        self.provenance = provenance

    @property
    def rank(self):
        return self.fixed.rank

    def __repr__(self):
        return f"FoldedDatum(rank={self.rank}, {len(self.fixed.roots)} roots)"


def orbit_average(a: GammaAction, root):
    """i^* of the root as a rational vector in the source coordinates."""
    orb = root_orbit(a, root)
    k = len(orb)
    n = a.base.datum.rank
    return tuple(Fraction(sum(o[i] for o in orb), k) for i in range(n))


def root_survives(a: GammaAction, root) -> bool:
    """All stabilizer elements act trivially on the root space."""
    return all(root_space_scalar(a, i, root) == 0 for i in root_stabilizer(a, root))


def fold(a: GammaAction) -> FoldedDatum:
    from .gamma_action import validate_action

    rep = validate_action(a)
    if not rep.ok:
        raise ValueError("invalid action: " + "; ".join(rep.problems))
    rd = a.base.datum
    n = rd.rank
    coacts = [a.coaction(i) for i in a.group.elements()]
    diags = list(a.diagram)
    sub = fixed_sublattice(coacts)
    quot = coinvariant_quotient(diags)
    proj = quot.projection
    s = sub.rank
    assert proj.codomain_rank == s, "fixed and coinvariant ranks must agree"
    if s == 0:
        fixed = RootDatum(0, [], [])
        base = BasedRootDatum(fixed, ())
        return FoldedDatum(a, fixed, base, proj, sub.basis, {})
    lift = right_inverse(proj)
    pairing = lift.transpose() @ sub.basis
    if abs(pairing.det()) != 1:
        raise AssertionError("coinvariant/invariant pairing is not perfect")
    cores = sub.basis @ pairing.inverse_unimodular()

    # one record per surviving orbit; distinct orbits may share a restriction
    records = {}
    seen = set()
    for alpha in rd.roots:
        if alpha in seen:
            continue
        orb = root_orbit(a, alpha)
        seen.update(orb)
        if not root_survives(a, alpha):
            continue
        beta = tuple(proj(alpha))
        if beta in records:
            continue
        coroot_orbit = {tuple(rd.coroot_of(o)) for o in orb}
        sigma = (0,) * n
        for cv in sorted(coroot_orbit):
            sigma = vadd(sigma, cv)
        pair = dot(alpha, sigma)
        if pair not in (1, 2):
            raise AssertionError(f"coroot multiplier out of range at {alpha}")
        mult = 2 // pair
        scaled = tuple(mult * x for x in sigma)
        # coordinates of the orbit sum in the corestriction basis
        in_hnf = sub.coordinates(scaled)
        assert in_hnf is not None
        beta_vee = tuple(pairing(in_hnf))
        assert dot(beta, beta_vee) == 2
        records[beta] = FoldedRootRecord(beta, beta_vee, orb, alpha, mult)

    roots = sorted(records)
    fixed = RootDatum(s, roots, [records[r].coroot for r in roots])
    rep2 = validate(fixed)
    if not rep2.ok:
        raise AssertionError("folded datum invalid: " + "; ".join(rep2.problems))
    base = BasedRootDatum(fixed, _base_indices(a, fixed, records))
    rep3 = validate(base)
    if not rep3.ok:
        raise AssertionError("folded base invalid: " + "; ".join(rep3.problems))
    return FoldedDatum(a, fixed, base, proj, cores, records)


def _base_indices(a, fixed, records):
    """Indecomposable positive restrictions form the folded base."""
    pos_src = {a.base.datum.roots[i] for i in a.base.positive_roots()}
    pos = sorted(r for r, rec in records.items() if rec.source_rep in pos_src)
    pos_set = set(pos)
    simples = []
    for b in pos:
        decomposable = any(
            tuple(x - y for x, y in zip(b, c)) in pos_set and c != b
            for c in pos)
        if not decomposable:
            simples.append(fixed.root_index(b))
    return tuple(sorted(simples))


@dataclass(frozen=True)
class RestrictionComparison:
    phi: tuple
    underline_phi: tuple
    phi_in_underline: bool
    underline_short_in_phi: bool
    missing_short: tuple | None
    hypothesis: object
    folded: FoldedDatum
    folded_pinned: FoldedDatum


def restricted_root_comparison(a: GammaAction) -> RestrictionComparison:
    """Compare the fold of the action with the fold of its pinned projection.

    Both root sets are placed in the shared rational space of averaged source
    characters, where inclusion is plain set containment.
    """
    fd = fold(a)
    fp = fold(pinned_projection(a))
    phi = {orbit_average(a, rec.source_rep) for rec in fd.provenance.values()}
    phi |= {tuple(-x for x in v) for v in phi}
    uphi = {orbit_average(a, rec.source_rep) for rec in fp.provenance.values()}
    uphi |= {tuple(-x for x in v) for v in uphi}
    lens = length_classes(fp.fixed)
    short_avgs = {}
    for rec in fp.provenance.values():
        if lens[fp.fixed.root_index(rec.root)] == "short":
            short_avgs[orbit_average(a, rec.source_rep)] = rec.root
    missing = next((v for v in sorted(short_avgs) if v not in phi), None)
    return RestrictionComparison(
        phi=tuple(sorted(phi)),
        underline_phi=tuple(sorted(uphi)),
        phi_in_underline=phi <= uphi,
        underline_short_in_phi=missing is None,
        missing_short=missing,
        hypothesis=stabilizer_hypothesis(a),
        folded=fd,
        folded_pinned=fp,
    )


@dataclass(frozen=True)
class DualLengthComparison:
    phi_dual: tuple
    underline_dual: tuple
    long_dual_in_phi_dual: bool
    phi_dual_in_underline_dual: bool
    two_lengths: bool


def dual_length_comparison(a: GammaAction) -> DualLengthComparison:
    """Sandwich of dual root systems on the shared folded cocharacter lattice."""
    hyp = stabilizer_hypothesis(a)
    if not hyp.holds:
        raise ValueError("stabilizer hypothesis fails; comparison not applicable")
    fd = fold(a)
    fp = fold(pinned_projection(a))
    phi_dual = set(fd.fixed.coroots)
    underline_dual = set(fp.fixed.coroots)
    dual_datum = RootDatum(fp.rank, fp.fixed.coroots, fp.fixed.roots)
    lens = length_classes(dual_datum)
    longs = {r for i, r in enumerate(dual_datum.roots) if lens[i] == "long"}
    return DualLengthComparison(
        phi_dual=tuple(sorted(phi_dual)),
        underline_dual=tuple(sorted(underline_dual)),
        long_dual_in_phi_dual=longs <= phi_dual,
        phi_dual_in_underline_dual=phi_dual <= underline_dual,
        two_lengths=len({lens[i] for i in range(len(dual_datum.roots))}) == 2,
    )
