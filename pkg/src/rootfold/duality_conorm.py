"""Norm and conorm maps of a finite action, and isogenies of root data.

The norm of the action sends a point of the big torus to the product of its
translates; on cocharacters it is the sum of the coaction maps.  The conorm is
the dual-torus transpose of the norm.  On torsion points of the dual torus,
written in the folded character lattice, the conorm acts by the integer matrix
``(sum of diagram maps) @ lift`` where ``lift`` is any integer section of the
coinvariant projection; the sum kills the relation lattice, so the choice of
section is immaterial (asserted at build time).

Every map here is an exact integer matrix; nothing is floating point.
"""

from .exact_lattice import LatticeMap, TorsionVector, right_inverse, smith_normal_form
from .folding import FoldedDatum, fold
from .gamma_action import GammaAction
from .root_datum import BasedRootDatum, ValidationReport, dual_based


class NormData:
    """Norm of an action: torus-level data of z -> prod_gamma gamma(z)."""

    __slots__ = ("folded", "norm_on_cochar", "norm_pullback", "norm_to_folded")

    def __init__(self, folded: FoldedDatum):
        a = folded.source
        n = a.base.datum.rank
        sum_diag = LatticeMap.zero(n, n)
        sum_co = LatticeMap.zero(n, n)
        for i in a.group.elements():
            sum_diag = sum_diag + a.diagram[i]
            sum_co = sum_co + a.coaction(i)
        for d in a.diagram:
            if sum_diag @ d != sum_diag:
                raise AssertionError("norm does not kill the relation lattice")
        lift = right_inverse(folded.restriction)
        self.folded = folded
        self.norm_on_cochar = sum_co
        self.norm_pullback = sum_diag @ lift
        self.norm_to_folded = lift.transpose() @ sum_co
        # the two coordinate presentations are transposes of each other
        assert self.norm_to_folded.transpose() == self.norm_pullback
        # on the fixed sublattice the norm is multiplication by |Gamma|
        k = a.group.size
        assert sum_co @ folded.corestriction == folded.corestriction.scale(k)
        assert folded.restriction @ self.norm_pullback == LatticeMap.identity(folded.rank).scale(k)


class ConormData:
    """Conorm of an action: the norm transposed to the dual tori.

    ``matrix`` maps torsion points of the folded dual torus (coordinates in
    the folded character lattice) to torsion points of the source dual torus.
    """

    __slots__ = ("folded", "matrix", "norm")

    def __init__(self, folded: FoldedDatum):
        self.folded = folded
        self.norm = NormData(folded)
        self.matrix = self.norm.norm_pullback

    def apply(self, point: TorsionVector) -> TorsionVector:
        return point.apply(self.matrix)


def build_conorm(a) -> ConormData:
    """Conorm data of an action or of an already computed fold."""
    folded = a if isinstance(a, FoldedDatum) else fold(a)
    return ConormData(folded)


class Isogeny:
    """An isogeny of connected reductive groups, via its character pullback.

    ``char_pullback`` maps characters of the target group's torus to
    characters of the source group's torus, injectively with finite cokernel,
    carrying roots bijectively to roots.
    """

    __slots__ = ("source", "target", "char_pullback")

    def __init__(self, source: BasedRootDatum, target: BasedRootDatum,
                 char_pullback: LatticeMap):
        self.source = source
        self.target = target
        self.char_pullback = char_pullback

    def degree(self) -> int:
        return abs(self.char_pullback.det())

    def cokernel_invariants(self):
        """Elementary divisors of coker(char_pullback), ones dropped."""
        _, d, _ = smith_normal_form(self.char_pullback)
        k = min(d.codomain_rank, d.domain_rank)
        return tuple(d.rows[i][i] for i in range(k) if d.rows[i][i] != 1)

    def cochar_pushforward(self) -> LatticeMap:
        return self.char_pullback.transpose()

    def __repr__(self):
        return f"Isogeny(degree={self.degree()})"


def validate_isogeny(phi: Isogeny) -> ValidationReport:
    problems = []
    m = phi.char_pullback
    src, tgt = phi.source.datum, phi.target.datum
    if m.codomain_rank != src.rank or m.domain_rank != tgt.rank:
        return ValidationReport(False, ["char_pullback has wrong shape"])
    if src.rank != tgt.rank:
        problems.append("isogenous groups must have equal rank")
    elif m.det() == 0:
        problems.append("char_pullback is not injective")
    image = [tuple(m(b)) for b in tgt.roots]
    if sorted(image) != sorted(src.roots):
        problems.append("char_pullback does not carry roots bijectively to roots")
    else:
        mt = m.transpose()
        for b in tgt.roots:
            if tuple(mt(src.coroot_of(tuple(m(b))))) != tgt.coroot_of(b):
                problems.append(f"coroot of {b} not respected")
                break
    return ValidationReport(not problems, problems)


def dual_isogeny(phi: Isogeny) -> Isogeny:
    """The transposed isogeny between the dual groups, in the other direction."""
    return Isogeny(dual_based(phi.target), dual_based(phi.source),
                   phi.char_pullback.transpose())


def equivariant_for(phi: Isogeny, a_src: GammaAction, a_tgt: GammaAction) -> bool:
    """Whether the diagram actions intertwine the character pullback."""
    if a_src.group.size != a_tgt.group.size:
        return False
    m = phi.char_pullback
    return all(a_src.diagram[i] @ m == m @ a_tgt.diagram[i]
               for i in a_src.group.elements())


def fold_isogeny(phi: Isogeny, f_src: FoldedDatum, f_tgt: FoldedDatum) -> Isogeny:
    """The induced isogeny between fixed-point folds of an equivariant isogeny."""
    m = phi.char_pullback
    lift = right_inverse(f_tgt.restriction)
    m_bar = f_src.restriction @ m @ lift
    if m_bar @ f_tgt.restriction != f_src.restriction @ m:
        raise AssertionError("isogeny does not descend to the folds")
    return Isogeny(f_src.fixed_base, f_tgt.fixed_base, m_bar)


def verify_isogeny_square(phi: Isogeny, a_src: GammaAction,
                          a_tgt: GammaAction) -> ValidationReport:
    """Check that conorm and isogeny pullback commute after folding.

    The square compares ``norm_pullback_src @ folded_pullback`` with
    ``char_pullback @ norm_pullback_tgt`` as maps from folded target
    characters to source characters.
    """
    problems = []
    rep = validate_isogeny(phi)
    if not rep.ok:
        return ValidationReport(False, ["invalid isogeny"] + rep.problems)
    if not equivariant_for(phi, a_src, a_tgt):
        return ValidationReport(False, ["isogeny is not equivariant for the actions"])
    f_src, f_tgt = fold(a_src), fold(a_tgt)
    bar = fold_isogeny(phi, f_src, f_tgt)
    c_src, c_tgt = ConormData(f_src), ConormData(f_tgt)
    left = c_src.matrix @ bar.char_pullback
    right = phi.char_pullback @ c_tgt.matrix
    if left != right:
        problems.append("conorm square does not commute")
    return ValidationReport(not problems, problems)
