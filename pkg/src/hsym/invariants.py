"""Bundle-level invariants on Hermitian symmetric spaces G/P(alpha_k).

Covers: the classification of compact irreducible Hermitian symmetric
spaces, Borel-Weil global sections h^0, first-Chern ratios of irreducible
homogeneous bundles, the general eigenvalue-bound functional J(E, L) and its
closed form J(E_lam, -K_X) on a symmetric space.  All values are exact
rationals.  The reference constant lambda_1 = 2 (Kaehler-Einstein metric,
positive-dimensional automorphism group) is attached to every report; a
report is flagged sharp when its bound equals that constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dimensions import weyl_dim_g, weyl_dim_levi
from .errors import DomainError, InvalidInput, UndefinedJError
from .parabolic import is_dominant_for_g, is_dominant_for_parabolic, levi, maximal_parabolic
from .rationals import format_rat, parse_rat
from .rootsystem import RootSystem, SimpleType, Weight, build, fundamental_weight

LAMBDA1_REFERENCE = Fraction(2)


@dataclass(frozen=True)
class HermitianSpace:
    ambient: SimpleType
    node: int
    family: str  # AIII, BI, DI, DIII, CI, EIII, EVII
    klein_label: str

    def __str__(self):
        return f"{self.ambient}/P(a{self.node}) [{self.family}]"


def _space(ambient: SimpleType, node: int, family: str, label: str) -> HermitianSpace:
    rs = build(ambient)
    assert rs.xi(rs.highest_root_fw(), node) == 1, "table entry must be cominuscule"
    return HermitianSpace(ambient, node, family, label)


def hermitian_table(max_rank: int = 8):
    """The classification list, one entry per row, infinite families cut at max_rank."""
    if max_rank < 1:
        raise InvalidInput("max_rank must be >= 1")
    out = []
    for l in range(1, max_rank + 1):  # SL(l+1)/P(alpha_k): Grassmannians
        for k in range(1, l + 1):
            out.append(_space(SimpleType("A", l), k, "AIII",
                              f"SL({l + 1})/P(α{k})"))
    for n in range(2, max_rank + 1):  # odd quadrics
        out.append(_space(SimpleType("B", n), 1, "BI",
                          f"Spin({2 * n + 1})/P(α1)"))
    for n in range(3, max_rank + 1):  # even quadrics
        out.append(_space(SimpleType("D", n), 1, "DI",
                          f"Spin({2 * n})/P(α1)"))
    for n in range(4, max_rank + 1):  # spinor varieties
        out.append(_space(SimpleType("D", n), n, "DIII",
                          f"Spin({2 * n})/P(α{n})"))
    for n in range(2, max_rank + 1):  # Lagrangian Grassmannians
        out.append(_space(SimpleType("C", n), n, "CI",
                          f"Sp({n},C)/P(α{n})"))
    if max_rank >= 6:
        out.append(_space(SimpleType("E", 6), 1, "EIII", "E6/P(α1)"))
    if max_rank >= 7:
        out.append(_space(SimpleType("E", 7), 7, "EVII", "E7/P(α7)"))
    return out


def is_hermitian(rs: RootSystem, k: int) -> bool:
    """Cominuscule test: alpha_k has coefficient 1 in the highest root."""
    return rs.xi(rs.highest_root_fw(), k) == 1


def table_equivalent_node(stype: SimpleType, k: int) -> int:
    """Canonical crossed node under the Dynkin diagram automorphism.

    Spin(2n)/P(alpha_{n-1}) and Spin(2n)/P(alpha_n) are isomorphic spaces, as
    are E6/P(alpha_6) and E6/P(alpha_1); the classification table lists one
    representative of each.
    """
    if stype.letter == "D" and k == stype.rank - 1 and stype.rank >= 4:
        return stype.rank
    if stype == SimpleType("E", 6) and k == 6:
        return 1
    return k


def classification_table_contains(stype: SimpleType, k: int) -> bool:
    """Table membership up to isomorphism of the underlying space.

    Covers the diagram automorphisms handled by table_equivalent_node plus
    the low-rank coincidence Spin(6)/P(alpha_2 or alpha_3) = P^3, whose table
    representative is the Grassmannian row (DIII starts at rank 4).
    """
    if stype.letter == "D" and stype.rank == 3 and k in (2, 3):
        return True
    keys = {(e.ambient, e.node) for e in hermitian_table(max(8, stype.rank))}
    return (stype, table_equivalent_node(stype, k)) in keys


def hermitian_space(stype: SimpleType, k: int) -> HermitianSpace:
    """Resolve (type, node) to its table entry, up to diagram automorphism."""
    rs = build(stype)
    if not 1 <= k <= stype.rank:
        raise InvalidInput(f"node index {k} out of range 1..{stype.rank}")
    if not is_hermitian(rs, k):
        raise DomainError(
            f"{stype}/P(a{k}) is not Hermitian symmetric: g/p is reducible "
            f"(alpha_{k} has coefficient {rs.xi(rs.highest_root_fw(), k)} > 1 "
            "in the highest root)"
        )
    canonical = table_equivalent_node(stype, k)
    for entry in hermitian_table(max(8, stype.rank)):
        if entry.ambient == stype and entry.node == canonical:
            if canonical == k:
                return entry
            return HermitianSpace(stype, k, entry.family, entry.klein_label)
    if stype.letter == "D" and stype.rank == 3 and k in (2, 3):
        # Spin(6)/P(alpha_2 or alpha_3) = P^3; listed in the table as SL(4)/P(alpha_1)
        return HermitianSpace(stype, k, "AIII", f"Spin(6)/P(α{k})")
    raise AssertionError(f"cominuscule pair ({stype}, {k}) missing from table")


def h0_bbw(rs: RootSystem, p, lam: Weight) -> int:
    """Global sections of E_lam by Borel-Weil: dim W_lam if G-dominant, else 0."""
    if not is_dominant_for_parabolic(lam, p):
        raise InvalidInput(f"{lam} is not p-dominant: E_lam is undefined")
    if not is_dominant_for_g(lam):
        return 0
    return weyl_dim_g(rs, lam).value


def c1_ratio(rs: RootSystem, p, lam: Weight) -> Fraction:
    """c1(E_lam) as a multiple of c1 of the generating line bundle E_{w_k}."""
    k = p.node  # raises for non-maximal parabolics
    if not is_dominant_for_parabolic(lam, p):
        raise InvalidInput(f"{lam} is not p-dominant")
    rank = weyl_dim_levi(rs, levi(rs, p), lam).value
    wk = fundamental_weight(rs.rank, k)
    return rank * rs.xi(lam, k) / rs.xi(wk, k)


def j_general(m: int, h0: int, r: int, deg_e, deg_l) -> Fraction:
    """J(E, L) from raw numerical invariants.

    deg_e and deg_l are the intersection numbers <c1(E) c1(L)^{m-1}, [X]> and
    <c1(L)^m, [X]>.
    """
    deg_e = Fraction(deg_e)
    deg_l = Fraction(deg_l)
    if m < 1 or r < 1:
        raise InvalidInput("need m >= 1 and r >= 1")
    if deg_l == 0:
        raise InvalidInput("deg_l must be nonzero")
    if h0 <= r:
        raise UndefinedJError(
            f"J undefined for h0 = {h0} <= rank = {r} "
            "(E trivial or not globally generated)"
        )
    return Fraction(2 * m * h0) * deg_e / (r * (h0 - r) * deg_l)


@dataclass(frozen=True)
class BundleReport:
    space: HermitianSpace
    lam: Weight
    rank: int
    h0: int
    xi_k_lam: Fraction
    xi_k_ad: Fraction
    c1_ratio: Fraction
    j_value: Fraction

    @property
    def sharp(self) -> bool:
        return self.j_value == LAMBDA1_REFERENCE

    def to_json(self) -> dict:
        return {
            "family": self.space.family,
            "klein_label": self.space.klein_label,
            "node": self.space.node,
            "weight": list(self.lam.fw),
            "rank": self.rank,
            "h0": self.h0,
            "xi_k": format_rat(self.xi_k_lam),
            "xi_k_ad": format_rat(self.xi_k_ad),
            "c1_ratio": format_rat(self.c1_ratio),
            "j": format_rat(self.j_value),
            "lambda1_reference": format_rat(LAMBDA1_REFERENCE),
            "sharp": self.sharp,
        }


def bundle_report_from_json(d: dict) -> BundleReport:
    lam = Weight(tuple(d["weight"]))
    rank = len(lam.fw)
    stype = None
    for entry in hermitian_table(max(8, rank)):
        if entry.klein_label == d["klein_label"] and entry.node == d["node"] \
                and entry.family == d["family"] and entry.ambient.rank == rank:
            stype = entry
            break
    if stype is None:
        raise InvalidInput("unknown space in report")
    return BundleReport(
        space=stype,
        lam=lam,
        rank=d["rank"],
        h0=d["h0"],
        xi_k_lam=parse_rat(d["xi_k"]),
        xi_k_ad=parse_rat(d["xi_k_ad"]),
        c1_ratio=parse_rat(d["c1_ratio"]),
        j_value=parse_rat(d["j"]),
    )


def j_hom(space: HermitianSpace, lam: Weight) -> BundleReport:
    """Closed form J(E_lam, -K_X) = [2W/(W-V)] * xi_k(lam)/xi_k(lam_ad)."""
    rs = build(space.ambient)
    if lam.is_zero():
        raise UndefinedJError("J undefined for the trivial weight (E_0 is trivial)")
    if not is_dominant_for_g(lam):
        raise DomainError(
            f"{lam} is not dominant for {space.ambient}: H^0(E_lam) = 0 "
            "and J is undefined"
        )
    p = maximal_parabolic(space.ambient, space.node)
    ld = levi(rs, p)
    w = weyl_dim_g(rs, lam).value
    v = weyl_dim_levi(rs, ld, lam).value
    assert w > v > 0
    k = space.node
    xi_lam = rs.xi(lam, k)
    xi_ad = rs.xi(rs.highest_root_fw(), k)
    assert xi_ad == 1  # cominuscule normalization
    j = Fraction(2 * w, w - v) * xi_lam / xi_ad
    return BundleReport(
        space=space,
        lam=lam,
        rank=v,
        h0=w,
        xi_k_lam=xi_lam,
        xi_k_ad=xi_ad,
        c1_ratio=v * xi_lam / rs.xi(fundamental_weight(rs.rank, k), k),
        j_value=j,
    )
