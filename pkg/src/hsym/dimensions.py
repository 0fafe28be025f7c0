"""Exact dimensions of irreducible representations.

weyl_dim_g / weyl_dim_levi use the Weyl product formula over the relevant
positive roots.  freudenthal_dim recomputes the full-group dimension by
summing weight multiplicities from Freudenthal's recursion; it shares no
code path with the product formula and serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, ResourceLimit
from .parabolic import LeviData, is_dominant_for_parabolic
from .rootsystem import RootSystem, Weight

FREUDENTHAL_MAX_RANK = 7
FREUDENTHAL_MAX_DIM = 100_000


@dataclass(frozen=True)
class DimResult:
    value: int
    context: str  # "full-group" or "levi"
    lam: Weight

    def __int__(self):
        return self.value


def _weyl_product(rs: RootSystem, lam: Weight, roots, rho: Weight) -> int:
    num = Fraction(1)
    lam_rho = lam + rho
    for alpha in roots:
        num *= rs.coroot_pairing(lam_rho, alpha) / rs.coroot_pairing(rho, alpha)
    assert num.denominator == 1, "Weyl product must reduce to an integer"
    return int(num)


def weyl_dim_g(rs: RootSystem, lam: Weight) -> DimResult:
    if not rs.is_dominant(lam):
        raise InvalidInput(f"{lam} is not dominant for {rs.simple_type}")
    value = _weyl_product(rs, lam, rs.positive_roots, rs.rho)
    return DimResult(value, "full-group", lam)


def weyl_dim_levi(rs: RootSystem, ld: LeviData, lam: Weight) -> DimResult:
    from .parabolic import Parabolic

    p = Parabolic(rs.simple_type, ld.sigma)
    if not is_dominant_for_parabolic(lam, p):
        raise InvalidInput(f"{lam} is not dominant for the parabolic at {sorted(ld.sigma)}")
    if not ld.levi_positive_roots:
        return DimResult(1, "levi", lam)
    # rho_L = sum of ambient fundamental weights off Sigma; pairs like the
    # intrinsic half-sum against every Levi coroot
    rho_l = Weight(tuple(1 if i + 1 in ld.nodes else 0 for i in range(rs.rank)))
    # only the off-Sigma coefficients can matter: Levi roots have no support on Sigma
    stripped = Weight(tuple(
        a if i + 1 in ld.nodes else 0 for i, a in enumerate(lam.fw)
    ))
    value = _weyl_product(rs, stripped, ld.levi_positive_roots, rho_l)
    assert value == _weyl_product(rs, lam, ld.levi_positive_roots, rho_l)
    return DimResult(value, "levi", lam)


def _dominant_conjugate(rs: RootSystem, fw):
    """Dominant Weyl-orbit representative of a weight given by fw coords."""
    b = list(fw)
    n = rs.rank
    while True:
        for i in range(n):
            if b[i] < 0:
                c = b[i]
                for j in range(n):
                    b[j] -= c * rs.cartan[j][i]
                break
        else:
            return tuple(b)


def _all_weights(rs: RootSystem, lam: Weight):
    """Every weight of the irreducible with highest weight lam (fw coords).

    Standard string-closure: from each known weight nu with <nu, a_i^vee> > 0
    the alpha_i-string down to s_i(nu) consists of weights.
    """
    n = rs.rank
    start = lam.fw
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                k_max = b[i]
                if k_max <= 0:
                    continue
                cur = list(b)
                for _ in range(k_max):
                    for j in range(n):
                        cur[j] -= rs.cartan[j][i]
                    t = tuple(cur)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return seen


def freudenthal_dim(rs: RootSystem, lam: Weight) -> DimResult:
    if not rs.is_dominant(lam):
        raise InvalidInput(f"{lam} is not dominant for {rs.simple_type}")
    if rs.rank > FREUDENTHAL_MAX_RANK:
        raise ResourceLimit(f"Freudenthal oracle limited to rank <= {FREUDENTHAL_MAX_RANK}")
    guard = weyl_dim_g(rs, lam).value
    if guard > FREUDENTHAL_MAX_DIM:
        raise ResourceLimit(
            f"representation dimension {guard} exceeds Freudenthal guard {FREUDENTHAL_MAX_DIM}"
        )

    weights = _all_weights(rs, lam)
    rho = rs.rho
    lam_rho = lam + rho
    norm_top = rs.form_weight_weight(lam_rho, lam_rho)
    n = rs.rank

    dominant = sorted(
        (b for b in weights if all(x >= 0 for x in b)),
        key=lambda b: sum(rs.xi_vector(Weight(b))),
        reverse=True,
    )
    mult = {}
    for b in dominant:
        mu = Weight(b)
        if b == lam.fw:
            mult[b] = 1
            continue
        mu_rho = mu + rho
        denom = norm_top - rs.form_weight_weight(mu_rho, mu_rho)
        assert denom != 0
        total = Fraction(0)
        for alpha in rs.positive_roots:
            afw = rs.root_to_fw(alpha).fw
            aa = alpha.length_sq
            base = rs.form_weight_root(mu, alpha)
            k = 1
            while True:
                nu = tuple(b[j] + k * afw[j] for j in range(n))
                if nu not in weights:
                    break
                total += mult[_dominant_conjugate(rs, nu)] * (base + k * aa)
                k += 1
        m = 2 * total / denom
        assert m.denominator == 1 and m >= 0
        mult[b] = int(m)

    dim = sum(mult[_dominant_conjugate(rs, b)] for b in weights)
    assert dim == guard  # oracle must agree with the product formula
    return DimResult(dim, "full-group", lam)
