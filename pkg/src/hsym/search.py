"""Exact minimization of J(E_lam, -K_X) over nontrivial dominant weights.

The linear lower bound J >= 2 xi_k(lam)/xi_k(lam_ad) prunes the search to a
finite candidate box: every xi_k(w_i) is strictly positive, so only finitely
many dominant weights have pruning bound below the incumbent.  The incumbent
is seeded from the fundamental weights; since h0 > rank > 0 makes the bound
strict, every minimizer lies inside the enumerated region and the full tie
set is recovered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .invariants import HermitianSpace, j_hom
from .rationals import format_rat
from .rootsystem import Weight, build, fundamental_weight


@dataclass(frozen=True)
class SearchOutcome:
    space: HermitianSpace
    best_j: Fraction
    minimizers: tuple  # of Weight, lexicographic by coefficient vector
    candidates_examined: int
    pruning_bound_used: Fraction
    incumbent_seed: Weight

    def to_json(self) -> dict:
        return {
            "family": self.space.family,
            "klein_label": self.space.klein_label,
            "node": self.space.node,
            "best_j": format_rat(self.best_j),
            "minimizers": [list(w.fw) for w in self.minimizers],
            "candidates_examined": self.candidates_examined,
            "pruning_bound_used": format_rat(self.pruning_bound_used),
            "incumbent_seed": list(self.incumbent_seed.fw),
        }


def _candidate_box(costs, budget: Fraction):
    """All nonzero non-negative integer vectors a with sum a_i costs_i < budget."""
    n = len(costs)
    out = []

    def rec(i, prefix, remaining):
        if i == n:
            if any(prefix):
                out.append(tuple(prefix))
            return
        a = 0
        while a * costs[i] < remaining:
            rec(i + 1, prefix + [a], remaining - a * costs[i])
            a += 1

    rec(0, [], budget)
    return out


def minimize_j(space: HermitianSpace, incumbent: Fraction | None = None) -> SearchOutcome:
    rs = build(space.ambient)
    k = space.node
    xi_ad = rs.xi(rs.highest_root_fw(), k)
    if xi_ad != 1:
        raise DomainError(f"{space.ambient}/P(a{k}) is not Hermitian symmetric")
    costs = [rs.xi(fundamental_weight(rs.rank, i), k) for i in range(1, rs.rank + 1)]
    assert all(c > 0 for c in costs)  # guarantees the candidate box is finite

    examined = {}

    def evaluate(fw):
        if fw not in examined:
            examined[fw] = j_hom(space, Weight(fw)).j_value
        return examined[fw]

    # seed from the fundamental weights
    best = None
    seed = None
    for i in range(rs.rank):
        fw = tuple(1 if j == i else 0 for j in range(rs.rank))
        j = evaluate(fw)
        if best is None or j < best:
            best, seed = j, Weight(fw)
    if incumbent is not None and incumbent < best:
        best = incumbent

    # enumerate the pruning box at the seeded bound; tightest bounds first
    bound = lambda fw: 2 * sum(a * c for a, c in zip(fw, costs)) / xi_ad
    candidates = sorted(_candidate_box(costs, best / 2 * xi_ad), key=lambda fw: (bound(fw), fw))
    best_j = min(examined.values())
    for fw in candidates:
        if bound(fw) >= best_j:
            continue  # j > bound >= best_j: cannot improve or tie
        j = evaluate(fw)
        if j < best_j:
            best_j = j

    minimizers = tuple(
        Weight(fw) for fw in sorted(f for f, j in examined.items() if j == best_j)
    )
    return SearchOutcome(
        space=space,
        best_j=best_j,
        minimizers=minimizers,
        candidates_examined=len(examined),
        pruning_bound_used=best_j,
        incumbent_seed=seed,
    )
