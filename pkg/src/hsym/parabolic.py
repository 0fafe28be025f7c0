"""Parabolics p(Sigma), Levi sub-root-systems and their component types.

Sigma is the set of crossed nodes (1-based, Bourbaki numbering).  The Levi
positive roots are exactly the ambient positive roots supported off Sigma;
dim X = |Delta_+| - |Delta_+(Levi)|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidInput
from .rootsystem import RootSystem, SimpleType, Weight, _cartan_matrix

# candidate letters for component identification, in tie-break order
# (A before B/C/D resolves A3-vs-D3 and similar relabelings)
_CANDIDATE_LETTERS = "ABCDEFG"


@dataclass(frozen=True)
class Parabolic:
    ambient: SimpleType
    sigma: frozenset

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(int(k) for k in self.sigma))
        if not self.sigma:
            raise InvalidInput("sigma must be non-empty (p(empty set) is all of g)")
        bad = [k for k in self.sigma if not 1 <= k <= self.ambient.rank]
        if bad:
            raise InvalidInput(f"sigma nodes {sorted(bad)} out of range 1..{self.ambient.rank}")

    @property
    def node(self) -> int:
        """The crossed node of a maximal parabolic."""
        if len(self.sigma) != 1:
            raise InvalidInput("not a maximal parabolic")
        return next(iter(self.sigma))


def maximal_parabolic(ambient: SimpleType, k: int) -> Parabolic:
    return Parabolic(ambient, frozenset({k}))


@dataclass(frozen=True)
class LeviData:
    levi_positive_roots: tuple
    components: tuple  # of (SimpleType, node tuple): component node i+1 <-> ambient node list[i]
    dim_x: int
    nodes: tuple  # Pi - Sigma, sorted ambient node indices (1-based)
    sigma: frozenset


def _identify_component(rs: RootSystem, nodes):
    """Match the Cartan submatrix on `nodes` against a simple type.

    Returns (SimpleType, relabeling) where relabeling[i] is the ambient node
    playing the role of node i+1 of the identified type.  Ties (e.g. the A3/D3
    coincidence) go to the lexicographically earlier letter.
    """
    r = len(nodes)
    sub = {(i, j): rs.cartan[i - 1][j - 1] for i in nodes for j in nodes}
    for letter in _CANDIDATE_LETTERS:
        try:
            cand = SimpleType(letter, r)
        except InvalidInput:
            continue
        cartan = _cartan_matrix(letter, r)
        for perm in itertools.permutations(sorted(nodes)):
            if all(
                sub[(perm[i], perm[j])] == cartan[i][j]
                for i in range(r) for j in range(r)
            ):
                return cand, tuple(perm)
    raise AssertionError(f"unidentifiable Cartan submatrix on nodes {sorted(nodes)}")


def levi(rs: RootSystem, p: Parabolic) -> LeviData:
    if p.ambient != rs.simple_type:
        raise InvalidInput(f"parabolic is for {p.ambient}, root system is {rs.simple_type}")
    sigma0 = {k - 1 for k in p.sigma}
    levi_roots = tuple(
        a for a in rs.positive_roots if all(a.coeffs[i] == 0 for i in sigma0)
    )
    keep = [i + 1 for i in range(rs.rank) if i not in sigma0]
    # connected components of the sub-Dynkin-diagram
    remaining = set(keep)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        todo = [seed]
        while todo:
            i = todo.pop()
            for j in list(remaining - comp):
                if rs.cartan[i - 1][j - 1] != 0:
                    comp.add(j)
                    todo.append(j)
        remaining -= comp
        comps.append(sorted(comp))
    comps.sort()
    identified = tuple(_identify_component(rs, c) for c in comps)
    return LeviData(
        levi_positive_roots=levi_roots,
        components=identified,
        dim_x=len(rs.positive_roots) - len(levi_roots),
        nodes=tuple(keep),
        sigma=p.sigma,
    )


def is_dominant_for_parabolic(lam: Weight, p: Parabolic) -> bool:
    if lam.rank != p.ambient.rank:
        raise InvalidInput(
            f"weight has {lam.rank} coordinates, expected {p.ambient.rank}"
        )
    return all(a >= 0 for i, a in enumerate(lam.fw, start=1) if i not in p.sigma)


def is_dominant_for_g(lam: Weight) -> bool:
    return all(a >= 0 for a in lam.fw)
