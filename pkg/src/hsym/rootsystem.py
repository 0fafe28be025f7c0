"""Exact root system data for the simple types A-G in Bourbaki numbering.

All arithmetic is done with integers and fractions.Fraction; no floats
anywhere.  Positive roots are generated by height induction using root
strings, so one algorithm covers every type uniformly.  The symmetrizer is
normalized so that short roots have d = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput

# (min rank, max rank) per letter; None = unbounded above
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class SimpleType:
    letter: str
    rank: int

    def __post_init__(self):
        rng = _RANK_RANGE.get(self.letter)
        if rng is None:
            raise InvalidInput(f"unknown simple type letter {self.letter!r}")
        lo, hi = rng
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidInput(f"invalid rank {self.rank} for type {self.letter}")

    def __str__(self):
        return f"{self.letter}{self.rank}"

    @classmethod
    def parse(cls, s: str) -> "SimpleType":
        s = s.strip().upper()
        if len(s) < 2 or not s[0].isalpha() or not s[1:].isdigit():
            raise InvalidInput(f"cannot parse simple type {s!r} (expected e.g. 'E6', 'B4')")
        return cls(s[0], int(s[1:]))


@dataclass(frozen=True)
class Root:
    """A positive root in simple-root coordinates."""

    coeffs: tuple
    length_sq: Fraction

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        return "+".join(
            f"{m}a{i + 1}" if m != 1 else f"a{i + 1}"
            for i, m in enumerate(self.coeffs) if m
        )


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    fw: tuple

    def __post_init__(self):
        object.__setattr__(self, "fw", tuple(int(a) for a in self.fw))

    @property
    def rank(self) -> int:
        return len(self.fw)

    def is_zero(self) -> bool:
        return not any(self.fw)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fw, other.fw)))

    def __mul__(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.fw))

    __rmul__ = __mul__

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, a in enumerate(self.fw):
            if a == 1:
                parts.append(f"w{i + 1}")
            elif a:
                parts.append(f"{a}*w{i + 1}")
        return "+".join(parts)


def fundamental_weight(rank: int, i: int) -> Weight:
    """1-based node index i."""
    if not 1 <= i <= rank:
        raise InvalidInput(f"node index {i} out of range 1..{rank}")
    return Weight(tuple(1 if j == i - 1 else 0 for j in range(rank)))


def _cartan_matrix(letter: str, rank: int):
    n = rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        # 1-based nodes
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji

    if letter == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif letter == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -1, -2)  # alpha_n short
    elif letter == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -2, -1)  # alpha_n long
    elif letter == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        # undo the chain edge (n-1, n); both end nodes hang off n-2
        C[n - 2][n - 1] = 0
        C[n - 1][n - 2] = 0
        bond(n - 2, n)
    elif letter == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)  # alpha_3, alpha_4 short
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in C)


def _symmetrizer(cartan):
    """Positive rationals d_i with d_i C_ij symmetric, min d_i = 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                # d_i C_ij = d_j C_ji
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    assert all(x is not None and x > 0 for x in d), "Dynkin diagram must be connected"
    lo = min(d)
    return tuple(x / lo for x in d)


def _invert(matrix):
    """Exact inverse of a square integer matrix via Gauss-Jordan over Fraction."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


class RootSystem:
    """Immutable after construction; all methods are pure."""

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        n = simple_type.rank
        self.rank = n
        self.cartan = _cartan_matrix(simple_type.letter, n)
        self.symmetrizer = _symmetrizer(self.cartan)
        self.cartan_inverse = _invert(self.cartan)
        assert all(x > 0 for row in self.cartan_inverse for x in row)
        coeff_sets = self._generate_positive_coeffs()
        self.positive_roots = tuple(
            Root(c, self._form_rr(c, c)) for c in sorted(coeff_sets, key=lambda c: (sum(c), c))
        )
        top = max(self.positive_roots, key=lambda r: r.height)
        assert sum(1 for r in self.positive_roots if r.height == top.height) == 1
        self.highest_root = top
        self.rho = Weight((1,) * n)

    def _generate_positive_coeffs(self):
        n = self.rank
        roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
        frontier = list(roots)
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(n):
                    pairing = sum(self.cartan[i][j] * m[j] for j in range(n))
                    # p: how far the alpha_i-string through m extends downward
                    p = 0
                    down = list(m)
                    while True:
                        down[i] -= 1
                        if tuple(down) not in roots:
                            break
                        p += 1
                    if p - pairing > 0:
                        up = list(m)
                        up[i] += 1
                        t = tuple(up)
                        if t not in roots:
                            roots.add(t)
                            nxt.append(t)
            frontier = nxt
        return roots

    def _form_rr(self, m, k):
        """(alpha, beta) for root-basis coefficient vectors, (short, short) = 2."""
        return sum(
            Fraction(m[i]) * k[j] * self.symmetrizer[i] * self.cartan[i][j]
            for i in range(self.rank) for j in range(self.rank) if m[i] and k[j]
        )

    # -- weight coordinate transforms -------------------------------------

    def root_to_fw(self, root: Root) -> Weight:
        m = root.coeffs
        return Weight(tuple(
            sum(self.cartan[i][j] * m[j] for j in range(self.rank))
            for i in range(self.rank)
        ))

    def highest_root_fw(self) -> Weight:
        return self.root_to_fw(self.highest_root)

    def xi_vector(self, lam: Weight):
        """Simple-root-basis coordinates of lam, as a tuple of Fractions."""
        self._check_weight(lam)
        return tuple(
            sum(self.cartan_inverse[k][i] * lam.fw[i] for i in range(self.rank))
            for k in range(self.rank)
        )

    def xi(self, lam: Weight, k: int) -> Fraction:
        """Coefficient of alpha_k when lam is written in the simple-root basis (k 1-based)."""
        self._check_weight(lam)
        if not 1 <= k <= self.rank:
            raise InvalidInput(f"node index {k} out of range 1..{self.rank}")
        return sum(
            Fraction(self.cartan_inverse[k - 1][i]) * lam.fw[i] for i in range(self.rank)
        )

    def coroot_pairing(self, lam: Weight, alpha: Root) -> Fraction:
        """<lam, alpha^vee> = sum_i a_i m_i d_i / d(alpha)."""
        self._check_weight(lam)
        d_alpha = alpha.length_sq / 2
        num = sum(
            Fraction(lam.fw[i]) * alpha.coeffs[i] * self.symmetrizer[i]
            for i in range(self.rank) if alpha.coeffs[i]
        )
        return Fraction(num) / d_alpha

    def form_weight_root(self, lam: Weight, alpha: Root) -> Fraction:
        """(lam, alpha) in the symmetrizer normalization."""
        return sum(
            Fraction(lam.fw[i]) * alpha.coeffs[i] * self.symmetrizer[i]
            for i in range(self.rank) if alpha.coeffs[i]
        )

    def form_weight_weight(self, lam: Weight, mu: Weight) -> Fraction:
        xi = self.xi_vector(mu)
        return sum(
            Fraction(lam.fw[i]) * self.symmetrizer[i] * xi[i] for i in range(self.rank)
        )

    def is_dominant(self, lam: Weight) -> bool:
        self._check_weight(lam)
        return all(a >= 0 for a in lam.fw)

    def fundamental_weight(self, i: int) -> Weight:
        return fundamental_weight(self.rank, i)

    def _check_weight(self, lam: Weight):
        if lam.rank != self.rank:
            raise InvalidInput(
                f"weight has {lam.rank} coordinates, expected {self.rank}"
            )

    def __repr__(self):
        return f"RootSystem({self.simple_type})"


@lru_cache(maxsize=None)
def build(simple_type: SimpleType) -> RootSystem:
    return RootSystem(simple_type)


def build_named(name: str) -> RootSystem:
    return build(SimpleType.parse(name))
