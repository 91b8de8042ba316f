"""Exact root systems, Weyl chamber reduction, and Levi subsystems.

All coordinates are ``fractions.Fraction``; simple roots follow the Bourbaki
numbering and realizations (E8 in R^8 with E7/E6 as subsystems, F4 in R^4
with long roots first, G2 in R^3 with the short root first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ._linalg import (
    Vector,
    add,
    dot,
    integer_kernel,
    invert,
    maximal_minor_gcd,
    neg,
    smul,
    solve_in_span,
    sub,
    vec,
)

FAMILIES = "ABCDEFG"

# number of positive roots per type, used as a construction sanity check
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _simple_roots(family: str, rank: int) -> List[Vector]:
    Q = Fraction
    if family == "A":
        dim = rank + 1
        return [vec([Q(i == k) - Q(i == k + 1) for i in range(dim)]) for k in range(rank)]
    if family in "BC":
        roots = [vec([Q(i == k) - Q(i == k + 1) for i in range(rank)]) for k in range(rank - 1)]
        last = [Q(0)] * rank
        last[rank - 1] = Q(1) if family == "B" else Q(2)
        roots.append(vec(last))
        return roots
    if family == "D":
        roots = [vec([Q(i == k) - Q(i == k + 1) for i in range(rank)]) for k in range(rank - 1)]
        last = [Q(0)] * rank
        last[rank - 2] = Q(1)
        last[rank - 1] = Q(1)
        roots.append(vec(last))
        return roots
    if family == "E":
        a1 = vec([Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), Q(1, 2)])
        a2 = vec([1, 1, 0, 0, 0, 0, 0, 0])
        chain = [
            vec([-1, 1, 0, 0, 0, 0, 0, 0]),
            vec([0, -1, 1, 0, 0, 0, 0, 0]),
            vec([0, 0, -1, 1, 0, 0, 0, 0]),
            vec([0, 0, 0, -1, 1, 0, 0, 0]),
            vec([0, 0, 0, 0, -1, 1, 0, 0]),
            vec([0, 0, 0, 0, 0, -1, 1, 0]),
        ]
        return [a1, a2] + chain[: rank - 2]
    if family == "F":
        return [
            vec([0, 1, -1, 0]),
            vec([0, 0, 1, -1]),
            vec([0, 0, 0, 1]),
            vec([Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2)]),
        ]
    if family == "G":
        return [vec([1, -1, 0]), vec([-2, 1, 1])]
    raise ValueError(f"unknown family {family!r}")


def coroot(alpha: Vector) -> Vector:
    return smul(Fraction(2) / dot(alpha, alpha), alpha)


def _reflect(v: Vector, alpha: Vector) -> Vector:
    return sub(v, smul(dot(v, coroot(alpha)), alpha))


class RootSystem:
    """A simple root system with exact simple roots in an orthogonal space."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        if rank < 1 or (family, rank) in _INVALID_RANKS or _RANK_LIMIT[family](rank):
            raise ValueError(f"invalid type {family}{rank}")
        self.family = family
        self.rank = rank
        self.label = f"{family}{rank}"
        self.simple_roots: Tuple[Vector, ...] = tuple(_simple_roots(family, rank))
        self.ambient_dim = len(self.simple_roots[0])
        self.simple_coroots: Tuple[Vector, ...] = tuple(coroot(a) for a in self.simple_roots)
        self.cartan: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(dot(b, cv)) for b in self.simple_roots) for cv in self.simple_coroots
        )
        self._cartan_inv = invert([[Fraction(c) for c in row] for row in self.cartan])
        self.positive_roots: Tuple[Vector, ...] = self._generate_positive()
        expected = _POSITIVE_COUNTS[family](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(f"{self.label}: {len(self.positive_roots)} positive roots != {expected}")
        self._root_set = frozenset(self.positive_roots) | frozenset(neg(r) for r in self.positive_roots)
        self.rho: Vector = smul(Fraction(1, 2), _sum_vectors(self.positive_roots, self.ambient_dim))
        # fundamental weights live in the span of the roots
        inv = self._cartan_inv
        self.fundamental_weights: Tuple[Vector, ...] = tuple(
            _sum_vectors([smul(inv[k][i], self.simple_roots[k]) for k in range(rank)], self.ambient_dim)
            for i in range(rank)
        )
        self._height: Dict[Vector, Fraction] = {}
        for r in self._root_set:
            self._height[r] = dot(self.rho, coroot(r))
        self._coeff_cache: Dict[Vector, Tuple[Fraction, ...]] = {
            r: self._expand(r) for r in self._root_set
        }

    def _generate_positive(self) -> Tuple[Vector, ...]:
        roots = set(self.simple_roots) | {neg(a) for a in self.simple_roots}
        frontier = list(roots)
        while frontier:
            new = []
            for r in frontier:
                for a in self.simple_roots:
                    s = _reflect(r, a)
                    if s not in roots:
                        roots.add(s)
                        new.append(s)
            frontier = new
        pos = [r for r in roots if self._positive(r)]
        pos.sort(key=lambda r: (sum(self._expand(r)), r))
        return tuple(pos)

    def _positive(self, root: Vector) -> bool:
        coeffs = self._expand(root)
        nz = next(c for c in coeffs if c != 0)
        return nz > 0

    def _expand(self, v: Vector) -> Tuple[Fraction, ...]:
        """Coefficients of v over the simple roots (v must lie in their span)."""
        b = [dot(v, cv) for cv in self.simple_coroots]
        return tuple(
            sum((self._cartan_inv[k][j] * b[j] for j in range(self.rank)), Fraction(0))
            for k in range(self.rank)
        )

    # -- basic queries ------------------------------------------------------

    def is_root(self, v: Vector) -> bool:
        return v in self._root_set

    def all_roots(self) -> Tuple[Vector, ...]:
        return tuple(self.positive_roots) + tuple(neg(r) for r in self.positive_roots)

    def root_coefficients(self, root: Vector) -> Tuple[Fraction, ...]:
        cached = self._coeff_cache.get(root)
        if cached is None:
            raise ValueError("not a root")
        return cached

    def root_from_coefficients(self, coeffs: Sequence) -> Vector:
        v = _sum_vectors(
            [smul(Fraction(c), a) for c, a in zip(coeffs, self.simple_roots)], self.ambient_dim
        )
        if not self.is_root(v):
            raise ValueError(f"coefficients {coeffs} do not give a root")
        return v

    def cartan_determinant(self) -> int:
        from ._linalg import _det_int

        return _det_int([list(r) for r in self.cartan])

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"


_INVALID_RANKS = {("D", 1)}
_RANK_LIMIT = {
    "A": lambda n: False,
    "B": lambda n: False,
    "C": lambda n: False,
    "D": lambda n: n < 2,
    "E": lambda n: n not in (6, 7, 8),
    "F": lambda n: n != 4,
    "G": lambda n: n != 2,
}


def _sum_vectors(vs: Sequence[Vector], dim: int) -> Vector:
    total = tuple(Fraction(0) for _ in range(dim))
    for v in vs:
        total = add(total, v)
    return total


@lru_cache(maxsize=None)
def build_root_system(label_or_family: str, rank: Optional[int] = None) -> RootSystem:
    """Construct (and cache) the root system of a simple type, e.g. 'E8'."""
    if rank is None:
        family, rank = label_or_family[0], int(label_or_family[1:])
    else:
        family = label_or_family
    return RootSystem(family, rank)


# --------------------------------------------------------------------------
# Weights


@dataclass(frozen=True)
class Weight:
    """A weight with exact rational coordinates.

    basis is 'fw' (fundamental-weight coordinates) or 'orth' (coordinates in
    the orthogonal realization).
    """

    system: RootSystem
    basis: str
    coords: Vector

    def __post_init__(self):
        if self.basis not in ("fw", "orth"):
            raise ValueError("basis must be 'fw' or 'orth'")
        object.__setattr__(self, "coords", vec(self.coords))

    def to_fw(self) -> "Weight":
        if self.basis == "fw":
            return self
        cs = tuple(dot(self.coords, cv) for cv in self.system.simple_coroots)
        return Weight(self.system, "fw", cs)

    def to_orth(self) -> "Weight":
        if self.basis == "orth":
            return self
        v = _sum_vectors(
            [smul(c, w) for c, w in zip(self.coords, self.system.fundamental_weights)],
            self.system.ambient_dim,
        )
        return Weight(self.system, "orth", v)

    def __add__(self, other: "Weight") -> "Weight":
        _check_same(self, other)
        return Weight(self.system, self.basis, add(self.coords, other.to_basis(self.basis).coords))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_same(self, other)
        return Weight(self.system, self.basis, sub(self.coords, other.to_basis(self.basis).coords))

    def __mul__(self, c) -> "Weight":
        return Weight(self.system, self.basis, smul(c, self.coords))

    __rmul__ = __mul__

    def to_basis(self, basis: str) -> "Weight":
        return self.to_fw() if basis == "fw" else self.to_orth()

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.to_fw().coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.to_fw().coords)

    def serialize(self) -> str:
        w = self.to_fw()
        body = ",".join(str(c) for c in w.coords)
        return f"fw:{self.system.label}:[{body}]"

    def __repr__(self) -> str:
        return self.serialize()


def _check_same(a: Weight, b: Weight):
    if a.system is not b.system:
        raise ValueError("weights live in different ambient systems")


def weight_fw(system: RootSystem, coords: Sequence) -> Weight:
    return Weight(system, "fw", vec(coords))


def weight_orth(system: RootSystem, coords: Sequence) -> Weight:
    return Weight(system, "orth", vec(coords))


def parse_weight(text: str) -> Weight:
    """Parse the serialization 'fw:E7:[1,1,1,0,1,1,-6]' (or 'orth:...')."""
    basis, label, body = text.split(":", 2)
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"bad weight literal {text!r}")
    coords = [Fraction(p) for p in body[1:-1].split(",")] if body != "[]" else []
    return Weight(build_root_system(label), basis, vec(coords))


def pairing(lam: Weight, alpha_vee: Vector) -> Fraction:
    """Exact pairing <lambda, alpha^vee> with a coroot in orthogonal coords."""
    return dot(lam.to_orth().coords, alpha_vee)


def make_dominant(lam: Weight) -> Tuple[Weight, List[int]]:
    """Dominant W-conjugate of lam plus the word of simple reflections applied.

    Applying s_{w[0]} then s_{w[1]} ... to lam yields the dominant weight.
    """
    system = lam.system
    cartan = system.cartan
    cs = list(lam.to_fw().coords)
    word: List[int] = []
    limit = len(system.positive_roots) * 2 + len(cs)
    while True:
        i = next((k for k, c in enumerate(cs) if c < 0), None)
        if i is None:
            break
        ci = cs[i]
        for j in range(len(cs)):
            cs[j] -= ci * cartan[j][i]
        word.append(i)
        if len(word) > limit:
            raise AssertionError("make_dominant failed to terminate")
    out = Weight(system, "fw", vec(cs))
    return (out.to_basis(lam.basis), word)


def apply_simple_reflection(lam: Weight, i: int) -> Weight:
    cs = list(lam.to_fw().coords)
    ci = cs[i]
    cartan = lam.system.cartan
    for j in range(len(cs)):
        cs[j] -= ci * cartan[j][i]
    return Weight(lam.system, "fw", vec(cs)).to_basis(lam.basis)


def weyl_orbit(lam: Weight) -> List[Vector]:
    """Full W-orbit of a weight (fw coordinates).  Exponential; small ranks only."""
    start = lam.to_fw().coords
    seen = {start}
    frontier = [start]
    n = lam.system.rank
    cartan = lam.system.cartan
    while frontier:
        new = []
        for v in frontier:
            for i in range(n):
                if v[i] == 0:
                    continue
                w = list(v)
                ci = w[i]
                for j in range(n):
                    w[j] -= ci * cartan[j][i]
                t = tuple(w)
                if t not in seen:
                    seen.add(t)
                    new.append(t)
        frontier = new
    return sorted(seen)


def weyl_order(system: RootSystem) -> int:
    orders = {
        "A": lambda n: _fact(n + 1),
        "B": lambda n: 2**n * _fact(n),
        "C": lambda n: 2**n * _fact(n),
        "D": lambda n: 2 ** (n - 1) * _fact(n),
        "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda n: 1152,
        "G": lambda n: 12,
    }
    return orders[system.family](system.rank)


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# --------------------------------------------------------------------------
# Subsystems and type identification


@dataclass
class Factor:
    """One simple factor of a root subsystem."""

    family: str
    rank: int
    simple_roots: Tuple[Vector, ...]  # in the ambient space, Bourbaki order

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def abstract(self) -> RootSystem:
        return build_root_system(self.family, self.rank)


@dataclass
class SubSystem:
    ambient: RootSystem
    roots: Tuple[Vector, ...]  # all positive roots of the subsystem
    simple_roots: Tuple[Vector, ...]
    factors: Tuple[Factor, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def type_label(self) -> str:
        if not self.factors:
            return "0"
        return "+".join(f.label for f in self.factors)


def close_subsystem(ambient: RootSystem, roots: Sequence[Vector]) -> List[Vector]:
    """Positive roots of the subsystem generated by the given ambient roots."""
    gens = []
    for r in roots:
        if not ambient.is_root(r):
            raise ValueError(f"{r} is not an ambient root")
        gens.append(r)
    simple_set = set(ambient.simple_roots)
    if all(r in simple_set for r in gens):
        # fast path: subsystem of a standard Levi = roots supported on it
        support = {ambient.simple_roots.index(r) for r in gens}
        out = []
        for p in ambient.positive_roots:
            coeffs = ambient.root_coefficients(p)
            if all(c == 0 or i in support for i, c in enumerate(coeffs)):
                out.append(p)
        return out
    current = set(gens) | {neg(r) for r in gens}
    frontier = list(current)
    while frontier:
        new = []
        items = list(current)
        for a in items:
            for b in frontier:
                for s in (_reflect(b, a), _reflect(a, b)):
                    if s not in current:
                        current.add(s)
                        new.append(s)
        frontier = new
    positives = set(ambient.positive_roots)
    return sorted(
        (r for r in current if r in positives),
        key=lambda r: (ambient._height[r], r),
    )


def _indecomposables(positive: Sequence[Vector]) -> List[Vector]:
    pos = set(positive)
    simples = []
    for r in positive:
        if not any(sub(r, p) in pos for p in positive if p != r):
            simples.append(r)
    return simples


def sub_root_system(ambient: RootSystem, roots: Sequence[Vector]) -> SubSystem:
    """Subsystem generated by the given roots, with its type identified.

    Factors are ordered by rank (descending) then family letter; within each
    factor the simple roots follow the Bourbaki numbering of its type.
    """
    if not roots:
        return SubSystem(ambient, (), (), ())
    positive = close_subsystem(ambient, roots)
    simples = _indecomposables(positive)
    comps = _components(simples)
    factors = [_identify_component(comp) for comp in comps]
    order = sorted(
        range(len(factors)),
        key=lambda k: (-factors[k].rank, factors[k].family, factors[k].simple_roots),
    )
    factors = [factors[k] for k in order]
    simple_ordered = tuple(r for f in factors for r in f.simple_roots)
    return SubSystem(ambient, tuple(positive), simple_ordered, tuple(factors))


def _components(simples: Sequence[Vector]) -> List[List[Vector]]:
    n = len(simples)
    seen = [False] * n
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        stack = [i]
        seen[i] = True
        comp = []
        while stack:
            k = stack.pop()
            comp.append(simples[k])
            for j in range(n):
                if not seen[j] and dot(simples[k], simples[j]) != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(comp)
    return comps


def _identify_component(simples: List[Vector]) -> Factor:
    n = len(simples)
    if n == 1:
        return Factor("A", 1, (simples[0],))
    pair = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                pair[i, j] = int(dot(simples[i], coroot(simples[j])) * dot(simples[j], coroot(simples[i])))
    adj = {i: sorted(j for j in range(n) if i != j and pair[i, j] != 0) for i in range(n)}
    degmax = max(len(adj[i]) for i in range(n))
    bonds = sorted(pair[i, j] for i in range(n) for j in range(n) if i < j and pair[i, j] != 0)
    lengths = [dot(s, s) for s in simples]

    def order_key(seq: Sequence[int]) -> Tuple:
        return tuple(simples[i] for i in seq)

    if max(bonds) == 3:
        # G2; short root first (Bourbaki)
        i_short = min(range(2), key=lambda i: (lengths[i], simples[i]))
        return Factor("G", 2, (simples[i_short], simples[1 - i_short]))

    if max(bonds) == 2:
        # B, C, or F4: a chain with one double bond
        ends = [i for i in range(n) if len(adj[i]) == 1]
        chains = []
        for e in ends:
            seq = [e]
            while len(seq) < n:
                nxt = next(j for j in adj[seq[-1]] if j not in seq)
                seq.append(nxt)
            chains.append(seq)
        short_total = sum(1 for l in lengths if l == min(lengths))
        if n == 4 and short_total == 2:
            # F4: long-long-short-short ordering
            cand = [c for c in chains if lengths[c[0]] > lengths[c[-1]]]
            seq = min(cand, key=order_key)
            return Factor("F", 4, tuple(simples[i] for i in seq))
        if n == 2:
            # B2 == C2; canonicalize with the long root first (Bourbaki B2)
            i_long = max(range(2), key=lambda i: (lengths[i], simples[i]))
            return Factor("B", 2, (simples[i_long], simples[1 - i_long]))
        if short_total == 1:
            family = "B"  # unique short simple root, placed last
            cand = [c for c in chains if lengths[c[-1]] == min(lengths)]
        else:
            family = "C"  # unique long simple root, placed last
            cand = [c for c in chains if lengths[c[-1]] == max(lengths)]
        seq = min(cand, key=order_key)
        return Factor(family, n, tuple(simples[i] for i in seq))

    # simply laced
    if degmax <= 1 and n == 1:
        return Factor("A", 1, (simples[0],))
    if degmax <= 2:
        if n == 2 and bonds == []:
            raise AssertionError("disconnected component")
        ends = [i for i in range(n) if len(adj[i]) <= 1]
        chains = []
        for e in ends:
            seq = [e]
            while len(seq) < n:
                nxt = next(j for j in adj[seq[-1]] if j not in seq)
                seq.append(nxt)
            chains.append(seq)
        seq = min(chains, key=order_key)
        return Factor("A", n, tuple(simples[i] for i in seq))

    branch = next(i for i in range(n) if len(adj[i]) == 3)
    legs = []
    for start in adj[branch]:
        leg = [start]
        prev = branch
        while True:
            nxts = [j for j in adj[leg[-1]] if j != prev and j != branch]
            if not nxts:
                break
            prev = leg[-1]
            leg.append(nxts[0])
        legs.append(leg)
    legs.sort(key=lambda l: (len(l), order_key(l)))
    l1, l2, l3 = legs
    if len(l1) == 1 and len(l2) == 1:
        # D_n: long leg reversed, then branch, then the two fork nodes
        fork = sorted([l1[0], l2[0]], key=lambda i: simples[i])
        seq = list(reversed(l3)) + [branch] + fork
        return Factor("D", n, tuple(simples[i] for i in seq))
    if len(l1) == 1 and len(l2) == 2:
        # E6/E7/E8: alpha2 = end of the length-1 leg, alpha4 = branch,
        # (alpha3, alpha1) = the length-2 leg walking outward.
        seq = [l2[1], l1[0], l2[0], branch] + l3
        return Factor("E", n, tuple(simples[i] for i in seq))
    raise AssertionError("unrecognized Dynkin component")


# --------------------------------------------------------------------------
# Levi subsystems


class Levi:
    """A Levi subsystem of an ambient root system.

    The generating roots need not be simple roots of the ambient system, but
    they must be ambient roots whose generated subsystem is a genuine Levi
    (i.e. W-conjugate to a standard one); this is not re-checked here.
    """

    def __init__(self, ambient: RootSystem, generators: Sequence[Vector]):
        self.ambient = ambient
        self.generators = tuple(generators)
        self.subsystem = sub_root_system(ambient, list(generators))

    @classmethod
    def standard(cls, ambient: RootSystem, nodes: Sequence[int]) -> "Levi":
        """Levi generated by the ambient simple roots alpha_i, 1-indexed."""
        return cls(ambient, [ambient.simple_roots[i - 1] for i in nodes])

    @property
    def factors(self) -> Tuple[Factor, ...]:
        return self.subsystem.factors

    @property
    def rank(self) -> int:
        return self.subsystem.rank

    @property
    def torus_rank(self) -> int:
        # correct for Levis (simple roots of a Levi are linearly independent)
        return self.ambient.rank - self.subsystem.rank

    def type_label(self) -> str:
        return self.subsystem.type_label()


def levi_fundamental_weights(levi: Levi) -> List[Weight]:
    """Fundamental weights of the Levi, as ambient weights in its root span.

    One weight per simple root of the Levi (in factor order); weight j pairs
    to delta_jk with the Levi's simple coroots and lies in the span of the
    Levi's roots.
    """
    simples = levi.subsystem.simple_roots
    span = list(simples)
    out = []
    for j in range(len(simples)):
        constraints = [
            (coroot(b), Fraction(int(k == j))) for k, b in enumerate(simples)
        ]
        v = solve_in_span(span, constraints)
        out.append(Weight(levi.ambient, "orth", v).to_fw())
    return out


def rho_levi(levi: Levi) -> Weight:
    """Half-sum of the Levi's positive roots, in ambient fw coordinates."""
    total = _sum_vectors(levi.subsystem.roots, levi.ambient.ambient_dim)
    return Weight(levi.ambient, "orth", smul(Fraction(1, 2), total)).to_fw()


def character_lattice_generators(levi: Levi) -> List[Weight]:
    """Integer basis of {weights orthogonal to all Levi coroots}.

    Generators are sign-normalized so the first nonzero fw coordinate is
    positive; for a standard Levi this yields the fundamental weights of the
    deleted nodes.
    """
    ambient = levi.ambient
    n = ambient.rank
    cvs = [coroot(b) for b in levi.subsystem.simple_roots]
    matrix = [
        [int(dot(ambient.fundamental_weights[i], cv)) for cv in cvs] for i in range(n)
    ]
    if not cvs:
        basis = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        basis = integer_kernel(matrix)
    out = []
    for b in basis:
        nz = next((x for x in b if x != 0), 1)
        if nz < 0:
            b = [-x for x in b]
        out.append(Weight(ambient, "fw", vec(b)))
    out.sort(key=lambda w: w.coords, reverse=True)
    if basis and maximal_minor_gcd(basis) != 1:
        raise AssertionError("character lattice basis is not saturated")
    return out
