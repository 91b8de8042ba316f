"""Lusztig-Spaltenstein induction, rigidity predicates, Jacobson-Morozov Levis.

Classical induction follows the partition recipe (add twice each gl-factor
partition row-wise to the tail partition, then collapse).  Exceptional
Richardson orbits are computed through Barbasch-Vogan duality: the induced
orbit from the zero orbit of a Levi L equals the dual of the saturation of
the principal nilpotent of the dual Levi, and the saturation is located by
its weighted Dynkin diagram.  Non-Richardson exceptional inductions come
from a bundled table of known rows.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import partitions as pt
from ._linalg import Vector, add, dot, smul, sub
from .orbits import (
    NilpotentOrbit,
    classical_boxes,
    classical_orbit,
    codim,
    dim_nilcone,
    dim_orbit,
    exceptional_orbit,
    get_record,
    load_exceptional_tables,
    normalize_label,
    zero_orbit,
)
from .rootsys import (
    Levi,
    RootSystem,
    build_root_system,
    coroot,
    sub_root_system,
)


@dataclass(frozen=True)
class InductionDatum:
    """A Levi (gl parts and a tail) together with an orbit on each factor.

    For a classical ambient type the Levi of g(N) is gl(a_1) x ... x gl(a_k)
    x g(m); gl_partitions[i] is a partition of a_i and tail the partition of
    the g(m) factor orbit (tail boxes may be zero for type A ambients).
    """

    ambient: str
    gl_partitions: Tuple[Tuple[int, ...], ...]
    tail: Tuple[int, ...]

    def levi_boxes(self) -> int:
        return sum(int(pt.size(p)) for p in self.gl_partitions)


def induce_classical(datum: InductionDatum) -> NilpotentOrbit:
    fam = datum.ambient[0]
    n = classical_boxes(datum.ambient)
    if fam == "A":
        rows: List[int] = list(datum.tail)
        for p in datum.gl_partitions:
            rows = _add_rows(rows, list(p), 1)
        if sum(rows) != n:
            raise ValueError("factor sizes do not add up")
        return classical_orbit(datum.ambient, rows)
    rows = list(datum.tail)
    for p in datum.gl_partitions:
        rows = _add_rows(rows, list(p), 2)
    if sum(rows) != n:
        raise ValueError("factor sizes do not add up")
    if fam == "C":
        out = pt.collapse_C(tuple(rows))
    else:
        out = pt.collapse_BD(tuple(rows))
    return classical_orbit(datum.ambient, out)


def _add_rows(rows: List[int], extra: List[int], mult: int) -> List[int]:
    out = list(rows)
    while len(out) < len(extra):
        out.append(0)
    for i, x in enumerate(extra):
        out[i] += mult * x
    return sorted(out, reverse=True)


# --------------------------------------------------------------------------
# Exceptional induction


_DUAL_INDEX = {
    "G2": (2, 1),
    "F4": (4, 3, 2, 1),
}


def saturation_diagram(ambient: RootSystem, levi_roots: Sequence[Vector]) -> Tuple[int, ...]:
    """Weighted diagram (in the dual group) of the saturation of the
    principal nilpotent of the dual Levi; the input is the Levi of the
    source side, the diagram is indexed by the dual type's Bourbaki nodes."""
    subsystem = sub_root_system(ambient, list(levi_roots))
    h = tuple(Fraction(0) for _ in range(ambient.ambient_dim))
    for r in subsystem.roots:
        h = add(h, r)  # 2*rho of the Levi
    # dominate the coweight h: reflect while some <alpha_i, h> < 0
    for _ in range(4 * len(ambient.positive_roots) + 8):
        i = next(
            (k for k, a in enumerate(ambient.simple_roots) if dot(a, h) < 0),
            None,
        )
        if i is None:
            break
        a = ambient.simple_roots[i]
        h = sub(h, smul(dot(a, h), coroot(a)))
    else:
        raise AssertionError("coweight domination failed to terminate")
    labels = [int(dot(coroot(a), h)) for a in ambient.simple_roots]
    order = _DUAL_INDEX.get(ambient.label)
    if order:
        labels = [labels[i - 1] for i in order]
    return tuple(labels)


@lru_cache(maxsize=None)
def _diagram_index(typ: str) -> Dict[Tuple[int, ...], str]:
    table = load_exceptional_tables()[typ]
    return {rec.weighted_diagram: rec.label for rec in table.values()}


def richardson_exceptional(typ: str, levi_roots_or_nodes) -> NilpotentOrbit:
    """Ind from the zero orbit of a Levi in an exceptional type."""
    system = build_root_system(typ)
    roots = _as_roots(system, levi_roots_or_nodes)
    if not roots:
        from .orbits import principal_orbit

        return principal_orbit(typ)
    diagram = saturation_diagram(system, roots)
    index = _diagram_index(typ)
    if diagram not in index:
        raise KeyError(f"{typ}: no orbit with weighted diagram {diagram}")
    sat = index[diagram]
    dual = get_record(typ, sat).bv_dual_label
    out = exceptional_orbit(typ, dual)
    # codimension preservation is a theorem; treat violations as data errors
    nroots_levi = 2 * len(sub_root_system(system, roots).roots)
    if dim_nilcone(typ) - dim_orbit(out) != nroots_levi:
        raise AssertionError(
            f"Richardson codim mismatch for {typ} Levi ({nroots_levi} roots): got {out}"
        )
    return out


def _as_roots(system: RootSystem, spec) -> List[Vector]:
    roots = []
    for item in spec:
        if isinstance(item, int):
            roots.append(system.simple_roots[item - 1])
        else:
            v = tuple(Fraction(x) for x in item)
            if len(v) == system.rank and not system.is_root(v):
                v = system.root_from_coefficients(v)
            if not system.is_root(v):
                # allow negative coefficient vectors
                v = tuple(-x for x in v)
            if not system.is_root(v):
                raise ValueError(f"not a root: {item}")
            roots.append(v)
    return roots


@lru_cache(maxsize=None)
def _extra_induction_table() -> Dict[Tuple[str, str, str], str]:
    from .orbits import _data_dir

    path = os.path.join(_data_dir(), "induction_extra.json")
    with open(path, encoding="utf-8") as f:
        rows = json.load(f)
    out = {}
    for row in rows:
        key = (row["ambient"], _levi_key(row["levi_type"]), _orbit_key(row["orbit"]))
        out[key] = row["induced"]
    return out


def _levi_key(text: str) -> str:
    parts = sorted(p.strip() for p in text.replace("x", "+").split("+") if p.strip())
    return "+".join(parts)


def _orbit_key(text: str) -> str:
    parts = [p.strip() for p in str(text).split("|")]
    return "|".join(parts)


def induce_exceptional(
    typ: str, levi_roots_or_nodes, factor_orbits: Sequence[NilpotentOrbit]
) -> NilpotentOrbit:
    """Induction in an exceptional ambient type.

    Zero orbits go through the Richardson computation; other cases are
    looked up in the bundled induction table and raise KeyError if absent.
    """
    system = build_root_system(typ)
    roots = _as_roots(system, levi_roots_or_nodes)
    if all(_is_zero_orbit(o) for o in factor_orbits):
        return richardson_exceptional(typ, roots)
    subsystem = sub_root_system(system, roots)
    levi_type = "+".join(f.label for f in subsystem.factors)
    okey = "|".join(_orbit_name(o) for o in factor_orbits)
    table = _extra_induction_table()
    key = (typ, _levi_key(levi_type), okey)
    if key not in table:
        raise KeyError(f"no induction table entry for {key}")
    out = exceptional_orbit(typ, table[key])
    levi_codim = sum(codim(o) for o in factor_orbits)
    if codim(out) != levi_codim:
        raise AssertionError(f"induction table row violates codim preservation: {key}")
    return out


def _is_zero_orbit(o: NilpotentOrbit) -> bool:
    return dim_orbit(o) == 0


def _orbit_name(o: NilpotentOrbit) -> str:
    if o.label is not None:
        return o.label
    return pt.format_partition(o.partition)


# --------------------------------------------------------------------------
# Rigidity


def is_rigid(orbit: NilpotentOrbit) -> bool:
    fam = orbit.ambient[0]
    if fam in "EFG":
        return get_record(orbit.ambient, orbit.label).rigid
    p = orbit.partition
    if fam == "A":
        return set(p) == {1} or not p
    padded = list(p) + [0]
    if any(padded[i] > padded[i + 1] + 1 for i in range(len(p))):
        return False
    bad_parity = 0 if fam in "BD" else 1  # multiplicity-2 parts of this parity obstruct
    for x in set(p):
        if x % 2 == (1 - bad_parity) and pt.multiplicity(p, x) == 2:
            return False
    return True


def is_birationally_rigid(orbit: NilpotentOrbit) -> bool:
    fam = orbit.ambient[0]
    if fam in "EFG":
        return get_record(orbit.ambient, orbit.label).birationally_rigid
    p = orbit.partition
    if fam == "A":
        return set(p) == {1} or not p
    padded = list(p) + [0]
    if any(padded[i] > padded[i + 1] + 1 for i in range(len(p))):
        return False
    if fam == "D":
        # exclusion: partitions (2^m, 1^2)
        if set(p) <= {2, 1} and pt.multiplicity(p, 1) == 2 and pt.multiplicity(p, 2) >= 1:
            return False
    return True


def spin_birigid_cover_exists(n_boxes: int, p) -> str:
    """Which birationally rigid covers exist over a type B/D orbit.

    Returns 'G_equivariant', 'spin_only', or 'none', evaluating the
    SO-cover conditions and the Spin-only conditions literally (with the
    trailing zero part included in all inequalities).
    """
    p = pt.partition(p)
    if pt.size(p) != n_boxes or not pt.is_type_BD(p):
        raise ValueError(f"{p} is not a type B/D partition of {n_boxes}")
    padded = list(p) + [0]

    def so_conditions() -> bool:
        for i in range(len(p)):
            if padded[i] % 2 == 1 and padded[i] > padded[i + 1] + 2:
                return False
            if padded[i] % 2 == 0 and padded[i] > padded[i + 1] + 1:
                return False
        return True

    def spin_conditions() -> bool:
        if not pt.is_rather_odd(p):
            return False
        has_gap4 = False
        for i in range(len(p)):
            if padded[i] % 2 == 0 and padded[i] > padded[i + 1] + 1:
                return False
            if padded[i] % 2 == 1 and padded[i] > padded[i + 1] + 4:
                return False
            if padded[i] == padded[i + 1] + 3:
                return False
            if padded[i] % 2 == 1 and padded[i] == padded[i + 1] + 4:
                has_gap4 = True
        return has_gap4

    if so_conditions():
        return "G_equivariant"
    if spin_conditions():
        return "spin_only"
    return "none"


def jacobson_morozov_levi(orbit: NilpotentOrbit) -> Levi:
    rec = get_record(orbit.ambient, orbit.label)
    system = build_root_system(orbit.ambient)
    nodes = [i + 1 for i, x in enumerate(rec.weighted_diagram) if x == 0]
    return Levi.standard(system, nodes)


def is_even(orbit: NilpotentOrbit) -> bool:
    rec = get_record(orbit.ambient, orbit.label)
    return all(x in (0, 2) for x in rec.weighted_diagram)


# --------------------------------------------------------------------------
# Rigid induction data (classical, small-rank testing support)


def classical_levis(ambient: str) -> List[Tuple[Tuple[int, ...], int]]:
    """All (gl part sizes, tail boxes) Levi shapes of a classical type."""
    fam = ambient[0]
    n = classical_boxes(ambient)
    if fam == "A":
        return [(p, 0) for p in pt.partitions_of(n)]
    out = []
    for total in range(0, n // 2 + 1):
        for gl in pt.partitions_of(total):
            out.append((gl, n - 2 * total))
    return sorted(set(out), reverse=True)


def rigid_orbits_classical(ambient: str) -> List[NilpotentOrbit]:
    from .orbits import all_classical_orbits

    return [o for o in all_classical_orbits(ambient) if is_rigid(o) and not o.decoration]


def _tail_partitions(fam: str, boxes: int, rigid_only: bool) -> List[Tuple[int, ...]]:
    if boxes == 0:
        return [()]
    if boxes == 1:
        return [(1,)]
    if fam == "D" and boxes == 2:
        return [(1, 1)]
    kind = "C" if fam == "C" else "BD"
    tails = pt.partitions_of(boxes, kind)
    if rigid_only:
        ambient = f"{fam}{boxes // 2 if fam != 'B' else (boxes - 1) // 2}"
        tails = [p for p in tails if is_rigid(NilpotentOrbit(ambient, partition=p))]
    return tails


def rigid_induction_sources(orbit: NilpotentOrbit) -> List[InductionDatum]:
    """P_rig: rigid pairs (M, O_M) inducing the given classical orbit.

    Levis are enumerated by shape (gl sizes + tail); gl factors carry only
    their zero orbits (the only rigid ones), tails run over rigid orbits.
    """
    fam = orbit.ambient[0]
    if fam in "EFG":
        raise ValueError("classical types only")
    out = []
    for gl_sizes, tail_boxes in classical_levis(orbit.ambient):
        gl_zero = tuple(tuple([1] * a) for a in gl_sizes)
        for tail in _tail_partitions(fam, tail_boxes, rigid_only=True):
            datum = InductionDatum(orbit.ambient, gl_zero, tail)
            if induce_classical(datum).partition == orbit.partition:
                out.append(datum)
    return out
