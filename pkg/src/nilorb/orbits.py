"""Nilpotent orbit registry.

Classical orbits are decorated partitions; exceptional orbits are records
loaded from the bundled data tables (dimension, weighted Dynkin diagram,
duality, fundamental groups, rigidity flags).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import partitions as pt
from .rootsys import RootSystem, build_root_system

EXCEPTIONAL_TYPES = ("G2", "F4", "E6", "E7", "E8")

_RECORD_FIELDS = {
    "label",
    "dimension",
    "weighted_diagram",
    "special",
    "bv_dual_label",
    "pi1_order",
    "pi1_ab_order",
    "rigid",
    "birationally_rigid",
    "notes",
}


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    label: str
    dimension: int
    weighted_diagram: Tuple[int, ...]
    special: bool
    bv_dual_label: str
    pi1_order: int
    pi1_ab_order: int
    rigid: bool
    birationally_rigid: bool
    notes: str = ""


@dataclass(frozen=True)
class NilpotentOrbit:
    """A nilpotent orbit: numeric type plus either a partition or a label.

    ambient is a Lie type label like 'B3', 'C2', 'E7' (for classical types
    the rank is the Lie rank, so 'B3' means so(7)).  decoration is 'I'/'II'
    for very even type-D partitions, otherwise ''.
    """

    ambient: str
    partition: Optional[Tuple[int, ...]] = None
    label: Optional[str] = None
    decoration: str = ""

    def __post_init__(self):
        fam = self.ambient[0]
        if fam in "EFG":
            if self.label is None:
                raise ValueError("exceptional orbits need a label")
            get_record(self.ambient, self.label)  # validates
        else:
            if self.partition is None:
                raise ValueError("classical orbits need a partition")
            p = pt.partition(self.partition)
            n = classical_boxes(self.ambient)
            if pt.size(p) != n:
                raise ValueError(f"partition of {pt.size(p)} boxes, expected {n}")
            if fam in "BD" and not pt.is_type_BD(p):
                raise ValueError(f"{p} is not a type B/D partition")
            if fam == "C" and not pt.is_type_C(p):
                raise ValueError(f"{p} is not a type C partition")
            if self.decoration and not (fam == "D" and pt.is_very_even(p)):
                raise ValueError("decorations only on very even type D partitions")
            object.__setattr__(self, "partition", p)

    def __repr__(self):
        if self.label is not None:
            return f"Orbit({self.ambient}:{self.label})"
        dec = self.decoration or ""
        return f"Orbit({self.ambient}:{pt.format_partition(self.partition)}{dec})"


def classical_boxes(ambient: str) -> int:
    fam, rank = ambient[0], int(ambient[1:])
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[fam]


def classical_orbit(ambient: str, parts, decoration: str = "") -> NilpotentOrbit:
    return NilpotentOrbit(ambient, partition=pt.partition(parts), decoration=decoration)


def exceptional_orbit(ambient: str, label: str) -> NilpotentOrbit:
    return NilpotentOrbit(ambient, label=normalize_label(ambient, label))


def zero_orbit(ambient: str) -> NilpotentOrbit:
    fam = ambient[0]
    if fam in "EFG":
        return exceptional_orbit(ambient, "0")
    return classical_orbit(ambient, [1] * classical_boxes(ambient))


def principal_orbit(ambient: str) -> NilpotentOrbit:
    fam, rank = ambient[0], int(ambient[1:])
    if fam in "EFG":
        return exceptional_orbit(ambient, ambient)
    n = classical_boxes(ambient)
    if fam == "A":
        return classical_orbit(ambient, [n])
    if fam == "B":
        return classical_orbit(ambient, [n])
    if fam == "C":
        return classical_orbit(ambient, [n])
    return classical_orbit(ambient, [n - 1, 1])


# --------------------------------------------------------------------------
# Data tables for the exceptional types


def _data_dir() -> str:
    override = os.environ.get("NILORB_DATA")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


@lru_cache(maxsize=None)
def load_exceptional_tables(data_dir: Optional[str] = None) -> Dict[str, Dict[str, ExceptionalOrbitRecord]]:
    """Load (and validate) the orbit tables for all five exceptional types."""
    base = data_dir or _data_dir()
    tables: Dict[str, Dict[str, ExceptionalOrbitRecord]] = {}
    counts = {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}
    for typ in EXCEPTIONAL_TYPES:
        path = os.path.join(base, f"orbits_{typ.lower()}.json")
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
        table: Dict[str, ExceptionalOrbitRecord] = {}
        for entry in raw:
            unknown = set(entry) - _RECORD_FIELDS
            if unknown:
                raise ValueError(f"{path}: unknown fields {sorted(unknown)}")
            rec = ExceptionalOrbitRecord(
                label=entry["label"],
                dimension=int(entry["dimension"]),
                weighted_diagram=tuple(int(x) for x in entry["weighted_diagram"]),
                special=bool(entry["special"]),
                bv_dual_label=entry["bv_dual_label"],
                pi1_order=int(entry["pi1_order"]),
                pi1_ab_order=int(entry["pi1_ab_order"]),
                rigid=bool(entry["rigid"]),
                birationally_rigid=bool(entry["birationally_rigid"]),
                notes=entry.get("notes", ""),
            )
            if rec.label in table:
                raise ValueError(f"{path}: duplicate label {rec.label}")
            table[rec.label] = rec
        if len(table) != counts[typ]:
            raise ValueError(f"{path}: {len(table)} orbits, expected {counts[typ]}")
        tables[typ] = table
    # cross-validation
    for typ, table in tables.items():
        rank = int(typ[1])
        system = build_root_system(typ)
        nroots = 2 * len(system.positive_roots)
        for rec in table.values():
            if rec.dimension % 2:
                raise ValueError(f"{typ}:{rec.label}: odd dimension")
            if len(rec.weighted_diagram) != rank:
                raise ValueError(f"{typ}:{rec.label}: bad diagram length")
            if any(x not in (0, 1, 2) for x in rec.weighted_diagram):
                raise ValueError(f"{typ}:{rec.label}: diagram labels must be 0/1/2")
            if rec.bv_dual_label not in table:
                raise ValueError(f"{typ}:{rec.label}: dangling dual {rec.bv_dual_label}")
            if rec.pi1_ab_order <= 0 or rec.pi1_order % 1:
                raise ValueError(f"{typ}:{rec.label}: bad pi1 data")
            if _dim_from_diagram(system, rec.weighted_diagram) != rec.dimension:
                raise ValueError(
                    f"{typ}:{rec.label}: dimension {rec.dimension} does not match its weighted diagram"
                )
            if rec.dimension > nroots:
                raise ValueError(f"{typ}:{rec.label}: dimension exceeds dim of nilpotent cone")
    return tables


def _dim_from_diagram(system: RootSystem, diagram: Sequence[int]) -> int:
    """dim of the orbit with sl2-weight h: dim g - dim g_0 - dim g_1."""
    g0 = system.rank
    g1 = 0
    for root in system.positive_roots:
        v = sum(int(c) * d for c, d in zip(system.root_coefficients(root), diagram))
        if v == 0:
            g0 += 2
        elif v == 1:
            g1 += 1  # the mirror negative root sits in g_{-1}
    dim_g = 2 * len(system.positive_roots) + system.rank
    return dim_g - g0 - g1


@lru_cache(maxsize=None)
def _label_index(typ: str) -> Dict[str, str]:
    table = load_exceptional_tables()[typ]
    index = {}
    for label in table:
        index[_canon(label)] = label
    return index


def _canon(label: str) -> str:
    return label.replace("(", "").replace(")", "").replace(" ", "").replace("_", "").lower()


def normalize_label(typ: str, label: str) -> str:
    index = _label_index(typ)
    key = _canon(label)
    if key in index:
        return index[key]
    if key in ("0", "{0}", "zero"):
        return index["0"]
    raise KeyError(f"unknown {typ} orbit label {label!r}")


def get_record(typ: str, label: str) -> ExceptionalOrbitRecord:
    return load_exceptional_tables()[typ][normalize_label(typ, label)]


# --------------------------------------------------------------------------
# Dimensions, codimensions, fundamental groups


def dim_lie_algebra(ambient: str) -> int:
    fam, rank = ambient[0], int(ambient[1:])
    if fam in "EFG":
        system = build_root_system(ambient)
        return 2 * len(system.positive_roots) + rank
    n = classical_boxes(ambient)
    if fam == "A":
        return n * n - 1
    if fam in "BD":
        return n * (n - 1) // 2
    return n * (n + 1) // 2


def dim_nilcone(ambient: str) -> int:
    """dim of the nilpotent cone = dim g - rank = number of roots."""
    return dim_lie_algebra(ambient) - int(ambient[1:])


def dim_orbit(orbit: NilpotentOrbit) -> int:
    fam = orbit.ambient[0]
    if fam in "EFG":
        return get_record(orbit.ambient, orbit.label).dimension
    p = orbit.partition
    n = classical_boxes(orbit.ambient)
    sq = sum(x * x for x in pt.transpose(p))
    odd = sum(1 for x in p if x % 2 == 1)
    if fam == "A":
        return n * n - sq
    if fam in "BD":
        return n * (n - 1) // 2 - (sq - odd) // 2
    return n * (n + 1) // 2 - (sq + odd) // 2


def codim(orbit: NilpotentOrbit) -> int:
    c = dim_nilcone(orbit.ambient) - dim_orbit(orbit)
    if c < 0 or c % 2:
        raise AssertionError(f"bad codimension {c} for {orbit}")
    return c


def fundamental_group_order(orbit: NilpotentOrbit) -> Tuple[int, int]:
    """(|pi1|, |pi1^ab|) for the simply connected isogeny group."""
    fam = orbit.ambient[0]
    if fam in "EFG":
        rec = get_record(orbit.ambient, orbit.label)
        return (rec.pi1_order, rec.pi1_ab_order)
    p = orbit.partition
    if fam == "A":
        g = 0
        for x in p:
            g = _gcd(g, x)
        return (g, g)
    if fam == "C":
        k = len({x for x in p if x % 2 == 0})
        return (2**k, 2**k)
    # types B/D, for Spin(n)
    a = len({x for x in p if x % 2 == 1})
    base = 2 ** max(a - 1, 0)
    if pt.is_rather_odd(p) and a > 0:
        base *= 2
    return (base, base)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def sc_centralizer_dim(ambient: str, p) -> int:
    """dim of the centralizer of a partition-p nilpotent, for cross-checks."""
    p = pt.partition(p)
    sq = sum(x * x for x in pt.transpose(p))
    odd = sum(1 for x in p if x % 2 == 1)
    fam = ambient[0]
    if fam == "A":
        return sq - 1
    if fam in "BD":
        return (sq - odd) // 2
    return (sq + odd) // 2


def all_classical_orbits(ambient: str) -> List[NilpotentOrbit]:
    fam = ambient[0]
    n = classical_boxes(ambient)
    kind = {"A": "all", "B": "BD", "C": "C", "D": "BD"}[fam]
    out = []
    for p in pt.partitions_of(n, kind):
        if fam == "D" and pt.is_very_even(p):
            out.append(NilpotentOrbit(ambient, partition=p, decoration="I"))
            out.append(NilpotentOrbit(ambient, partition=p, decoration="II"))
        else:
            out.append(NilpotentOrbit(ambient, partition=p))
    return out


def all_exceptional_orbits(typ: str) -> List[NilpotentOrbit]:
    return [exceptional_orbit(typ, label) for label in load_exceptional_tables()[typ]]


def data_checksums() -> Dict[str, str]:
    base = _data_dir()
    out = {}
    for name in sorted(os.listdir(base)):
        path = os.path.join(base, name)
        if os.path.isfile(path):
            with open(path, "rb") as f:
                out[name] = hashlib.sha256(f.read()).hexdigest()
    return out
