"""Infinitesimal characters of unipotent ideals.

Three engines live here: the combinatorial formula for spin groups, the
barycenter-shift computation for birationally rigid covers in exceptional
types (driven by bundled case records), and the pseudo-unipotent
enumeration over standard Levi subgroups.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from . import partitions as pt
from ._linalg import Vector, add, smul, vec
from .orbits import (
    NilpotentOrbit,
    classical_orbit,
    codim,
    dim_nilcone,
    exceptional_orbit,
    get_record,
    normalize_label,
    _data_dir,
)
from .induction import is_rigid, rigid_induction_sources, spin_birigid_cover_exists
from .rootsys import (
    Factor,
    Levi,
    RootSystem,
    Weight,
    build_root_system,
    character_lattice_generators,
    levi_fundamental_weights,
    make_dominant,
    rho_levi,
    weight_fw,
    weight_orth,
)


def gamma0_spin(n: int, p) -> Weight:
    """Infinitesimal character of the birationally rigid cover over the
    type B/D orbit with partition p, in standard coordinates of rank
    floor(n/2)."""
    p = pt.partition(p)
    kind = spin_birigid_cover_exists(n, p)
    if kind == "none":
        raise ValueError(f"{p} admits no birationally rigid cover")
    x, y, z = pt.mult_extract(pt.transpose(p))
    parts = pt.union(pt.f_move(x), _g_of(y), _h_of(z))
    coords = pt.rho_plus(parts, n // 2)
    rank = n // 2
    family = "B" if n % 2 else "D"
    system = build_root_system(family, rank)
    return weight_orth(system, coords)


def _g_of(y) -> Tuple[Fraction, ...]:
    return pt.g_pairs(y) if y else ()


def _h_of(z) -> Tuple[Fraction, ...]:
    return pt.h_quads(z) if z else ()


# --------------------------------------------------------------------------
# gamma0 for birationally rigid classical orbits (standard coordinates)


def gamma0_classical_orbit(ambient: str, p) -> Tuple[Fraction, ...]:
    """Standard coordinates of gamma0 for a birationally rigid classical
    orbit; types B/D use the cover formula (which restricts to orbits),
    type C reduces to its rigid induction source."""
    fam = ambient[0]
    p = pt.partition(p)
    orbit = classical_orbit(ambient, p)
    from .induction import is_birationally_rigid

    if fam == "A":
        if set(p) != {1}:
            raise ValueError("only the zero orbit is birationally rigid in type A")
        n = len(p)
        return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))
    if fam in "BD":
        n = int(pt.size(p))
        return gamma0_spin(n, p).coords
    if not is_birationally_rigid(orbit):
        raise ValueError(f"{p} is not birationally rigid in {ambient}")
    # type C: reduce to a rigid source and use the known rigid values
    sources = [d for d in rigid_induction_sources(orbit)]
    if not sources:
        raise ValueError(f"no rigid source found for {orbit}")
    datum = sources[0]
    entries: List[Fraction] = []
    for glp in datum.gl_partitions:
        a = int(pt.size(glp))
        entries.extend(Fraction(a - 1 - 2 * i, 2) for i in range(a))
    entries = [e for e in entries if e > 0] + [e for e in entries if e == 0]
    # tail: rigid type C orbits are (1^2m) and (2,1^(2m-2))
    tail = datum.tail
    m = int(pt.size(tail)) // 2
    if tail and set(tail) == {1}:
        entries.extend(Fraction(k) for k in range(m, 0, -1))
    elif tail:
        if pt.multiplicity(tail, 2) != 1 or pt.multiplicity(tail, 1) != 2 * m - 2:
            raise ValueError(f"unsupported rigid type C tail {tail}")
        entries.extend(Fraction(2 * k - 1, 2) for k in range(m, 0, -1))
    rank = int(pt.size(p)) // 2
    entries = sorted((abs(e) for e in entries), reverse=True)[:rank]
    while len(entries) < rank:
        entries.append(Fraction(0))
    return tuple(entries)


# --------------------------------------------------------------------------
# Factor catalogues for the pseudo-unipotent enumeration


@dataclass(frozen=True)
class FactorChar:
    """gamma0 of one birationally rigid cover on a simple factor."""

    orbit_name: str
    fw_coords: Tuple[Fraction, ...]  # in the factor's fundamental weights
    orbit_codim: int


def _std_to_fw(family: str, rank: int, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    system = build_root_system(family, rank)
    padded = list(coords) + [Fraction(0)] * (system.ambient_dim - len(coords))
    return weight_orth(system, padded).to_fw().coords


# cover degrees of birationally rigid SL(N) covers: the a-fold cover of the
# rectangular orbit (a^(N/a)) for every divisor a, with gamma0 = rho/a
def _type_a_divisors(n: int) -> List[int]:
    return [a for a in range(1, n + 1) if n % a == 0]

# Nontrivial birationally rigid covers over symplectic orbits that are not
# covered by the orbit formulas; (partition, gamma0 in standard coords).
# Calibrated against the complete rank-4 pseudo-unipotent data.
_EXTRA_COVERS = {
    ("C", 3): [
        ((4, 2), (Fraction(1), Fraction(1, 2), Fraction(0))),
        ((2, 2, 2), (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2))),
    ],
}


@lru_cache(maxsize=None)
def classical_factor_chars(family: str, rank: int) -> Tuple[FactorChar, ...]:
    out: List[FactorChar] = []
    if family == "A":
        n = rank + 1
        cone = n * n - n
        for a in _type_a_divisors(n):
            m = n // a
            p = tuple([a] * m)
            orbit_codim = cone - (n * n - a * m * m)
            fw = tuple(Fraction(1, a) for _ in range(rank))
            out.append(FactorChar(pt.format_partition(p), fw, orbit_codim))
        return tuple(out)
    if family in "BD":
        boxes = 2 * rank + 1 if family == "B" else 2 * rank
        kind = "BD"
        for p in pt.partitions_of(boxes, kind):
            if family == "D" and pt.is_very_even(p):
                pass  # decorated pair shares gamma0; handled once
            if spin_birigid_cover_exists(boxes, p) == "none":
                continue
            w = gamma0_spin(boxes, p)
            orbit = classical_orbit(f"{family}{rank}", p)
            out.append(FactorChar(pt.format_partition(p), w.to_fw().coords, codim(orbit)))
        for p, coords in _EXTRA_COVERS.get((family, rank), ()):
            orbit = classical_orbit(f"{family}{rank}", pt.partition(p))
            out.append(FactorChar(pt.format_partition(p) + "^", _std_to_fw(family, rank, coords), codim(orbit)))
        return tuple(out)
    if family == "C":
        boxes = 2 * rank
        from .induction import is_birationally_rigid

        for p in pt.partitions_of(boxes, "C"):
            orbit = classical_orbit(f"C{rank}", p)
            if not is_birationally_rigid(orbit):
                continue
            coords = gamma0_classical_orbit(f"C{rank}", p)
            out.append(
                FactorChar(pt.format_partition(p), _std_to_fw("C", rank, coords), codim(orbit))
            )
        for p, coords in _EXTRA_COVERS.get((family, rank), ()):
            orbit = classical_orbit(f"C{rank}", pt.partition(p))
            out.append(FactorChar(pt.format_partition(p) + "^", _std_to_fw("C", rank, coords), codim(orbit)))
        return tuple(out)
    raise ValueError(family)


@lru_cache(maxsize=None)
def golden_unipotent_rows() -> List[dict]:
    path = os.path.join(_data_dir(), "golden", "unipotent_tables.tsv")
    with open(path, encoding="utf-8") as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    for r in rows:
        r["value"] = tuple(
            Fraction(int(x) * int(r["num"]), int(r["den"])) for x in r["coords"].split(",")
        )
    return rows


@lru_cache(maxsize=None)
def exceptional_factor_chars(typ: str) -> Tuple[FactorChar, ...]:
    out = []
    for r in golden_unipotent_rows():
        if r["type"] != typ:
            continue
        label = normalize_label(typ, r["label"])
        orbit = exceptional_orbit(typ, label)
        out.append(FactorChar(label, r["value"], codim(orbit)))
    return tuple(out)


def factor_chars(factor: Factor) -> Tuple[FactorChar, ...]:
    if factor.family in "EFG":
        return exceptional_factor_chars(factor.label)
    return classical_factor_chars(factor.family, factor.rank)


# --------------------------------------------------------------------------
# Embedding factor characters into the ambient weight lattice


def embed_factor_char(
    levi: Levi, fws: Sequence[Weight], factor_index: int, fw_coords: Sequence[Fraction]
) -> Weight:
    """Sum of c_j * (j-th fundamental weight of the given factor)."""
    offset = sum(f.rank for f in levi.factors[:factor_index])
    total = weight_fw(levi.ambient, [0] * levi.ambient.rank)
    for j, c in enumerate(fw_coords):
        if c:
            total = total + Fraction(c) * fws[offset + j]
    return total


@dataclass(frozen=True)
class PseudoUnipotentEntry:
    gamma: Tuple[Fraction, ...]  # dominant fw coordinates
    n_gamma: int
    provenances: Tuple[str, ...]


def enumerate_pseudo_unipotent(typ: str, progress=None) -> List[PseudoUnipotentEntry]:
    """All pseudo-unipotent infinitesimal characters: one entry per dominant
    gamma, with the maximal n(gamma) over provenances."""
    system = build_root_system(typ)
    n = system.rank
    best: Dict[Tuple[Fraction, ...], Tuple[int, List[str]]] = {}

    for mask in range(1 << n):
        nodes = [i + 1 for i in range(n) if mask & (1 << i)]
        levi = Levi.standard(system, nodes)
        factors = levi.factors
        if not factors:
            key = tuple(Fraction(0) for _ in range(n))
            cur = best.setdefault(key, (0, []))
            if not cur[1]:
                best[key] = (0, ["torus"])
            continue
        fws = levi_fundamental_weights(levi)
        menus = [factor_chars(f) for f in factors]
        for combo in product(*menus):
            gamma = weight_fw(system, [0] * n)
            total = 0
            for idx, (entry, factor) in enumerate(zip(combo, factors)):
                gamma = gamma + embed_factor_char(levi, fws, idx, entry.fw_coords)
                total += entry.orbit_codim
            dom = make_dominant(gamma)[0].coords
            prov = "+".join(f"{f.label}:{e.orbit_name}" for f, e in zip(factors, combo))
            cur = best.get(dom)
            if cur is None or total > cur[0]:
                provs = [prov] if cur is None else cur[1] + [prov]
                best[dom] = (total, provs)
            elif total == cur[0] and prov not in cur[1]:
                cur[1].append(prov)
        if progress:
            progress(mask, 1 << n)
    entries = [
        PseudoUnipotentEntry(g, t, tuple(pr)) for g, (t, pr) in best.items()
    ]
    entries.sort(key=lambda e: (e.n_gamma, e.gamma))
    return entries


# --------------------------------------------------------------------------
# Cover case records and the barycenter-shift engine


@dataclass(frozen=True)
class CoverShift:
    m_roots: Tuple[object, ...]  # node ints and/or coefficient vectors
    singularity: str  # 'A1' or 'A2'
    c: Optional[int] = None  # A1: eta(tau) = c * omega
    eta: int = 1  # A2: eta(tau_i) = eta * omega_i
    tau: Optional[Tuple[int, ...]] = None  # explicit lattice generator override


@dataclass(frozen=True)
class CoverCaseRecord:
    ambient: str
    label: str
    levi_roots: Tuple[object, ...]
    gamma0_levi: str  # 'rho', 'rho/2', 'rho/3', 'table:<label>', 'classical:<partition>'
    shifts: Tuple[CoverShift, ...]
    expected: Tuple[Fraction, ...]
    literal: bool = False  # value carried as data, not recomputed


@lru_cache(maxsize=None)
def load_cover_cases() -> Tuple[CoverCaseRecord, ...]:
    path = os.path.join(_data_dir(), "cover_cases.json")
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    out = []
    for entry in raw:
        shifts = tuple(
            CoverShift(
                m_roots=tuple(tuple(r) if isinstance(r, list) else r for r in s["m_roots"]),
                singularity=s["singularity"],
                c=s.get("c"),
                eta=s.get("eta", 1),
                tau=tuple(s["tau"]) if "tau" in s else None,
            )
            for s in entry.get("shifts", ())
        )
        num, den = entry.get("expected_scale", [1, 1])
        expected = tuple(Fraction(x * num, den) for x in entry["expected"])
        out.append(
            CoverCaseRecord(
                ambient=entry["ambient"],
                label=entry["label"],
                levi_roots=tuple(
                    tuple(r) if isinstance(r, list) else r for r in entry["levi_roots"]
                ),
                gamma0_levi=entry["gamma0_levi"],
                shifts=shifts,
                expected=expected,
                literal=entry.get("literal", False),
            )
        )
    return tuple(out)


def _resolve_levi_gamma0(system: RootSystem, levi: Levi, rule: str) -> Weight:
    if rule == "rho":
        return rho_levi(levi)
    if rule.startswith("rho/"):
        return Fraction(1, int(rule[4:])) * rho_levi(levi)
    if rule.startswith("table:"):
        label = rule[6:]
        if len(levi.factors) != 1:
            raise ValueError("table rule needs a single exceptional factor")
        factor = levi.factors[0]
        value = None
        for r in golden_unipotent_rows():
            if r["type"] == factor.label and normalize_label(factor.label, r["label"]) == normalize_label(factor.label, label):
                value = r["value"]
                break
        if value is None:
            raise KeyError(f"no golden gamma0 for {factor.label}:{label}")
        fws = levi_fundamental_weights(levi)
        return embed_factor_char(levi, fws, 0, value)
    if rule.startswith("classical:"):
        if len(levi.factors) != 1:
            raise ValueError("classical rule needs a single factor")
        factor = levi.factors[0]
        p = pt.parse_partition(rule[10:])
        coords = gamma0_classical_orbit(factor.label, p)
        fw_coords = _std_to_fw(factor.family, factor.rank, coords)
        fws = levi_fundamental_weights(levi)
        return embed_factor_char(levi, fws, 0, fw_coords)
    raise ValueError(f"unknown gamma0 rule {rule!r}")


def gamma0_birigid_cover(record: CoverCaseRecord) -> Weight:
    """Run the barycenter-shift computation for one case record."""
    system = build_root_system(record.ambient)
    if record.literal:
        return weight_fw(system, record.expected)
    from .induction import _as_roots

    levi = Levi(system, _as_roots(system, record.levi_roots))
    gamma = _resolve_levi_gamma0(system, levi, record.gamma0_levi)
    for shift in record.shifts:
        m_levi = Levi(system, _as_roots(system, shift.m_roots))
        if shift.tau is not None:
            taus = [weight_fw(system, shift.tau)]
        else:
            taus = character_lattice_generators(m_levi)
        if shift.singularity == "A1":
            if len(taus) != 1:
                raise ValueError(
                    f"{record.ambient}:{record.label}: expected rank-1 character lattice, got {len(taus)}"
                )
            gamma = gamma + Fraction(1, 2 * shift.c) * taus[0]
        elif shift.singularity == "A2":
            if len(taus) != 2:
                raise ValueError(
                    f"{record.ambient}:{record.label}: expected rank-2 character lattice"
                )
            delta = Fraction(1, 3 * shift.eta) * (taus[0] + taus[1])
            gamma = gamma + delta
        else:
            raise ValueError(shift.singularity)
    return make_dominant(gamma)[0]


def gamma0_induced(levi: Levi, factor_gamma0: Sequence) -> Weight:
    """gamma0 of a cover birationally induced from per-factor data.

    factor_gamma0 entries are either fw-coordinate sequences for the factor,
    'zero' (the factor's zero orbit, contributing rho of the factor), a
    'table:<label>' rule, or a 'classical:<partition>' rule.
    """
    fws = levi_fundamental_weights(levi)
    system = levi.ambient
    gamma = weight_fw(system, [0] * system.rank)
    for idx, (factor, spec) in enumerate(zip(levi.factors, factor_gamma0)):
        if isinstance(spec, str) and spec == "zero":
            coords = tuple(Fraction(1) for _ in range(factor.rank))
        elif isinstance(spec, str) and spec.startswith("table:"):
            label = spec[6:]
            coords = None
            for r in golden_unipotent_rows():
                if r["type"] == factor.label and normalize_label(
                    factor.label, r["label"]
                ) == normalize_label(factor.label, label):
                    coords = r["value"]
                    break
            if coords is None:
                raise KeyError(f"no golden gamma0 for {factor.label}:{label}")
        elif isinstance(spec, str) and spec.startswith("classical:"):
            p = pt.parse_partition(spec[10:])
            coords = _std_to_fw(factor.family, factor.rank, gamma0_classical_orbit(factor.label, p))
        else:
            coords = tuple(Fraction(c) for c in spec)
        gamma = gamma + embed_factor_char(levi, fws, idx, coords)
    return make_dominant(gamma)[0]
