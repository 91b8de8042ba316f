"""Integer and half-integer partition calculus for nilpotent orbit work.

Partitions are non-increasing tuples with no zero parts.  Textual syntax
uses multiplicity exponents: ``9,5,4^2,3^4,1``; half-integers appear as
``5/2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

Partition = Tuple[int, ...]
HalfPartition = Tuple[Fraction, ...]


def partition(parts: Iterable[int]) -> Partition:
    ps = sorted((int(p) for p in parts if p != 0), reverse=True)
    if any(p < 0 for p in ps):
        raise ValueError("negative part")
    return tuple(ps)


def half_partition(parts: Iterable) -> HalfPartition:
    ps = sorted((Fraction(p) for p in parts if Fraction(p) != 0), reverse=True)
    if any(p < 0 or (2 * p).denominator != 1 for p in ps):
        raise ValueError("parts must be positive half-integers")
    return tuple(ps)


def parse_partition(text: str):
    """Parse '9,5,4^2,3^4,1' (or half-integers like '5/2') into a partition."""
    if text.strip() in ("", "0", "{0}", "[]"):
        return ()
    parts: List[Fraction] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "^" in chunk:
            base, mult = chunk.split("^")
            parts.extend([Fraction(base)] * int(mult))
        else:
            parts.append(Fraction(chunk))
    if all(p.denominator == 1 for p in parts):
        return partition(int(p) for p in parts)
    return half_partition(parts)


def format_partition(p: Sequence) -> str:
    if not p:
        return "{0}"
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        mult = j - i
        out.append(f"{p[i]}^{mult}" if mult > 1 else str(p[i]))
        i = j
    return ",".join(out)


def size(p: Sequence) -> Fraction:
    return sum((Fraction(x) for x in p), Fraction(0))


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def multiplicity(p: Sequence, part) -> int:
    return sum(1 for x in p if x == part)


def is_type_C(p: Partition) -> bool:
    """Every odd part occurs with even multiplicity."""
    return all(multiplicity(p, x) % 2 == 0 for x in set(p) if x % 2 == 1)


def is_type_BD(p: Partition) -> bool:
    """Every even part occurs with even multiplicity."""
    return all(multiplicity(p, x) % 2 == 0 for x in set(p) if x % 2 == 0)


def is_very_even(p: Partition) -> bool:
    return bool(p) and all(x % 2 == 0 for x in p)


def is_rather_odd(p: Partition) -> bool:
    """Every odd part occurs with multiplicity one."""
    return all(multiplicity(p, x) == 1 for x in set(p) if x % 2 == 1)


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: partial sums of p bound those of q (equal sizes)."""
    if size(p) != size(q):
        return False
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []

    def rec(remaining: int, maxpart: int, acc: List[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(min(remaining, maxpart), 0, -1):
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_of(n: int, kind: str = "all") -> List[Partition]:
    ps = _partitions_of(n)
    if kind == "all":
        return list(ps)
    if kind == "C":
        return [p for p in ps if is_type_C(p)]
    if kind == "BD":
        return [p for p in ps if is_type_BD(p)]
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=None)
def _collapse(p: Partition, kind: str) -> Partition:
    pred = is_type_C if kind == "C" else is_type_BD
    if pred(p):
        return p
    n = int(size(p))
    best = None
    for q in _partitions_of(n):
        if pred(q) and dominates(p, q):
            if best is None or dominates(q, best):
                best = q
    if best is None:
        raise ValueError(f"no {kind}-type partition dominated by {p}")
    return best


def collapse_C(p: Partition) -> Partition:
    return _collapse(partition(p), "C")


def collapse_B(p: Partition) -> Partition:
    if int(size(p)) % 2 != 1:
        raise ValueError("type B partition must have odd size")
    return _collapse(partition(p), "BD")


def collapse_D(p: Partition) -> Partition:
    if int(size(p)) % 2 != 0:
        raise ValueError("type D partition must have even size")
    return _collapse(partition(p), "BD")


def collapse_BD(p: Partition) -> Partition:
    return _collapse(partition(p), "BD")


# --------------------------------------------------------------------------
# The operators used by the spin infinitesimal-character formula.


def s4(p: Partition) -> Partition:
    """Indices i with p_i = p_{i+1} + 4 (trailing zero included)."""
    p = partition(p)
    padded = list(p) + [0]
    return tuple(i + 1 for i in range(len(p)) if padded[i] == padded[i + 1] + 4)


def sharp(p: Partition, x: Partition) -> Partition:
    """Delete columns p_{x_1}, p_{x_1}-1, ..., p_{x_r}, p_{x_r}-1 from p.

    x must be a subpartition of s4(p); the result is a partition of |p|-2|x|
    where the removed columns are counted by the Young diagram.
    """
    p = partition(p)
    x = partition(x)
    s = set(s4(p))
    if not set(x) <= s:
        raise ValueError(f"{x} is not contained in S4({p}) = {sorted(s)}")
    cols = list(transpose(p))
    for i in x:
        c = p[i - 1]
        # columns are 1-indexed by width; delete columns c and c-1
        for col in (c, c - 1):
            if col < 1 or col > len(cols):
                raise ValueError("column out of range")
            cols[col - 1] = 0
    cols = [c for c in cols if c > 0]
    return transpose(partition(cols))


def mult_extract(p: Partition) -> Tuple[Partition, Partition, Partition]:
    """Split p into parts of multiplicity 1, 2, and 4 (x, y, z)."""
    p = partition(p)
    x: List[int] = []
    y: List[int] = []
    z: List[int] = []
    for part in sorted(set(p), reverse=True):
        m = multiplicity(p, part)
        if m == 1:
            x.append(part)
        elif m == 2:
            y.extend([part] * 2)
        elif m == 4:
            z.extend([part] * 4)
        else:
            raise ValueError(f"part {part} has multiplicity {m}, not in {{1,2,4}}")
    return (tuple(x), tuple(y), tuple(z))


def f_move(p: Partition) -> Partition:
    """For every odd i with p_i >= p_{i+1} + 2, move one box from row i down."""
    p = list(partition(p))
    padded = p + [0]
    for i in range(0, len(p), 2):  # odd positions in 1-indexed terms
        if padded[i] >= padded[i + 1] + 2:
            padded[i] -= 1
            padded[i + 1] += 1
    return partition(padded)


def g_pairs(p: Partition) -> Partition:
    """Replace every pair (a, a) with (a+1, a-1); all multiplicities must be 2."""
    p = partition(p)
    if any(multiplicity(p, x) != 2 for x in set(p)):
        raise ValueError(f"g requires all multiplicities 2: {p}")
    out: List[int] = []
    for a in sorted(set(p), reverse=True):
        out.extend([a + 1, a - 1])
    return partition(out)


def hprime(p: Partition) -> HalfPartition:
    """Replace every pair (a, a) with (a+1/2, a-1/2)."""
    p = partition(p)
    if any(multiplicity(p, x) != 2 for x in set(p)):
        raise ValueError(f"h' requires all multiplicities 2: {p}")
    out: List[Fraction] = []
    for a in sorted(set(p), reverse=True):
        out.extend([Fraction(a) + Fraction(1, 2), Fraction(a) - Fraction(1, 2)])
    return half_partition(out)


def h_quads(p: Partition) -> HalfPartition:
    """Replace every quadruple (a,a,a,a) with (a+1, a+1/2, a-1/2, a-1)."""
    p = partition(p)
    if any(multiplicity(p, x) != 4 for x in set(p)):
        raise ValueError(f"h requires all multiplicities 4: {p}")
    out: List[Fraction] = []
    for a in sorted(set(p), reverse=True):
        out.extend(
            [
                Fraction(a) + 1,
                Fraction(a) + Fraction(1, 2),
                Fraction(a) - Fraction(1, 2),
                Fraction(a) - 1,
            ]
        )
    return half_partition(out)


def half(p: Partition) -> Partition:
    """Halve all multiplicities (which must be even)."""
    p = partition(p)
    if any(multiplicity(p, x) % 2 for x in set(p)):
        raise ValueError(f"p^(1/2) requires even multiplicities: {p}")
    out: List[int] = []
    for a in sorted(set(p), reverse=True):
        out.extend([a] * (multiplicity(p, a) // 2))
    return partition(out)


def union(*ps: Sequence) -> Tuple[Fraction, ...]:
    """Multiset union of (half-)partitions, sorted non-increasing."""
    out: List[Fraction] = []
    for p in ps:
        out.extend(Fraction(x) for x in p)
    return tuple(sorted(out, reverse=True))


def rho_string(q) -> List[Fraction]:
    """The full string ((q-1)/2, (q-3)/2, ..., (1-q)/2) for one part q."""
    q = Fraction(q)
    out = []
    x = (q - 1) / 2
    while x >= (1 - q) / 2:
        out.append(x)
        x -= 1
    return out


def rho_seq(q: Sequence) -> Tuple[Fraction, ...]:
    """Concatenated full symmetric strings for every part of q (length sum q)."""
    out: List[Fraction] = []
    for part in q:
        out.extend(rho_string(part))
    return tuple(out)


def rho_plus(q: Sequence, target_len: int) -> Tuple[Fraction, ...]:
    """Positive string entries of every part, zero-padded to target_len,
    sorted non-increasing.  A part 1/2 contributes nothing."""
    out: List[Fraction] = []
    for part in q:
        out.extend(x for x in rho_string(part) if x > 0)
    if len(out) > target_len:
        raise ValueError(f"target length {target_len} too small for {len(out)} entries")
    out.extend([Fraction(0)] * (target_len - len(out)))
    return tuple(sorted(out, reverse=True))
