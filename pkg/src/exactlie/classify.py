"""Second Betti numbers of nilpotent slice resolutions, by orbit label.

Orbits in the classical algebras are named by partitions (with the usual
parity conditions), the exceptional ones by coarse descriptors.  The
verdict for each orbit records b2 of the resolved slice together with
the star property, which by design holds exactly when b2 equals the
rank.  Outside types B and C the answer is always the rank; the B/C
exceptions are the subregular orbit respectively the two-row orbits,
where the slice picks up the singularity of the unfolded simply-laced
diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]

_RANK_RANGE = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None)}
_E_RANKS = (6, 7, 8)


@dataclass(frozen=True)
class OrbitLabel:
    family: str
    rank: int
    partition: Optional[Partition] = None
    descriptor: Optional[str] = None


@dataclass(frozen=True)
class ClassificationVerdict:
    b2: int
    star: bool
    subregular_singularity: Optional[str] = None
    notes: Tuple[str, ...] = ()


def partitions_of(m: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of m in weakly decreasing order, largest part first."""
    if m == 0:
        yield ()
        return
    if max_part is None or max_part > m:
        max_part = m
    for first in range(max_part, 0, -1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


def _normalize(d: Sequence[int]) -> Partition:
    parts = sorted((int(x) for x in d if x != 0), reverse=True)
    if any(x < 0 for x in parts):
        raise ValueError("partition parts must be positive")
    return tuple(parts)


def _multiplicities(d: Partition) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for x in d:
        out[x] = out.get(x, 0) + 1
    return out


def valid_partition(family: str, n: int, d: Sequence[int]) -> bool:
    """Does d label a nilpotent orbit of the rank-n algebra?

    B: partition of 2n+1, even parts with even multiplicity.
    C: partition of 2n, odd parts with even multiplicity.
    A: any partition of n+1.  D: partition of 2n, even parts with even
    multiplicity (a very even partition labels two orbits at once).
    """
    parts = _normalize(d)
    total = sum(parts)
    mult = _multiplicities(parts)
    if family == "A":
        return total == n + 1
    if family == "B":
        return total == 2 * n + 1 and all(
            m % 2 == 0 for x, m in mult.items() if x % 2 == 0
        )
    if family == "C":
        return total == 2 * n and all(
            m % 2 == 0 for x, m in mult.items() if x % 2 == 1
        )
    if family == "D":
        return total == 2 * n and all(
            m % 2 == 0 for x, m in mult.items() if x % 2 == 0
        )
    raise ValueError(f"no partition labels in family {family}")


def valid_partitions(family: str, n: int) -> List[Partition]:
    m = n + 1 if family == "A" else (2 * n + 1 if family == "B" else 2 * n)
    return [d for d in partitions_of(m) if valid_partition(family, n, d)]


def regular_partition(family: str, n: int) -> Partition:
    if family == "A":
        return (n + 1,)
    if family == "B":
        return (2 * n + 1,)
    if family == "C":
        return (2 * n,)
    if family == "D":
        return (2 * n - 1, 1)
    raise ValueError(f"no partition labels in family {family}")


def dominance_leq(p: Sequence[int], q: Sequence[int]) -> bool:
    """Partial-sum comparison; partitions of different totals are
    incomparable."""
    a, b = _normalize(p), _normalize(q)
    if sum(a) != sum(b):
        return False
    width = max(len(a), len(b))
    a = a + (0,) * (width - len(a))
    b = b + (0,) * (width - len(b))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def closure_leq(family: str, n: int, d: Sequence[int], dprime: Sequence[int]) -> bool:
    if not (valid_partition(family, n, d) and valid_partition(family, n, dprime)):
        raise ValueError("closure order is defined on valid orbit labels")
    return dominance_leq(d, dprime)


def exceptional_partitions(family: str, n: int) -> List[Partition]:
    """Closed-form list of the orbits whose b2 exceeds the rank."""
    if family == "B":
        return [(2 * n - 1, 1, 1)]
    if family == "C":
        out = {(n, n)}
        for i in range(1, n // 2 + 1):
            out.add(_normalize((2 * n - 2 * i, 2 * i)))
        return sorted(out, reverse=True)
    return []


def subregular_singularity(family: str, rank: int) -> str:
    """Slice singularity at the subregular orbit: the simply laced types
    see their own diagram, the others unfold."""
    if family == "A":
        return f"A{rank}"
    if family == "B":
        return f"A{2 * rank - 1}"
    if family == "C":
        return f"D{rank + 1}"
    if family == "D":
        return f"D{rank}"
    if family == "E":
        return f"E{rank}"
    if family == "F":
        return "E6"
    if family == "G":
        return "D4"
    raise ValueError(f"unknown family {family}")


def _subregular_partition(family: str, n: int) -> Partition:
    if family == "A":
        return (n, 1)
    if family == "B":
        return (2 * n - 1, 1, 1)
    if family == "C":
        return (2 * n - 2, 2)
    if family == "D":
        return _normalize((2 * n - 3, 3))
    raise ValueError(f"no partition labels in family {family}")


_G2_TABLE = {10: (4, False), 8: (3, False), 6: (2, True), 0: (2, True)}


def _check_rank(family: str, rank: int) -> None:
    if family in _RANK_RANGE:
        lo, hi = _RANK_RANGE[family]
        if rank < lo or (hi is not None and rank > hi):
            raise ValueError(f"{family}{rank} is out of range")
    elif family == "E":
        if rank not in _E_RANKS:
            raise ValueError(f"E{rank} does not exist")
    elif family == "F":
        if rank != 4:
            raise ValueError("F has rank 4")
    elif family == "G":
        if rank != 2:
            raise ValueError("G has rank 2")
    else:
        raise ValueError(f"unknown family {family}")


def classify(label: OrbitLabel) -> ClassificationVerdict:
    family, n = label.family, label.rank
    _check_rank(family, n)

    if family in ("A", "B", "C", "D"):
        if label.partition is None:
            raise ValueError(f"family {family} needs a partition label")
        d = _normalize(label.partition)
        if not valid_partition(family, n, d):
            raise ValueError(f"{list(d)} is not a valid {family}{n} orbit label")
        if d == regular_partition(family, n):
            raise ValueError("regular orbit excluded")
        notes: List[str] = []
        if family == "D" and all(x % 2 == 0 for x in d):
            notes.append("very even partition: labels two orbits, same verdict")
        sub = None
        if d == _subregular_partition(family, n):
            sub = subregular_singularity(family, n)
        if family in ("A", "D"):
            b2 = n
        elif family == "B":
            b2 = 2 * n - 1 if d == (2 * n - 1, 1, 1) else n
        else:
            b2 = n + 1 if d in exceptional_partitions("C", n) else n
        return ClassificationVerdict(b2, b2 == n, sub, tuple(notes))

    if family == "G":
        desc = label.descriptor or ""
        if desc == "regular" or desc == "dim:12":
            raise ValueError("regular orbit excluded")
        if not desc.startswith("dim:"):
            raise ValueError("G2 orbits are labelled dim:<k>")
        dim = int(desc[4:])
        if dim not in _G2_TABLE:
            raise ValueError(f"no G2 orbit of dimension {dim}")
        b2, star = _G2_TABLE[dim]
        notes = []
        if dim == 0:
            notes.append("zero orbit: value inferred from closure monotonicity")
        sub = subregular_singularity("G", 2) if dim == 10 else None
        return ClassificationVerdict(b2, star, sub, tuple(notes))

    if family == "F":
        desc = label.descriptor
        if desc == "regular":
            raise ValueError("regular orbit excluded")
        if desc == "subregular":
            return ClassificationVerdict(6, False, subregular_singularity("F", 4))
        if desc == "other":
            return ClassificationVerdict(4, True)
        raise ValueError("F4 orbits are labelled regular, subregular or other")

    # E family: only the coarse split is tabulated
    desc = label.descriptor
    if desc == "regular":
        raise ValueError("regular orbit excluded")
    if desc in ("other", "nonregular"):
        return ClassificationVerdict(n, True)
    raise ValueError("E orbits are labelled regular or other")


# ---------------------------------------------------------------------------
# enumeration and the checkable consequences
# ---------------------------------------------------------------------------


def enumerate_orbits(family: str, rank: int) -> List[Dict[str, object]]:
    """Verdict table for every admissible non-regular orbit label."""
    _check_rank(family, rank)
    rows: List[Dict[str, object]] = []
    if family in ("A", "B", "C", "D"):
        for d in valid_partitions(family, rank):
            if d == regular_partition(family, rank):
                continue
            v = classify(OrbitLabel(family, rank, partition=d))
            rows.append(
                {
                    "partition": list(d),
                    "b2": v.b2,
                    "star": v.star,
                    "subregular_singularity": v.subregular_singularity,
                }
            )
        rows.sort(key=lambda r: r["partition"], reverse=True)
    elif family == "G":
        for dim in sorted(_G2_TABLE, reverse=True):
            v = classify(OrbitLabel("G", 2, descriptor=f"dim:{dim}"))
            rows.append(
                {
                    "descriptor": f"dim:{dim}",
                    "b2": v.b2,
                    "star": v.star,
                    "subregular_singularity": v.subregular_singularity,
                }
            )
    elif family == "F":
        for desc in ("subregular", "other"):
            v = classify(OrbitLabel("F", 4, descriptor=desc))
            rows.append(
                {
                    "descriptor": desc,
                    "b2": v.b2,
                    "star": v.star,
                    "subregular_singularity": v.subregular_singularity,
                }
            )
    else:
        v = classify(OrbitLabel("E", rank, descriptor="other"))
        rows.append(
            {
                "descriptor": "other",
                "b2": v.b2,
                "star": v.star,
                "subregular_singularity": None,
            }
        )
    return rows


def exception_set_matches(family: str, n: int) -> bool:
    """The enumerated star-failures coincide with the closed-form list."""
    found = sorted(
        tuple(r["partition"]) for r in enumerate_orbits(family, n) if not r["star"]
    )
    return found == sorted(exceptional_partitions(family, n))


def monotonicity_check(family: str, n: int) -> int:
    """b2 is weakly increasing along the closure order; returns the
    number of comparable pairs checked."""
    if family == "G":
        chain = [0, 6, 8, 10]
        values = [_G2_TABLE[d][0] for d in chain]
        for i in range(len(chain) - 1):
            if values[i] > values[i + 1]:
                raise AssertionError("b2 drops along the G2 closure chain")
        return len(chain) - 1
    table = {}
    for row in enumerate_orbits(family, n):
        table[tuple(row["partition"])] = row["b2"]
    count = 0
    for d, bd in table.items():
        for dp, bdp in table.items():
            if d != dp and dominance_leq(d, dp):
                if bd > bdp:
                    raise AssertionError(
                        f"b2({list(d)})={bd} > b2({list(dp)})={bdp} in {family}{n}"
                    )
                count += 1
    return count


def dominance_axioms_check(m: int) -> Dict[str, int]:
    """Reflexive + antisymmetric + transitive, exhaustively on the
    partitions of m (transitivity via bitmask rows)."""
    parts = list(partitions_of(m))
    k = len(parts)
    rows = []
    for i, p in enumerate(parts):
        mask = 0
        for j, q in enumerate(parts):
            if dominance_leq(p, q):
                mask |= 1 << j
        if not (mask >> i) & 1:
            raise AssertionError("dominance is not reflexive")
        rows.append(mask)
    for i in range(k):
        for j in range(k):
            if i != j and (rows[i] >> j) & 1 and (rows[j] >> i) & 1:
                raise AssertionError("dominance is not antisymmetric")
    for i in range(k):
        mask = rows[i]
        j = 0
        rest = mask
        while rest:
            if rest & 1:
                if rows[j] & ~mask:
                    raise AssertionError("dominance is not transitive")
            rest >>= 1
            j += 1
    return {"partitions": k, "relations": sum(bin(r).count("1") for r in rows)}
