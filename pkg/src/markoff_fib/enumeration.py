"""Exhaustive search for equal m among Fibonacci index triples.

Every triple 2 <= a <= b <= c <= c_max with m(a, b, c) > 0 is enumerated:
the minimal ones (c >= a + b + 1) plus the family (2, b, b + 2) with b even.
At c_max = 500 that is about 10^7 triples whose m values run to ~700 bits,
so m is never stored. Each triple is keyed by m modulo four primes just
below 2^32 (a 128-bit fingerprint computed in numpy); only triples whose
fingerprints coincide are re-evaluated with exact integers.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .fib import fib, fib_list
from .markoff import FibTriple, fib_m

PRIMES = (4294967291, 4294967279, 4294967231, 4294967197)


@dataclass
class Collision:
    m: int
    triples: list[FibTriple]

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "indices": [[t.a, t.b, t.c] for t in self.triples],
            "values": [[str(v) for v in t.values()] for t in self.triples],
        }


@dataclass
class EnumerationReport:
    """All positive-m index triples up to ``c_max`` and every repeated m.

    ``triples`` is an (n, 3) array sorted by (c, a, b). ``buckets()`` groups
    them by exact m and is only practical for small ``c_max``.
    """

    c_max: int
    triples: np.ndarray
    collisions: list[Collision] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.triples)

    def iter_triples(self):
        for a, b, c in self.triples.tolist():
            yield FibTriple.strict(a, b, c)

    def buckets(self) -> dict[int, list[FibTriple]]:
        out: dict[int, list[FibTriple]] = defaultdict(list)
        for ft in self.iter_triples():
            out[fib_m(ft)].append(ft)
        return {m: sorted(v) for m, v in sorted(out.items())}

    def collision_ms(self) -> list[int]:
        return [col.m for col in self.collisions]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnumerationReport):
            return NotImplemented
        return (
            self.c_max == other.c_max
            and np.array_equal(self.triples, other.triples)
            and self.collisions == other.collisions
        )

    def to_json(self) -> dict:
        return {
            "c_max": self.c_max,
            "triple_count": self.count,
            "collisions": [col.to_json() for col in self.collisions],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "count", "indices", "values"])
        for col in self.collisions:
            w.writerow([
                col.m,
                len(col.triples),
                " ".join(str(t) for t in col.triples),
                " ".join(str(t.values()) for t in col.triples),
            ])
        return buf.getvalue()


def _pairs(c_max: int) -> tuple[np.ndarray, np.ndarray]:
    """(a, b) with 2 <= a <= b and a + b <= c_max - 1, sorted by a + b then a."""
    a_list, b_list = [], []
    for s in range(4, c_max):
        a = np.arange(2, s // 2 + 1, dtype=np.int64)
        a_list.append(a)
        b_list.append(s - a)
    if not a_list:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(a_list), np.concatenate(b_list)


def _residues(c_max: int, p: int) -> np.ndarray:
    out = np.zeros(c_max + 1, dtype=np.uint64)
    f, g = 0, 1
    for n in range(c_max + 1):
        out[n] = f
        f, g = g, (f + g) % p
    return out


def _chunk(args: tuple[int, list[int]]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fingerprints for every minimal triple whose c lies in ``cs``."""
    c_max, cs = args
    pa, pb = _pairs(c_max)
    s = pa + pb
    # pairs with a + b <= c - 1 form a prefix
    cut = np.searchsorted(s, np.asarray(cs) - 1, side="right")
    total = int(cut.sum())
    keys = np.empty((total, len(PRIMES)), dtype=np.uint64)
    tri = np.empty((total, 3), dtype=np.int16)
    pos = 0
    per_prime = []
    for p in PRIMES:
        r = _residues(c_max, p)
        ra, rb = r[pa], r[pb]
        P = np.uint64(p)
        sq = (ra * ra % P + rb * rb % P) % P
        ab = ra * rb % P
        per_prime.append((r, sq, ab, P))
    for c, n in zip(cs, cut.tolist()):
        if n == 0:
            continue
        for j, (r, sq, ab, P) in enumerate(per_prime):
            fc = r[c]
            fc2 = fc * fc % P
            keys[pos:pos + n, j] = (sq[:n] + fc2 + np.uint64(3) * (P - ab[:n] * fc % P)) % P
        tri[pos:pos + n, 0] = pa[:n]
        tri[pos:pos + n, 1] = pb[:n]
        tri[pos:pos + n, 2] = c
        pos += n
    return keys, tri, cut


def _family(c_max: int) -> list[FibTriple]:
    # (2, b, b+2), b even: m = 2; (2, 2, 4) is its minimal member
    return [FibTriple.strict(2, b, b + 2) for b in range(2, c_max - 1, 2)]


def _fingerprint(ft: FibTriple) -> tuple[int, ...]:
    m = fib_m(ft)
    return tuple(m % p for p in PRIMES)


def enumerate_fib_triples(c_max: int, workers: int = 1) -> EnumerationReport:
    """Enumerate positive-m triples with c <= c_max and collect every repeated m.

    ``workers`` > 1 splits the c range across processes; the merged report is
    identical for any worker count.
    """
    if c_max < 2:
        raise ValueError(f"c_max must be >= 2, got {c_max}")
    cs = list(range(2, c_max + 1))
    if workers > 1 and len(cs) > 1:
        # interleave so every worker gets a similar mix of small and large c
        parts = [cs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk, [(c_max, part) for part in parts]))
    else:
        results = [_chunk((c_max, cs))]
    keys = np.concatenate([r[0] for r in results])
    tri = np.concatenate([r[1] for r in results])

    fam = _family(c_max)
    if fam:
        keys = np.concatenate([keys, np.array([_fingerprint(ft) for ft in fam], dtype=np.uint64)])
        tri = np.concatenate([tri, np.array([tuple(ft) for ft in fam], dtype=np.int16)])

    order = np.lexsort((tri[:, 1], tri[:, 0], tri[:, 2]))
    keys, tri = keys[order], tri[order]

    # group equal fingerprints
    korder = np.lexsort(keys.T[::-1])
    ks = keys[korder]
    same = np.all(ks[1:] == ks[:-1], axis=1)
    collisions: dict[int, list[FibTriple]] = defaultdict(list)
    if same.any():
        idx = np.flatnonzero(same)
        members = np.unique(np.concatenate([idx, idx + 1]))
        for row in tri[korder[members]].tolist():
            ft = FibTriple.strict(*row)
            collisions[fib_m(ft)].append(ft)
    cols = [
        Collision(m, sorted(ts))
        for m, ts in sorted(collisions.items())
        if len(ts) >= 2
    ]
    return EnumerationReport(c_max, tri.astype(np.int64), cols)


def enumerate_brute_force(c_max: int) -> dict[int, list[FibTriple]]:
    """Every triple 2 <= a <= b <= c <= c_max with m > 0, bucketed by exact m.

    No pruning; O(c_max^3) big-integer evaluations. Intended for c_max <= ~60.
    """
    if c_max < 2:
        raise ValueError(f"c_max must be >= 2, got {c_max}")
    F = fib_list(c_max)
    out: dict[int, list[FibTriple]] = defaultdict(list)
    for c in range(2, c_max + 1):
        for a in range(2, c + 1):
            for b in range(a, c + 1):
                x, y, z = F[a], F[b], F[c]
                m = x * x + y * y + z * z - 3 * x * y * z
                if m > 0:
                    out[m].append(FibTriple.strict(a, b, c))
    return {m: sorted(v) for m, v in sorted(out.items())}


def solve_for_m(m: int, c_max: int) -> list[FibTriple]:
    """All index triples with m(a, b, c) = m and c <= c_max, in lexicographic order.

    Only positive m has solutions. Outside the (2, b, b + 2) family a solution
    needs c >= a + b + 1, where m >= F(b)^2 and m increases with c, so both
    loops stop early.
    """
    if c_max < 2:
        raise ValueError(f"c_max must be >= 2, got {c_max}")
    if m <= 0:
        return []
    F = fib_list(c_max)
    out = [ft for ft in _family(c_max) if fib_m(ft) == m]
    for b in range(2, c_max - 1):
        y = F[b]
        if y * y > m:
            break
        for a in range(2, b + 1):
            x = F[a]
            for c in range(a + b + 1, c_max + 1):
                z = F[c]
                v = x * x + y * y + z * z - 3 * x * y * z
                if v >= m:
                    if v == m:
                        out.append(FibTriple.strict(a, b, c))
                    break
    return sorted(set(out))
