"""Exhaustive ground truth for the covering-genus floors.

For a one-holed base surface of genus g and a covering degree n, every
monodromy tuple in S_n^(2g) is enumerated in lexicographic order (by image
tables) and its cover shape is computed: components from point orbits,
boundary circles from the cycles of the commutator product, genus from the
Euler count.  The scan checks the two genus floors

    genus >= n*g - (n - 1)                 (all covers)
    genus >= n*g - floor((n - 1) / 2)      (covers with connected boundary)

records minima with witnesses, and characterizes the equality cases, also
after adding one simple branch point.  Everything is exact and deterministic;
reports serialize to byte-identical JSON across runs.

The scan works on precomputed multiplication, commutator, cycle-count and
orbit-partition tables for S_n, so the hot loop touches nothing but flat
lists.  Shapes agree with ``covering.cover_from_homomorphism`` by
construction; the tests cross-check the two routes tuple by tuple on small
groups and on random samples of the larger ones.  Violations and
counterexamples (none are expected) are reported once per shape class, with
the lexicographically first witness tuple.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .perms import Permutation, cycles_str

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "default_budget",
    "EnumerationReport",
    "SharpnessReport",
    "enumerate_covers",
    "verify_sharpness",
    "realizability_table",
]

DEFAULT_BUDGET = 10**9
_BUDGET_ENV = "SATGENUS_BUDGET"


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def default_budget() -> int:
    """Budget from the SATGENUS_BUDGET environment variable, if set."""
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_BUDGET_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ValueError(f"{_BUDGET_ENV} must be positive")
    return value


def _check_budget(base_genus: int, degree: int, budget: int | None) -> tuple[int, int]:
    if base_genus < 1:
        raise ValueError("the base surface needs genus at least 1")
    if degree < 1:
        raise ValueError("degree must be at least 1")
    limit = default_budget() if budget is None else budget
    if limit < 1:
        raise ValueError("budget must be positive")
    total = math.factorial(degree) ** (2 * base_genus)
    if total > limit:
        raise BudgetExceededError(
            f"enumerating S_{degree}^{2 * base_genus} needs {total} tuples, "
            f"over the budget of {limit}"
        )
    return total, limit


class _SymTables:
    """Flat lookup tables for one symmetric group."""

    def __init__(self, n: int):
        self.n = n
        perms = list(itertools.permutations(range(n)))
        self.perms = perms
        size = len(perms)
        self.size = size
        index = {p: i for i, p in enumerate(perms)}

        inv = []
        for p in perms:
            q = [0] * n
            for x, y in enumerate(p):
                q[y] = x
            inv.append(index[tuple(q)])
        self.inv = inv

        rng = range(n)
        mul = [0] * (size * size)
        for i, p in enumerate(perms):
            row = i * size
            for j, q in enumerate(perms):
                mul[row + j] = index[tuple(q[p[x]] for x in rng)]
        self.mul = mul

        comm = [0] * (size * size)
        for i in range(size):
            row = i * size
            ii = inv[i]
            for j in range(size):
                comm[row + j] = mul[mul[row + j] * size + mul[ii * size + inv[j]]]
        self.comm = comm

        cyc = []
        for p in perms:
            seen = [False] * n
            count = 0
            for start in rng:
                if not seen[start]:
                    count += 1
                    x = start
                    while not seen[x]:
                        seen[x] = True
                        x = p[x]
            cyc.append(count)
        self.cycles = cyc

        # Orbit partitions of generator pairs, interned to small ids.
        self._pid_index: dict[tuple[int, ...], int] = {}
        self._pid_blocks: list[int] = []
        self._pid_parent: list[tuple[int, ...]] = []
        pair_pid = [0] * (size * size)
        for i, p in enumerate(perms):
            row = i * size
            for j, q in enumerate(perms):
                pair_pid[row + j] = self._intern(self._pair_partition(p, q))
        self.pair_pid = pair_pid
        self.num_pair_pids = len(self._pid_parent)
        self.discrete_pid = self._intern(tuple(rng))
        self._join_cache: dict[tuple[int, int], int] = {}
        self._mrow_cache: dict[int, list[int]] = {}

    def _pair_partition(self, p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in (p, q):
            for x, y in enumerate(g):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return tuple(find(x) for x in range(self.n))

    def _intern(self, canonical: tuple[int, ...]) -> int:
        pid = self._pid_index.get(canonical)
        if pid is None:
            pid = len(self._pid_parent)
            self._pid_index[canonical] = pid
            self._pid_parent.append(canonical)
            self._pid_blocks.append(len(set(canonical)))
        return pid

    def blocks(self, pid: int) -> int:
        return self._pid_blocks[pid]

    def join(self, pid_a: int, pid_b: int) -> int:
        """Finest common coarsening of two point partitions."""
        key = (pid_a, pid_b) if pid_a <= pid_b else (pid_b, pid_a)
        cached = self._join_cache.get(key)
        if cached is not None:
            return cached
        pa, pb = self._pid_parent[key[0]], self._pid_parent[key[1]]
        parent = list(pa)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in range(self.n):
            rx, ry = find(x), find(pb[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        pid = self._intern(tuple(find(x) for x in range(self.n)))
        self._join_cache[key] = pid
        return pid

    def mrow(self, pid: int) -> list[int]:
        """Block count of join(pid, pp) for every pair-partition id pp."""
        row = self._mrow_cache.get(pid)
        if row is None:
            row = [self._pid_blocks[self.join(pid, pp)] for pp in range(self.num_pair_pids)]
            self._mrow_cache[pid] = row
        return row


@lru_cache(maxsize=None)
def _tables(n: int) -> _SymTables:
    return _SymTables(n)


def _scan_block(base_genus: int, degree: int, lo: int, hi: int) -> dict:
    """Scan all tuples whose first coordinate lies in [lo, hi).

    Returns the tuple count, the boundary-circle histogram, and for every
    achieved (components, boundary circles, genus) class the first witness in
    lexicographic order, as a tuple of permutation indices.
    """
    g, n = base_genus, degree
    t = _tables(n)
    size = t.size
    mul, comm, cyc, ppid = t.mul, t.comm, t.cycles, t.pair_pid
    base_odd = n * (2 * g - 1)
    khist = [0] * (n + 1)
    rows: dict[tuple[int, int, int], tuple[int, ...]] = {}

    def scan(level: int, b_idx: int, pid: int, prefix: tuple) -> None:
        s_range = range(lo, hi) if level == 0 else range(size)
        first = level == 0
        if level == g - 1:
            mrow = t.mrow(pid)
            for s in s_range:
                row = s * size
                for q in range(size):
                    c = comm[row + q]
                    b = c if first else mul[b_idx * size + c]
                    k = cyc[b]
                    m = mrow[ppid[row + q]]
                    khist[k] += 1
                    key = (m, k, (base_odd + 2 * m - k) >> 1)
                    if key not in rows:
                        rows[key] = prefix + (s, q)
        else:
            for s in s_range:
                row = s * size
                for q in range(size):
                    c = comm[row + q]
                    scan(
                        level + 1,
                        c if first else mul[b_idx * size + c],
                        ppid[row + q] if first else t.join(pid, ppid[row + q]),
                        prefix + (s, q),
                    )

    scan(0, 0, t.discrete_pid, ())
    return {"count": (hi - lo) * size ** (2 * g - 1), "khist": khist, "rows": rows}


def _merge_blocks(blocks: list[dict]) -> dict:
    merged = blocks[0]
    for b in blocks[1:]:
        merged["count"] += b["count"]
        merged["khist"] = [x + y for x, y in zip(merged["khist"], b["khist"])]
        for key, wit in b["rows"].items():
            merged["rows"].setdefault(key, wit)
    return merged


def _run_scan(base_genus: int, degree: int, threads: int = 1) -> dict:
    size = math.factorial(degree)
    threads = max(1, min(threads, size))
    if threads == 1:
        return _scan_block(base_genus, degree, 0, size)
    cuts = [i * size // threads for i in range(threads + 1)]
    spans = [(lo, hi) for lo, hi in zip(cuts, cuts[1:]) if lo < hi]
    with ProcessPoolExecutor(max_workers=len(spans)) as pool:
        futures = [pool.submit(_scan_block, base_genus, degree, lo, hi) for lo, hi in spans]
        blocks = [f.result() for f in futures]
    return _merge_blocks(blocks)


def _class_finding(check: str, key: tuple[int, int, int], wit: tuple, **extra) -> dict:
    m, k, genus = key
    finding = {"check": check, "components": m, "boundary": k, "genus": genus, "witness": wit}
    finding.update(extra)
    return finding


def _analyze(base_genus: int, degree: int, rows: dict) -> dict:
    """Floor checks and minima over the achieved shape classes.

    Every check is a function of the shape class alone, so verifying classes
    is equivalent to verifying tuples; witnesses are the class witnesses.
    """
    g, n = base_genus, degree
    bound_all = n * g - (n - 1)
    bound_k1 = n * g - (n - 1) // 2
    violations: list[dict] = []
    counterexamples: list[dict] = []
    min_overall: tuple | None = None
    min_k1: tuple | None = None
    for key in sorted(rows):
        m, k, genus = key
        wit = rows[key]
        if genus < bound_all:
            violations.append(_class_finding("unbranched_floor", key, wit))
        if (genus == bound_all) != (m == 1 and k == n):
            counterexamples.append(_class_finding("unbranched_floor_equality", key, wit))
        if k == 1:
            if genus < bound_k1:
                violations.append(_class_finding("connected_boundary_floor", key, wit))
            if n % 2 == 0:
                counterexamples.append(_class_finding("connected_boundary_parity", key, wit))
            elif genus != bound_k1 or m != 1:
                counterexamples.append(_class_finding("connected_boundary_equality", key, wit))
            if min_k1 is None or (genus, wit) < min_k1:
                min_k1 = (genus, wit)
        if min_overall is None or (genus, wit) < min_overall:
            min_overall = (genus, wit)
    return {
        "bound_all": bound_all,
        "bound_k1": bound_k1,
        "violations": violations,
        "counterexamples": counterexamples,
        "min_overall": min_overall,
        "min_k1": min_k1,
        "connected": {
            (k, genus): wit for (m, k, genus), wit in sorted(rows.items()) if m == 1
        },
        "floor_value_ks": sorted({k for (m, k, genus) in rows if genus == bound_k1}),
    }


def _witness_perms(degree: int, wit: tuple) -> tuple[Permutation, ...]:
    perms = _tables(degree).perms
    return tuple(Permutation(perms[i]) for i in wit)


def _finding_json(degree: int, finding: dict) -> dict:
    out = dict(finding)
    out["witness"] = [cycles_str(p) for p in _witness_perms(degree, finding["witness"])]
    return out


@dataclass(frozen=True)
class EnumerationReport:
    """Aggregate of one full scan of S_degree^(2*base_genus)."""

    base_genus: int
    degree: int
    total_tuples: int
    budget: int
    violations: tuple[dict, ...]
    min_genus_overall: int
    min_overall_witness: tuple[Permutation, ...]
    min_genus_connected_boundary: int | None
    connected_boundary_witness: tuple[Permutation, ...] | None
    boundary_k_histogram: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "base_genus": self.base_genus,
            "degree": self.degree,
            "total_tuples": self.total_tuples,
            "budget": self.budget,
            "violations": [_finding_json(self.degree, v) for v in self.violations],
            "min_genus_overall": self.min_genus_overall,
            "min_overall_witness": [cycles_str(p) for p in self.min_overall_witness],
            "min_genus_connected_boundary": self.min_genus_connected_boundary,
            "connected_boundary_witness": (
                None
                if self.connected_boundary_witness is None
                else [cycles_str(p) for p in self.connected_boundary_witness]
            ),
            "boundary_k_histogram": {
                str(k): v for k, v in sorted(self.boundary_k_histogram.items())
            },
        }


def enumerate_covers(
    base_genus: int, degree: int, budget: int | None = None, threads: int = 1
) -> EnumerationReport:
    """Scan every monodromy tuple and report minima, histogram and any
    violations of the two genus floors (there should never be any).

    ``budget`` caps the tuple count (default 10^9, or SATGENUS_BUDGET);
    ``threads`` > 1 partitions the scan on the first coordinate into
    contiguous lexicographic blocks and merges deterministically, so the
    report is identical whatever the thread count.
    """
    total, limit = _check_budget(base_genus, degree, budget)
    r = _run_scan(base_genus, degree, threads)
    if r["count"] != total:
        raise AssertionError("scan lost tuples; this is a bug")
    a = _analyze(base_genus, degree, r["rows"])
    min_k1 = a["min_k1"]
    return EnumerationReport(
        base_genus=base_genus,
        degree=degree,
        total_tuples=total,
        budget=limit,
        violations=tuple(a["violations"]),
        min_genus_overall=a["min_overall"][0],
        min_overall_witness=_witness_perms(degree, a["min_overall"][1]),
        min_genus_connected_boundary=None if min_k1 is None else min_k1[0],
        connected_boundary_witness=(
            None if min_k1 is None else _witness_perms(degree, min_k1[1])
        ),
        boundary_k_histogram={k: v for k, v in enumerate(r["khist"]) if v},
    )


@dataclass(frozen=True)
class SharpnessReport:
    """Equality analysis for the genus floors at one (base genus, degree)."""

    base_genus: int
    degree: int
    ok: bool
    checks: dict[str, bool]
    counterexamples: tuple[dict, ...]
    notes: dict

    def to_json(self) -> dict:
        return {
            "base_genus": self.base_genus,
            "degree": self.degree,
            "ok": self.ok,
            "checks": dict(self.checks),
            "counterexamples": [_finding_json(self.degree, c) for c in self.counterexamples],
            "notes": dict(self.notes),
        }


def verify_sharpness(base_genus: int, degree: int, budget: int | None = None) -> SharpnessReport:
    """Confirm by exhaustion where the genus floors are attained.

    Unbranched covers: the floor n*g - (n - 1) holds, is attained, and
    equality happens exactly for connected covers with the full n boundary
    circles.  Connected-boundary covers: the floor n*g - floor((n-1)/2)
    holds; for odd degree it is attained unbranched, with equality exactly on
    connected covers; for even degree no unbranched cover has connected
    boundary, and the minimum over one-branch-point covers (built by merging
    two boundary circles of a connected cover) equals n*g - (n-2)/2.  The
    one-branch-point stratum never attains the unbranched floor.

    Which boundary counts happen to share the connected-boundary floor value
    is recorded in the notes without being asserted.
    """
    g, n = base_genus, degree
    _check_budget(g, n, budget)
    r = _run_scan(g, n)
    a = _analyze(g, n, r["rows"])
    bound_all, bound_k1 = a["bound_all"], a["bound_k1"]
    counterexamples = list(a["violations"]) + list(a["counterexamples"])

    # One simple branch point on top of each connected cover shape: merging
    # two boundary circles (k >= 2) raises the genus by one, splitting one
    # circle (possible while k < n) keeps the genus.  Either move drops the
    # Euler characteristic by one and keeps the cover connected.
    branched: dict[tuple[int, int], dict] = {}
    for (k, genus) in sorted(a["connected"]):
        wit = a["connected"][(k, genus)]
        if k >= 2:
            branched.setdefault(
                (k - 1, genus + 1), {"from": (k, genus), "move": "merge", "witness": wit}
            )
        if k + 1 <= n:
            branched.setdefault(
                (k + 1, genus), {"from": (k, genus), "move": "split", "witness": wit}
            )

    checks: dict[str, bool] = {
        "unbranched_floor_holds": not any(
            v["check"] == "unbranched_floor" for v in a["violations"]
        ),
        "unbranched_floor_attained": a["min_overall"][0] == bound_all,
        "unbranched_floor_equality_characterized": not any(
            c["check"] == "unbranched_floor_equality" for c in a["counterexamples"]
        ),
        "connected_boundary_floor_holds": not any(
            v["check"] == "connected_boundary_floor" for v in a["violations"]
        ),
    }

    for (k, genus), info in sorted(branched.items()):
        if genus <= bound_all:
            check = "branched_floor_equality" if genus == bound_all else "branched_floor"
            counterexamples.append(
                _class_finding(check, (1, k, genus), info["witness"], move=info["move"])
            )
        if k == 1 and genus < bound_k1:
            counterexamples.append(
                _class_finding(
                    "branched_connected_boundary_floor", (1, k, genus), info["witness"],
                    move=info["move"],
                )
            )
    checks["branched_stays_above_unbranched_floor"] = not any(
        c["check"] in ("branched_floor", "branched_floor_equality") for c in counterexamples
    )

    branched_k1 = sorted(genus for (k, genus) in branched if k == 1)
    min_k1_branched = branched_k1[0] if branched_k1 else None
    min_k1_unbranched = None if a["min_k1"] is None else a["min_k1"][0]
    if n % 2:
        checks["connected_boundary_floor_attained_unbranched"] = min_k1_unbranched == bound_k1
        checks["no_branched_connected_boundary"] = min_k1_branched is None
    else:
        checks["no_unbranched_connected_boundary"] = min_k1_unbranched is None
        checks["connected_boundary_floor_attained_branched"] = min_k1_branched == bound_k1
        checks["connected_boundary_minimizers_merge_two_circles"] = all(
            info["move"] == "merge" and info["from"][0] == 2
            for (k, genus), info in branched.items()
            if k == 1 and genus == min_k1_branched
        )

    ok = all(checks.values()) and not counterexamples
    notes = {
        "unbranched_floor": bound_all,
        "connected_boundary_floor": bound_k1,
        "min_genus_overall": a["min_overall"][0],
        "min_genus_connected_boundary_unbranched": min_k1_unbranched,
        "min_genus_connected_boundary_branched": min_k1_branched,
        "floor_value_boundary_counts_unbranched": a["floor_value_ks"],
    }
    return SharpnessReport(
        base_genus=g,
        degree=n,
        ok=ok,
        checks=checks,
        counterexamples=tuple(counterexamples),
        notes=notes,
    )


def realizability_table(
    base_genus: int, degree: int, budget: int | None = None
) -> dict[tuple[int, int, int], tuple[Permutation, ...]]:
    """Every achievable (components, boundary circles, genus) triple of an
    unbranched cover, with the lexicographically first witness tuple."""
    _check_budget(base_genus, degree, budget)
    r = _run_scan(base_genus, degree)
    return {key: _witness_perms(degree, wit) for key, wit in sorted(r["rows"].items())}
