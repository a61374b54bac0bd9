"""Isomorph-free enumeration of regular graphs and theorem audits.

Generation is vertex-by-vertex canonical augmentation: a child (the parent
plus one new last vertex) is kept only when its added vertex lies in the
canonical last orbit of the child, and only once per parent up to
certificate equality.  Together these guarantee exactly one representative
per isomorphism class without a global seen-set, so memory stays
proportional to the search depth.

Prunes must be monotone: a violating partial graph can only have violating
completions.  Built-in prunes track pair counts incrementally; the value
of a pair whose two endpoints are both saturated can never change again,
which is what makes frozen-value constraints monotone.
"""

import hashlib
import itertools
import json
import multiprocessing
import os
import re
from dataclasses import dataclass
from typing import (Callable, Dict, Iterable, Iterator, List, Optional,
                    Sequence, Set, Tuple, Union)

from . import __version__
from .canon import canon_data, canonical_certificate, refine
from .classify import classify
from .ddg import ddg_detect
from .graphs import Graph, GraphError
from .graph6 import encode_graph6

DEFAULT_LIMITS_NOTE = ("default limits: any k for v <= 10, k <= 4 for "
                       "v <= 14, and k <= 4 for v <= 16 with long=True; "
                       "set DEZA_MAX_VERTICES to override")


def _bound_term(term: str, k: int) -> int:
    term = term.strip()
    m = re.fullmatch(r"k-(\d+)", term)
    if m:
        return max(k - int(m.group(1)), 0)
    if re.fullmatch(r"-?\d+", term):
        return int(term)
    raise GraphError(f"bad prune term {term!r}; use an integer or k-<int>")


@dataclass(frozen=True)
class PruneSpec:
    """Declarative monotone prune on partial graphs.

    max_pair_count bounds every common-neighbour count.  For pairs whose
    endpoints are both saturated (degree k, value frozen): the value must
    lie in saturated_values when given; the number of distinct frozen
    values must not exceed saturated_distinct_max; and once that many are
    present, saturated_anchor must be among them.
    """
    max_pair_count: Optional[int] = None
    saturated_values: Optional[Tuple[int, ...]] = None
    saturated_distinct_max: Optional[int] = None
    saturated_anchor: Optional[int] = None

    @staticmethod
    def from_string(spec: str, k: int) -> "PruneSpec":
        """Parse 'maxpair=k-2;sat=0,k-2;satdistinct=2;anchor=k-2'."""
        maxpair = None
        sat = None
        distinct = None
        anchor = None
        for clause in spec.split(";"):
            clause = clause.strip()
            if not clause:
                continue
            key, _, value = clause.partition("=")
            key = key.strip()
            if key == "maxpair":
                maxpair = _bound_term(value, k)
            elif key == "sat":
                sat = tuple(sorted({_bound_term(t, k)
                                    for t in value.split(",")}))
            elif key == "satdistinct":
                distinct = int(value)
            elif key == "anchor":
                anchor = _bound_term(value, k)
            else:
                raise GraphError(f"unknown prune clause {key!r}")
        return PruneSpec(maxpair, sat, distinct, anchor)


Prune = Union[None, str, PruneSpec, Callable[[Graph], bool]]


class _Partial:
    """Mutable search state with journaled undo.

    Tracks adjacency rows, degrees, all pair counts, and the multiset of
    frozen pair values (pairs whose endpoints are both saturated).
    """

    __slots__ = ("v", "k", "rows", "deg", "cnt", "frozen", "journal")

    def __init__(self, v: int, k: int):
        self.v = v
        self.k = k
        self.rows: List[int] = []
        self.deg: List[int] = []
        self.cnt: List[List[int]] = [[0] * v for _ in range(v)]
        self.frozen: Dict[int, int] = {}
        self.journal: List[Tuple[List[Tuple[int, int]], List[int]]] = []

    def graph(self) -> Graph:
        return Graph(len(self.rows), tuple(self.rows))

    def rebuild(self, rows: Sequence[int]) -> None:
        for r, mask in enumerate(rows):
            s = [j for j in range(r) if mask >> j & 1]
            if not self.add_vertex(s, None):
                raise GraphError("state rebuild failed")

    def add_vertex(self, s: Sequence[int],
                   spec: Optional[PruneSpec]) -> bool:
        """Append a vertex adjacent to s; False when spec is violated.

        Only pairs this step can affect are checked: counts through the
        new vertex and pairs that become frozen now.  On violation the
        state is left unchanged.
        """
        r = len(self.rows)
        k = self.k
        cnt = self.cnt
        maxp = spec.max_pair_count if spec else None
        ok = True
        bumps: List[Tuple[int, int]] = []
        for i, x in enumerate(s):
            for y in s[i + 1:]:
                a, b = (x, y) if x < y else (y, x)
                cnt[a][b] += 1
                bumps.append((a, b))
                if maxp is not None and cnt[a][b] > maxp:
                    ok = False
        smask = 0
        for x in s:
            smask |= 1 << x
        if ok:
            for x in range(r):
                c = (self.rows[x] & smask).bit_count()
                cnt[x][r] = c
                bumps.append((x, r))
                if maxp is not None and c > maxp:
                    ok = False
                    break
        newly = [x for x in s if self.deg[x] + 1 == k]
        if len(s) == k:
            newly.append(r)
        adds: List[int] = []
        if ok:
            sat_before = [x for x in range(r)
                          if self.deg[x] == k and x not in s]
            news = set(newly)
            sat_after = sorted(set(sat_before) | news)
            for i, x in enumerate(sat_after):
                for y in sat_after[i + 1:]:
                    if x in news or y in news:
                        adds.append(cnt[x][y])
            if spec is not None:
                ok = self._frozen_ok(adds, spec)
        if not ok:
            for a, b in bumps:
                if b == r:
                    cnt[a][b] = 0
                else:
                    cnt[a][b] -= 1
            return False
        for value in adds:
            self.frozen[value] = self.frozen.get(value, 0) + 1
        self.rows.append(smask)
        for x in s:
            self.rows[x] |= 1 << r
            self.deg[x] += 1
        self.deg.append(len(s))
        self.journal.append((bumps, adds))
        return True

    def _frozen_ok(self, adds: List[int], spec: PruneSpec) -> bool:
        if spec.saturated_values is not None:
            if any(value not in spec.saturated_values for value in adds):
                return False
        if spec.saturated_distinct_max is not None:
            distinct = set(self.frozen)
            distinct.update(adds)
            if len(distinct) > spec.saturated_distinct_max:
                return False
            if (spec.saturated_anchor is not None
                    and len(distinct) == spec.saturated_distinct_max
                    and spec.saturated_anchor not in distinct):
                return False
        return True

    def pop_vertex(self) -> None:
        bumps, adds = self.journal.pop()
        r = len(self.rows) - 1
        for value in adds:
            left = self.frozen[value] - 1
            if left:
                self.frozen[value] = left
            else:
                del self.frozen[value]
        smask = self.rows.pop()
        for x in range(r):
            if smask >> x & 1:
                self.rows[x] &= ~(1 << r)
                self.deg[x] -= 1
        self.deg.pop()
        for a, b in bumps:
            if b == r:
                self.cnt[a][b] = 0
            else:
                self.cnt[a][b] -= 1


def _normalize_prune(prune: Prune, k: int):
    """Split a prune argument into (PruneSpec or None, callable or None)."""
    if prune is None:
        return None, None
    if isinstance(prune, str):
        return PruneSpec.from_string(prune, k), None
    if isinstance(prune, PruneSpec):
        return prune, None
    if callable(prune):
        return None, prune
    raise GraphError(f"unsupported prune argument {prune!r}")


def _candidate_sets(state: _Partial) -> Iterator[Tuple[int, ...]]:
    """Neighbour sets for the next vertex, in a fixed deterministic order.

    Applies the forced-vertex rule (a vertex whose deficiency equals the
    number of vertices still to come after this one must be picked now)
    and two counting bounds on the total remaining deficiency.
    """
    v, k = state.v, state.k
    r = len(state.rows)
    rem_after = v - r - 1
    deg = state.deg
    forced: List[int] = []
    optional: List[int] = []
    total_def = 0
    for j in range(r):
        d = k - deg[j]
        total_def += d
        if d == 0:
            continue
        if d > rem_after + 1:
            return
        if d == rem_after + 1:
            forced.append(j)
        else:
            optional.append(j)
    lo = max(len(forced), k - rem_after)
    hi = min(k, len(forced) + len(optional))
    # after the step the remaining deficiency must fit in the leftover
    # vertices: sum <= rem_after*k and the excess of rem_after*k over the
    # sum must be coverable by edges among the leftovers
    num = total_def + k - rem_after * k
    lo = max(lo, (num + 1) // 2)
    num = rem_after * (rem_after - 1) - rem_after * k + total_def + k
    hi = min(hi, num // 2)
    for size in range(lo, hi + 1):
        need = size - len(forced)
        if need < 0:
            continue
        for extra in itertools.combinations(optional, need):
            yield tuple(sorted(forced + list(extra)))


def _orbit_seen(s: Tuple[int, ...], seen: Set[Tuple[int, ...]],
                gens: Sequence[Tuple[int, ...]]) -> bool:
    """True if some automorphism image of s was already processed.

    On a miss the whole orbit of s is added to seen (capped; the cap only
    costs duplicate work later, which certificate dedup absorbs).
    """
    if s in seen:
        return True
    orbit = {s}
    queue = [s]
    while queue:
        cur = queue.pop()
        for g in gens:
            img = tuple(sorted(g[x] for x in cur))
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
        if len(orbit) > 4096:
            break
    seen.update(orbit)
    return False


def _root_refinement_last_cell(g: Graph) -> Set[int]:
    """Vertices in the final cell of the refined unit partition.

    Canonical orderings list root cells in positional order, so the vertex
    in the last canonical position always comes from the last cell; this
    is a cheap necessary condition for last-orbit membership.
    """
    cells = refine(g.rows, [list(range(g.v))])
    return set(cells[-1])


def generate_regular(v: int, k: int, prune: Prune = None,
                     jobs: int = 1) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of k-regular graphs.

    The output order is deterministic and independent of jobs.  A prune
    may be a PruneSpec, its string form, or a monotone predicate on
    partial graphs; with jobs > 1 a predicate must be picklable.
    """
    if v < 1:
        raise GraphError("need at least one vertex")
    if not 0 <= k < v:
        raise GraphError(f"degree {k} out of range for {v} vertices")
    if v * k % 2:
        raise GraphError(f"no {k}-regular graph on {v} vertices: v*k is odd")
    spec, predicate = _normalize_prune(prune, k)
    if v == 1:
        g = Graph(1, (0,))
        if predicate is None or predicate(g):
            yield g
        return
    if jobs > 1:
        yield from _generate_parallel(v, k, prune, jobs)
        return
    state = _Partial(v, k)
    state.add_vertex([], spec)
    yield from _extend(state, spec, predicate, ())


def _extend(state: _Partial, spec: Optional[PruneSpec],
            predicate: Optional[Callable[[Graph], bool]],
            parent_gens: Sequence[Tuple[int, ...]]) -> Iterator[Graph]:
    v = state.v
    r = len(state.rows)
    seen_sets: Set[Tuple[int, ...]] = set()
    seen_certs: Set[bytes] = set()
    for s in _candidate_sets(state):
        if parent_gens and _orbit_seen(s, seen_sets, parent_gens):
            continue
        if not state.add_vertex(s, spec):
            continue
        child = state.graph()
        if predicate is not None and not predicate(child):
            state.pop_vertex()
            continue
        if r not in _root_refinement_last_cell(child):
            state.pop_vertex()
            continue
        data = canon_data(child)
        if r not in data.last_orbit:
            state.pop_vertex()
            continue
        if data.cert in seen_certs:
            state.pop_vertex()
            continue
        seen_certs.add(data.cert)
        if r + 1 == v:
            yield child
        else:
            yield from _extend(state, spec, predicate, data.aut_gens)
        state.pop_vertex()


def _frontier(v: int, k: int, spec: Optional[PruneSpec],
              predicate: Optional[Callable[[Graph], bool]],
              min_nodes: int) -> Tuple[int, List[Tuple[int, ...]]]:
    """Accepted partial graphs at a fixed depth, in DFS order."""
    depth = 1
    level: List[Tuple[int, ...]] = [(0,)]
    while depth < v - 1 and len(level) < min_nodes:
        nxt: List[Tuple[int, ...]] = []
        for rows in level:
            state = _Partial(v, k)
            state.rebuild(rows)
            gens = canon_data(state.graph()).aut_gens if depth > 1 else ()
            nxt.extend(_children_rows(state, spec, predicate, gens))
        depth += 1
        level = nxt
        if not level:
            break
    return depth, level


def _children_rows(state: _Partial, spec, predicate,
                   parent_gens) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    r = len(state.rows)
    seen_sets: Set[Tuple[int, ...]] = set()
    seen_certs: Set[bytes] = set()
    for s in _candidate_sets(state):
        if parent_gens and _orbit_seen(s, seen_sets, parent_gens):
            continue
        if not state.add_vertex(s, spec):
            continue
        child = state.graph()
        keep = predicate is None or predicate(child)
        if keep and r in _root_refinement_last_cell(child):
            data = canon_data(child)
            if r in data.last_orbit and data.cert not in seen_certs:
                seen_certs.add(data.cert)
                out.append(tuple(state.rows))
        state.pop_vertex()
    return out


def _subtree_task(args) -> List[Tuple[int, ...]]:
    v, k, prune, rows = args
    spec, predicate = _normalize_prune(prune, k)
    state = _Partial(v, k)
    state.rebuild(rows)
    gens = canon_data(state.graph()).aut_gens
    if len(rows) == v:
        return [rows]
    return [tuple(g.rows) for g in _extend(state, spec, predicate, gens)]


def _generate_parallel(v: int, k: int, prune: Prune,
                       jobs: int) -> Iterator[Graph]:
    spec, predicate = _normalize_prune(prune, k)
    depth, level = _frontier(v, k, spec, predicate, min_nodes=4 * jobs)
    if depth == v:
        for rows in level:
            yield Graph(v, rows)
        return
    tasks = [(v, k, prune, rows) for rows in level]
    with multiprocessing.Pool(jobs) as pool:
        for chunk in pool.imap(_subtree_task, tasks):
            for rows in chunk:
                yield Graph(v, rows)


def count_regular_classes_naive(v: int, k: int) -> int:
    """Count isomorphism classes by brute force over labeled graphs.

    Every labeled k-regular graph is generated by choosing each vertex's
    forward neighbours in turn; classes are collapsed with certificates.
    Complement symmetry keeps the dense half affordable.  Shares no logic
    with the augmentation generator.
    """
    if v < 1 or not 0 <= k < v:
        raise GraphError("bad parameters")
    if v * k % 2:
        return 0
    if k > (v - 1) // 2:
        return count_regular_classes_naive(v, v - 1 - k)
    certs: Set[bytes] = set()
    deg = [0] * v
    rows = [0] * v

    def place(i: int) -> None:
        if i == v:
            g = Graph(v, tuple(rows))
            certs.add(canonical_certificate(g).certificate_bytes)
            return
        need = k - deg[i]
        if need < 0:
            return
        avail = [j for j in range(i + 1, v) if deg[j] < k]
        if need > len(avail):
            return
        for picks in itertools.combinations(avail, need):
            for j in picks:
                deg[j] += 1
                rows[j] |= 1 << i
                rows[i] |= 1 << j
            deg[i] += need
            place(i + 1)
            deg[i] -= need
            for j in picks:
                deg[j] -= 1
                rows[j] &= ~(1 << i)
                rows[i] &= ~(1 << j)

    place(0)
    return len(certs)


def _spec_string(spec: PruneSpec) -> str:
    parts = []
    if spec.max_pair_count is not None:
        parts.append(f"maxpair={spec.max_pair_count}")
    if spec.saturated_values is not None:
        parts.append("sat=" + ",".join(map(str, spec.saturated_values)))
    if spec.saturated_distinct_max is not None:
        parts.append(f"satdistinct={spec.saturated_distinct_max}")
    if spec.saturated_anchor is not None:
        parts.append(f"anchor={spec.saturated_anchor}")
    return ";".join(parts)


@dataclass(frozen=True)
class CensusRecord:
    """One enumerated graph with its classification summary.

    Field order below is the JSON field order; records never carry
    timestamps or floats so identical runs serialize identically.
    """
    graph6: str
    v: int
    k: int
    deza: Optional[Tuple[int, int, int, int]]
    strictly_deza: bool
    srg: Optional[Tuple[int, int, int, int]]
    ddg: Optional[Tuple[int, int, int, int]]
    diameter: Optional[int]
    certificate_hash: str
    generator: Tuple[Tuple[str, object], ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "graph6": self.graph6,
            "v": self.v,
            "k": self.k,
            "deza": list(self.deza) if self.deza else None,
            "strictly_deza": self.strictly_deza,
            "srg": list(self.srg) if self.srg else None,
            "ddg": (None if self.ddg is None else
                    {"lambda1": self.ddg[0], "lambda2": self.ddg[1],
                     "m": self.ddg[2], "n": self.ddg[3]}),
            "diameter": self.diameter,
            "certificate_hash": self.certificate_hash,
            "generator": dict(self.generator),
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def build_record(g: Graph, generator: Tuple[Tuple[str, object], ...]
                 ) -> CensusRecord:
    rep = classify(g)
    det = ddg_detect(g)
    ddg = None
    if det.proper is not None:
        ddg = (det.proper.lam1, det.proper.lam2, det.proper.m, det.proper.n)
    k = g.regular_degree()
    if k is None:
        raise GraphError("census records cover regular graphs only")
    cert = canonical_certificate(g).certificate_bytes
    return CensusRecord(
        graph6=encode_graph6(g),
        v=g.v,
        k=k,
        deza=rep.deza,
        strictly_deza=rep.strictly_deza,
        srg=rep.srg,
        ddg=ddg,
        diameter=rep.diameter,
        certificate_hash=hashlib.sha256(cert).hexdigest(),
        generator=generator,
    )


_FILTER_ALIASES = {
    "all": "all",
    "deza": "deza",
    "strictly deza": "strictly-deza",
    "strictly-deza": "strictly-deza",
    "srg": "srg",
    "ddg proper": "ddg-proper",
    "ddg-proper": "ddg-proper",
    "connected": "connected",
    "deza with b=k-2": "deza(*,*,k-2,*)",
}


def _match_term(term: str, value: int, k: int, position: int) -> bool:
    term = term.strip()
    if term in ("*", "v") and position == 0:
        return True
    if term == "*":
        return True
    return _bound_term(term, k) == value


def parse_filter(spec: str) -> Callable[[CensusRecord], bool]:
    """Compile a record filter such as 'deza(*,4,k-2,1)&connected'.

    Atoms: all, connected, deza, strictly-deza, srg, ddg-proper, and
    parameter forms deza(v,k,b,a) / ddg(l1,l2,m,n) whose terms are
    integers, '*', or k-<int> resolved against the record's degree.
    """
    checks: List[Callable[[CensusRecord], bool]] = []
    for raw in spec.split("&"):
        atom = " ".join(raw.strip().lower().split())
        atom = _FILTER_ALIASES.get(atom, atom)
        m = re.fullmatch(r"(deza|ddg)\s*\(([^)]*)\)", atom)
        if m:
            kind = m.group(1)
            terms = [t.strip() for t in m.group(2).split(",")]
            if len(terms) != 4:
                raise GraphError(f"filter {raw!r} needs four parameters")

            def check(rec: CensusRecord, kind=kind, terms=terms) -> bool:
                params = rec.deza if kind == "deza" else rec.ddg
                if params is None:
                    return False
                return all(_match_term(t, p, rec.k, i)
                           for i, (t, p) in enumerate(zip(terms, params)))

            checks.append(check)
        elif atom == "all":
            checks.append(lambda rec: True)
        elif atom == "connected":
            checks.append(lambda rec: rec.diameter is not None)
        elif atom == "deza":
            checks.append(lambda rec: rec.deza is not None)
        elif atom == "strictly-deza":
            checks.append(lambda rec: rec.strictly_deza)
        elif atom == "srg":
            checks.append(lambda rec: rec.srg is not None)
        elif atom == "ddg-proper":
            checks.append(lambda rec: rec.ddg is not None)
        else:
            raise GraphError(f"unknown filter atom {raw!r}")
    return lambda rec: all(c(rec) for c in checks)


def _check_limits(v: int, k: int, long: bool) -> None:
    env = os.environ.get("DEZA_MAX_VERTICES")
    if env is not None:
        ceiling = int(env)
        if v <= ceiling:
            return
        raise GraphError(f"v={v} exceeds DEZA_MAX_VERTICES={ceiling}")
    if v <= 10:
        return
    if v <= 14 and k <= 4:
        return
    if long and v <= 16 and k <= 4:
        return
    raise GraphError(f"v={v}, k={k} outside {DEFAULT_LIMITS_NOTE}")


def _as_values(values: Union[int, Iterable[int]]) -> List[int]:
    if isinstance(values, int):
        return [values]
    return sorted(set(values))


def census(v_values: Union[int, Iterable[int]],
           k_values: Union[int, Iterable[int]],
           filter_spec: str = "all",
           out: Optional[str] = None,
           prune: Union[None, str, PruneSpec] = None,
           jobs: int = 1,
           long: bool = False) -> List[CensusRecord]:
    """Enumerate the given (v, k) cells into sorted census records.

    Records are ordered by (v, k, certificate hash).  With `out`, writes
    out.g6 (one graph6 line per record) and out.meta.jsonl, fsynced on
    completion.  Cells with odd v*k or k >= v are skipped; cells past the
    desk limits raise an error naming the limit.
    """
    accept = parse_filter(filter_spec)
    vs = _as_values(v_values)
    ks = _as_values(k_values)
    for v in vs:
        for k in ks:
            if 0 <= k < v and v * k % 2 == 0:
                _check_limits(v, k, long)
    if isinstance(prune, PruneSpec):
        prune_note: Optional[str] = _spec_string(prune)
    else:
        prune_note = prune
    records: List[CensusRecord] = []
    for v in vs:
        for k in ks:
            if not 0 <= k < v or v * k % 2:
                continue
            generator = (("version", __version__),
                         ("bounds", {"v": vs, "k": ks}),
                         ("prune", prune_note))
            cell = []
            for g in generate_regular(v, k, prune=prune, jobs=jobs):
                rec = build_record(g, generator)
                if accept(rec):
                    cell.append(rec)
            cell.sort(key=lambda r: r.certificate_hash)
            records.extend(cell)
    if out is not None:
        _write_census_files(out, records)
    return records


def _write_census_files(prefix: str, records: Sequence[CensusRecord]) -> None:
    for suffix, render in ((".g6", lambda r: r.graph6),
                           (".meta.jsonl", lambda r: r.as_json())):
        with open(prefix + suffix, "w", encoding="ascii") as fh:
            for rec in records:
                fh.write(render(rec) + "\n")
            fh.flush()
            os.fsync(fh.fileno())


@dataclass(frozen=True)
class AuditReport:
    """Outcome of checking one classification theorem by enumeration.

    found lists every graph in scope; matches pairs found graphs with
    expected cases; discrepancies carry kind 'found-but-unexpected',
    'expected-but-missing', or 'parameter-mismatch'.
    """
    theorem: int
    bounds: Dict[str, object]
    expected: Tuple[Dict[str, object], ...]
    found: Tuple[Dict[str, object], ...]
    matches: Tuple[Dict[str, object], ...]
    discrepancies: Tuple[Dict[str, object], ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def as_dict(self) -> Dict[str, object]:
        return {
            "theorem": self.theorem,
            "bounds": self.bounds,
            "expected": list(self.expected),
            "found": list(self.found),
            "matches": list(self.matches),
            "discrepancies": list(self.discrepancies),
            "ok": self.ok,
        }


def _named_graphs() -> Dict[str, Graph]:
    from .graphs import (cartesian_product, complement, complete_graph,
                         disjoint_union, fano_incidence, fano_non_incidence,
                         hypercube, petersen)
    named = {
        "grid-4x2": cartesian_product(complete_graph(4), complete_graph(2)),
        "fano-non-incidence": fano_non_incidence(),
        "heawood": fano_incidence(),
        "hypercube-4": hypercube(4),
        "petersen": petersen(),
    }
    for s in (2, 3):
        cubes = disjoint_union([hypercube(3)] * s)
        named[f"complement-{s}-cubes"] = complement(cubes)
    return named


def _cert_hash(g: Graph) -> str:
    cert = canonical_certificate(g).certificate_bytes
    return hashlib.sha256(cert).hexdigest()


def _found_entry(g: Graph, rep, case: Optional[str],
                 ddg: Optional[Tuple[int, int, int, int]] = None
                 ) -> Dict[str, object]:
    entry: Dict[str, object] = {
        "graph6": encode_graph6(g),
        "v": g.v,
        "k": g.regular_degree(),
        "deza": list(rep.deza) if rep.deza else None,
        "diameter": rep.diameter,
        "connected": rep.connected,
        "certificate_hash": _cert_hash(g),
        "case": case,
    }
    if ddg is not None:
        entry["ddg"] = list(ddg)
    return entry


def _theorem1_cells(vmax: int, kmax: int) -> List[Tuple[int, int]]:
    cells = []
    for k in range(3, kmax + 1):
        if k * (k - 1) % (k - 2):
            # the count of b-partners, k(k-1)/(k-2) when a=0, must be an
            # integer, so these degrees admit no graph at all
            continue
        for v in range(k + 2, vmax + 1):
            if v * k % 2 == 0:
                cells.append((v, k))
    return cells


def audit_theorem(theorem: int, vmax: Optional[int] = None,
                  kmax: Optional[int] = None, jobs: int = 1,
                  long: bool = False) -> AuditReport:
    """Exhaustively check one of the three classification statements.

    Theorem 1 covers connected Deza graphs with b=k-2 and a=0; theorem 2
    the a=k-3 and a=k-4 (a>0) cases; theorem 3 proper divisible design
    graphs whose larger pair constant equals k-2.  Named expected graphs
    are matched by certificate, families by parameters.
    """
    if theorem == 1:
        return _audit_theorem1(vmax or 14, kmax or 4, jobs, long)
    if theorem == 2:
        return _audit_theorem2(vmax or 10, kmax, jobs, long)
    if theorem == 3:
        return _audit_theorem3(vmax or 14, kmax or 4, jobs, long)
    raise GraphError(f"no theorem {theorem}; pick 1, 2, or 3")


def _audit_theorem1(vmax: int, kmax: int, jobs: int,
                    long: bool) -> AuditReport:
    named = _named_graphs()
    certs = {name: _cert_hash(named[name])
             for name in ("grid-4x2", "fano-non-incidence", "hypercube-4",
                          "petersen", "heawood")}
    expected: List[Dict[str, object]] = []
    unique_cases = [("grid-4x2", (8, 4, 2, 0)),
                    ("fano-non-incidence", (14, 4, 2, 0)),
                    ("hypercube-4", (16, 4, 2, 0))]
    for name, params in unique_cases:
        if params[0] <= vmax and params[1] <= kmax:
            expected.append({"case": name, "match": "certificate",
                             "deza": list(params)})
    if 10 <= vmax and 3 <= kmax:
        expected.append({"case": "petersen", "match": "certificate",
                         "deza": [10, 3, 1, 0], "diameter": 2})
    if 3 <= kmax:
        expected.append({"case": "cubic-diameter-exceeds-2",
                         "match": "family", "deza": [None, 3, 1, 0],
                         "note": "any number of members"})
    if 14 <= vmax and 3 <= kmax:
        expected.append({"case": "heawood", "match": "certificate",
                         "deza": [14, 3, 1, 0],
                         "note": "claimed to be the only graph with these "
                                 "parameters"})
    found: List[Dict[str, object]] = []
    matches: List[Dict[str, object]] = []
    discrepancies: List[Dict[str, object]] = []
    for v, k in _theorem1_cells(vmax, kmax):
        _check_limits(v, k, long)
        target = (v, k, k - 2, 0)
        prune = "maxpair=k-2;sat=0,k-2"
        for g in generate_regular(v, k, prune=prune, jobs=jobs):
            rep = classify(g)
            if not rep.connected or rep.deza != target:
                continue
            case, problem = _match_theorem1(rep, _cert_hash(g), certs)
            found.append(_found_entry(g, rep, case))
            if case is not None:
                matches.append({"case": case, "graph6": encode_graph6(g)})
            if problem is not None:
                discrepancies.append({"kind": "found-but-unexpected",
                                      "graph6": encode_graph6(g),
                                      "deza": list(rep.deza),
                                      "details": problem})
    matched_cases = {m["case"] for m in matches}
    for exp in expected:
        if exp["match"] == "certificate" and exp["case"] not in matched_cases:
            discrepancies.append({"kind": "expected-but-missing",
                                  "case": exp["case"],
                                  "details": "no enumerated graph matched "
                                             "this certificate"})
    bounds = {"vmax": vmax, "kmax": kmax,
              "scope": "connected Deza graphs with b=k-2 and a=0"}
    return AuditReport(1, bounds, tuple(expected), tuple(found),
                       tuple(matches), tuple(discrepancies))


def _match_theorem1(rep, cert_hash: str,
                    certs: Dict[str, str]) -> Tuple[Optional[str],
                                                    Optional[str]]:
    v, k, b, a = rep.deza
    if (v, k) == (8, 4):
        if cert_hash == certs["grid-4x2"]:
            return "grid-4x2", None
        return None, "an (8,4,2,0) graph other than the 4x2 rook's graph"
    if (v, k) == (14, 4):
        if cert_hash == certs["fano-non-incidence"]:
            return "fano-non-incidence", None
        return None, "a (14,4,2,0) graph other than the plane " \
                     "non-incidence graph"
    if (v, k) == (16, 4):
        if cert_hash == certs["hypercube-4"]:
            return "hypercube-4", None
        return None, "a (16,4,2,0) graph other than the 4-cube"
    if k == 3:
        if rep.diameter == 2:
            if cert_hash == certs["petersen"]:
                return "petersen", None
            return None, "a diameter-2 (v,3,1,0) graph other than the " \
                         "Petersen graph"
        if v == 14 and cert_hash != certs["heawood"]:
            return ("cubic-diameter-exceeds-2",
                    "a (14,3,1,0) graph that is not the point-line "
                    "incidence graph, contradicting the uniqueness claim")
        if v == 14:
            return "heawood", None
        return "cubic-diameter-exceeds-2", None
    return None, f"parameters {rep.deza} outside every listed case"


def _audit_theorem2(vmax: int, kmax: Optional[int], jobs: int,
                    long: bool) -> AuditReport:
    named = _named_graphs()
    expected: List[Dict[str, object]] = []
    if 8 <= vmax:
        expected.append({"case": "strict-deza-(8,4,2,1)", "match": "family",
                         "deza": [8, 4, 2, 1], "verdict": "strictly-deza"})
    if 9 <= vmax:
        expected.append({"case": "strict-deza-(9,4,2,1)", "match": "family",
                         "deza": [9, 4, 2, 1], "verdict": "strictly-deza"})
        expected.append({"case": "srg-(9,4,1,2)", "match": "family",
                         "deza": [9, 4, 2, 1], "verdict": "srg"})
    if 10 <= vmax:
        expected.append({"case": "srg-(10,6,3,4)", "match": "family",
                         "deza": [10, 6, 4, 3], "verdict": "srg"})
    cube_certs: Dict[str, str] = {}
    for s in (2, 3):
        params = (8 * s, 8 * (s - 1) + 4, 8 * (s - 1) + 2, 8 * (s - 1))
        if params[0] <= vmax and params[1] <= (kmax or params[0] - 2):
            name = f"complement-{s}-cubes"
            cube_certs[name] = _cert_hash(named[name])
            expected.append({"case": name, "match": "certificate",
                             "deza": list(params)})
    found: List[Dict[str, object]] = []
    matches: List[Dict[str, object]] = []
    discrepancies: List[Dict[str, object]] = []
    for gap in (3, 4):
        for v, k, g, rep in _theorem2_scan(vmax, kmax, gap, jobs, long):
            case, problem = _match_theorem2(rep, _cert_hash(g), gap,
                                            cube_certs)
            found.append(_found_entry(g, rep, case))
            if case is not None:
                matches.append({"case": case, "graph6": encode_graph6(g)})
            if problem is not None:
                discrepancies.append({"kind": "found-but-unexpected",
                                      "graph6": encode_graph6(g),
                                      "deza": list(rep.deza),
                                      "details": problem})
    matched_cases = {m["case"] for m in matches}
    for exp in expected:
        if exp["case"] not in matched_cases:
            discrepancies.append({"kind": "expected-but-missing",
                                  "case": exp["case"],
                                  "details": "no enumerated graph realized "
                                             "this case"})
    bounds = {"vmax": vmax, "kmax": kmax,
              "scope": "connected Deza graphs with b=k-2 and "
                       "a in {k-3, k-4}, a>0"}
    return AuditReport(2, bounds, tuple(expected), tuple(found),
                       tuple(matches), tuple(discrepancies))


def _theorem2_scan(vmax: int, kmax: Optional[int], gap: int, jobs: int,
                   long: bool):
    for v in range(5, vmax + 1):
        top = min(kmax if kmax is not None else v - 2, v - 2)
        for k in range(gap + 1, top + 1):
            if v * k % 2:
                continue
            a = k - gap
            # b-partner count: elementary double counting, must be a
            # positive integer at most v-1 for any realization
            num = k * (k - 1) - a * (v - 1)
            if num <= 0 or num % (gap - 2) or num // (gap - 2) > v - 1:
                continue
            _check_limits(v, k, long)
            target = (v, k, k - 2, a)
            prune = f"maxpair=k-2;sat=k-{gap},k-2"
            for g in generate_regular(v, k, prune=prune, jobs=jobs):
                rep = classify(g)
                if rep.connected and rep.deza == target:
                    yield v, k, g, rep


def _match_theorem2(rep, cert_hash: str, gap: int,
                    cube_certs: Dict[str, str]) -> Tuple[Optional[str],
                                                         Optional[str]]:
    v, k, b, a = rep.deza
    if gap == 3:
        if (v, k) == (8, 4) and rep.strictly_deza:
            return "strict-deza-(8,4,2,1)", None
        if (v, k) == (9, 4):
            if rep.strictly_deza:
                return "strict-deza-(9,4,2,1)", None
            if rep.srg == (9, 4, 1, 2):
                return "srg-(9,4,1,2)", None
        if rep.srg == (10, 6, 3, 4):
            return "srg-(10,6,3,4)", None
        return None, f"parameters {rep.deza} outside every a=k-3 case"
    s = v // 8
    name = f"complement-{s}-cubes"
    if name in cube_certs and cert_hash == cube_certs[name]:
        return name, None
    return None, f"parameters {rep.deza} outside every a=k-4 case"


def _audit_theorem3(vmax: int, kmax: int, jobs: int,
                    long: bool) -> AuditReport:
    named = _named_graphs()
    listed_params = {
        "fano-non-incidence": (14, 4, 2, 0, 2, 7),
        "heawood": (14, 3, 1, 0, 2, 7),
        "grid-4x2": (8, 4, 2, 0, 2, 4),
    }
    certs = {name: _cert_hash(named[name]) for name in listed_params}
    expected = []
    for name, params in listed_params.items():
        if params[0] <= vmax and params[1] <= kmax:
            expected.append({"case": name, "match": "certificate",
                             "ddg": list(params)})
    found: List[Dict[str, object]] = []
    matches: List[Dict[str, object]] = []
    discrepancies: List[Dict[str, object]] = []
    for k in range(3, kmax + 1):
        for v in range(k + 1, vmax + 1):
            if v * k % 2:
                continue
            _check_limits(v, k, long)
            prune = "maxpair=k-2;satdistinct=2;anchor=k-2"
            for g in generate_regular(v, k, prune=prune, jobs=jobs):
                det = ddg_detect(g)
                if det.proper is None:
                    continue
                res = det.proper
                if max(res.lam1, res.lam2) != k - 2:
                    continue
                computed = res.params
                rep = classify(g)
                cert_hash = _cert_hash(g)
                case = None
                for name in listed_params:
                    if cert_hash == certs[name]:
                        case = name
                        break
                found.append(_found_entry(
                    g, rep, case,
                    ddg=(res.lam1, res.lam2, res.m, res.n)))
                if case is None:
                    discrepancies.append({
                        "kind": "found-but-unexpected",
                        "graph6": encode_graph6(g),
                        "ddg": list(computed),
                        "details": "a proper divisible design graph with "
                                   "larger constant k-2 not on the list"})
                    continue
                matches.append({"case": case, "graph6": encode_graph6(g)})
                if computed != listed_params[case]:
                    discrepancies.append({
                        "kind": "parameter-mismatch",
                        "case": case,
                        "graph6": encode_graph6(g),
                        "listed": list(listed_params[case]),
                        "computed": list(computed),
                        "details": "the listed parameter tuple does not "
                                   "match the computed one"})
    matched_cases = {m["case"] for m in matches}
    for exp in expected:
        if exp["case"] not in matched_cases:
            discrepancies.append({"kind": "expected-but-missing",
                                  "case": exp["case"],
                                  "details": "no enumerated graph matched "
                                             "this certificate"})
    bounds = {"vmax": vmax, "kmax": kmax,
              "scope": "proper divisible design graphs whose larger pair "
                       "constant equals k-2"}
    return AuditReport(3, bounds, tuple(expected), tuple(found),
                       tuple(matches), tuple(discrepancies))
