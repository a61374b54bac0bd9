"""Divisible design graph detection and partition audits.

A divisible design graph on parameters (v, k, lam1, lam2, m, n) is a
k-regular graph with a partition into m classes of size n such that
vertices share lam1 common neighbours inside a class and lam2 across.
The design is proper when m > 1, n > 1 and lam1 != lam2; otherwise the
certification is improper and carries no structure beyond the counts.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .classify import classify
from .graphs import Graph, GraphError, InternalInvariantError

Params = Tuple[int, int, int, int, int, int]


@dataclass(frozen=True)
class DdgResult:
    """A verified proper divisible design structure on a graph."""
    v: int
    k: int
    lam1: int
    lam2: int
    m: int
    n: int
    classes: Tuple[Tuple[int, ...], ...]
    quotient: Optional[Tuple[Tuple[int, ...], ...]]

    @property
    def params(self) -> Params:
        return (self.v, self.k, self.lam1, self.lam2, self.m, self.n)

    def as_dict(self) -> dict:
        return {
            "v": self.v, "k": self.k,
            "lam1": self.lam1, "lam2": self.lam2,
            "m": self.m, "n": self.n,
            "classes": [list(c) for c in self.classes],
            "quotient": None if self.quotient is None
            else [list(r) for r in self.quotient],
        }


@dataclass(frozen=True)
class DdgDetection:
    """Outcome of scanning a graph for divisible design structure.

    proper holds the unique proper certification when one exists.  When
    every vertex pair shares the same number of common neighbours, any
    split into equal classes certifies an improper design; improper then
    lists those parameter tuples, one per divisor split of v.
    """
    regular: bool
    values: Tuple[int, ...]
    proper: Optional[DdgResult]
    improper: Tuple[Params, ...]

    def as_dict(self) -> dict:
        return {
            "regular": self.regular,
            "values": list(self.values),
            "proper": None if self.proper is None else self.proper.as_dict(),
            "improper": [list(p) for p in self.improper],
        }


def _pair_value(g: Graph, u: int, w: int) -> int:
    return (g.rows[u] & g.rows[w]).bit_count()


def _classes_for_value(g: Graph, lam1: int) -> Optional[Tuple[Tuple[int, ...], ...]]:
    """Group vertices by the relation 'shares lam1 common neighbours'.

    The candidate class of u is forced: u itself plus every w whose pair
    count with u equals lam1.  Returns the classes when those masks form
    an honest partition into equal-size cells, else None.
    """
    v = g.v
    masks: List[int] = []
    for u in range(v):
        mk = 1 << u
        for w in range(v):
            if w != u and _pair_value(g, u, w) == lam1:
                mk |= 1 << w
        masks.append(mk)
    for u in range(v):
        mu = masks[u]
        rest = mu & ~(1 << u)
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if masks[w] != mu:
                return None
    seen: List[int] = []
    for mk in masks:
        if mk not in seen:
            seen.append(mk)
    sizes = {mk.bit_count() for mk in seen}
    if len(sizes) != 1:
        return None
    classes = []
    for mk in seen:
        cls = []
        while mk:
            x = (mk & -mk).bit_length() - 1
            mk &= mk - 1
            cls.append(x)
        classes.append(tuple(cls))
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


def equitable_check(g: Graph, classes: Sequence[Sequence[int]]):
    """Neighbour counts into each class, when constant per source class.

    Returns (quotient, None) with quotient[i][j] = neighbours a vertex of
    class i has in class j, or (None, witness) naming the first pair of
    same-class vertices whose counts into some class disagree.
    """
    cmasks = []
    for cls in classes:
        mk = 0
        for x in cls:
            if not 0 <= x < g.v:
                raise GraphError(f"partition names vertex {x} outside range")
            mk |= 1 << x
        cmasks.append(mk)
    combined = 0
    for mk in cmasks:
        combined |= mk
    if combined != (1 << g.v) - 1 or sum(mk.bit_count() for mk in cmasks) != g.v:
        raise GraphError("classes must partition the vertex set")
    quotient = []
    for i, cls in enumerate(classes):
        base = [(g.rows[cls[0]] & cmasks[j]).bit_count()
                for j in range(len(classes))]
        for u in cls[1:]:
            for j in range(len(classes)):
                c = (g.rows[u] & cmasks[j]).bit_count()
                if c != base[j]:
                    return None, (i, j, cls[0], u, base[j], c)
        quotient.append(tuple(base))
    return tuple(quotient), None


def ddg_detect(g: Graph) -> DdgDetection:
    """Find the divisible design structure of a graph, if any.

    For two distinct pair values each value is tried as the within-class
    constant; the class partition is forced by the relation masks, so at
    most one candidate can survive (two survivors would need class sizes
    n1 + n2 = v + 1 with n1 * n2 <= v, impossible once both exceed 1).
    """
    k = g.regular_degree()
    if k is None:
        return DdgDetection(False, (), None, ())
    values = sorted({_pair_value(g, u, w)
                     for u in range(g.v) for w in range(u + 1, g.v)})
    if len(values) == 1:
        lam = values[0]
        improper = tuple((g.v, k, lam, lam, m, g.v // m)
                         for m in range(1, g.v + 1) if g.v % m == 0)
        return DdgDetection(True, tuple(values), None, improper)
    if len(values) != 2:
        return DdgDetection(True, tuple(values), None, ())

    found: List[DdgResult] = []
    for lam1, lam2 in ((values[0], values[1]), (values[1], values[0])):
        classes = _classes_for_value(g, lam1)
        if classes is None:
            continue
        n = len(classes[0])
        m = len(classes)
        if m == 1 or n == 1:
            continue
        for cls in classes:
            for i, u in enumerate(cls):
                for w in cls[i + 1:]:
                    if _pair_value(g, u, w) != lam1:
                        raise InternalInvariantError(
                            "partition violates its defining pair value")
        quotient, _ = equitable_check(g, classes)
        found.append(DdgResult(g.v, k, lam1, lam2, m, n, classes, quotient))
    if len(found) > 1:
        raise InternalInvariantError(
            f"two proper certifications on one graph: "
            f"{found[0].params} and {found[1].params}")
    return DdgDetection(True, tuple(values),
                        found[0] if found else None, ())


def rho_closure_shortcut(g: Graph) -> DdgResult:
    """Class partition via the high-value relation, without a full scan.

    For a regular graph with pair values a < b satisfying a < 2b - k the
    relation 'equal or sharing b common neighbours' is transitive, so its
    classes can be read off directly.  Raises GraphError when the value
    structure or the inequality precondition fails; the transitivity
    itself is an invariant and its failure signals a bug.
    """
    rep = classify(g)
    if rep.deza is None or rep.regular is None:
        raise GraphError("need a regular graph with exactly two pair values")
    lo, hi = sorted(rep.common_values)
    k = rep.regular
    if not lo < 2 * hi - k:
        raise GraphError(
            f"precondition a < 2b - k fails: {lo} >= {2 * hi - k}")
    classes = _classes_for_value(g, hi)
    if classes is None:
        raise InternalInvariantError(
            "high-value relation failed to be an equivalence despite "
            "a < 2b - k")
    m, n = len(classes), len(classes[0])
    quotient, _ = equitable_check(g, classes)
    return DdgResult(g.v, k, hi, lo, m, n, classes, quotient)


@dataclass(frozen=True)
class ClassAudit:
    """Structural facts about one class of a design partition.

    witness_size is the number of vertices adjacent to every member of
    the class; divisible records whether the class size divides it.
    """
    index: int
    coclique: bool
    witness_size: int
    divisible: bool


def class_audits(g: Graph, result: DdgResult) -> Tuple[ClassAudit, ...]:
    """Per-class coclique and common-neighbourhood checks."""
    out = []
    for i, cls in enumerate(result.classes):
        coclique = all(not g.has_edge(u, w)
                       for a, u in enumerate(cls) for w in cls[a + 1:])
        common = (1 << g.v) - 1
        for x in cls:
            common &= g.rows[x]
        size = common.bit_count()
        out.append(ClassAudit(i, coclique, size, size % result.n == 0))
    return tuple(out)
