"""Pair-count classification: Deza / strictly Deza / SRG / (0,lambda) verdicts.

A Deza graph (v,k,b,a) is k-regular and every two distinct vertices have
either b or a common neighbours (b >= a, both values realized).  Strictly
Deza additionally means diameter 2 and not strongly regular.  Unlike the SRG
verdict, the Deza verdict ignores whether a pair is adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .canon import canon_data
from .graphs import Graph, InternalInvariantError, hypercube


def common_neighbour_count(g: Graph, u: int, w: int) -> int:
    if u == w:
        raise ValueError("common neighbour count needs two distinct vertices")
    return (g.rows[u] & g.rows[w]).bit_count()


@dataclass(frozen=True)
class ClassificationReport:
    v: int
    connected: bool
    regular: Optional[int]            # common degree, None if irregular
    common_values: Tuple[int, ...]    # sorted distinct pair counts
    deza: Optional[Tuple[int, int, int, int]]        # (v, k, b, a)
    srg: Optional[Tuple[int, int, int, int]]         # (v, k, lambda, mu)
    degenerate: Optional[str]         # "complete" / "edgeless" / "trivial"
    strictly_deza: bool
    zero_lambda: Optional[int]        # lambda when values within {0, lambda}
    diameter: Optional[int]           # None = disconnected (infinite)
    alpha: Optional[int]              # per-vertex count of a-partners
    beta: Optional[int]               # per-vertex count of b-partners

    def as_dict(self) -> dict:
        return {
            "v": self.v,
            "connected": self.connected,
            "regular": self.regular,
            "common_values": list(self.common_values),
            "deza": list(self.deza) if self.deza else None,
            "srg": list(self.srg) if self.srg else None,
            "degenerate": self.degenerate,
            "strictly_deza": self.strictly_deza,
            "zero_lambda": self.zero_lambda,
            "diameter": self.diameter,
            "alpha": self.alpha,
            "beta": self.beta,
        }


def classify(g: Graph) -> ClassificationReport:
    v = g.v
    regular = g.regular_degree()
    adj_values: set[int] = set()
    non_values: set[int] = set()
    for i in range(v):
        ri = g.rows[i]
        for j in range(i + 1, v):
            c = (ri & g.rows[j]).bit_count()
            if ri >> j & 1:
                adj_values.add(c)
            else:
                non_values.add(c)
    values = tuple(sorted(adj_values | non_values))

    degenerate = None
    if v == 1:
        degenerate = "trivial"
    elif regular == v - 1:
        degenerate = "complete"
    elif regular == 0 and v >= 2:
        degenerate = "edgeless"

    deza = None
    if regular is not None and len(values) == 2 and degenerate is None:
        deza = (v, regular, values[1], values[0])

    srg = None
    if (regular is not None and degenerate is None
            and len(adj_values) == 1 and len(non_values) == 1):
        srg = (v, regular, next(iter(adj_values)), next(iter(non_values)))

    connected = g.is_connected()
    diameter = g.diameter()
    strictly = deza is not None and diameter == 2 and srg is None

    zero_lambda = None
    nonzero = [c for c in values if c]
    if connected and len(nonzero) == 1:
        zero_lambda = nonzero[0]

    alpha = beta = None
    if deza is not None:
        _, k, b, a = deza
        betas = set()
        for i in range(v):
            ri = g.rows[i]
            betas.add(sum(1 for j in range(v) if j != i
                          and (ri & g.rows[j]).bit_count() == b))
        if len(betas) != 1:
            raise InternalInvariantError(
                f"per-vertex b-partner count not constant: {sorted(betas)}")
        beta = betas.pop()
        alpha = v - 1 - beta

    return ClassificationReport(
        v=v, connected=connected, regular=regular, common_values=values,
        deza=deza, srg=srg, degenerate=degenerate, strictly_deza=strictly,
        zero_lambda=zero_lambda, diameter=diameter, alpha=alpha, beta=beta)


def beta_formula(v: int, k: int, b: int, a: int) -> Fraction:
    """Counting identity for the number of b-partners of any vertex of a
    (v,k,b,a) Deza graph: beta = (k(k-1) - a(v-1)) / (b-a).  A non-integral
    or out-of-range value rules the parameter tuple out."""
    if b == a:
        raise ValueError("degenerate Deza parameters: b == a")
    return Fraction(k * (k - 1) - a * (v - 1), b - a)


@dataclass(frozen=True)
class ZeroLambdaAudit:
    lam: int
    k: int
    v: int
    diameter: int
    mulder_applicable: bool        # bounds proved for lambda >= 2 only
    v_bound_holds: bool            # v <= 2^k
    v_bound_equality: bool
    diameter_bound_holds: bool     # diameter <= k
    diameter_bound_equality: bool
    hypercube_confirmed: Optional[bool]  # cert-equal to H(k,2) at equality


def zero_lambda_audit(g: Graph) -> ZeroLambdaAudit:
    """Check the (0,lambda) degree/diameter bounds: a connected k-regular
    (0,lambda) graph with lambda >= 2 has v <= 2^k and diameter <= k, with
    equality only for the k-cube."""
    report = classify(g)
    if not report.connected:
        raise ValueError("zero-lambda audit needs a connected graph")
    if report.zero_lambda is None:
        raise ValueError("not a (0,lambda) graph: "
                         f"common values {report.common_values}")
    if report.regular is None:
        raise ValueError("zero-lambda audit needs a regular graph")
    lam = report.zero_lambda
    k = report.regular
    assert report.diameter is not None
    d = report.diameter
    v_bound = 1 << k
    v_eq = g.v == v_bound
    confirmed = None
    if v_eq:
        confirmed = canon_data(g).cert == canon_data(hypercube(k)).cert
    return ZeroLambdaAudit(
        lam=lam, k=k, v=g.v, diameter=d,
        mulder_applicable=lam >= 2,
        v_bound_holds=g.v <= v_bound, v_bound_equality=v_eq,
        diameter_bound_holds=d <= k, diameter_bound_equality=d == k,
        hypercube_confirmed=confirmed)
