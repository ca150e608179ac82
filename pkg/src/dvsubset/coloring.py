"""Volume colorings of the complete a-uniform hypergraph on a point set.

Every a-subset (edge) of the ground set gets a color: the exact squared
volume of its simplex when that volume is nonzero, or a unique color carrying
the edge itself when the simplex is degenerate.  Degenerate edges therefore
never collide with anything, which is what lets the h variant ignore them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple

from .geometry import edge_det_denominator, edge_gram_det

VOLUME = "volume"
ZERO = "zero"


class ColorKey(NamedTuple):
    kind: str
    value: tuple  # reduced (num, den) for volume colors; the edge ids for zero

    @classmethod
    def from_det(cls, det, den):
        from math import gcd

        g = gcd(det, den)
        return cls(VOLUME, (det // g, den // g))

    @classmethod
    def from_volume(cls, q):
        q = Fraction(q)
        if q <= 0:
            raise ValueError("volume colors are positive")
        return cls(VOLUME, (q.numerator, q.denominator))

    @classmethod
    def for_zero_edge(cls, edge):
        return cls(ZERO, tuple(edge))

    @property
    def is_volume(self):
        return self.kind == VOLUME

    def volume(self):
        if self.kind != VOLUME:
            raise ValueError("not a volume color")
        return Fraction(self.value[0], self.value[1])

    def to_json(self):
        if self.kind == VOLUME:
            return {"kind": VOLUME, "value": f"{self.value[0]}/{self.value[1]}"}
        return {"kind": ZERO, "edge": list(self.value)}


@dataclass
class GoodnessReport:
    observed_m: int
    witness_tuple: tuple
    witness_color: ColorKey
    witness_extensions: list

    def to_json(self):
        return {
            "observed_m": self.observed_m,
            "witness_tuple": list(self.witness_tuple),
            "witness_color": self.witness_color.to_json(),
            "witness_extensions": list(self.witness_extensions),
        }


class Coloring:
    """Total color map over all a-subsets of a PointSet, keyed by sorted id tuples."""

    __slots__ = ("a", "pset", "colors")

    def __init__(self, a, pset, colors):
        self.a = a
        self.pset = pset
        self.colors = colors

    def __len__(self):
        return len(self.colors)

    def color_of(self, edge):
        key = tuple(sorted(edge))
        if len(set(key)) != self.a:
            raise ValueError(f"edge must be {self.a} distinct ids")
        return self.colors[key]

    def edges(self):
        return self.colors.keys()


def build_coloring(pset, a):
    """Color every a-subset of the point set by exact squared simplex volume.

    The result is independent of point insertion order in the sense that ids
    just follow the input: relabeling points relabels edges consistently.
    """
    n = len(pset)
    d = pset.dimension
    if not 2 <= a <= d + 1:
        raise ValueError(f"need 2 <= a <= d+1, got a={a}, d={d}")
    if n < a:
        raise ValueError(f"need at least a={a} points, got {n}")
    den = edge_det_denominator(pset, a)
    colors = {}
    if a == 2:
        # hot path: plain squared distances on the integer copies
        from math import gcd

        vecs = pset.scaled
        for i in range(n - 1):
            vi = vecs[i]
            for j in range(i + 1, n):
                vj = vecs[j]
                s = 0
                for x, y in zip(vi, vj):
                    t = x - y
                    s += t * t
                g = gcd(s, den)
                colors[(i, j)] = ColorKey(VOLUME, (s // g, den // g))
        return Coloring(a, pset, colors)
    for edge in combinations(range(n), a):
        det = edge_gram_det(pset, edge)
        if det == 0:
            colors[edge] = ColorKey(ZERO, edge)
        else:
            colors[edge] = ColorKey.from_det(det, den)
    return Coloring(a, pset, colors)


def color_class(coloring, tuple_ids, key):
    """Ids v outside tuple_ids with color(tuple_ids + v) == key, ascending."""
    a = coloring.a
    n = len(coloring.pset)
    anchor = tuple(sorted(tuple_ids))
    if len(anchor) != a - 1 or len(set(anchor)) != a - 1:
        raise ValueError(f"tuple must be {a - 1} distinct ids")
    if anchor and not (0 <= anchor[0] and anchor[-1] < n):
        raise ValueError("tuple ids out of range")
    members = set(anchor)
    colors = coloring.colors
    out = []
    for v in range(n):
        if v in members:
            continue
        edge = tuple(sorted(anchor + (v,)))
        if colors[edge] == key:
            out.append(v)
    return out


def goodness(coloring, cap=None):
    """Largest volume color class over any (a-1)-tuple, with a witness.

    Zero colors are unique by construction so they never contribute.  When
    `cap` is given the scan may return early with the first class found whose
    size exceeds cap; observed_m is then that class's exact size and only
    means "> cap", not the global maximum.
    """
    a = coloring.a
    counts = {}
    if a == 2:
        for edge, key in coloring.colors.items():
            if key.kind != VOLUME:
                continue
            i, j = edge
            for anchor in ((i,), (j,)):
                k = (anchor, key)
                c = counts.get(k, 0) + 1
                counts[k] = c
                if cap is not None and c > cap:
                    ext = color_class(coloring, anchor, key)
                    return GoodnessReport(len(ext), anchor, key, ext)
    else:
        for edge, key in coloring.colors.items():
            if key.kind != VOLUME:
                continue
            for anchor in combinations(edge, a - 1):
                k = (anchor, key)
                c = counts.get(k, 0) + 1
                counts[k] = c
                if cap is not None and c > cap:
                    ext = color_class(coloring, anchor, key)
                    return GoodnessReport(len(ext), anchor, key, ext)
    if not counts:
        # fully degenerate coloring: every class is a singleton behind a zero color
        edge = next(iter(coloring.colors))
        key = coloring.colors[edge]
        return GoodnessReport(1, edge[:-1], key, [edge[-1]])
    best = max(counts.values())
    anchor, key = min(k for k, c in counts.items() if c == best)
    ext = color_class(coloring, anchor, key)
    return GoodnessReport(best, anchor, key, ext)


def edge_budget_exceeded(n, a, budget):
    """True when C(n, a) tops the edge budget (the CLI warns before building)."""
    return comb(n, a) > budget


def write_coloring_csv(coloring, fh):
    """One row per edge: id0..id{a-1}, color_kind, num, den (zero rows use 0/1)."""
    a = coloring.a
    header = [f"id{i}" for i in range(a)] + ["color_kind", "num", "den"]
    fh.write(",".join(header) + "\n")
    for edge, key in coloring.colors.items():
        if key.kind == VOLUME:
            num, den = key.value
        else:
            num, den = 0, 1
        fh.write(",".join(str(x) for x in (*edge, key.kind, num, den)) + "\n")
