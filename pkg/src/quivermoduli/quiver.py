"""Quivers, dimension vectors, Euler forms and stability functionals.

A quiver here is a finite directed graph without loops or oriented cycles.
Vertices are kept in a topological order (arrows always point forward in the
stored order), which is also the total order used by the word combinatorics.
"""

from __future__ import annotations

import json
import math
from collections.abc import Mapping
from fractions import Fraction
from itertools import product

from .errors import InputError

__all__ = [
    "DimVector",
    "Quiver",
    "RelaxedQuiver",
    "Stability",
    "LoopReduction",
    "kronecker_quiver",
    "linear_quiver",
    "local_quiver",
    "birational_type",
    "loop_reduction",
]


class DimVector(Mapping):
    """Immutable map vertex -> nonnegative integer."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries):
        clean = {}
        for v, n in dict(entries).items():
            if not isinstance(n, int) or isinstance(n, bool):
                raise InputError(f"dimension at {v!r} must be an integer, got {n!r}")
            if n < 0:
                raise InputError(f"dimension at {v!r} is negative: {n}")
            clean[str(v)] = n
        object.__setattr__(self, "_entries", clean)
        object.__setattr__(self, "_hash", None)

    def __getitem__(self, v):
        return self._entries.get(v, 0)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, DimVector):
            return NotImplemented
        return self._stripped() == other._stripped()

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._stripped().items())))
        return self._hash

    def _stripped(self):
        return {v: n for v, n in self._entries.items() if n != 0}

    def __add__(self, other):
        keys = set(self._entries) | set(other._entries)
        return DimVector({v: self[v] + other[v] for v in keys})

    def __sub__(self, other):
        keys = set(self._entries) | set(other._entries)
        return DimVector({v: self[v] - other[v] for v in keys})

    def __mul__(self, n):
        return DimVector({v: k * n for v, k in self._entries.items()})

    __rmul__ = __mul__

    def __le__(self, other):
        keys = set(self._entries) | set(other._entries)
        return all(self[v] <= other[v] for v in keys)

    def __lt__(self, other):
        return self <= other and self != other

    def total(self):
        """Total dimension: the sum of all entries."""
        return sum(self._entries.values())

    def is_zero(self):
        return all(n == 0 for n in self._entries.values())

    def support(self):
        return frozenset(v for v, n in self._entries.items() if n > 0)

    def to_json(self):
        return {v: self._entries[v] for v in sorted(self._entries)}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise InputError("dimension vector JSON must be an object")
        return cls(data)

    def __repr__(self):
        inner = ", ".join(f"{v}: {n}" for v, n in sorted(self._entries.items()))
        return f"DimVector({{{inner}}})"


class Quiver:
    """Finite quiver without loops or oriented cycles.

    ``vertices`` is stored as a topological order (stable with respect to the
    input order), so an arrow i -> j always has i before j.
    """

    __slots__ = ("vertices", "arrows", "_index", "_arrow_counts", "_hash")

    def __init__(self, vertices, arrows):
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("duplicate vertex names")
        arrows = tuple((str(s), str(t)) for s, t in arrows)
        vset = set(vertices)
        for s, t in arrows:
            if s not in vset or t not in vset:
                raise InputError(f"arrow {s}->{t} uses an unknown vertex")
            if s == t:
                raise InputError(f"loop at vertex {s!r} is not allowed")
        order = self._topological_order(vertices, arrows)
        object.__setattr__(self, "vertices", order)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(order)})
        counts = {}
        for s, t in arrows:
            counts[(s, t)] = counts.get((s, t), 0) + 1
        object.__setattr__(self, "_arrow_counts", counts)
        object.__setattr__(self, "_hash", hash((order, arrows)))

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    @staticmethod
    def _topological_order(vertices, arrows):
        succ = {v: [] for v in vertices}
        indeg = {v: 0 for v in vertices}
        for s, t in arrows:
            succ[s].append(t)
            indeg[t] += 1
        # Kahn's algorithm, ties broken by input order for determinism.
        order = []
        ready = [v for v in vertices if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for t in succ[v]:
                indeg[t] -= 1
            ready = [w for w in vertices if indeg[w] == 0 and w not in order]
        if len(order) != len(vertices):
            raise InputError("quiver contains an oriented cycle")
        return tuple(order)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and sorted(self.arrows) == sorted(other.arrows)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Quiver(vertices={list(self.vertices)}, arrows={list(self.arrows)})"

    # -- basic queries -----------------------------------------------------

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def arrow_count(self, s, t):
        return self._arrow_counts.get((s, t), 0)

    def check_vector(self, d):
        if not set(d.support()) <= set(self.vertices):
            extra = sorted(set(d.support()) - set(self.vertices))
            raise InputError(f"dimension vector mentions unknown vertices {extra}")

    def tup(self, d):
        """Dimension vector as a tuple in the canonical vertex order."""
        self.check_vector(d)
        return tuple(d[v] for v in self.vertices)

    def vec(self, t):
        return DimVector(dict(zip(self.vertices, t)))

    def simple(self, v):
        self.index(v)
        return DimVector({v: 1})

    # -- forms -------------------------------------------------------------

    def euler(self, d, e):
        """Euler form <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j."""
        self.check_vector(d)
        self.check_vector(e)
        val = sum(d[v] * e[v] for v in self.vertices)
        for s, t in self.arrows:
            val -= d[s] * e[t]
        return val

    def euler_matrix(self):
        n = len(self.vertices)
        rows = []
        for i, vi in enumerate(self.vertices):
            rows.append(tuple((1 if i == j else 0) - self.arrow_count(vi, vj)
                              for j, vj in enumerate(self.vertices)))
        return tuple(rows)

    def symmetric_form(self, d, e):
        """(d, e) = <d,e> + <e,d>, the Cartan pairing."""
        return self.euler(d, e) + self.euler(e, d)

    def cartan_matrix(self):
        E = self.euler_matrix()
        n = len(E)
        return tuple(tuple(E[i][j] + E[j][i] for j in range(n)) for i in range(n))

    def undirected_adjacent(self, u, v):
        return self.arrow_count(u, v) + self.arrow_count(v, u) > 0

    # -- enumeration helpers ----------------------------------------------

    def vectors_below(self, bound, include_zero=False):
        """All dimension vectors 0 <= e <= bound, lexicographic in vertex order."""
        b = self.tup(bound)
        for t in product(*(range(x + 1) for x in b)):
            if not include_zero and all(x == 0 for x in t):
                continue
            yield self.vec(t)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [{"from": s, "to": t} for s, t in self.arrows],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad quiver JSON: {exc}") from None
        try:
            vertices = data["vertices"]
            arrows = [(a["from"], a["to"]) for a in data["arrows"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad quiver JSON structure: {exc}") from None
        return cls(vertices, arrows)


class RelaxedQuiver:
    """Quiver allowed to carry loops; only produced by :func:`local_quiver`.

    No computations beyond pretty-printing are supported here.
    """

    __slots__ = ("vertices", "loop_counts", "arrow_counts")

    def __init__(self, vertices, arrow_counts):
        self.vertices = tuple(vertices)
        self.arrow_counts = dict(arrow_counts)
        self.loop_counts = {v: self.arrow_counts.get((v, v), 0) for v in self.vertices}

    def arrow_count(self, s, t):
        return self.arrow_counts.get((s, t), 0)

    def __repr__(self):
        parts = []
        for (s, t), n in sorted(self.arrow_counts.items()):
            if n:
                parts.append(f"{s}->{t} x{n}")
        return f"RelaxedQuiver({list(self.vertices)}; {', '.join(parts)})"

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [{"from": s, "to": t, "count": n}
                       for (s, t), n in sorted(self.arrow_counts.items()) if n],
        }


class Stability:
    """Integer linear functional theta with its exact rational slope."""

    __slots__ = ("theta",)

    def __init__(self, theta):
        clean = {}
        for v, n in dict(theta).items():
            if not isinstance(n, int) or isinstance(n, bool):
                raise InputError(f"theta at {v!r} must be an integer, got {n!r}")
            clean[str(v)] = n
        object.__setattr__(self, "theta", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Stability is immutable")

    def __getitem__(self, v):
        return self.theta.get(v, 0)

    def value(self, d):
        return sum(self[v] * n for v, n in d.items())

    def slope(self, d):
        total = d.total()
        if total == 0:
            raise InputError("slope of the zero dimension vector is undefined")
        return Fraction(self.value(d), total)

    def king_weight(self, ambient, e):
        """King's modified functional mu(ambient) * dim e - theta(e)."""
        return self.slope(ambient) * e.total() - self.value(e)

    def key(self, quiver):
        return tuple(self[v] for v in quiver.vertices)

    def to_json(self):
        return {v: n for v, n in sorted(self.theta.items())}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise InputError("stability JSON must be an object")
        return cls(data)

    def __repr__(self):
        return f"Stability({self.to_json()})"


# -- standard quivers ------------------------------------------------------

def kronecker_quiver(m):
    """The m-arrow Kronecker quiver K_m on vertices i, j."""
    if m < 0:
        raise InputError("arrow count must be nonnegative")
    return Quiver(["i", "j"], [("i", "j")] * m)


def linear_quiver(n):
    """Linearly ordered type-A quiver 1 -> 2 -> ... -> n."""
    if n < 1:
        raise InputError("need at least one vertex")
    names = [str(k) for k in range(1, n + 1)]
    return Quiver(names, [(names[k], names[k + 1]) for k in range(n - 1)])


# -- derived constructions -------------------------------------------------

def local_quiver(quiver, stables):
    """Local quiver of a polystable point sum_k X_k^{m_k}.

    ``stables`` is a list of (dimension vector, multiplicity) pairs. The
    result has delta_{k,l} - <e_k, e_l> arrows from k to l (loops allowed)
    and dimension vector (m_1, ..., m_s).
    """
    if not stables:
        raise InputError("need at least one stable summand")
    dims = []
    mults = []
    for e, m in stables:
        if e.is_zero():
            raise InputError("stable summand with zero dimension vector")
        if not isinstance(m, int) or m < 1:
            raise InputError(f"multiplicity must be a positive integer, got {m!r}")
        quiver.check_vector(e)
        dims.append(e)
        mults.append(m)
    s = len(dims)
    names = [str(k + 1) for k in range(s)]
    counts = {}
    for k in range(s):
        for l in range(s):
            n = (1 if k == l else 0) - quiver.euler(dims[k], dims[l])
            if n < 0:
                raise InputError(
                    f"negative arrow count {n} between summands {k + 1} and {l + 1}; "
                    "input is not a geometrically sensible polystable point")
            if n:
                counts[(names[k], names[l])] = n
    return RelaxedQuiver(names, counts), DimVector(dict(zip(names, mults)))


def birational_type(quiver, d):
    """(n, p) with n = gcd of the entries and p = 1 - <d/n, d/n>."""
    quiver.check_vector(d)
    if d.is_zero():
        raise InputError("birational type of the zero vector is undefined")
    n = math.gcd(*[x for x in quiver.tup(d)])
    base = quiver.vec(tuple(x // n for x in quiver.tup(d)))
    return n, 1 - quiver.euler(base, base)


class LoopReduction:
    """Embedding data of m-tuples of n x n matrices into Kronecker moduli.

    A tuple (A_1, ..., A_m) maps to the K_{m+1}-representation
    (id_n, A_1, ..., A_m) of dimension vector n i + n j, with stability i*.
    """

    __slots__ = ("m", "n", "quiver", "dim", "stability", "identity_arrow_index")

    def __init__(self, m, n):
        if m < 0 or n < 1:
            raise InputError("need m >= 0 loops and n >= 1")
        self.m = m
        self.n = n
        self.quiver = kronecker_quiver(m + 1)
        self.dim = DimVector({"i": n, "j": n})
        self.stability = Stability({"i": 1, "j": 0})
        self.identity_arrow_index = 0

    def embed(self, mats):
        """Prefix an m-tuple of n x n matrices with the identity matrix."""
        if len(mats) != self.m:
            raise InputError(f"expected {self.m} matrices, got {len(mats)}")
        ident = tuple(tuple(1 if r == c else 0 for c in range(self.n)) for r in range(self.n))
        return (ident,) + tuple(tuple(tuple(row) for row in a) for a in mats)

    def rank_stratum(self, r):
        """Metadata for the stratum where the first arrow has rank r."""
        if not 0 <= r <= self.n:
            raise InputError(f"rank must lie in 0..{self.n}")
        if r == self.n:
            reduces_to = f"{self.m}-tuples of {self.n}x{self.n} matrices up to conjugation"
        elif r == 0:
            reduces_to = f"representations of K_{self.m} with dimension vector ({self.n},{self.n})"
        else:
            reduces_to = "intermediate stratum (no known reduction)"
        return {"rank": r, "reduces_to": reduces_to}

    def to_json(self):
        return {
            "quiver": self.quiver.to_json(),
            "dim": self.dim.to_json(),
            "theta": self.stability.to_json(),
            "identity_arrow_index": self.identity_arrow_index,
            "rank_strata": [self.rank_stratum(r) for r in range(self.n + 1)],
        }


def loop_reduction(m, n):
    return LoopReduction(m, n)
