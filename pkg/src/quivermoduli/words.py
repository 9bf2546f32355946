"""Word combinatorics of composition series: the degeneration order on
words, the abstract monoid with its straightening relations, and normal
forms for products of Schur-root strata."""

from __future__ import annotations

from enum import Enum

from .errors import BudgetExceeded, InputError
from .generic import generic_decomposition, generic_ext, schur_test
from .quiver import DimVector, Quiver

__all__ = [
    "MonoidOutcome",
    "word_weight",
    "word_leq",
    "monoid_class",
    "monoid_equal",
    "canonical_word",
    "schur_normal_form",
]

DEFAULT_WORD_BUDGET = 10 ** 6


def _check_word(quiver, word):
    word = tuple(str(x) for x in word)
    for x in word:
        quiver.index(x)
    return word


def word_weight(quiver: Quiver, word) -> DimVector:
    word = _check_word(quiver, word)
    w = {}
    for x in word:
        w[x] = w.get(x, 0) + 1
    return DimVector(w)


def word_leq(quiver: Quiver, w, w2) -> bool:
    """Degeneration order: generated by u i j u' < u j i u' for i before j
    in the canonical vertex order.  BFS upward from w within the weight
    class."""
    w = _check_word(quiver, w)
    w2 = _check_word(quiver, w2)
    if word_weight(quiver, w) != word_weight(quiver, w2):
        return False
    if w == w2:
        return True
    idx = quiver.index
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for p in range(len(u) - 1):
                if idx(u[p]) < idx(u[p + 1]):  # move the larger letter left
                    v = u[:p] + (u[p + 1], u[p]) + u[p + 2:]
                    if v == w2:
                        return True
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return False


class MonoidOutcome(Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    UNDECIDED = "undecided-at-budget"


def _relations(quiver):
    """Straightening relations as unordered rewrite pairs (lhs, rhs).

    For vertices i != j with no arrow j -> i and n = #arrows i -> j:
    i^{n+1} j  ~  i^n j i   and   i j^{n+1}  ~  j i j^n.
    (With n = 0 both reduce to the commutation i j ~ j i.)
    """
    rels = []
    for i in quiver.vertices:
        for j in quiver.vertices:
            if i == j or quiver.arrow_count(j, i) > 0:
                continue
            n = quiver.arrow_count(i, j)
            rels.append(((i,) * (n + 1) + (j,), (i,) * n + (j, i)))
            rels.append(((i,) + (j,) * (n + 1), (j, i) + (j,) * n))
    return [r for r in rels if r[0] != r[1]]


def _rewrites(word, rels):
    for lhs, rhs in rels:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            n = len(a)
            for p in range(len(word) - n + 1):
                if word[p:p + n] == a:
                    yield word[:p] + b + word[p + n:]


def monoid_class(quiver: Quiver, word, budget=DEFAULT_WORD_BUDGET):
    """(set of words reachable from word, closure-completed flag)."""
    word = _check_word(quiver, word)
    rels = _relations(quiver)
    seen = {word}
    frontier = [word]
    complete = True
    while frontier:
        nxt = []
        for u in frontier:
            for v in _rewrites(u, rels):
                if v not in seen:
                    if len(seen) >= budget:
                        return seen, False
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen, complete


def monoid_equal(quiver: Quiver, w, w2,
                 budget=DEFAULT_WORD_BUDGET) -> MonoidOutcome:
    """Congruence of two words under the straightening relations.

    Tri-state: the closure may hit the node budget, in which case neither
    equality nor inequality is claimed.
    """
    w = _check_word(quiver, w)
    w2 = _check_word(quiver, w2)
    if word_weight(quiver, w) != word_weight(quiver, w2):
        return MonoidOutcome.NOT_EQUAL
    cls, complete = monoid_class(quiver, w, budget)
    if w2 in cls:
        return MonoidOutcome.EQUAL
    return MonoidOutcome.NOT_EQUAL if complete else MonoidOutcome.UNDECIDED


def canonical_word(quiver: Quiver, word, budget=DEFAULT_WORD_BUDGET):
    """Lexicographically least word (in canonical vertex order) of the
    congruence class; raises when the closure exceeds the budget."""
    word = _check_word(quiver, word)
    cls, complete = monoid_class(quiver, word, budget)
    if not complete:
        raise BudgetExceeded("congruence closure exceeded the word budget",
                             required=None, budget=budget)
    idx = quiver.index
    return min(cls, key=lambda u: tuple(idx(x) for x in u))


def schur_normal_form(quiver: Quiver, parts):
    """Normal form of a product of strata R_{d^1} * ... * R_{d^s}.

    Adjacent factors (a, b) merge into a + b when ext(b, a) = 0 but
    ext(a, b) != 0 (the product collapses to a single stratum and the pair
    cannot be re-split the same way); non-Schur parts are replaced by their
    generic decomposition.  Iterates to a fixed point.
    """
    out = []
    for p in parts:
        quiver.check_vector(p)
        if not p.is_zero():
            out.append(p)
    for _ in range(1000):
        changed = False
        expanded = []
        for p in out:
            if schur_test(quiver, p):
                expanded.append(p)
            else:
                expanded.extend(generic_decomposition(quiver, p))
                changed = True
        out = expanded
        k = 0
        while k + 1 < len(out):
            a, b = out[k], out[k + 1]
            if generic_ext(quiver, b, a) == 0 and generic_ext(quiver, a, b) != 0:
                out[k:k + 2] = [a + b]
                changed = True
            else:
                k += 1
        if not changed:
            return out
    raise AssertionError("schur_normal_form did not stabilize")
