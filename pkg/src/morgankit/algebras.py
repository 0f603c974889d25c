"""Finite semi-De Morgan and De Morgan algebras: the semantic oracle.

An algebra is a bounded distributive lattice with a negation table.  The
module checks variety membership by exhaustive table inspection, evaluates
terms homomorphically, decides sequent validity over all assignments,
enumerates all algebras of a variety up to isomorphism at small sizes, and
searches them for counter-witnesses to a sequent.

Enumeration works directly on carriers {0, ..., n-1} with 0 as bottom and
n-1 as top: every partial order on the middle elements is tried, orders that
fail to be lattices or distributivity are dropped, then every negation table
satisfying the variety identities is attached.  Deduplication canonicalises
over all carrier permutations fixing bottom and top.  Sizes are capped at 6;
that is desk scale and refutes every non-theorem in the test corpora,
although no claim is made that small algebras refute every SDM non-theorem,
so proof search remains the decision authority.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .terms import (
    DM, SDM, TOP_ALG,
    And, Imp, Neg, Or, Sequent, Term, Var,
    variables,
)
from .translations import _fold, t_flatten

ALGEBRA_SCHEMA = "morgan-kit/algebra/v1"


@dataclass(frozen=True)
class FiniteAlgebra:
    """Carrier {0..size-1} with join/meet/neg tables; zero and one element ids."""

    size: int
    join: tuple      # size x size tuples
    meet: tuple
    neg: tuple
    zero: int = 0
    one: int = -1

    def __post_init__(self):
        if self.one == -1:
            object.__setattr__(self, "one", self.size - 1)
        n = self.size
        for table in (self.join, self.meet):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError("binary tables must be size x size")
            if any(not (0 <= v < n) for row in table for v in row):
                raise ValueError("table entry outside the carrier")
        if len(self.neg) != n or any(not (0 <= v < n) for v in self.neg):
            raise ValueError("negation table outside the carrier")

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def order_pairs(self):
        return [(a, b) for a in range(self.size) for b in range(self.size)
                if self.leq(a, b)]

    def to_obj(self) -> dict:
        return {
            "schema": ALGEBRA_SCHEMA,
            "size": self.size,
            "zero": self.zero,
            "one": self.one,
            "order": self.order_pairs(),
            "neg": list(self.neg),
        }

    @staticmethod
    def from_obj(obj: dict) -> "FiniteAlgebra":
        if obj.get("schema", ALGEBRA_SCHEMA) != ALGEBRA_SCHEMA:
            raise ValueError(f"unsupported algebra schema {obj.get('schema')!r}")
        n = obj["size"]
        leq = [[False] * n for _ in range(n)]
        for a, b in obj["order"]:
            leq[a][b] = True
        join, meet = _tables_from_leq(n, leq)
        if join is None:
            raise ValueError("order is not a lattice")
        return FiniteAlgebra(n, join, meet, tuple(obj["neg"]),
                             obj.get("zero", 0), obj.get("one", n - 1))


def _tables_from_leq(n, leq):
    """Join/meet tables from an order matrix, or (None, None) if not a lattice."""
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ups = [c for c in range(n) if leq[a][c] and leq[b][c]]
            lows = [c for c in range(n) if leq[c][a] and leq[c][b]]
            lub = [c for c in ups if all(leq[c][d] for d in ups)]
            glb = [c for c in lows if all(leq[d][c] for d in lows)]
            if len(lub) != 1 or len(glb) != 1:
                return None, None
            join[a][b] = lub[0]
            meet[a][b] = glb[0]
    return tuple(tuple(r) for r in join), tuple(tuple(r) for r in meet)


def check_variety(alg: FiniteAlgebra, variety: str) -> bool:
    """Exhaustively check the bounded-distributive-lattice and variety identities."""
    if variety not in (SDM, DM):
        raise ValueError(f"unknown variety {variety!r}")
    n, j, m, g = alg.size, alg.join, alg.meet, alg.neg
    zero, one = alg.zero, alg.one
    rng = range(n)
    for a in rng:
        if j[a][a] != a or m[a][a] != a:
            return False
        if j[a][zero] != a or m[a][one] != a:
            return False
        if j[a][one] != one or m[a][zero] != zero:
            return False
        for b in rng:
            if j[a][b] != j[b][a] or m[a][b] != m[b][a]:
                return False
            if j[a][m[a][b]] != a or m[a][j[a][b]] != a:
                return False
            for c in rng:
                if j[a][j[b][c]] != j[j[a][b]][c]:
                    return False
                if m[a][m[b][c]] != m[m[a][b]][c]:
                    return False
                if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                    return False
                if j[a][m[b][c]] != m[j[a][b]][j[a][c]]:
                    return False
    if g[zero] != one or g[one] != zero:
        return False
    for a in rng:
        if g[g[g[a]]] != g[a]:
            return False
        for b in rng:
            if g[j[a][b]] != m[g[a]][g[b]]:
                return False
            if g[g[m[a][b]]] != m[g[g[a]]][g[g[b]]]:
                return False
    if variety == DM:
        for a in rng:
            if g[g[a]] != a:
                return False
            for b in rng:
                if g[m[a][b]] != j[g[a]][g[b]]:
                    return False
                # redundant cross-check: a | b = ~(~a & ~b)
                if j[a][b] != g[m[g[a]][g[b]]]:
                    return False
    return True


def dm4() -> FiniteAlgebra:
    """The four-element De Morgan algebra: a diamond whose atoms are negation
    fixpoints.  Generates the DM variety, so it decides DM-sequent validity."""
    # elements: 0 < a=1, b=2 < 3; a, b incomparable
    join = ((0, 1, 2, 3), (1, 1, 3, 3), (2, 3, 2, 3), (3, 3, 3, 3))
    meet = ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3))
    return FiniteAlgebra(4, join, meet, (3, 1, 2, 0))


class UnassignedVariableError(KeyError):
    pass


def evaluate(phi: Term, assignment: dict, alg: FiniteAlgebra) -> int:
    """Homomorphic evaluation; assignment maps variable names to element ids."""
    ty = type(phi)
    if ty is Var:
        try:
            return assignment[phi.name]
        except KeyError:
            raise UnassignedVariableError(phi.name) from None
    if ty is Neg:
        return alg.neg[evaluate(phi.arg, assignment, alg)]
    if ty is And:
        return alg.meet[evaluate(phi.left, assignment, alg)][
            evaluate(phi.right, assignment, alg)]
    if ty is Or:
        return alg.join[evaluate(phi.left, assignment, alg)][
            evaluate(phi.right, assignment, alg)]
    if ty is Imp:
        raise ValueError("algebra evaluation is defined on the algebraic language")
    return alg.zero


def _flatten_for(s: Sequent):
    if s.calculus == SDM:
        return t_flatten(s.antecedent), t_flatten(s.succedent)
    if s.calculus == DM:
        return _fold(And, list(s.antecedent), TOP_ALG), s.succedent
    raise ValueError("validity is defined for SDM and DM sequents")


def valid(s: Sequent, alg: FiniteAlgebra) -> bool:
    """True iff the flattened inequality holds under every assignment."""
    lhs, rhs = _flatten_for(s)
    names = sorted({name for _, name in variables(s)})
    for values in itertools.product(range(alg.size), repeat=len(names)):
        assignment = dict(zip(names, values))
        a = evaluate(lhs, assignment, alg)
        b = evaluate(rhs, assignment, alg)
        if alg.meet[a][b] != a:
            return False
    return True


def _middle_orders(n: int):
    """All partial orders on {0..n-1} with 0 bottom and n-1 top."""
    mids = list(range(1, n - 1))
    pairs = [(a, b) for a in mids for b in mids if a != b]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = {pair for pair, bit in zip(pairs, bits) if bit}
        if any((b, a) in rel for a, b in rel):
            continue  # antisymmetry
        if any(c != a and (a, c) not in rel
               for a, b in rel for b2, c in rel if b2 == b):
            continue  # transitivity
        leq = [[False] * n for _ in range(n)]
        for a in range(n):
            leq[a][a] = True
            leq[0][a] = True
            leq[a][n - 1] = True
        for a, b in rel:
            leq[a][b] = True
        yield leq


def _canonical_key(alg: FiniteAlgebra) -> tuple:
    """Minimal serialisation over all permutations fixing bottom and top."""
    n = alg.size
    mids = list(range(1, n - 1))
    best = None
    for perm in itertools.permutations(mids):
        relabel = {0: 0, n - 1: n - 1}
        relabel.update({old: new for old, new in zip(mids, perm)})
        order = tuple(sorted(
            (relabel[a], relabel[b])
            for a in range(n) for b in range(n) if alg.leq(a, b)))
        neg = tuple(v for _, v in sorted(
            (relabel[a], relabel[alg.neg[a]]) for a in range(n)))
        key = (order, neg)
        if best is None or key < best:
            best = key
    return best


_ENUM_CACHE: dict = {}


def enumerate_algebras(variety: str, max_size: int) -> list:
    """All algebras of the variety with 2..max_size elements, up to isomorphism."""
    if variety not in (SDM, DM):
        raise ValueError(f"unknown variety {variety!r}")
    if max_size < 2:
        raise ValueError("max_size must be at least 2")
    if max_size > 6:
        raise ValueError("enumeration is capped at size 6")
    key = (variety, max_size)
    hit = _ENUM_CACHE.get(key)
    if hit is not None:
        return hit
    out = []
    seen = set()
    for n in range(2, max_size + 1):
        for leq in _middle_orders(n):
            join, meet = _tables_from_leq(n, leq)
            if join is None:
                continue
            lattice = FiniteAlgebra(n, join, meet, tuple([0] * n))
            if not _distributive(lattice):
                continue
            for neg in _negations(lattice, variety):
                alg = FiniteAlgebra(n, join, meet, neg)
                ck = (n, _canonical_key(alg))
                if ck not in seen:
                    seen.add(ck)
                    out.append(alg)
    _ENUM_CACHE[key] = out
    return out


def _distributive(alg: FiniteAlgebra) -> bool:
    n, j, m = alg.size, alg.join, alg.meet
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                    return False
    return True


def _negations(lattice: FiniteAlgebra, variety: str):
    n = lattice.size
    for middle in itertools.product(range(n), repeat=n - 2):
        neg = (n - 1,) + middle + (0,) if n > 2 else (n - 1, 0)
        cand = FiniteAlgebra(n, lattice.join, lattice.meet, neg)
        if check_variety(cand, variety):
            yield neg


def refute(s: Sequent, variety: str, max_size: int,
           ) -> Optional[tuple]:
    """First (algebra, assignment) invalidating s among enumerated algebras."""
    lhs, rhs = _flatten_for(s)
    names = sorted({name for _, name in variables(s)})
    for alg in enumerate_algebras(variety, max_size):
        for values in itertools.product(range(alg.size), repeat=len(names)):
            assignment = dict(zip(names, values))
            a = evaluate(lhs, assignment, alg)
            b = evaluate(rhs, assignment, alg)
            if alg.meet[a][b] != a:
                return alg, assignment
    return None
