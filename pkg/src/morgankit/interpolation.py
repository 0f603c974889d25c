"""Maehara-style interpolant extraction from G3SDM and G3DM derivations.

A partition splits the antecedent multiset of a derivable goal into a left
part and a right part (the succedent always belongs to the right).  The
extractor walks the derivation: axioms pick an atom, F, T or *F depending on
which side the principal occurrence fell; single-premiss rules pass the
child interpolant through; branching rules join the child interpolants with
& (principal on the right, or any right rule) or | (branching left rule with
its principal on the left); the star rule interpolates its premiss and
re-stars the result.  SDM interpolants are basic structures, DM interpolants
terms; when children must be joined, starred child interpolants are first
flattened to their negation reading.

The extracted candidate always satisfies the three interpolant conditions:
both obligation sequents are derivable and its variables lie in the shared
vocabulary.  Interpolants are not simplified afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .search import (
    Derivation, SearchEngine, check_derivation_report, default_engine,
    normalize_calculus,
)
from .terms import (
    BOT, DM, SDM, TOP_ALG,
    And, Neg, Or, Sequent, Struct, Term,
    plain, sequent, starred, variables,
)


class PartitionMismatchError(ValueError):
    """The partition does not split the goal's antecedent."""


@dataclass(frozen=True)
class Partition:
    """left and right antecedent parts; the succedent rides on the right."""
    left: tuple
    right: tuple

    @staticmethod
    def of(left, right) -> "Partition":
        return Partition(tuple(left), tuple(right))


@dataclass(frozen=True)
class InterpolationResult:
    interpolant: object            # Struct for SDM, Term for DM
    left_derivation: Derivation
    right_derivation: Derivation


def _sides_for(goal: Sequent, part: Partition) -> tuple:
    """Assign 'L'/'R' to each canonical antecedent position (left-first)."""
    remaining: dict = {}
    for m in part.left:
        remaining[m] = remaining.get(m, 0) + 1
    right_needed: dict = {}
    for m in part.right:
        right_needed[m] = right_needed.get(m, 0) + 1
    sides = []
    for m in goal.antecedent:
        if remaining.get(m, 0) > 0:
            remaining[m] -= 1
            sides.append("L")
        elif right_needed.get(m, 0) > 0:
            right_needed[m] -= 1
            sides.append("R")
        else:
            raise PartitionMismatchError(
                "partition members do not cover the antecedent")
    if any(v for v in remaining.values()) or any(v for v in right_needed.values()):
        raise PartitionMismatchError("partition has members beyond the antecedent")
    return tuple(sides)


def _realign(members_with_sides, child_ant) -> tuple:
    """Match (member, side) pairs to the child's canonical antecedent order."""
    pool: dict = {}
    for m, s in members_with_sides:
        pool.setdefault(m, []).append(s)
    for sides in pool.values():
        sides.sort()  # 'L' before 'R': deterministic among equal members
    out = []
    for m in child_ant:
        out.append(pool[m].pop(0))
    return tuple(out)


def _child_sides(node: Derivation, sides, child: Derivation, removed: int,
                 inserted_count: int) -> tuple:
    """Sides for a child whose antecedent replaces one occurrence by new members."""
    ant = node.sequent.antecedent
    pairs = [(m, s) for i, (m, s) in enumerate(zip(ant, sides)) if i != removed]
    side = sides[removed]
    child_ant = child.sequent.antecedent
    new_members = list(child_ant)
    for m, _ in pairs:
        new_members.remove(m)
    assert len(new_members) == inserted_count
    pairs.extend((m, side) for m in new_members)
    return _realign(pairs, child_ant)


def _flat_term(i) -> Term:
    """The negation reading of a basic structure; identity on terms."""
    if isinstance(i, Struct):
        return Neg(i.term) if i.star else i.term
    return i


_SINGLE_LEFT = {"&=>", "~=>", "*|=>", "*~&=>", "*~~=>", "~|=>", "~~=>"}
_BRANCH_LEFT = {"|=>", "~&=>"}
_SINGLE_RIGHT = {"=>|1", "=>|2", "=>~", "=>*~~", "=>~&1", "=>~&2", "=>~~"}
_BRANCH_RIGHT = {"=>&", "=>*|", "=>*~&", "=>~|"}


def _extract(node: Derivation, sides: tuple, sdm: bool):
    rule = node.rule
    ant = node.sequent.antecedent

    if rule in ("Id", "Id1"):
        succ = node.sequent.succedent
        v = succ.term if sdm else succ
        for i, m in enumerate(ant):
            hit = (not m.star and m.term == v) if sdm else m == v
            if hit and sides[i] == "L":
                return plain(v) if sdm else v
        return starred(BOT) if sdm else TOP_ALG

    if rule == "Id2":
        succ = node.sequent.succedent
        for i, m in enumerate(ant):
            if m == succ and sides[i] == "L":
                return succ
        return TOP_ALG

    if rule == "Bot=>":
        bot = plain(BOT) if sdm else BOT
        for i, m in enumerate(ant):
            if m == bot and sides[i] == "L":
                return bot
        return plain(TOP_ALG) if sdm else TOP_ALG

    if rule == "*~Bot=>":
        marker = starred(Neg(BOT))
        for i, m in enumerate(ant):
            if m == marker and sides[i] == "L":
                return plain(BOT)
        return plain(TOP_ALG)

    if rule == "=>*Bot":
        return starred(BOT)

    if rule == "=>~Bot":
        return TOP_ALG

    if rule == "*":
        # premiss phi => psi, conclusion *psi, Gamma => *phi
        child = node.children[0]
        i = node.principal
        if sides[i] == "R":
            return starred(BOT)
        inner = _extract(child, ("L",), sdm)
        return starred(_flat_term(inner))

    if rule in _SINGLE_LEFT:
        child = node.children[0]
        inserted = len(child.sequent.antecedent) - len(ant) + 1
        csides = _child_sides(node, sides, child, node.principal, inserted)
        return _extract(child, csides, sdm)

    if rule in _SINGLE_RIGHT:
        return _extract(node.children[0], sides, sdm)

    if rule in _BRANCH_LEFT:
        i = node.principal
        parts = []
        for child in node.children:
            inserted = len(child.sequent.antecedent) - len(ant) + 1
            csides = _child_sides(node, sides, child, i, inserted)
            parts.append(_flat_term(_extract(child, csides, sdm)))
        joined = Or(*parts) if sides[i] == "L" else And(*parts)
        return plain(joined) if sdm else joined

    if rule in _BRANCH_RIGHT:
        parts = [_flat_term(_extract(c, sides, sdm)) for c in node.children]
        joined = And(*parts)
        return plain(joined) if sdm else joined

    raise ValueError(f"rule {rule!r} does not belong to an interpolating calculus")


def interpolate(calculus: str, d: Derivation, part: Partition,
                engine: Optional[SearchEngine] = None) -> InterpolationResult:
    """Extract an interpolant for the partition and derive both obligations."""
    calculus = normalize_calculus(calculus)
    if calculus not in (SDM, DM):
        raise ValueError("interpolation is defined for the SDM and DM calculi")
    ok, diag = check_derivation_report(calculus, d)
    if not ok:
        raise ValueError(f"derivation fails checking: {diag}")
    sides = _sides_for(d.sequent, part)
    candidate = _extract(d, sides, calculus == SDM)
    eng = engine or default_engine()
    left_goal = sequent(calculus, part.left, candidate)
    right_member = candidate
    right_goal = sequent(calculus, part.right + (right_member,), d.sequent.succedent)
    left_d = eng.derive(calculus, left_goal)
    right_d = eng.derive(calculus, right_goal)
    if left_d is None or right_d is None:
        raise AssertionError("extracted interpolant failed an obligation")
    return InterpolationResult(candidate, left_d, right_d)


def verify_interpolant(calculus: str, goal: Sequent, part: Partition, candidate,
                       engine: Optional[SearchEngine] = None) -> bool:
    """Check conditions (i)-(iii): both obligations derivable, shared vocabulary."""
    calculus = normalize_calculus(calculus)
    try:
        _sides_for(goal, part)
    except PartitionMismatchError:
        return False
    if calculus == DM and isinstance(candidate, Struct):
        return False
    eng = engine or default_engine()
    try:
        left_goal = sequent(calculus, part.left, candidate)
        right_goal = sequent(calculus, part.right + (candidate,), goal.succedent)
    except ValueError:
        return False
    if not eng.derivable(calculus, left_goal):
        return False
    if not eng.derivable(calculus, right_goal):
        return False
    shared = variables(part.left) & (variables(part.right) | variables(goal.succedent))
    return variables(candidate) <= shared


def all_partitions(goal: Sequent):
    """Every 2^|antecedent| left/right split of the goal's antecedent."""
    ant = goal.antecedent
    n = len(ant)
    for mask in range(1 << n):
        left = tuple(ant[i] for i in range(n) if mask >> i & 1)
        right = tuple(ant[i] for i in range(n) if not mask >> i & 1)
        yield Partition(left, right)
