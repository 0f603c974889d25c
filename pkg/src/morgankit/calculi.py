"""Backward rule expansion for G3SDM, G3DM, G3ip, and G3ip + Gem-at.

Each ``expand_*`` function takes a goal sequent and enumerates every rule
instance whose conclusion is that goal: zero-premiss axiom instances plus one
instance per applicable (rule, principal occurrence) pair.  Left rules are
instantiated per occurrence, not per distinct member; the calculi are
contraction-free, so duplicated antecedent members matter.

``principal`` is the index of the principal occurrence in the (canonically
sorted) antecedent, ``-1`` when the succedent is principal, and ``None`` for
axioms and Gem-at.

Rule label catalog (ASCII; `Bot` is F, `*` the structural star):

* G3SDM: Id, Bot=>, =>*Bot, *~Bot=>, &=>, =>&, |=>, =>|1, =>|2,
  *|=>, =>*|, *~&=>, =>*~&, *~~=>, =>*~~, ~=>, =>~, *
* G3DM: Id1, Id2, Bot=>, =>~Bot, &=>, =>&, |=>, =>|1, =>|2,
  ~&=>, =>~&1, =>~&2, ~|=>, =>~|, ~~=>, =>~~
* G3ip (+Gem-at): Id, BotL, &L, &R, |L, |R1, |R2, ->L, ->R, Gem-at
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .terms import (
    BOT, CL, DM, INT, SDM,
    And, Imp, Neg, Or, Sequent, Var,
    plain, starred, variables,
)


class CalculusMismatchError(ValueError):
    """The goal's calculus tag does not match the requested rule table."""


@dataclass(frozen=True)
class RuleInstance:
    label: str
    conclusion: Sequent
    premisses: tuple
    principal: Optional[int]

    def __repr__(self):
        return f"<RuleInstance {self.label} principal={self.principal}>"


_STAR_NEG_BOT = starred(Neg(BOT))
_PLAIN_BOT = plain(BOT)
_STAR_BOT = starred(BOT)


def _seq(calculus, ants, succ):
    return Sequent(calculus, ants, succ)


def _replace(goal: Sequent, index: int, members) -> Sequent:
    rest = goal.without(index)
    return Sequent(goal.calculus, rest + tuple(members), goal.succedent)


def _with_succ(goal: Sequent, succ) -> Sequent:
    return Sequent(goal.calculus, goal.antecedent, succ)


# Rule labels search may commit to eagerly: inverting them preserves both
# derivability and refutability, which keeps the explored tree small.
#
# SDM needs care around the star rule, which may consume a starred member
# with an obligation weaker than the member's decomposition provides: under
# a starred succedent the starred-member decompositions (*|=>, *~&=>, *~~=>)
# are not invertible, and =>*~~ never is (its premiss strengthens the
# obligation ~~phi => rho to phi => rho, and phi below ~~phi is not an SDM
# law).  Plain-member rules are safe everywhere: a plain member is never the
# star rule's principal.  =>*| and =>*~& are safe because the star rule's
# premiss decomposes through the term-succedent inversion lemma.
_INVERTIBLE_STATIC = {
    DM: frozenset({"&=>", "|=>", "~&=>", "~|=>", "~~=>", "=>&", "=>~|", "=>~~"}),
    INT: frozenset({"&L", "&R", "|L", "->R"}),
    CL: frozenset({"&L", "&R", "|L", "->R"}),
}

_SDM_ALWAYS = frozenset({"&=>", "|=>", "~=>", "=>&", "=>~", "=>*|", "=>*~&"})
_SDM_PLAIN_SUCC_ONLY = frozenset({"*|=>", "*~&=>", "*~~=>"})


def invertible(label: str, goal: Sequent) -> bool:
    if goal.calculus != SDM:
        return label in _INVERTIBLE_STATIC[goal.calculus]
    if label in _SDM_ALWAYS:
        return True
    return label in _SDM_PLAIN_SUCC_ONLY and not goal.succedent.star


def iter_g3sdm(goal: Sequent) -> Iterator[RuleInstance]:
    """Yield G3SDM instances: axioms, then invertible rules, choices, * last."""
    if goal.calculus != SDM:
        raise CalculusMismatchError(f"expected an SDM goal, got {goal.calculus}")
    ants = goal.antecedent
    succ = goal.succedent

    # axioms
    if not succ.star and type(succ.term) is Var:
        if succ in ants:
            yield RuleInstance("Id", goal, (), None)
    if succ == _STAR_BOT:
        yield RuleInstance("=>*Bot", goal, (), None)
    if _PLAIN_BOT in ants:
        yield RuleInstance("Bot=>", goal, (), None)
    if _STAR_NEG_BOT in ants:
        yield RuleInstance("*~Bot=>", goal, (), None)

    # single-premiss invertible rules, right then left
    st = succ.term
    if not succ.star:
        if type(st) is Neg:
            yield RuleInstance("=>~", goal, (_with_succ(goal, starred(st.arg)),), -1)
    else:
        if type(st) is Neg and type(st.arg) is Neg:
            yield RuleInstance(
                "=>*~~", goal, (_with_succ(goal, starred(st.arg.arg)),), -1)
    for i, m in enumerate(ants):
        t = m.term
        if not m.star:
            if type(t) is And:
                yield RuleInstance(
                    "&=>", goal, (_replace(goal, i, (plain(t.left), plain(t.right))),), i)
            elif type(t) is Neg:
                yield RuleInstance("~=>", goal, (_replace(goal, i, (starred(t.arg),)),), i)
        else:
            if type(t) is Or:
                yield RuleInstance(
                    "*|=>", goal,
                    (_replace(goal, i, (starred(t.left), starred(t.right))),), i)
            elif type(t) is Neg:
                a = t.arg
                if type(a) is And:
                    yield RuleInstance(
                        "*~&=>", goal,
                        (_replace(goal, i, (starred(Neg(a.left)), starred(Neg(a.right)))),), i)
                elif type(a) is Neg:
                    yield RuleInstance(
                        "*~~=>", goal, (_replace(goal, i, (starred(a.arg),)),), i)

    # branching invertible rules
    if not succ.star:
        if type(st) is And:
            yield RuleInstance(
                "=>&", goal,
                (_with_succ(goal, plain(st.left)), _with_succ(goal, plain(st.right))), -1)
    else:
        if type(st) is Or:
            yield RuleInstance(
                "=>*|", goal,
                (_with_succ(goal, starred(st.left)), _with_succ(goal, starred(st.right))), -1)
        elif type(st) is Neg and type(st.arg) is And:
            a = st.arg
            yield RuleInstance(
                "=>*~&", goal,
                (_with_succ(goal, starred(Neg(a.left))),
                 _with_succ(goal, starred(Neg(a.right)))), -1)
    for i, m in enumerate(ants):
        if not m.star and type(m.term) is Or:
            t = m.term
            yield RuleInstance(
                "|=>", goal,
                (_replace(goal, i, (plain(t.left),)),
                 _replace(goal, i, (plain(t.right),))), i)

    # non-invertible choices
    if not succ.star and type(st) is Or:
        yield RuleInstance("=>|1", goal, (_with_succ(goal, plain(st.left)),), -1)
        yield RuleInstance("=>|2", goal, (_with_succ(goal, plain(st.right)),), -1)

    # the structural rule: from phi => psi infer *psi, Gamma => *phi
    if succ.star:
        for i, m in enumerate(ants):
            if m.star:
                premiss = _seq(SDM, (plain(st),), plain(m.term))
                yield RuleInstance("*", goal, (premiss,), i)


def iter_g3dm(goal: Sequent) -> Iterator[RuleInstance]:
    if goal.calculus != DM:
        raise CalculusMismatchError(f"expected a DM goal, got {goal.calculus}")
    ants = goal.antecedent
    succ = goal.succedent

    # axioms
    ts = type(succ)
    if ts is Var and succ in ants:
        yield RuleInstance("Id1", goal, (), None)
    if ts is Neg and type(succ.arg) is Var and succ in ants:
        yield RuleInstance("Id2", goal, (), None)
    if ts is Neg and succ.arg is BOT:
        yield RuleInstance("=>~Bot", goal, (), None)
    if BOT in ants:
        yield RuleInstance("Bot=>", goal, (), None)

    # single-premiss invertible rules
    if ts is Neg and type(succ.arg) is Neg:
        yield RuleInstance("=>~~", goal, (_with_succ(goal, succ.arg.arg),), -1)
    for i, t in enumerate(ants):
        ty = type(t)
        if ty is And:
            yield RuleInstance("&=>", goal, (_replace(goal, i, (t.left, t.right)),), i)
        elif ty is Neg:
            a = t.arg
            if type(a) is Or:
                yield RuleInstance(
                    "~|=>", goal, (_replace(goal, i, (Neg(a.left), Neg(a.right))),), i)
            elif type(a) is Neg:
                yield RuleInstance("~~=>", goal, (_replace(goal, i, (a.arg,)),), i)

    # branching invertible rules
    if ts is And:
        yield RuleInstance(
            "=>&", goal, (_with_succ(goal, succ.left), _with_succ(goal, succ.right)), -1)
    elif ts is Neg and type(succ.arg) is Or:
        a = succ.arg
        yield RuleInstance(
            "=>~|", goal,
            (_with_succ(goal, Neg(a.left)), _with_succ(goal, Neg(a.right))), -1)
    for i, t in enumerate(ants):
        ty = type(t)
        if ty is Or:
            yield RuleInstance(
                "|=>", goal,
                (_replace(goal, i, (t.left,)), _replace(goal, i, (t.right,))), i)
        elif ty is Neg and type(t.arg) is And:
            a = t.arg
            yield RuleInstance(
                "~&=>", goal,
                (_replace(goal, i, (Neg(a.left),)), _replace(goal, i, (Neg(a.right),))), i)

    # non-invertible choices
    if ts is Or:
        yield RuleInstance("=>|1", goal, (_with_succ(goal, succ.left),), -1)
        yield RuleInstance("=>|2", goal, (_with_succ(goal, succ.right),), -1)
    elif ts is Neg and type(succ.arg) is And:
        a = succ.arg
        yield RuleInstance("=>~&1", goal, (_with_succ(goal, Neg(a.left)),), -1)
        yield RuleInstance("=>~&2", goal, (_with_succ(goal, Neg(a.right)),), -1)


def iter_g3ip(goal: Sequent, classical: bool = False) -> Iterator[RuleInstance]:
    expected = CL if classical else INT
    if goal.calculus != expected:
        raise CalculusMismatchError(f"expected a {expected} goal, got {goal.calculus}")
    ants = goal.antecedent
    succ = goal.succedent

    # axioms
    if type(succ) is Var and succ in ants:
        yield RuleInstance("Id", goal, (), None)
    if BOT in ants:
        yield RuleInstance("BotL", goal, (), None)

    # single-premiss invertible rules
    if type(succ) is Imp:
        premiss = Sequent(goal.calculus, ants + (succ.left,), succ.right)
        yield RuleInstance("->R", goal, (premiss,), -1)
    for i, t in enumerate(ants):
        if type(t) is And:
            yield RuleInstance("&L", goal, (_replace(goal, i, (t.left, t.right)),), i)

    # branching invertible rules
    if type(succ) is And:
        yield RuleInstance(
            "&R", goal, (_with_succ(goal, succ.left), _with_succ(goal, succ.right)), -1)
    for i, t in enumerate(ants):
        if type(t) is Or:
            yield RuleInstance(
                "|L", goal,
                (_replace(goal, i, (t.left,)), _replace(goal, i, (t.right,))), i)

    # non-invertible choices
    if type(succ) is Or:
        yield RuleInstance("|R1", goal, (_with_succ(goal, succ.left),), -1)
        yield RuleInstance("|R2", goal, (_with_succ(goal, succ.right),), -1)
    for i, t in enumerate(ants):
        if type(t) is Imp:
            # the principal implication stays in the first premiss
            first = _with_succ(goal, t.left)
            second = _replace(goal, i, (t.right,))
            yield RuleInstance("->L", goal, (first, second), i)

    if classical:
        for ns, name in sorted(variables(goal)):
            v = Var(name, ns)
            yield RuleInstance(
                "Gem-at", goal,
                (Sequent(CL, ants + (v,), succ),
                 Sequent(CL, ants + (Imp(v, BOT),), succ)), None)


def expand_g3sdm(goal: Sequent) -> list:
    """All G3SDM rule instances whose conclusion is the goal."""
    return list(iter_g3sdm(goal))


def expand_g3dm(goal: Sequent) -> list:
    """All G3DM rule instances whose conclusion is the goal."""
    return list(iter_g3dm(goal))


def expand_g3ip(goal: Sequent, classical: bool = False) -> list:
    """All G3ip instances; with `classical`, Gem-at instances as well.

    Gem-at is instantiated only at variables occurring in the goal: fresh
    variables can never help close a branch.
    """
    return list(iter_g3ip(goal, classical))


def iter_instances(goal: Sequent) -> Iterator[RuleInstance]:
    """Dispatch on the goal's calculus tag."""
    if goal.calculus == SDM:
        return iter_g3sdm(goal)
    if goal.calculus == DM:
        return iter_g3dm(goal)
    return iter_g3ip(goal, classical=goal.calculus == CL)


def expand(goal: Sequent) -> list:
    return list(iter_instances(goal))
