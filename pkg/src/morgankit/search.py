"""Backward proof search, derivation checking, and proof rendering.

Search strategy
---------------

For G3SDM and G3DM every rule strictly lowers the sequent weight, so plain
depth-first expansion terminates.  The engine additionally commits to the
first applicable *invertible* rule (axioms first, then non-branching rules,
then branching ones, the star rule last): by the inversion lemmas this
changes neither derivability nor refutability, and it keeps the explored
tree small.

For G3ip and G3ip + Gem-at the left implication rule keeps its principal
formula, so weights do not decrease.  Search prunes a branch when the goal's
antecedent-as-set form repeats among its ancestors on that branch: any
derivation can be normalised (weakening and contraction are admissible) so
that no branch repeats a set form, hence pruning preserves completeness, and
the set-form universe reachable from a goal is finite, hence search
terminates.  Failures discovered under such pruning may depend on the
ancestor context; they are memoised only when every prune event referenced
an ancestor at or below the failing goal.

Memoisation is per (calculus, canonical sequent), keyed by the exact
sequent; witnesses are real derivations of the queried goal.  The memo is a
plain dict (per-key updates are atomic under the GIL); per-goal search is
single-threaded.  ``MORGANKIT_MEMO_LIMIT`` caps the number of entries.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

from .calculi import (
    CalculusMismatchError, RuleInstance, invertible,
    iter_g3ip, iter_instances,
)
from .syntax import print_sequent, sequent_from_obj, sequent_to_obj
from .terms import (
    CL, DM, INT, SDM, And, Imp, Neg, Or, Sequent, Struct, Var, variables,
)

PROOF_SCHEMA = "morgan-kit/proof/v1"

_BIG = 1 << 60

_CALCULUS_ALIASES = {
    "sdm": SDM, "g3sdm": SDM,
    "dm": DM, "g3dm": DM,
    "int": INT, "g3ip": INT,
    "cl": CL, "g3cp": CL, "g3ip+gem-at": CL,
}


def normalize_calculus(name: str) -> str:
    try:
        return _CALCULUS_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown calculus {name!r}") from None


@dataclass(frozen=True)
class Derivation:
    """A finite tree of rule applications.

    height is 0 exactly at axioms and 1 + max child height elsewhere;
    replaying `rule` at `sequent` with the recorded principal reproduces the
    children's sequents (check_derivation verifies both).
    """

    sequent: Sequent
    rule: str
    principal: Optional[int]
    children: tuple
    height: int

    def __repr__(self):
        return f"<Derivation {self.rule} h={self.height} {print_sequent(self.sequent)}>"


def _node(inst: RuleInstance, children: tuple) -> Derivation:
    h = 1 + max(c.height for c in children) if children else 0
    return Derivation(inst.conclusion, inst.label, inst.principal, children, h)


class InvalidDerivationError(ValueError):
    """A derivation failed replay checking."""


class SearchEngine:
    """Shared-memo proof search over the four rule tables."""

    def __init__(self, memo_limit: Optional[int] = None):
        if memo_limit is None:
            env = os.environ.get("MORGANKIT_MEMO_LIMIT")
            memo_limit = int(env) if env else None
        self.memo_limit = memo_limit
        self._witness: dict = {}
        self._min_height: dict = {}
        self._bounded: dict = {}

    def reset(self):
        self._witness.clear()
        self._min_height.clear()
        self._bounded.clear()

    def _store(self, table: dict, key, value):
        if self.memo_limit is None or len(table) < self.memo_limit:
            table[key] = value
        return value

    # -- unbounded search ------------------------------------------------

    def derive(self, calculus: str, goal: Sequent) -> Optional[Derivation]:
        """A derivation of the goal, or None when exhaustive search refutes it."""
        calculus = normalize_calculus(calculus)
        if calculus != goal.calculus:
            raise CalculusMismatchError(
                f"goal is tagged {goal.calculus}, not {calculus}")
        if calculus in (SDM, DM):
            return self._derive_wf(goal)
        return self._derive_lc(goal, {}, 0)[0]

    def derivable(self, calculus: str, goal: Sequent) -> bool:
        return self.derive(calculus, goal) is not None

    def _derive_wf(self, goal: Sequent) -> Optional[Derivation]:
        memo = self._witness
        hit = memo.get(goal, _BIG)
        if hit is not _BIG:
            return hit
        result = None
        for inst in iter_instances(goal):
            if not inst.premisses:
                result = _node(inst, ())
                break
            committed = invertible(inst.label, goal)
            children = []
            for p in inst.premisses:
                d = self._derive_wf(p)
                if d is None:
                    children = None
                    break
                children.append(d)
            if children is not None:
                result = _node(inst, tuple(children))
                break
            if committed:
                break
        return self._store(memo, goal, result)

    def _derive_lc(self, goal: Sequent, path: dict, depth: int):
        memo = self._witness
        hit = memo.get(goal, _BIG)
        if hit is not _BIG:
            return hit, _BIG
        if classically_refutable(goal):
            # G3ip and G3ip+Gem-at are sound for two-valued semantics, so a
            # boolean countermodel refutes absolutely; this collapses the
            # search space that the implication-left rule would otherwise
            # re-explore exponentially.
            self._store(memo, goal, None)
            return None, _BIG
        sf = goal.setform()
        seen_at = path.get(sf)
        if seen_at is not None:
            return None, seen_at
        classical = goal.calculus == CL
        result = None
        minref = _BIG
        path[sf] = depth
        try:
            for inst in iter_g3ip(goal, classical):
                if not inst.premisses:
                    result = _node(inst, ())
                    break
                committed = invertible(inst.label, goal)
                children = []
                for p in inst.premisses:
                    d, mr = self._derive_lc(p, path, depth + 1)
                    if d is None:
                        if mr < minref:
                            minref = mr
                        children = None
                        break
                    children.append(d)
                if children is not None:
                    result = _node(inst, tuple(children))
                    break
                if committed:
                    break
        finally:
            del path[sf]
        if result is not None:
            self._store(memo, goal, result)
            return result, _BIG
        if minref >= depth:
            # every prune referenced this subtree only: the failure is absolute
            self._store(memo, goal, None)
            return None, _BIG
        return None, minref

    # -- height-exact search ----------------------------------------------

    def min_height(self, calculus: str, goal: Sequent):
        """Minimal derivation height, or None when not derivable.

        SDM/DM minima come from an exact memoised recursion over the full
        instance enumeration; INT/CL minima by iterative deepening below a
        witness found by derive.
        """
        calculus = normalize_calculus(calculus)
        if calculus != goal.calculus:
            raise CalculusMismatchError(
                f"goal is tagged {goal.calculus}, not {calculus}")
        if calculus in (SDM, DM):
            h = self._mh(goal)
            return None if h == _BIG else h
        witness = self.derive(calculus, goal)
        if witness is None:
            return None
        for n in range(witness.height + 1):
            if self._bd(goal, n):
                return n
        return witness.height

    def _mh(self, goal: Sequent) -> int:
        memo = self._min_height
        hit = memo.get(goal)
        if hit is not None:
            return hit
        best = _BIG
        for inst in iter_instances(goal):
            if not inst.premisses:
                best = 0
                break
            h = 0
            for p in inst.premisses:
                ph = self._mh(p)
                if ph >= best:  # cannot improve; also handles underivable
                    h = _BIG
                    break
                if ph > h:
                    h = ph
            if h != _BIG and h + 1 < best:
                best = h + 1
                if best == 1:
                    break
        return self._store(memo, goal, best)

    def derivable_within_height(self, calculus: str, goal: Sequent, n: int) -> bool:
        """True iff some derivation of height at most n exists (exact bound)."""
        calculus = normalize_calculus(calculus)
        if calculus != goal.calculus:
            raise CalculusMismatchError(
                f"goal is tagged {goal.calculus}, not {calculus}")
        if n < 0:
            return False
        if calculus in (SDM, DM):
            return self._mh(goal) <= n
        return self._bd(goal, n)

    def derive_within_height(self, calculus: str, goal: Sequent, n: int):
        """A derivation of height at most n, or None."""
        if not self.derivable_within_height(calculus, goal, n):
            return None
        return self._reconstruct(goal, n)

    def _reconstruct(self, goal: Sequent, n: int) -> Derivation:
        weighted = goal.calculus in (SDM, DM)
        fits = ((lambda s, k: self._mh(s) <= k) if weighted
                else (lambda s, k: self._bd(s, k)))
        for inst in iter_instances(goal):
            if not inst.premisses:
                return _node(inst, ())
            if n > 0 and all(fits(p, n - 1) for p in inst.premisses):
                children = tuple(self._reconstruct(p, n - 1)
                                 for p in inst.premisses)
                return _node(inst, children)
        raise AssertionError("bounded reconstruction ran out of instances")

    def _bd(self, goal: Sequent, n: int) -> bool:
        key = (goal, n)
        memo = self._bounded
        hit = memo.get(key)
        if hit is not None:
            return hit
        if classically_refutable(goal):
            self._store(memo, key, False)
            return False
        classical = goal.calculus == CL
        ok = False
        for inst in iter_g3ip(goal, classical):
            if not inst.premisses:
                ok = True
                break
            if n > 0 and all(self._bd(p, n - 1) for p in inst.premisses):
                ok = True
                break
        self._store(memo, key, ok)
        return ok


def _bool_eval(t, val: dict) -> bool:
    ty = type(t)
    if ty is Var:
        return val[(t.ns, t.name)]
    if ty is Imp:
        return (not _bool_eval(t.left, val)) or _bool_eval(t.right, val)
    if ty is And:
        return _bool_eval(t.left, val) and _bool_eval(t.right, val)
    if ty is Or:
        return _bool_eval(t.left, val) or _bool_eval(t.right, val)
    return False  # bottom


_REFUTE_VAR_CAP = 14


def classically_refutable(goal: Sequent) -> bool:
    """Some boolean valuation makes every antecedent member true, succedent false."""
    names = sorted(variables(goal))
    if len(names) > _REFUTE_VAR_CAP:
        return False
    for mask in range(1 << len(names)):
        val = {nm: bool(mask >> i & 1) for i, nm in enumerate(names)}
        if _bool_eval(goal.succedent, val):
            continue
        if all(_bool_eval(m, val) for m in goal.antecedent):
            return True
    return False


_default_engine = SearchEngine()


def default_engine() -> SearchEngine:
    return _default_engine


def reset_default_engine():
    _default_engine.reset()


def derive(calculus: str, goal: Sequent, engine: Optional[SearchEngine] = None):
    return (engine or _default_engine).derive(calculus, goal)


def derivable(calculus: str, goal: Sequent, engine: Optional[SearchEngine] = None):
    return (engine or _default_engine).derivable(calculus, goal)


def derivable_within_height(calculus: str, goal: Sequent, n: int,
                            engine: Optional[SearchEngine] = None):
    return (engine or _default_engine).derivable_within_height(calculus, goal, n)


def min_height(calculus: str, goal: Sequent, engine: Optional[SearchEngine] = None):
    return (engine or _default_engine).min_height(calculus, goal)


# -- derivation checking -------------------------------------------------

def check_derivation_report(calculus: str, d: Derivation):
    """(ok, diagnostic); the diagnostic names the path to the first bad node."""
    calculus = normalize_calculus(calculus)
    if calculus != d.sequent.calculus:
        return False, f"root: sequent tagged {d.sequent.calculus}, expected {calculus}"
    checked: set = set()

    def walk(node: Derivation, path: str):
        if id(node) in checked:
            return None
        expected_h = 1 + max((c.height for c in node.children), default=-1)
        if node.height != expected_h:
            return f"{path}: height {node.height}, expected {expected_h}"
        want = tuple(c.sequent for c in node.children)
        for inst in iter_instances(node.sequent):
            if (inst.label == node.rule and inst.principal == node.principal
                    and inst.premisses == want):
                break
        else:
            return (f"{path}: no {node.rule} instance with principal "
                    f"{node.principal} matches the recorded premisses")
        for i, c in enumerate(node.children):
            bad = walk(c, f"{path}.{i}")
            if bad:
                return bad
        checked.add(id(node))
        return None

    bad = walk(d, "root")
    return (bad is None), (bad or "ok")


def check_derivation(calculus: str, d: Derivation) -> bool:
    """True iff every node replays through the rule table and heights agree."""
    return check_derivation_report(calculus, d)[0]


# -- rendering ------------------------------------------------------------

_LATEX_LABELS = {
    "Id": r"(\mathrm{Id})", "Id1": r"(\mathrm{Id}_1)", "Id2": r"(\mathrm{Id}_2)",
    "Bot=>": r"(\bot\Rightarrow)", "=>*Bot": r"(\Rightarrow{\ast}\bot)",
    "*~Bot=>": r"({\ast}\lnot\bot\Rightarrow)", "=>~Bot": r"(\Rightarrow\lnot\bot)",
    "&=>": r"(\wedge\Rightarrow)", "=>&": r"(\Rightarrow\wedge)",
    "|=>": r"(\vee\Rightarrow)",
    "=>|1": r"(\Rightarrow\vee_1)", "=>|2": r"(\Rightarrow\vee_2)",
    "*|=>": r"({\ast}\vee\Rightarrow)", "=>*|": r"(\Rightarrow{\ast}\vee)",
    "*~&=>": r"({\ast}\lnot\wedge\Rightarrow)", "=>*~&": r"(\Rightarrow{\ast}\lnot\wedge)",
    "*~~=>": r"({\ast}\lnot\lnot\Rightarrow)", "=>*~~": r"(\Rightarrow{\ast}\lnot\lnot)",
    "~=>": r"(\lnot\Rightarrow)", "=>~": r"(\Rightarrow\lnot)",
    "*": r"({\ast})",
    "~&=>": r"(\lnot\wedge\Rightarrow)",
    "=>~&1": r"(\Rightarrow\lnot\wedge_1)", "=>~&2": r"(\Rightarrow\lnot\wedge_2)",
    "~|=>": r"(\lnot\vee\Rightarrow)", "=>~|": r"(\Rightarrow\lnot\vee)",
    "~~=>": r"(\lnot\lnot\Rightarrow)", "=>~~": r"(\Rightarrow\lnot\lnot)",
    "BotL": r"(\bot\mathrm{L})",
    "&L": r"(\wedge\mathrm{L})", "&R": r"(\wedge\mathrm{R})",
    "|L": r"(\vee\mathrm{L})",
    "|R1": r"(\vee\mathrm{R}_1)", "|R2": r"(\vee\mathrm{R}_2)",
    "->L": r"({\supset}\mathrm{L})", "->R": r"({\supset}\mathrm{R})",
    "Gem-at": r"(\mathrm{Gem}\text{-}\mathrm{at})",
}


def _term_latex(t, prec: int, right: bool) -> str:
    ty = type(t)
    if ty is Var:
        base = t.name
        if t.ns == "primed":
            return base + "'"
        if t.ns == "doubled":
            return base + "''"
        if t.ns == "class":
            return r"\mathit{" + base + "}"
        return base
    if ty is Neg:
        return r"\lnot " + _term_latex(t.arg, 3, False)
    if ty is And:
        own, op = 2, r" \wedge "
    elif ty is Or:
        own, op = 1, r" \vee "
    elif ty is Imp:
        own, op = 0, r" \supset "
    else:
        return r"\bot"
    s = _term_latex(t.left, own, False) + op + _term_latex(t.right, own, True)
    return "(" + s + ")" if (own < prec or (own == prec and right)) else s


def _member_latex(m) -> str:
    if isinstance(m, Struct) and m.star:
        return r"{\ast}" + _term_latex(m.term, 3, False)
    t = m.term if isinstance(m, Struct) else m
    return _term_latex(t, 0, False)


def _sequent_latex(s: Sequent) -> str:
    ants = ", ".join(_member_latex(m) for m in s.antecedent)
    arrow = r" \Rightarrow "
    return (ants + arrow if ants else arrow.lstrip()) + _member_latex(s.succedent)


def _ascii_lines(d: Derivation, depth: int, out: list):
    for c in d.children:
        _ascii_lines(c, depth + 1, out)
    out.append("  " * depth + f"{print_sequent(d.sequent)}   [{d.rule}]")


def proof_to_obj(d: Derivation) -> dict:
    def node(x: Derivation) -> dict:
        return {
            "sequent": sequent_to_obj(x.sequent),
            "rule": x.rule,
            "principal": x.principal,
            "height": x.height,
            "premisses": [node(c) for c in x.children],
        }
    return {"schema": PROOF_SCHEMA, "calculus": d.sequent.calculus,
            "derivation": node(d)}


def proof_from_obj(obj: dict) -> Derivation:
    if obj.get("schema") != PROOF_SCHEMA:
        raise ValueError(f"unsupported proof schema {obj.get('schema')!r}")

    def node(x: dict) -> Derivation:
        return Derivation(
            sequent_from_obj(x["sequent"]),
            x["rule"],
            x["principal"],
            tuple(node(c) for c in x["premisses"]),
            x["height"],
        )
    return node(obj["derivation"])


def render(d: Derivation, format: str = "ascii") -> str:
    """Render a checkable derivation as ascii, latex (bussproofs), or json."""
    ok, diag = check_derivation_report(d.sequent.calculus, d)
    if not ok:
        raise InvalidDerivationError(diag)
    if format == "ascii":
        out: list = []
        _ascii_lines(d, 0, out)
        return "\n".join(out)
    if format == "latex":
        lines = [r"\begin{prooftree}"]

        def emit(node: Derivation):
            for c in node.children:
                emit(c)
            if not node.children:
                lines.append(r"\AxiomC{}")
                infer = r"\UnaryInfC"
            elif len(node.children) == 1:
                infer = r"\UnaryInfC"
            else:
                infer = r"\BinaryInfC"
            label = _LATEX_LABELS.get(node.rule, node.rule)
            lines.append(r"\RightLabel{\scriptsize $" + label + "$}")
            lines.append(infer + "{$" + _sequent_latex(node.sequent) + "$}")

        emit(d)
        lines.append(r"\end{prooftree}")
        return "\n".join(lines)
    if format == "json":
        return json.dumps(proof_to_obj(d), indent=2, sort_keys=True)
    raise ValueError(f"unknown render format {format!r}")
