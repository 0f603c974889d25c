"""Terms, basic structures, sequents, and the weight measures.

Two term languages share one AST family:

* the algebraic language (variables, F, ~, &, |) used by the SDM and DM
  sequent calculi, and
* the implicational language (variables, F, &, |, ->) used by the
  intuitionistic and classical calculi, where ~x abbreviates x -> F.

Everything here is immutable after construction and safe to share between
threads.  Hashes are cached at construction time; canonical sort keys are
cached lazily, so multiset-antecedent sequents can be kept in a canonical
sorted order cheaply.
"""

from __future__ import annotations

from typing import Iterable, Union

# Variable namespaces.  Base variables come from user input; the other three
# are reserved for translation output ("p'", "p''", "#k0", ...), which keeps
# generated variables from ever colliding with parsed ones.
BASE = "base"
PRIMED = "primed"
DOUBLED = "doubled"
CLASS = "class"

_NS_RANK = {BASE: 0, PRIMED: 1, DOUBLED: 2, CLASS: 3}

SDM = "sdm"
DM = "dm"
INT = "int"
CL = "cl"

CALCULI = (SDM, DM, INT, CL)


class Term:
    """Base class for all term constructors."""

    __slots__ = ("_h", "_key")

    def key(self):
        """Total-order sort key; equal keys iff structurally equal."""
        k = self._key
        if k is None:
            k = self._make_key()
            self._key = k
        return k

    def __hash__(self):
        return self._h

    def __repr__(self):
        from .syntax import print_term
        return f"<{type(self).__name__} {print_term(self)}>"


class Var(Term):
    __slots__ = ("name", "ns")

    def __init__(self, name: str, ns: str = BASE):
        if ns not in _NS_RANK:
            raise ValueError(f"unknown namespace {ns!r}")
        self.name = name
        self.ns = ns
        self._h = hash((1, ns, name))
        self._key = (0, _NS_RANK[ns], name)

    def _make_key(self):
        return self._key

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return self is other or (
            type(other) is Var and self.name == other.name and self.ns == other.ns
        )


class _Bottom(Term):
    __slots__ = ()

    def __init__(self):
        self._h = hash((2, "bot"))
        self._key = (1,)

    def _make_key(self):
        return self._key

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return type(other) is _Bottom


#: The falsum constant; use this singleton rather than constructing _Bottom.
BOT = _Bottom()


class Neg(Term):
    """Negation; only meaningful in the algebraic (SDM/DM) language."""

    __slots__ = ("arg",)

    def __init__(self, arg: Term):
        self.arg = arg
        self._h = hash((3, arg._h))
        self._key = None

    def _make_key(self):
        return (2, self.arg.key())

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return self is other or (
            type(other) is Neg and self._h == other._h and self.arg == other.arg
        )


class And(Term):
    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self._h = hash((4, left._h, right._h))
        self._key = None

    def _make_key(self):
        return (3, self.left.key(), self.right.key())

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return self is other or (
            type(other) is And
            and self._h == other._h
            and self.left == other.left
            and self.right == other.right
        )


class Or(Term):
    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self._h = hash((5, left._h, right._h))
        self._key = None

    def _make_key(self):
        return (4, self.left.key(), self.right.key())

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return self is other or (
            type(other) is Or
            and self._h == other._h
            and self.left == other.left
            and self.right == other.right
        )


class Imp(Term):
    """Implication; only meaningful in the INT/CL language."""

    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self._h = hash((6, left._h, right._h))
        self._key = None

    def _make_key(self):
        return (5, self.left.key(), self.right.key())

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return self is other or (
            type(other) is Imp
            and self._h == other._h
            and self.left == other.left
            and self.right == other.right
        )


#: Verum in the algebraic language: T is notation for ~F.
TOP_ALG = Neg(BOT)

#: Verum in the implicational language: T is notation for F -> F.
TOP_IMP = Imp(BOT, BOT)


def neg_imp(t: Term) -> Term:
    """~t in the implicational language, i.e. t -> F."""
    return Imp(t, BOT)


class Struct:
    """A basic SDM-structure: a term, optionally under the structural star.

    Stars never nest; the wrapped value is always a plain term.
    """

    __slots__ = ("star", "term", "_h", "_key")

    def __init__(self, star: bool, term: Term):
        if not isinstance(term, Term):
            raise TypeError("Struct wraps a term")
        self.star = star
        self.term = term
        self._h = hash((7, star, term._h))
        self._key = None

    def key(self):
        k = self._key
        if k is None:
            k = (1 if self.star else 0, self.term.key())
            self._key = k
        return k

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        return self is other or (
            type(other) is Struct
            and self._h == other._h
            and self.star == other.star
            and self.term == other.term
        )

    def __repr__(self):
        from .syntax import print_structure
        return f"<Struct {print_structure(self)}>"


def plain(t: Term) -> Struct:
    return Struct(False, t)


def starred(t: Term) -> Struct:
    return Struct(True, t)


Member = Union[Term, Struct]


def _member_key(m: Member):
    return m.key()


class Sequent:
    """A sequent: multiset antecedent, single succedent, calculus tag.

    The antecedent tuple is always kept sorted by the canonical member
    order, so two sequents whose antecedents are equal as multisets compare
    equal.  SDM sequents carry Struct members and a Struct succedent; DM,
    INT and CL sequents carry bare terms.
    """

    __slots__ = ("calculus", "antecedent", "succedent", "_h", "_setform")

    def __init__(self, calculus: str, antecedent: Iterable[Member], succedent: Member):
        ants = sorted(antecedent, key=_member_key)
        self.calculus = calculus
        self.antecedent = tuple(ants)
        self.succedent = succedent
        self._h = hash((calculus, self.antecedent, succedent))
        self._setform = None

    def setform(self):
        """Antecedent-as-set view, used for loop checking in INT/CL search."""
        sf = self._setform
        if sf is None:
            dedup = []
            prev = None
            for m in self.antecedent:
                if prev is None or m != prev:
                    dedup.append(m)
                    prev = m
            sf = (self.calculus, tuple(dedup), self.succedent)
            self._setform = sf
        return sf

    def without(self, index: int) -> tuple:
        a = self.antecedent
        return a[:index] + a[index + 1:]

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        return self is other or (
            type(other) is Sequent
            and self._h == other._h
            and self.calculus == other.calculus
            and self.succedent == other.succedent
            and self.antecedent == other.antecedent
        )

    def __repr__(self):
        from .syntax import print_sequent
        return f"<Sequent {self.calculus}: {print_sequent(self)}>"


def sequent(calculus: str, antecedent: Iterable[Member], succedent: Member) -> Sequent:
    """Build a sequent in canonical form, validating member shapes."""
    if calculus not in CALCULI:
        raise ValueError(f"unknown calculus {calculus!r}")
    ants = list(antecedent)
    if calculus == SDM:
        if not isinstance(succedent, Struct):
            succedent = plain(succedent)
        ants = [m if isinstance(m, Struct) else plain(m) for m in ants]
        for m in ants + [succedent]:
            if not is_alg_term(m.term):
                raise ValueError("SDM sequents use the algebraic language")
    else:
        if isinstance(succedent, Struct) or any(isinstance(m, Struct) for m in ants):
            raise ValueError(f"{calculus} sequents carry no starred members")
        check = is_alg_term if calculus == DM else is_imp_term
        for m in ants + [succedent]:
            if not check(m):
                raise ValueError(f"term outside the {calculus} language")
    return Sequent(calculus, ants, succedent)


def canonical_form(s: Sequent) -> Sequent:
    """Identity on already-canonical sequents; re-sorts the antecedent."""
    return Sequent(s.calculus, s.antecedent, s.succedent)


def is_alg_term(t: Term) -> bool:
    """True iff t avoids ->, i.e. lies in the SDM/DM language."""
    stack = [t]
    while stack:
        x = stack.pop()
        if type(x) is Imp:
            return False
        if type(x) is Neg:
            stack.append(x.arg)
        elif type(x) is And or type(x) is Or:
            stack.append(x.left)
            stack.append(x.right)
    return True


def is_imp_term(t: Term) -> bool:
    """True iff t avoids ~, i.e. lies in the INT/CL language."""
    stack = [t]
    while stack:
        x = stack.pop()
        if type(x) is Neg:
            return False
        if type(x) in (And, Or, Imp):
            stack.append(x.left)
            stack.append(x.right)
    return True


# --- weights -----------------------------------------------------------

_SDM_W: dict = {}


def _sdm_w(t: Term) -> int:
    w = _SDM_W.get(t)
    if w is not None:
        return w
    ty = type(t)
    if ty is Var or ty is _Bottom:
        w = 1
    elif ty is Neg:
        w = _sdm_w(t.arg) + 2
    elif ty is Or:
        w = _sdm_w(t.left) + _sdm_w(t.right) + 2
    elif ty is And:
        # A conjunction adds 4, not 3: with 3 the starred-negated-conjunction
        # left rule keeps the sequent weight constant, and backward search
        # needs every rule to lower it strictly.
        w = _sdm_w(t.left) + _sdm_w(t.right) + 4
    else:
        raise TypeError("SDM weight is defined on the algebraic language only")
    _SDM_W[t] = w
    return w


def sdm_weight(x) -> int:
    """Weight measure bounding G3SDM proof search; stars add 1, ~ adds 2."""
    if isinstance(x, Term):
        return _sdm_w(x)
    if isinstance(x, Struct):
        return _sdm_w(x.term) + (1 if x.star else 0)
    if isinstance(x, Sequent):
        return sum(sdm_weight(m) for m in x.antecedent) + sdm_weight(x.succedent)
    if isinstance(x, (tuple, list)):
        return sum(sdm_weight(m) for m in x)
    raise TypeError(f"cannot weigh {x!r}")


_DM_W: dict = {}


def _dm_w(t: Term) -> int:
    w = _DM_W.get(t)
    if w is not None:
        return w
    ty = type(t)
    if ty is Var or ty is _Bottom:
        w = 1
    elif ty is Neg:
        w = _dm_w(t.arg) + 1
    elif ty is Or or ty is And:
        w = _dm_w(t.left) + _dm_w(t.right) + 2
    else:
        raise TypeError("DM weight is defined on the algebraic language only")
    _DM_W[t] = w
    return w


def dm_weight(x) -> int:
    """Weight measure bounding G3DM proof search."""
    if isinstance(x, Term):
        return _dm_w(x)
    if isinstance(x, Sequent):
        return sum(_dm_w(m) for m in x.antecedent) + _dm_w(x.succedent)
    if isinstance(x, (tuple, list)):
        return sum(_dm_w(m) for m in x)
    raise TypeError(f"cannot weigh {x!r}")


def complexity(x) -> int:
    """Connective count (~, &, |, ->; plus * on structures). Diagnostic only."""
    if isinstance(x, Struct):
        return complexity(x.term) + (1 if x.star else 0)
    if isinstance(x, Sequent):
        return sum(complexity(m) for m in x.antecedent) + complexity(x.succedent)
    if isinstance(x, (tuple, list)):
        return sum(complexity(m) for m in x)
    ty = type(x)
    if ty is Var or ty is _Bottom:
        return 0
    if ty is Neg:
        return 1 + complexity(x.arg)
    return 1 + complexity(x.left) + complexity(x.right)


def neg_count(t: Term) -> int:
    """Number of ~ occurrences; the primary component of k's termination measure."""
    ty = type(t)
    if ty is Var or ty is _Bottom:
        return 0
    if ty is Neg:
        return 1 + neg_count(t.arg)
    return neg_count(t.left) + neg_count(t.right)


def size(t: Term) -> int:
    ty = type(t)
    if ty is Var or ty is _Bottom:
        return 1
    if ty is Neg:
        return 1 + size(t.arg)
    return 1 + size(t.left) + size(t.right)


def variables(x) -> frozenset:
    """The set of (namespace, name) pairs occurring in x."""
    out = set()
    stack = [x]
    while stack:
        item = stack.pop()
        if isinstance(item, Sequent):
            stack.extend(item.antecedent)
            stack.append(item.succedent)
        elif isinstance(item, Struct):
            stack.append(item.term)
        elif isinstance(item, (tuple, list)):
            stack.extend(item)
        elif type(item) is Var:
            out.add((item.ns, item.name))
        elif type(item) is Neg:
            stack.append(item.arg)
        elif type(item) in (And, Or, Imp):
            stack.append(item.left)
            stack.append(item.right)
    return frozenset(out)
