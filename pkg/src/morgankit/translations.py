"""The five syntactic translations and the embedding-verification harness.

* ``t_flatten``     -- structure flattening: *phi reads as ~phi, multisets
                       fold with & (empty antecedent gives T).
* ``f_godel_gentzen`` -- double-negates atoms and disjunctions; a DM
                       antecedent folds into a single conjunction.
* ``double_negate`` -- prefixes ~~ memberwise.
* ``k_to_int``      -- into the intuitionistic language; negated conjunctions
                       and doubly-negated disjunctions that do not reduce
                       syntactically are named by fresh class variables, one
                       per G3SDM-interderivability class (ClassRegistry).
* ``h_to_cl``       -- into the classical language, pushing negation to
                       atoms (primed variables stand for negated atoms).
* ``g_glivenko``    -- prefixes (x -> F) -> F memberwise.

``check_embedding`` runs a corpus through a source calculus and the image
through the target calculus and reports agreement, listing counterexamples
verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .search import SearchEngine, default_engine
from .terms import (
    BOT, CL, CLASS, DM, INT, PRIMED, DOUBLED, SDM, TOP_ALG, TOP_IMP,
    And, Imp, Neg, Or, Sequent, Struct, Term, Var,
    is_alg_term, neg_count, plain, sequent, size, variables,
)


def _fold(ctor, items, empty):
    items = list(items)
    if not items:
        return empty
    acc = items[0]
    for x in items[1:]:
        acc = ctor(acc, x)
    return acc


def t_flatten(x) -> Term:
    """Flatten a basic structure or SDM antecedent to a term (left & fold)."""
    if isinstance(x, Struct):
        return Neg(x.term) if x.star else x.term
    if isinstance(x, Term):
        return x
    if isinstance(x, Sequent):
        return t_flatten(x.antecedent)
    members = [t_flatten(m) for m in x]
    return _fold(And, members, TOP_ALG)


def t_sequent(s: Sequent) -> Sequent:
    """The basic sequent t(Gamma) => t(alpha) associated with an SDM sequent."""
    return sequent(SDM, [plain(t_flatten(s.antecedent))], plain(t_flatten(s.succedent)))


def big_or(terms) -> Term:
    """Right fold of | in canonical order; the empty fold is F."""
    members = sorted(terms, key=lambda t: t.key())
    return _fold(Or, members, BOT)


def f_godel_gentzen(x):
    """Double-negation translation; antecedents fold into one conjunction."""
    if isinstance(x, Term):
        ty = type(x)
        if ty is Var:
            return Neg(Neg(x))
        if x == BOT:
            return BOT
        if ty is Neg:
            return Neg(f_godel_gentzen(x.arg))
        if ty is And:
            return And(f_godel_gentzen(x.left), f_godel_gentzen(x.right))
        if ty is Or:
            return Neg(Neg(Or(f_godel_gentzen(x.left), f_godel_gentzen(x.right))))
        raise ValueError("f is defined on the algebraic language")
    return _fold(And, [f_godel_gentzen(m) for m in x], TOP_ALG)


def f_sequent(s: Sequent, target: str = SDM) -> Sequent:
    """Image of a DM sequent: the folded antecedent implies the translated goal."""
    ant = [f_godel_gentzen(s.antecedent)] if s.antecedent else [TOP_ALG]
    return sequent(target, ant, f_godel_gentzen(s.succedent))


def double_negate(x):
    """~~ prefixed to a term, or memberwise to a multiset."""
    if isinstance(x, Term):
        return Neg(Neg(x))
    return tuple(Neg(Neg(m)) for m in x)


class ClassRegistry:
    """Representatives of G3SDM-interderivability classes and their variables.

    Lookup walks the stored entries and tests interderivability with two
    derive calls per candidate, behind two caches: a syntactic term cache and
    a pair-verdict cache.  A cheap semantic screen (evaluation in the small
    enumerated SDM algebras) rejects most non-equivalent pairs before any
    proof search runs.  Misses insert a fresh class-indexed variable, so
    variables are assigned in first-encounter order.

    Lookups mutate the registry; share one per translation run and do not
    write from two threads at once.
    """

    def __init__(self, engine: Optional[SearchEngine] = None):
        self.engine = engine or default_engine()
        self.entries: list = []            # (representative, Var) in insertion order
        self._by_term: dict = {}
        self._pair_cache: dict = {}
        self._screen = None

    def _screen_algebras(self):
        if self._screen is None:
            from .algebras import enumerate_algebras
            self._screen = enumerate_algebras(SDM, 4)
        return self._screen

    def _semantically_apart(self, a: Term, b: Term) -> bool:
        from .algebras import evaluate
        names = sorted({n for _, n in variables(a) | variables(b)})
        for alg in self._screen_algebras():
            for assign in _assignments(alg, names):
                va, vb = evaluate(a, assign, alg), evaluate(b, assign, alg)
                if va != vb:
                    return True
        return False

    def equivalent(self, a: Term, b: Term) -> bool:
        if a == b:
            return True
        key = (a, b) if a.key() <= b.key() else (b, a)
        hit = self._pair_cache.get(key)
        if hit is None:
            if self._semantically_apart(a, b):
                hit = False
            else:
                hit = (self.engine.derivable(SDM, sequent(SDM, [a], b))
                       and self.engine.derivable(SDM, sequent(SDM, [b], a)))
            self._pair_cache[key] = hit
        return hit

    def lookup(self, term: Term) -> Var:
        v = self._by_term.get(term)
        if v is not None:
            return v
        for rep, var in self.entries:
            if self.equivalent(term, rep):
                self._by_term[term] = var
                return var
        var = Var(f"k{len(self.entries)}", CLASS)
        self.entries.append((term, var))
        self._by_term[term] = var
        return var

    def as_obj(self) -> dict:
        from .syntax import print_term
        return {
            "schema": "morgan-kit/registry/v1",
            "entries": [
                {"variable": "#" + var.name, "representative": print_term(rep)}
                for rep, var in self.entries
            ],
        }


def _assignments(alg, names):
    if not names:
        yield {}
        return
    import itertools
    for values in itertools.product(range(alg.size), repeat=len(names)):
        yield dict(zip(names, values))


def k_to_int(phi: Term, reg: ClassRegistry) -> Term:
    """Translate a base-language SDM term into the intuitionistic language."""
    if not is_alg_term(phi):
        raise ValueError("k is defined on the algebraic language")
    return _k(phi, reg, None)


def _measure(t: Term):
    return (neg_count(t), size(t))


def _k(phi: Term, reg: ClassRegistry, bound) -> Term:
    m = _measure(phi)
    assert bound is None or m < bound, "k recursion measure failed to decrease"
    ty = type(phi)
    if ty is Var:
        return phi
    if phi == BOT:
        return BOT
    if ty is And:
        return And(_k(phi.left, reg, m), _k(phi.right, reg, m))
    if ty is Or:
        return Or(_k(phi.left, reg, m), _k(phi.right, reg, m))
    # phi = ~x
    x = phi.arg
    tx = type(x)
    if tx is Var:
        return Var(x.name, PRIMED)
    if x == BOT:
        return TOP_IMP
    if tx is Or:
        return And(_k(Neg(x.left), reg, m), _k(Neg(x.right), reg, m))
    if tx is And:
        if type(x.left) is Neg and type(x.right) is Neg:
            return _k(Neg(Neg(Or(x.left.arg, x.right.arg))), reg, m)
        return reg.lookup(phi)
    # phi = ~~y
    y = x.arg
    tyy = type(y)
    if tyy is Var:
        return Var(y.name, DOUBLED)
    if y == BOT:
        return BOT
    if tyy is And:
        return And(_k(Neg(Neg(y.left)), reg, m), _k(Neg(Neg(y.right)), reg, m))
    if tyy is Or:
        if type(y.left) is Neg and type(y.right) is Neg:
            return _k(Neg(And(y.left.arg, y.right.arg)), reg, m)
        return reg.lookup(phi)
    # phi = ~~~z
    return _k(Neg(y.arg), reg, m)


def k_member(m, reg: ClassRegistry) -> Term:
    if isinstance(m, Struct):
        return _k(Neg(m.term), reg, None) if m.star else _k(m.term, reg, None)
    return _k(m, reg, None)


def k_sequent(s: Sequent, reg: ClassRegistry) -> Sequent:
    """Memberwise image of an SDM sequent; a starred succedent reads as ~."""
    ants = [k_member(m, reg) for m in s.antecedent]
    return sequent(INT, ants, k_member(s.succedent, reg))


def h_to_cl(phi: Term) -> Term:
    """Translate a DM term into the classical language (negation to atoms)."""
    ty = type(phi)
    if ty is Var:
        return phi
    if phi == BOT:
        return BOT
    if ty is And:
        return And(h_to_cl(phi.left), h_to_cl(phi.right))
    if ty is Or:
        return Or(h_to_cl(phi.left), h_to_cl(phi.right))
    x = phi.arg
    tx = type(x)
    if tx is Var:
        return Var(x.name, PRIMED)
    if x == BOT:
        return TOP_IMP
    if tx is And:
        return Or(h_to_cl(Neg(x.left)), h_to_cl(Neg(x.right)))
    if tx is Or:
        return And(h_to_cl(Neg(x.left)), h_to_cl(Neg(x.right)))
    return h_to_cl(x.arg)


def h_sequent(s: Sequent) -> Sequent:
    return sequent(CL, [h_to_cl(m) for m in s.antecedent], h_to_cl(s.succedent))


def g_glivenko(x):
    """(x -> F) -> F on a term, memberwise on a multiset."""
    if isinstance(x, Term):
        return Imp(Imp(x, BOT), BOT)
    return tuple(Imp(Imp(m, BOT), BOT) for m in x)


def g_sequent(s: Sequent) -> Sequent:
    return sequent(INT, g_glivenko(s.antecedent), g_glivenko(s.succedent))


EMBEDDING_KINDS = (
    "dm-to-sdm-f", "dm-glivenko-sdm", "sdm-to-int-k", "dm-to-cl-h",
    "cl-to-int-g", "diagram",
)


@dataclass
class EmbeddingReport:
    kind: str
    total: int = 0
    agreements: int = 0
    counterexamples: list = field(default_factory=list)
    # dm-glivenko-sdm only: how often the single-negation succedent variant
    # agrees with the source; reported, not gated.
    variant_total: int = 0
    variant_agreements: int = 0

    @property
    def agreement_rate(self) -> float:
        return self.agreements / self.total if self.total else 1.0

    @property
    def variant_rate(self) -> float:
        return self.variant_agreements / self.variant_total if self.variant_total else 1.0

    def record(self, s: Sequent, source: bool, target: bool):
        from .syntax import print_sequent
        self.total += 1
        if source == target:
            self.agreements += 1
        else:
            self.counterexamples.append(
                (print_sequent(s), source, target))


def check_embedding(kind: str, corpus, engine: Optional[SearchEngine] = None,
                    registry: Optional[ClassRegistry] = None) -> EmbeddingReport:
    """Agreement report between a source calculus and its translated image."""
    if kind not in EMBEDDING_KINDS:
        raise ValueError(f"unknown embedding kind {kind!r}")
    eng = engine or default_engine()
    report = EmbeddingReport(kind)
    if kind == "sdm-to-int-k" and registry is None:
        registry = ClassRegistry(eng)    # one registry per invocation
    if kind == "diagram" and registry is None:
        registry = ClassRegistry(eng)
    for s in corpus:
        if kind == "dm-to-sdm-f":
            _expect(s, DM)
            src = eng.derivable(DM, s)
            tgt = eng.derivable(SDM, f_sequent(s))
        elif kind == "dm-glivenko-sdm":
            _expect(s, DM)
            src = eng.derivable(DM, s)
            image = sequent(SDM, double_negate(s.antecedent),
                            double_negate(s.succedent))
            tgt = eng.derivable(SDM, image)
            printed = sequent(SDM, double_negate(s.antecedent), Neg(s.succedent))
            report.variant_total += 1
            if src == eng.derivable(SDM, printed):
                report.variant_agreements += 1
        elif kind == "sdm-to-int-k":
            _expect(s, SDM)
            src = eng.derivable(SDM, s)
            tgt = eng.derivable(INT, k_sequent(s, registry))
        elif kind == "dm-to-cl-h":
            _expect(s, DM)
            src = eng.derivable(DM, s)
            tgt = eng.derivable(CL, h_sequent(s))
        elif kind == "cl-to-int-g":
            _expect(s, CL)
            src = eng.derivable(CL, s)
            tgt = eng.derivable(INT, g_sequent(s))
        else:  # diagram
            _expect(s, DM)
            gh = g_sequent(h_sequent(s))
            kf = f_sequent(s)
            kf_int = sequent(INT, [k_member(m, registry) for m in kf.antecedent],
                             k_member(kf.succedent, registry))
            src = eng.derivable(INT, gh)
            tgt = eng.derivable(INT, kf_int)
        report.record(s, src, tgt)
    return report


def _expect(s: Sequent, calculus: str):
    if s.calculus != calculus:
        raise ValueError(f"corpus sequent tagged {s.calculus}, expected {calculus}")
