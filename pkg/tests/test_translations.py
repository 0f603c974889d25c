import pytest

from morgankit import (
    BOT, TOP_ALG, TOP_IMP, And, ClassRegistry, Imp, Neg, Or, SearchEngine, Var,
    check_embedding, double_negate, f_godel_gentzen, f_sequent,
    g_glivenko, h_sequent, h_to_cl, k_sequent, k_to_int,
    parse_sequent, plain, print_sequent, print_term, sequent,
    starred, t_flatten,
)
from morgankit.corpus import CorpusConfig, generate_sequents
from morgankit.translations import big_or

p, q, r = Var("p"), Var("q"), Var("r")


def test_t_flatten():
    assert t_flatten(starred(p)) == Neg(p)
    assert t_flatten((plain(p), starred(q))) == And(p, Neg(q))
    assert t_flatten(plain(p)) == p
    assert t_flatten(()) == TOP_ALG
    assert big_or([]) == BOT


def test_t_flatten_folds_in_canonical_order():
    s = parse_sequent("*q, p => r", "sdm")
    assert t_flatten(s.antecedent) == And(p, Neg(q))


def test_f_clauses():
    f = f_godel_gentzen
    assert f(p) == Neg(Neg(p))
    assert f(BOT) == BOT
    assert f(Neg(p)) == Neg(Neg(Neg(p)))
    assert f(And(p, q)) == And(f(p), f(q))
    assert f(Or(p, q)) == Neg(Neg(Or(Neg(Neg(p)), Neg(Neg(q)))))
    # an antecedent folds into a single conjunction
    assert f((p, q)) == And(Neg(Neg(p)), Neg(Neg(q)))


def test_double_negate():
    assert double_negate((p, q)) == (Neg(Neg(p)), Neg(Neg(q)))
    assert double_negate(BOT) == Neg(Neg(BOT))
    assert double_negate(()) == ()


def test_k_clauses():
    reg = ClassRegistry()
    k = lambda t: k_to_int(t, reg)
    assert k(Neg(p)) == Var("p", "primed")
    assert k(Neg(Neg(p))) == Var("p", "doubled")
    assert k(Neg(Neg(Neg(p)))) == Var("p", "primed")
    assert k(Neg(BOT)) == TOP_IMP
    assert k(Neg(Neg(BOT))) == BOT
    assert k(Neg(Or(p, q))) == And(Var("p", "primed"), Var("q", "primed"))
    assert k(Neg(Neg(And(p, q)))) == And(Var("p", "doubled"), Var("q", "doubled"))
    assert k(And(p, q)) == And(p, q)


def test_k_class_variables_respect_equivalence():
    reg = ClassRegistry()
    a = k_to_int(Neg(And(Neg(p), Neg(q))), reg)
    b = k_to_int(Neg(Neg(Or(p, q))), reg)
    assert a == b == Var("k0", "class")
    # a distinct class gets a distinct variable
    c = k_to_int(Neg(And(p, q)), reg)
    assert c == Var("k1", "class")
    # interderivable with an earlier representative: reuse, in encounter order
    d = k_to_int(Neg(And(Neg(Neg(Neg(p))), Neg(Neg(Neg(q))))), reg)
    assert d == a
    assert [v.name for _, v in reg.entries] == ["k0", "k1"]


def test_k_registry_sidecar():
    reg = ClassRegistry()
    k_to_int(Neg(Neg(Or(p, q))), reg)
    obj = reg.as_obj()
    assert obj["schema"] == "morgan-kit/registry/v1"
    assert obj["entries"] == [{"variable": "#k0", "representative": "~~(p | q)"}]


def test_k_on_sequents_reads_stars_as_negation():
    reg = ClassRegistry()
    s = parse_sequent("*p, q => *~p", "sdm")
    img = k_sequent(s, reg)
    assert img == sequent("int", [Var("p", "primed"), q], Var("p", "doubled"))


def test_h_clauses():
    assert h_to_cl(Neg(And(p, q))) == Or(Var("p", "primed"), Var("q", "primed"))
    assert h_to_cl(Neg(Or(p, q))) == And(Var("p", "primed"), Var("q", "primed"))
    assert h_to_cl(Neg(Neg(p))) == p
    assert h_to_cl(Neg(BOT)) == TOP_IMP
    assert h_to_cl(Neg(Neg(Neg(p)))) == Var("p", "primed")


def test_g_clauses():
    assert g_glivenko(p) == Imp(Imp(p, BOT), BOT)
    assert g_glivenko((p, q)) == (Imp(Imp(p, BOT), BOT), Imp(Imp(q, BOT), BOT))
    assert print_term(g_glivenko(p)) == "p -> F -> F"


def test_f_sequent_empty_antecedent_uses_top():
    s = parse_sequent("=> p", "dm")
    assert f_sequent(s).antecedent == (plain(TOP_ALG),)


def test_check_embedding_pins():
    eng = SearchEngine()
    rep = check_embedding("dm-to-sdm-f", [parse_sequent("~~p => p", "dm")], engine=eng)
    assert rep.agreements == rep.total == 1
    rep = check_embedding("sdm-to-int-k", [parse_sequent("p => ~~p", "sdm")], engine=eng)
    assert rep.agreements == 1  # both sides refute
    rep = check_embedding("cl-to-int-g", [parse_sequent("=> p | ~p", "cl")], engine=eng)
    assert rep.agreements == 1  # both sides derive


def test_check_embedding_healthy_kinds_on_corpora():
    eng = SearchEngine()
    dm = generate_sequents("dm", 120, CorpusConfig(seed=61, max_depth=2, max_antecedent=3), max_weight=16)
    cl = generate_sequents("cl", 120, CorpusConfig(seed=62, max_depth=2, max_antecedent=3))
    assert check_embedding("dm-to-cl-h", dm, engine=eng).agreement_rate == 1.0
    assert check_embedding("cl-to-int-g", cl, engine=eng).agreement_rate == 1.0


def test_check_embedding_rejects_mismatched_corpus():
    with pytest.raises(ValueError):
        check_embedding("dm-to-sdm-f", [parse_sequent("p => p", "sdm")])
    with pytest.raises(ValueError):
        check_embedding("no-such-kind", [])


# -- characterization: machine-verified limits of the printed calculus ----
#
# These pin counterexamples discovered by exhaustive search: the star rule
# demands exactly the starred member's term, so several metatheoretic claims
# fail on the SDM side even though the corresponding inequalities hold in
# every semi-De Morgan algebra (see notes on the acceptance suite).

def test_star_rule_blocks_full_cut():
    eng = SearchEngine()
    left = parse_sequent("~q => ~~~q", "sdm")
    right = parse_sequent("~~~q => ~(~r & ~~q)", "sdm")
    conclusion = parse_sequent("~q => ~(~r & ~~q)", "sdm")
    assert eng.derivable("sdm", left)
    assert eng.derivable("sdm", right)
    assert not eng.derivable("sdm", conclusion)
    assert eng.min_height("sdm", conclusion) is None  # exhaustive enumeration
    from morgankit import refute
    assert refute(conclusion, "sdm", 5) is None  # yet valid in small algebras


def test_star_rule_blocks_f_embedding_occasionally():
    eng = SearchEngine()
    src = parse_sequent("q, r & (q & p | p & p) => p", "dm")
    assert eng.derivable("dm", src)
    assert not eng.derivable("sdm", f_sequent(src))


def test_k_embedding_fails_on_top_class():
    eng = SearchEngine()
    s = parse_sequent("~~q => ~~(~F | ~~r)", "sdm")
    assert eng.derivable("sdm", s)
    reg = ClassRegistry(eng)
    assert not eng.derivable("int", k_sequent(s, reg))


def test_or_of_negations_direction():
    # a derivable DM goal flips, inside the DM calculus, into a disjunction
    # of negated members; the SDM calculus cannot host this (it needs the
    # full law ~(a & b) = ~a | ~b), see the characterization test below
    from morgankit.corpus import CorpusConfig, derivable_corpus
    from morgankit.translations import big_or
    eng = SearchEngine()
    cfg = CorpusConfig(seed=71, max_depth=2, max_antecedent=3)
    for s in derivable_corpus("dm", 60, cfg, max_weight=14, engine=eng):
        flipped = sequent(
            "dm", [Neg(s.succedent)], big_or([Neg(m) for m in s.antecedent]))
        assert eng.derivable("dm", flipped), print_sequent(s)


def test_or_of_negations_is_a_dm_fact_not_an_sdm_one():
    from morgankit import refute
    eng = SearchEngine()
    src = parse_sequent("p, q => p & (q & q)", "dm")
    assert eng.derivable("dm", src)
    image = parse_sequent("~(p & (q & q)) => ~p | ~q", "sdm")
    assert not eng.derivable("sdm", image)
    assert refute(image, "sdm", 6) is not None  # semantically invalid in SDM
