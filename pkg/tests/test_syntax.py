import json

import pytest
from hypothesis import given, strategies as st

from morgankit import (
    BOT, And, Imp, Neg, Or, Var,
    NamespaceError, ParseError,
    canonical_form, complexity, dm_weight, parse_sequent, parse_term,
    plain, print_term, sdm_weight, sequent, starred,
    sequent_from_obj, sequent_to_obj, term_from_obj, term_to_obj,
)
from morgankit.syntax import INT_CL, SDM_DM, parse_partition

p, q, r = Var("p"), Var("q"), Var("r")


def test_parse_precedence_and_negation():
    assert parse_term("~(p & q)") == Neg(And(p, q))
    assert parse_term("p & q | r") == Or(And(p, q), r)
    assert parse_term("~~p") == Neg(Neg(p))
    assert parse_term("p & q & r") == And(And(p, q), r)


def test_top_is_notation():
    assert parse_term("T") == Neg(BOT)
    assert parse_term("T", INT_CL) == Imp(BOT, BOT)
    assert parse_term("~p", INT_CL) == Imp(p, BOT)


def test_arrow_left_associative_int_only():
    assert parse_term("p -> q -> r", INT_CL) == Imp(Imp(p, q), r)
    with pytest.raises(ParseError):
        parse_term("p -> q", SDM_DM)


def test_namespace_reserved_in_sdm_dm():
    assert parse_term("p'", INT_CL) == Var("p", "primed")
    assert parse_term("p''", INT_CL) == Var("p", "doubled")
    assert parse_term("#k3", INT_CL) == Var("k3", "class")
    for bad in ("p'", "p''", "#k0"):
        with pytest.raises(NamespaceError):
            parse_term(bad, SDM_DM)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as e:
        parse_term("p & & q")
    assert e.value.position == 4


def test_print_examples():
    assert print_term(Neg(Neg(p))) == "~~p"
    assert print_term(And(p, Or(q, r))) == "p & (q | r)"
    assert print_term(Imp(p, BOT)) == "p -> F"
    assert print_term(Or(And(p, q), r)) == "p & q | r"


def test_sequent_parse_and_stars():
    s = parse_sequent("*p, q => *~(p & q)", "sdm")
    assert s.antecedent == (plain(q), starred(p))
    assert s.succedent == starred(Neg(And(p, q)))
    with pytest.raises(ParseError):
        parse_sequent("*p => q", "dm")


def test_partition_parsing():
    left, right, succ = parse_partition("p, q ; r => p", "sdm")
    assert left == (plain(p), plain(q))
    assert right == (plain(r),)
    assert succ == plain(p)
    left, right, succ = parse_partition("; p => p", "dm")
    assert left == ()


def test_sdm_weight_clauses():
    assert sdm_weight(p) == 1
    assert sdm_weight(BOT) == 1
    assert sdm_weight(Neg(p)) == 3
    assert sdm_weight(starred(Or(p, q))) == 5
    assert sdm_weight(Or(p, q)) == 4
    # conjunctions carry the extra unit that keeps every rule weight-decreasing
    assert sdm_weight(And(p, q)) == 6
    assert sdm_weight(parse_sequent("p, *q => r", "sdm")) == 4


def test_dm_weight_clauses():
    assert dm_weight(Neg(p)) == 2
    assert dm_weight(Neg(And(p, q))) == 5
    assert dm_weight(parse_sequent("p => p", "dm")) == 2


def test_canonical_form_examples():
    s = parse_sequent("q, p => r", "sdm")
    assert [m.term for m in s.antecedent] == [p, q]
    dup = parse_sequent("p, p => q", "sdm")
    assert len(dup.antecedent) == 2
    mixed = parse_sequent("*p, p => q", "sdm")
    assert mixed.antecedent == (plain(p), starred(p))


def test_multiset_equality():
    assert parse_sequent("q, p => r", "dm") == parse_sequent("p, q => r", "dm")
    assert parse_sequent("p, p => r", "dm") != parse_sequent("p => r", "dm")


# --- property tests ------------------------------------------------------

_names = st.sampled_from(["p", "q", "r", "s1"])


def _alg_terms(max_depth=4):
    return st.recursive(
        st.one_of(_names.map(Var), st.just(BOT)),
        lambda sub: st.one_of(
            sub.map(Neg),
            st.tuples(sub, sub).map(lambda t: And(*t)),
            st.tuples(sub, sub).map(lambda t: Or(*t)),
        ),
        max_leaves=8,
    )


def _imp_terms():
    return st.recursive(
        st.one_of(_names.map(Var), st.just(BOT),
                  _names.map(lambda n: Var(n, "primed"))),
        lambda sub: st.one_of(
            st.tuples(sub, sub).map(lambda t: And(*t)),
            st.tuples(sub, sub).map(lambda t: Or(*t)),
            st.tuples(sub, sub).map(lambda t: Imp(*t)),
        ),
        max_leaves=8,
    )


@given(_alg_terms())
def test_roundtrip_alg_terms(t):
    assert parse_term(print_term(t), SDM_DM) == t


@given(_imp_terms())
def test_roundtrip_imp_terms(t):
    assert parse_term(print_term(t), INT_CL) == t


@given(_alg_terms())
def test_weights_positive(t):
    assert sdm_weight(t) >= 1
    assert dm_weight(t) >= 1


@st.composite
def _sdm_sequents(draw):
    members = draw(st.lists(
        st.tuples(st.booleans(), _alg_terms()), max_size=4))
    succ = draw(st.tuples(st.booleans(), _alg_terms()))
    mk = lambda pair: starred(pair[1]) if pair[0] else plain(pair[1])
    return sequent("sdm", [mk(m) for m in members], mk(succ))


@given(_sdm_sequents(), st.randoms())
def test_canonical_form_idempotent_and_permutation_invariant(s, rng):
    assert canonical_form(s) == s
    shuffled = list(s.antecedent)
    rng.shuffle(shuffled)
    assert sequent("sdm", shuffled, s.succedent) == s


@given(_sdm_sequents())
def test_weight_monotone_under_weakening(s):
    bigger = sequent("sdm", list(s.antecedent) + [plain(p)], s.succedent)
    assert sdm_weight(bigger) > sdm_weight(s)


@given(_sdm_sequents())
def test_sequent_json_roundtrip(s):
    obj = json.loads(json.dumps(sequent_to_obj(s)))
    assert sequent_from_obj(obj) == s


@given(_imp_terms())
def test_term_json_roundtrip(t):
    assert term_from_obj(json.loads(json.dumps(term_to_obj(t)))) == t


def test_complexity_counts_connectives():
    assert complexity(p) == 0
    assert complexity(Neg(And(p, q))) == 2
    assert complexity(starred(Neg(p))) == 2
