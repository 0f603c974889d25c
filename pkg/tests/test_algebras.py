import pytest
from hypothesis import given, strategies as st

from morgankit import (
    BOT, And, FiniteAlgebra, Neg, Or, Var,
    check_variety, dm4, enumerate_algebras, evaluate, parse_sequent, refute,
    valid,
)
from morgankit.algebras import UnassignedVariableError, _canonical_key

p, q = Var("p"), Var("q")

BOOL2 = FiniteAlgebra(
    2, ((0, 1), (1, 1)), ((0, 0), (0, 1)), (1, 0))


def test_bool2_is_both_varieties():
    assert check_variety(BOOL2, "sdm")
    assert check_variety(BOOL2, "dm")


def test_dm4_tables():
    a = dm4()
    assert a.meet[1][2] == 0
    assert a.join[1][2] == 3
    assert a.neg == (3, 1, 2, 0)
    assert check_variety(a, "dm") and check_variety(a, "sdm")


def test_broken_involution_rejected():
    a = dm4()
    broken = FiniteAlgebra(4, a.join, a.meet, (3, 0, 2, 0))
    assert not check_variety(broken, "dm")


def test_malformed_tables_rejected():
    with pytest.raises(ValueError):
        FiniteAlgebra(2, ((0, 1),), ((0, 0), (0, 1)), (1, 0))
    with pytest.raises(ValueError):
        FiniteAlgebra(2, ((0, 9), (1, 1)), ((0, 0), (0, 1)), (1, 0))


def test_evaluate_pins():
    a = dm4()
    assert evaluate(Neg(BOT), {}, a) == 3
    assert evaluate(Neg(And(p, q)), {"p": 1, "q": 2}, a) == 3
    assert evaluate(Or(p, Neg(p)), {"p": 1}, a) == 1
    with pytest.raises(UnassignedVariableError):
        evaluate(p, {}, a)


def test_valid_pins():
    a = dm4()
    assert valid(parse_sequent("p => p", "dm"), a)
    assert not valid(parse_sequent("p => ~p", "dm"), a)
    assert valid(parse_sequent("~(p & q) => ~p | ~q", "dm"), a)
    assert valid(parse_sequent("*p => ~p", "sdm"), a)


def test_enumeration_counts_and_membership():
    assert len(enumerate_algebras("dm", 2)) == 1
    dm_small = enumerate_algebras("dm", 4)
    key = (4, _canonical_key(dm4()))
    assert key in {(a.size, _canonical_key(a)) for a in dm_small}
    sdm3 = enumerate_algebras("sdm", 3)
    # the 3-chain with ~0=1 and ~m=~1=0 is SDM but not DM
    pseudo = [a for a in sdm3 if a.size == 3 and a.neg == (2, 0, 0)]
    assert len(pseudo) == 1
    assert not check_variety(pseudo[0], "dm")
    assert all(check_variety(a, "sdm") for a in sdm3)


def test_enumeration_caps():
    with pytest.raises(ValueError):
        enumerate_algebras("dm", 7)
    with pytest.raises(ValueError):
        enumerate_algebras("dm", 1)


def test_refute_pins():
    assert refute(parse_sequent("p => ~~p", "sdm"), "sdm", 3) is not None
    assert refute(parse_sequent("p => p", "sdm"), "sdm", 4) is None
    assert refute(parse_sequent("~(~p & ~q) => p | q", "sdm"), "sdm", 5) is not None
    alg, assignment = refute(parse_sequent("~~p => p", "sdm"), "sdm", 5)
    assert check_variety(alg, "sdm")
    lhs = evaluate(Neg(Neg(p)), assignment, alg)
    rhs = evaluate(p, assignment, alg)
    assert alg.meet[lhs][rhs] != lhs


def test_algebra_json_roundtrip():
    a = dm4()
    b = FiniteAlgebra.from_obj(a.to_obj())
    assert (b.size, b.join, b.meet, b.neg) == (a.size, a.join, a.meet, a.neg)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_evaluate_homomorphic_on_dm4(x, y, z):
    a = dm4()
    assign = {"p": x, "q": y, "r": z}
    r = Var("r")
    t1, t2 = And(p, Or(q, r)), Neg(And(p, q))
    assert evaluate(And(t1, t2), assign, a) == a.meet[evaluate(t1, assign, a)][evaluate(t2, assign, a)]
    assert evaluate(Or(t1, t2), assign, a) == a.join[evaluate(t1, assign, a)][evaluate(t2, assign, a)]
    assert evaluate(Neg(t1), assign, a) == a.neg[evaluate(t1, assign, a)]
