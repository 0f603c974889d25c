import pytest

from morgankit import (
    BOT, Neg, SearchEngine, Var,
    all_partitions, derive, interpolate, parse_sequent, plain,
    print_sequent, starred, t_flatten,
    verify_interpolant, Partition, PartitionMismatchError,
)
from morgankit.corpus import CorpusConfig, derivable_corpus

p, q = Var("p"), Var("q")


def test_identity_partitions():
    s = parse_sequent("p, q => p", "sdm")
    d = derive("sdm", s)
    r = interpolate("sdm", d, Partition.of([plain(p)], [plain(q)]))
    assert r.interpolant == plain(p)
    r = interpolate("sdm", d, Partition.of([plain(q)], [plain(p)]))
    assert r.interpolant == starred(BOT)


def test_star_rule_partitions():
    s = parse_sequent("*p => *p", "sdm")
    d = derive("sdm", s)
    assert d.rule == "*"
    r = interpolate("sdm", d, Partition.of([starred(p)], []))
    assert r.interpolant == starred(p)
    r = interpolate("sdm", d, Partition.of([], [starred(p)]))
    assert r.interpolant == starred(BOT)


def test_verify_conditions():
    s = parse_sequent("p, q => p", "sdm")
    part = Partition.of([plain(p)], [plain(q)])
    assert verify_interpolant("sdm", s, part, plain(p))
    # q is not in the left part's vocabulary
    assert not verify_interpolant("sdm", s, part, plain(q))
    top_part = Partition.of([], [plain(p)])
    s2 = parse_sequent("p => p", "sdm")
    assert verify_interpolant("sdm", s2, top_part, starred(BOT))


def test_partition_must_match():
    s = parse_sequent("p, q => p", "sdm")
    d = derive("sdm", s)
    with pytest.raises(PartitionMismatchError):
        interpolate("sdm", d, Partition.of([plain(p)], []))
    assert not verify_interpolant(
        "sdm", s, Partition.of([plain(p)], []), plain(p))


def test_derivation_must_check():
    s = parse_sequent("p, q => p", "sdm")
    d = derive("sdm", s)
    from morgankit import Derivation
    bad = Derivation(d.sequent, d.rule, d.principal, d.children, d.height + 1)
    with pytest.raises(ValueError):
        interpolate("sdm", bad, Partition.of([plain(p)], [plain(q)]))


def test_dm_axiom_sides():
    s = parse_sequent("~p, q => ~p", "dm")
    d = derive("dm", s)
    r = interpolate("dm", d, Partition.of([Neg(p)], [q]))
    assert r.interpolant == Neg(p)
    r = interpolate("dm", d, Partition.of([q], [Neg(p)]))
    assert r.interpolant == Neg(BOT)


def _exhaustive_partition_check(calc, corpus, eng):
    for s in corpus:
        d = eng.derive(calc, s)
        for part in all_partitions(s):
            r = interpolate(calc, d, part, engine=eng)
            assert verify_interpolant(calc, s, part, r.interpolant, engine=eng), \
                (print_sequent(s), part)
            if calc == "sdm":
                flat = plain(t_flatten(r.interpolant))
                assert verify_interpolant(calc, s, part, flat, engine=eng)


def test_all_partitions_verify_sdm():
    eng = SearchEngine()
    cfg = CorpusConfig(seed=21, max_depth=2, max_antecedent=3)
    corpus = derivable_corpus("sdm", 30, cfg, max_weight=18, engine=eng)
    _exhaustive_partition_check("sdm", corpus, eng)


def test_all_partitions_verify_dm():
    eng = SearchEngine()
    cfg = CorpusConfig(seed=22, max_depth=2, max_antecedent=3)
    corpus = derivable_corpus("dm", 30, cfg, max_weight=16, engine=eng)
    _exhaustive_partition_check("dm", corpus, eng)


def test_deterministic():
    eng = SearchEngine()
    s = parse_sequent("*q, r, p => *(p & q)", "sdm")
    d = eng.derive("sdm", s)
    for part in all_partitions(s):
        a = interpolate("sdm", d, part, engine=eng).interpolant
        b = interpolate("sdm", d, part, engine=eng).interpolant
        assert a == b


def test_interpolation_rejects_int():
    s = parse_sequent("p => p", "int")
    d = derive("int", s)
    with pytest.raises(ValueError):
        interpolate("int", d, Partition.of([p], []))


def test_verify_accepts_top_for_empty_left():
    from morgankit import TOP_ALG
    s = parse_sequent("p => p", "sdm")
    part = Partition.of([], [plain(Var("p"))])
    assert verify_interpolant("sdm", s, part, plain(TOP_ALG))
    assert verify_interpolant("sdm", s, part, starred(BOT))
