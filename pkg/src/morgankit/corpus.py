"""Seeded random term/sequent corpora for the property and acceptance suites.

Terms come from a weighted grammar over a small variable pool; sequents get
up to `max_antecedent` members.  Everything is driven by `random.Random`
seeds, so corpora are reproducible byte-for-byte on a fixed version.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .terms import (
    BOT, CL, DM, INT, SDM,
    And, Imp, Neg, Or, Sequent, Var,
    dm_weight, plain, sdm_weight, sequent, starred,
)


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 0
    max_depth: int = 3            # grammar recursion depth, capped at 5
    variables: tuple = ("p", "q", "r")
    max_antecedent: int = 4
    min_antecedent: int = 0
    star_prob: float = 0.35       # SDM members/succedents only
    bottom_prob: float = 0.08
    related_succedent_prob: float = 0.45  # bias toward derivable goals

    def __post_init__(self):
        if self.max_depth > 5:
            raise ValueError("max_depth is capped at 5")


def random_term(rng: random.Random, cfg: CorpusConfig, depth: Optional[int] = None,
                imp: bool = False):
    """One random term; `imp` switches ~ for -> (the INT/CL language)."""
    if depth is None:
        depth = cfg.max_depth
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < cfg.bottom_prob:
            return BOT
        return Var(rng.choice(cfg.variables))
    r = rng.random()
    if r < 0.34:
        if imp:
            return Imp(random_term(rng, cfg, depth - 1, imp),
                       random_term(rng, cfg, depth - 1, imp))
        return Neg(random_term(rng, cfg, depth - 1, imp))
    if r < 0.67:
        return And(random_term(rng, cfg, depth - 1, imp),
                   random_term(rng, cfg, depth - 1, imp))
    return Or(random_term(rng, cfg, depth - 1, imp),
              random_term(rng, cfg, depth - 1, imp))


def _random_member(rng, cfg, calculus):
    t = random_term(rng, cfg, imp=calculus in (INT, CL))
    if calculus == SDM:
        return starred(t) if rng.random() < cfg.star_prob else plain(t)
    return t


def random_sequent(rng: random.Random, cfg: CorpusConfig, calculus: str) -> Sequent:
    n = rng.randint(cfg.min_antecedent, cfg.max_antecedent)
    ants = [_random_member(rng, cfg, calculus) for _ in range(n)]
    if ants and rng.random() < cfg.related_succedent_prob:
        # reuse an antecedent member so identity-like goals are common
        pick = rng.choice(ants)
        succ = pick
        if calculus == SDM and rng.random() < 0.3:
            succ = plain(pick.term) if pick.star else starred(pick.term)
    else:
        succ = _random_member(rng, cfg, calculus)
    return sequent(calculus, ants, succ)


def generate_sequents(calculus: str, count: int, cfg: CorpusConfig,
                      max_weight: Optional[int] = None) -> list:
    """`count` random sequents, rejection-filtered by weight when asked."""
    rng = random.Random(cfg.seed)
    out = []
    weigh = sdm_weight if calculus == SDM else dm_weight if calculus == DM else None
    while len(out) < count:
        s = random_sequent(rng, cfg, calculus)
        if max_weight is not None and weigh is not None and weigh(s) > max_weight:
            continue
        out.append(s)
    return out


def derivable_corpus(calculus: str, count: int, cfg: CorpusConfig,
                     max_weight: Optional[int] = None, engine=None,
                     term_succedent: bool = False) -> list:
    """`count` derivable sequents, found by rejection sampling."""
    from .search import default_engine
    eng = engine or default_engine()
    rng = random.Random(cfg.seed)
    weigh = sdm_weight if calculus == SDM else dm_weight if calculus == DM else None
    out = []
    while len(out) < count:
        s = random_sequent(rng, cfg, calculus)
        if term_succedent and calculus == SDM and s.succedent.star:
            continue
        if max_weight is not None and weigh is not None and weigh(s) > max_weight:
            continue
        if eng.derivable(calculus, s):
            out.append(s)
    return out
