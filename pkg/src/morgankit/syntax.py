"""Concrete syntax: parsing, printing, and the JSON AST encoding.

Surface grammar (ASCII; precedence ~ > & > | > ->, binary operators
left-associative)::

    sequent   = [ items ] "=>" item
    partition = [ items ] ";" [ items ] "=>" item
    items     = item { "," item }
    item      = [ "*" ] term            (* star only in SDM sequents *)
    term      = or { "->" or }          (* -> only in INT/CL *)
    or        = and { "|" and }
    and       = unary { "&" unary }
    unary     = "~" unary | atom
    atom      = var | "T" | "F" | "(" term ")"
    var       = ident [ "'" | "''" ] | "#k" digits

``T`` abbreviates ``~F`` in the algebraic language and ``F -> F`` in the
implicational one; ``~x`` abbreviates ``x -> F`` when parsing INT/CL input.
Primed, doubled and ``#k`` variables are reserved for translation output and
rejected in SDM/DM input.
"""

from __future__ import annotations

import re

from .terms import (
    BASE, BOT, CLASS, DM, DOUBLED, PRIMED, SDM,
    And, Imp, Neg, Or, Sequent, Struct, Term, Var,
    plain, sequent, starred,
)

AST_SCHEMA = "morgan-kit/ast/v1"

SDM_DM = "sdm-dm"
INT_CL = "int-cl"


class ParseError(ValueError):
    """Syntax error, with the offending position in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NamespaceError(ParseError):
    """A reserved translation-output variable appeared in SDM/DM input."""


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<var>[a-zA-Z_][a-zA-Z0-9_]*(?:'{1,2})?|#k[0-9]+)"
    r"|(?P<arrow>->)|(?P<seq>=>)"
    r"|(?P<punct>[~&|*(),;]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            at = n - len(rest)
            raise ParseError(f"unexpected character {rest[0]!r}", at)
        kind = m.lastgroup
        tokens.append((m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append((None, n))
    return tokens


def _var_from_token(tok: str, pos: int, language: str) -> Var:
    if tok.startswith("#k"):
        ns, name = CLASS, tok[1:]
    elif tok.endswith("''"):
        ns, name = DOUBLED, tok[:-2]
    elif tok.endswith("'"):
        ns, name = PRIMED, tok[:-1]
    else:
        ns, name = BASE, tok
    if language == SDM_DM and ns != BASE:
        raise NamespaceError(
            f"variable {tok!r} belongs to a reserved translation namespace", pos
        )
    return Var(name, ns)


class _Parser:
    def __init__(self, text: str, language: str):
        if language not in (SDM_DM, INT_CL):
            raise ValueError(f"unknown language {language!r}")
        self.tokens = _tokenize(text)
        self.i = 0
        self.language = language

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, tok: str):
        got, pos = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, found {got!r}", pos)

    def term(self) -> Term:
        node = self.disjunction()
        while self.peek() == "->":
            _, pos = self.take()
            if self.language == SDM_DM:
                raise ParseError("'->' is not part of the SDM/DM language", pos)
            node = Imp(node, self.disjunction())
        return node

    def disjunction(self) -> Term:
        node = self.conjunction()
        while self.peek() == "|":
            self.take()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Term:
        node = self.unary()
        while self.peek() == "&":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self) -> Term:
        if self.peek() == "~":
            self.take()
            arg = self.unary()
            return Neg(arg) if self.language == SDM_DM else Imp(arg, BOT)
        return self.atom()

    def atom(self) -> Term:
        tok, pos = self.take()
        if tok == "(":
            node = self.term()
            self.expect(")")
            return node
        if tok == "F":
            return BOT
        if tok == "T":
            return Neg(BOT) if self.language == SDM_DM else Imp(BOT, BOT)
        if tok is not None and (tok[0].isalpha() or tok[0] in "_#"):
            return _var_from_token(tok, pos, self.language)
        raise ParseError(f"expected a term, found {tok!r}", pos)

    def item(self, calculus: str):
        if self.peek() == "*":
            _, pos = self.take()
            if calculus != SDM:
                raise ParseError("starred structures occur only in SDM sequents", pos)
            return starred(self.term())
        t = self.term()
        return plain(t) if calculus == SDM else t

    def items(self, calculus: str, stop: tuple):
        out = []
        if self.peek() in stop:
            return out
        out.append(self.item(calculus))
        while self.peek() == ",":
            self.take()
            out.append(self.item(calculus))
        return out

    def end(self):
        tok, pos = self.take()
        if tok is not None:
            raise ParseError(f"trailing input {tok!r}", pos)


def _language_of(calculus: str) -> str:
    return SDM_DM if calculus in (SDM, DM) else INT_CL


def parse_term(text: str, language: str = SDM_DM) -> Term:
    """Parse a term; `language` is "sdm-dm" or "int-cl"."""
    p = _Parser(text, language)
    t = p.term()
    p.end()
    return t


def parse_structure(text: str) -> Struct:
    """Parse a basic SDM-structure: a term with an optional leading star."""
    p = _Parser(text, SDM_DM)
    s = p.item(SDM)
    p.end()
    return s


def parse_sequent(text: str, calculus: str) -> Sequent:
    p = _Parser(text, _language_of(calculus))
    ants = p.items(calculus, stop=("=>",))
    p.expect("=>")
    succ = p.item(calculus)
    p.end()
    return sequent(calculus, ants, succ)


def parse_partition(text: str, calculus: str):
    """Parse "G1 ; G2 => b" into (left members, right members, succedent)."""
    p = _Parser(text, _language_of(calculus))
    left = p.items(calculus, stop=(";",))
    p.expect(";")
    right = p.items(calculus, stop=("=>",))
    p.expect("=>")
    succ = p.item(calculus)
    p.end()
    return tuple(left), tuple(right), succ


# --- printing ----------------------------------------------------------

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY = 0, 1, 2, 3


def _var_text(v: Var) -> str:
    if v.ns == BASE:
        return v.name
    if v.ns == PRIMED:
        return v.name + "'"
    if v.ns == DOUBLED:
        return v.name + "''"
    return "#" + v.name


def _print(t: Term, prec: int, right: bool) -> str:
    ty = type(t)
    if ty is Var:
        return _var_text(t)
    if ty is Neg:
        return "~" + _print(t.arg, _PREC_UNARY, False)
    if ty is And:
        own, op = _PREC_AND, " & "
    elif ty is Or:
        own, op = _PREC_OR, " | "
    elif ty is Imp:
        own, op = _PREC_IMP, " -> "
    else:
        return "F"
    s = _print(t.left, own, False) + op + _print(t.right, own, True)
    if own < prec or (own == prec and right):
        return "(" + s + ")"
    return s


def print_term(t: Term) -> str:
    """Render with minimal parentheses; parse_term round-trips the result."""
    return _print(t, _PREC_IMP, False)


def print_structure(s) -> str:
    if isinstance(s, Struct):
        if s.star:
            inner = _print(s.term, _PREC_UNARY, False)
            return "*" + inner
        return print_term(s.term)
    return print_term(s)


def print_sequent(s: Sequent) -> str:
    ants = ", ".join(print_structure(m) for m in s.antecedent)
    succ = print_structure(s.succedent)
    return f"{ants} => {succ}" if ants else f"=> {succ}"


# --- JSON AST encoding (morgan-kit/ast/v1) ------------------------------

def term_to_obj(t: Term) -> dict:
    ty = type(t)
    if ty is Var:
        return {"op": "var", "name": t.name, "ns": t.ns}
    if ty is Neg:
        return {"op": "neg", "arg": term_to_obj(t.arg)}
    if ty is And:
        return {"op": "and", "left": term_to_obj(t.left), "right": term_to_obj(t.right)}
    if ty is Or:
        return {"op": "or", "left": term_to_obj(t.left), "right": term_to_obj(t.right)}
    if ty is Imp:
        return {"op": "imp", "left": term_to_obj(t.left), "right": term_to_obj(t.right)}
    return {"op": "bot"}


def term_from_obj(obj: dict) -> Term:
    op = obj["op"]
    if op == "var":
        return Var(obj["name"], obj.get("ns", BASE))
    if op == "bot":
        return BOT
    if op == "neg":
        return Neg(term_from_obj(obj["arg"]))
    ctor = {"and": And, "or": Or, "imp": Imp}[op]
    return ctor(term_from_obj(obj["left"]), term_from_obj(obj["right"]))


def member_to_obj(m) -> dict:
    if isinstance(m, Struct):
        return {"star": m.star, "term": term_to_obj(m.term)}
    return {"star": False, "term": term_to_obj(m)}


def member_from_obj(obj: dict, calculus: str):
    t = term_from_obj(obj["term"])
    if calculus == SDM:
        return Struct(bool(obj.get("star", False)), t)
    if obj.get("star", False):
        raise ValueError(f"starred member in a {calculus} sequent")
    return t


def sequent_to_obj(s: Sequent) -> dict:
    return {
        "schema": AST_SCHEMA,
        "calculus": s.calculus,
        "antecedent": [member_to_obj(m) for m in s.antecedent],
        "succedent": member_to_obj(s.succedent),
    }


def sequent_from_obj(obj: dict) -> Sequent:
    if obj.get("schema", AST_SCHEMA) != AST_SCHEMA:
        raise ValueError(f"unsupported AST schema {obj.get('schema')!r}")
    calc = obj["calculus"]
    ants = [member_from_obj(m, calc) for m in obj["antecedent"]]
    succ = member_from_obj(obj["succedent"], calc)
    return sequent(calc, ants, succ)
