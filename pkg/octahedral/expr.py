"""
Representation expressions: "2+ * 3+", "S3(3+)", "L2(3+ + 4_0)", "Res[H](4_0)", "Ind[G](2b)".

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := NAME | FUNCTOR "(" expr ")" | "(" expr ")"

Leaves are irreducible labels of G, H or K; the ambient group of an expression is the first
of G, H, K whose labels cover its leaves, and Res/Ind move between them.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from funcparserlib.lexer import LexerError, TokenSpec, make_tokenizer
from funcparserlib.parser import NoParseError, finished, forward_decl, many, tok

from .catalog import irreducible_names, named_table
from .chartab import (Character, Decomposition, Functor, functor_character, induce_character,
                      restrict_character)
from .utils import ExprParseError, UnknownNameError

logger = logging.getLogger(__name__)

AMBIENTS = ("G", "H", "K")
PARENTS = {"H": "G", "K": "G"}
FUNCTORS = {"S2": Functor.SYM2, "L2": Functor.ALT2, "S3": Functor.SYM3, "L3": Functor.ALT3,
            "M3": Functor.MID3, "Dual": Functor.DUAL}


@dataclass(frozen=True)
class Irrep:
    name: str


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Apply:
    functor: str
    body: "Expr"


@dataclass(frozen=True)
class Restrict:
    group: str
    body: "Expr"


@dataclass(frozen=True)
class Induce:
    group: str
    body: "Expr"


Expr = Union[Irrep, Sum, Tensor, Apply, Restrict, Induce]

_tokenize = make_tokenizer([
    TokenSpec("space", r"\s+"),
    TokenSpec("functor", r"[A-Za-z][A-Za-z0-9]*(?:\[[A-Za-z0-9.]+\])?"),
    TokenSpec("name", r"\d+(?:_0|[+-]|[a-z])?"),
    TokenSpec("op", r"[+*()]"),
])

NAME, FUNCTOR = "irreducible name", "functor"


def _make_functor(pair) -> Expr:
    head, body = pair
    if head.startswith(("Res[", "Ind[")):
        group = head[4:-1]
        kind = Restrict if head.startswith("Res") else Induce
        valid = list(PARENTS) if kind is Restrict else sorted(set(PARENTS.values()))
        if group not in valid:
            raise UnknownNameError(group, valid)
        return kind(group, body)
    if head not in FUNCTORS:
        raise UnknownNameError(head, list(FUNCTORS) + ["Res[H]", "Res[K]", "Ind[G]"])
    return Apply(head, body)


def _fold(cls):
    def fold(pair) -> Expr:
        first, rest = pair
        for item in rest:
            first = cls(first, item)
        return first
    return fold


@lru_cache(maxsize=None)
def _grammar():
    def op(s):
        return tok("op", s)

    expr = forward_decl().named("expr")
    name = tok("name") >> Irrep
    applied = tok("functor") + -op("(") + expr + -op(")") >> _make_functor
    factor = (name | applied | (-op("(") + expr + -op(")"))).named("factor")
    term = factor + many(-op("*") + factor) >> _fold(Tensor)
    expr.define(term + many(-op("+") + term) >> _fold(Sum))
    return expr + -finished


def _expected_after(previous) -> list:
    if previous is None or (previous.type == "op" and previous.value in "+*("):
        return ["(", FUNCTOR, NAME]
    if previous.type == "functor":
        return ["("]
    return [")", "*", "+", "end of input"]


def parse_expression(text: str) -> Expr:
    if not text or not text.strip():
        raise ExprParseError(0, ["(", FUNCTOR, NAME], text or "")
    try:
        raw = list(_tokenize(text))
    except LexerError as e:
        raise ExprParseError(max(e.place[1] - 1, 0), ["(", FUNCTOR, NAME, "*", "+", ")"], text) from e
    offsets, pos = [], 0
    for t in raw:
        offsets.append(pos)
        pos += len(t.value)
    kept = [(t, at) for t, at in zip(raw, offsets) if t.type != "space"]
    tokens = [t for t, _ in kept]
    try:
        return _grammar().parse(tokens)
    except NoParseError as e:
        n = min(e.state.max, len(tokens))
        where = kept[n][1] if n < len(kept) else len(text)
        previous = tokens[n - 1] if n > 0 else None
        raise ExprParseError(where, _expected_after(previous), text) from e


def _needs_parens(e: Expr, parent: type, right: bool) -> bool:
    if parent is Tensor:
        return isinstance(e, Sum) or (right and isinstance(e, Tensor))
    return right and isinstance(e, Sum)


def render_expression(e: Expr) -> str:
    """Inverse of parse_expression up to whitespace."""
    if isinstance(e, Irrep):
        return e.name
    if isinstance(e, (Sum, Tensor)):
        sep = " + " if isinstance(e, Sum) else " * "
        parts = []
        for side, right in ((e.left, False), (e.right, True)):
            text = render_expression(side)
            parts.append(f"({text})" if _needs_parens(side, type(e), right) else text)
        return sep.join(parts)
    if isinstance(e, Apply):
        return f"{e.functor}({render_expression(e.body)})"
    head = "Res" if isinstance(e, Restrict) else "Ind"
    return f"{head}[{e.group}]({render_expression(e.body)})"


def _leaves(e: Expr) -> tuple:
    """(names, ambient groups forced by Res/Ind) at this level."""
    if isinstance(e, Irrep):
        return {e.name}, set()
    if isinstance(e, (Sum, Tensor)):
        a, b = _leaves(e.left), _leaves(e.right)
        return a[0] | b[0], a[1] | b[1]
    if isinstance(e, Apply):
        return _leaves(e.body)
    return set(), {e.group}


def ambient_of(e: Expr, allowed=AMBIENTS) -> str:
    names, forced = _leaves(e)
    for amb in allowed:
        if forced - {amb}:
            continue
        if names <= set(irreducible_names(amb)):
            return amb
    valid = list(irreducible_names(allowed[0]))
    missing = sorted(names - set(valid)) or sorted(forced)
    raise UnknownNameError(missing[0], valid)


def _character(e: Expr, amb: str) -> Character:
    if isinstance(e, Irrep):
        return named_table(amb)[e.name]
    if isinstance(e, Sum):
        return _character(e.left, amb) + _character(e.right, amb)
    if isinstance(e, Tensor):
        return _character(e.left, amb) * _character(e.right, amb)
    if isinstance(e, Apply):
        return functor_character(_character(e.body, amb), FUNCTORS[e.functor])
    if isinstance(e, Restrict):
        parent = PARENTS[e.group]
        return restrict_character(_character(e.body, ambient_of(e.body, (parent,))), named_table(e.group).group)
    subs = tuple(s for s, p in PARENTS.items() if p == e.group)
    return induce_character(_character(e.body, ambient_of(e.body, subs)), named_table(e.group).group)


def eval_expression(e: Union[Expr, str], ambient: str = None) -> Decomposition:
    """Decomposition of an expression (or its text) into irreducibles of its ambient group."""
    if isinstance(e, str):
        e = parse_expression(e)
    amb = ambient or ambient_of(e)
    logger.info("Evaluating %s over %s", render_expression(e), amb)
    return named_table(amb).decompose(_character(e, amb))


def expression_character(e: Union[Expr, str]) -> Character:
    if isinstance(e, str):
        e = parse_expression(e)
    return _character(e, ambient_of(e))
