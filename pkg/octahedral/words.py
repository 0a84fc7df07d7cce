"""
Words in named group elements: "jd", "-w^2d", "(jd)^8", "w^-1", relations "wdw=d".

Single letters name elements, "1" is the identity, a leading "-" multiplies by the
central element -1.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from funcparserlib.lexer import LexerError, TokenSpec, make_tokenizer
from funcparserlib.parser import NoParseError, finished, forward_decl, many, maybe, oneplus, tok


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    body: "Word"


@dataclass(frozen=True)
class Power:
    body: "Word"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: tuple


Word = Union[Sym, Neg, Power, Product]
IDENTITY = Product(())

_tokenize = make_tokenizer([
    TokenSpec("space", r"\s+"),
    TokenSpec("int", r"\d+"),
    TokenSpec("sym", r"[A-Za-z]"),
    TokenSpec("op", r"[-^()=]"),
])


def _atom_int(text: str) -> Word:
    if text != "1":
        raise ValueError(f"only 1 may appear as a number in a word, got {text}")
    return IDENTITY


def _power(pair) -> Word:
    body, exp = pair
    if exp is None:
        return body
    sign, n = exp
    return Power(body, -int(n) if sign else int(n))


def _product(pair) -> Word:
    sign, factors = pair
    body = factors[0] if len(factors) == 1 else Product(tuple(factors))
    return Neg(body) if sign else body


@lru_cache(maxsize=None)
def _grammar():
    def op(s):
        return tok("op", s)

    word = forward_decl()
    atom = (tok("sym") >> Sym) | (tok("int") >> _atom_int) | (-op("(") + word + -op(")"))
    factor = atom + maybe(-op("^") + maybe(op("-")) + tok("int")) >> _power
    word.define(maybe(op("-")) + oneplus(factor) >> _product)
    relation = word + many(-op("=") + word) >> (lambda t: [t[0]] + t[1])
    return word + -finished, relation + -finished


def _tokens(text: str) -> list:
    return [t for t in _tokenize(text) if t.type != "space"]


def parse_word(text: str) -> Word:
    try:
        return _grammar()[0].parse(_tokens(text))
    except (LexerError, NoParseError) as e:
        raise ValueError(f"cannot parse word {text!r}: {e}") from e


def parse_relation(text: str) -> list:
    """A chain "a=b=c" as the list of its sides."""
    try:
        return _grammar()[1].parse(_tokens(text))
    except (LexerError, NoParseError) as e:
        raise ValueError(f"cannot parse relation {text!r}: {e}") from e


def symbols_in(word: Word) -> set:
    if isinstance(word, Sym):
        return {word.name}
    if isinstance(word, (Neg, Power)):
        return symbols_in(word.body)
    return set().union(*(symbols_in(f) for f in word.factors)) if word.factors else set()
