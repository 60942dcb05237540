"""Parser and renderer for block-structure notation.

Grammar (whitespace separates terms, no commas):

    structure := term { term } [ "^" "inf" ]
    term      := atom [ "^" int ]
               | "(" term { term } ")" [ "^" int ]
    atom      := positive decimal integer

A trailing "^inf" on the whole input is accepted and ignored, since the
sequence is always understood as repeating infinitely in both directions.
"(2 3)^5 7 (3 4)^2" expands to ten alternating 2- and 3-blocks, a 7-block,
then four alternating 3- and 4-blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .core import BlockStructure
from .errors import InputError

# Error kinds carried by BlockParseError, one per rejection rule.
EMPTY = "empty"
SYNTAX = "syntax"
ZERO_ATOM = "zero-atom"
ZERO_EXPONENT = "zero-exponent"
UNBALANCED_PAREN = "unbalanced-paren"
INF_PLACEMENT = "inf-placement"
TOO_LARGE = "too-large"

MAX_VALUE = 10**6       # cap on atoms and exponents
MAX_BLOCKS = 10**6      # default cap on flattened length


class BlockParseError(InputError):
    def __init__(self, kind: str, position: int, message: str):
        self.kind = kind
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class Atom:
    value: int
    exponent: int = 1


@dataclass(frozen=True)
class Group:
    terms: tuple["Term", ...]
    exponent: int = 1


Term = Union[Atom, Group]


@dataclass(frozen=True)
class BlockExpr:
    terms: tuple[Term, ...] = field(default_factory=tuple)


def expanded_length(e: Union[BlockExpr, Term]) -> int:
    """Number of blocks the expression expands to, without expanding it."""
    if isinstance(e, Atom):
        return e.exponent
    if isinstance(e, Group):
        return e.exponent * sum(expanded_length(t) for t in e.terms)
    return sum(expanded_length(t) for t in e.terms)


_TOK_INT = "int"
_TOK_CARET = "caret"
_TOK_LPAREN = "lparen"
_TOK_RPAREN = "rparen"
_TOK_INF = "inf"


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    """Return (kind, value, position) triples; value is 0 for non-ints."""
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append((_TOK_INT, int(text[i:j]), i))
            i = j
        elif ch == "^":
            toks.append((_TOK_CARET, 0, i))
            i += 1
        elif ch == "(":
            toks.append((_TOK_LPAREN, 0, i))
            i += 1
        elif ch == ")":
            toks.append((_TOK_RPAREN, 0, i))
            i += 1
        elif text.startswith("inf", i):
            toks.append((_TOK_INF, 0, i))
            i += 3
        else:
            raise BlockParseError(SYNTAX, i, f"unexpected character {ch!r}")
    return toks


class _Parser:
    def __init__(self, toks: list[tuple[str, int, int]]):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def _checked_atom(self, value: int, position: int) -> int:
        if value == 0:
            raise BlockParseError(ZERO_ATOM, position, "block size 0 is not allowed")
        if value > MAX_VALUE:
            raise BlockParseError(TOO_LARGE, position, f"value {value} exceeds {MAX_VALUE}")
        return value

    def _exponent(self, top: bool) -> int:
        """Parse the part after '^'.  Returns the exponent, or -1 for a
        legal trailing 'inf' (top level, final token)."""
        caret_pos = self.next()[2]
        tok = self.peek()
        if tok is None:
            raise BlockParseError(SYNTAX, caret_pos, "dangling '^'")
        kind, value, position = tok
        if kind == _TOK_INF:
            self.next()
            if top and self.peek() is None:
                return -1
            raise BlockParseError(
                INF_PLACEMENT, position, "'^inf' is only allowed at the end of the whole input"
            )
        if kind != _TOK_INT:
            raise BlockParseError(SYNTAX, position, "exponent must be an integer")
        self.next()
        if value == 0:
            raise BlockParseError(ZERO_EXPONENT, position, "exponent 0 is not allowed")
        if value > MAX_VALUE:
            raise BlockParseError(TOO_LARGE, position, f"exponent {value} exceeds {MAX_VALUE}")
        return value

    def parse_terms(self, top: bool) -> tuple[Term, ...]:
        terms: list[Term] = []
        while True:
            tok = self.peek()
            if tok is None:
                return tuple(terms)
            kind, value, position = tok
            if kind == _TOK_INT:
                self.next()
                atom_value = self._checked_atom(value, position)
                exponent = 1
                nxt = self.peek()
                if nxt is not None and nxt[0] == _TOK_CARET:
                    exponent = self._exponent(top)
                    if exponent == -1:
                        terms.append(Atom(atom_value, 1))
                        return tuple(terms)
                terms.append(Atom(atom_value, exponent))
            elif kind == _TOK_LPAREN:
                self.next()
                inner = self.parse_terms(top=False)
                closer = self.peek()
                if closer is None or closer[0] != _TOK_RPAREN:
                    raise BlockParseError(UNBALANCED_PAREN, position, "unclosed '('")
                self.next()
                if not inner:
                    raise BlockParseError(SYNTAX, position, "empty group")
                exponent = 1
                nxt = self.peek()
                if nxt is not None and nxt[0] == _TOK_CARET:
                    exponent = self._exponent(top)
                    if exponent == -1:
                        terms.append(Group(inner, 1))
                        return tuple(terms)
                terms.append(Group(inner, exponent))
            elif kind == _TOK_RPAREN:
                if top:
                    raise BlockParseError(UNBALANCED_PAREN, position, "stray ')'")
                return tuple(terms)
            elif kind == _TOK_INF:
                raise BlockParseError(
                    INF_PLACEMENT, position, "'inf' must follow '^' at the end of the input"
                )
            else:
                raise BlockParseError(SYNTAX, position, "term expected")


def parse(text: str) -> BlockExpr:
    """Parse block-structure notation into an expression tree."""
    toks = _tokenize(text)
    if not toks:
        raise BlockParseError(EMPTY, 0, "empty input")
    parser = _Parser(toks)
    terms = parser.parse_terms(top=True)
    if parser.pos != len(parser.toks):
        kind, _, position = parser.toks[parser.pos]
        raise BlockParseError(SYNTAX, position, "trailing input")
    if not terms:
        raise BlockParseError(EMPTY, 0, "no blocks")
    return BlockExpr(terms)


def _expand(term: Term, out: list[int]) -> None:
    if isinstance(term, Atom):
        out.extend([term.value] * term.exponent)
    else:
        unit: list[int] = []
        for t in term.terms:
            _expand(t, unit)
        out.extend(unit * term.exponent)


def flatten(e: BlockExpr, max_blocks: int = MAX_BLOCKS) -> BlockStructure:
    """Expand all exponents left-to-right into an explicit sizes sequence."""
    total = expanded_length(e)
    if total > max_blocks:
        raise BlockParseError(
            TOO_LARGE, 0, f"expansion to {total} blocks exceeds cap {max_blocks}"
        )
    sizes: list[int] = []
    for term in e.terms:
        _expand(term, sizes)
    return BlockStructure(sizes)


def render(bs: BlockStructure) -> str:
    """Run-length compressed text for a sizes sequence.

    Maximal runs of one repeated size come out as "a^k"; parse followed by
    flatten recovers the exact sequence.
    """
    parts = []
    sizes = bs.sizes
    i = 0
    while i < len(sizes):
        j = i
        while j < len(sizes) and sizes[j] == sizes[i]:
            j += 1
        run = j - i
        parts.append(f"{sizes[i]}^{run}" if run > 1 else str(sizes[i]))
        i = j
    return " ".join(parts)
