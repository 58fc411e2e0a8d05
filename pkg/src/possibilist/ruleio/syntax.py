"""Lark front end: text to positioned declarations, before any name is resolved."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import (
    LarkError,
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    VisitError,
)

from .diagnostics import Diagnostic

logger = logging.getLogger(__name__)

_GRAMMAR_FILE = Path(__file__).with_name("kb.lark")

_parser = Lark(
    _GRAMMAR_FILE.read_text(encoding="utf-8"),
    parser="lalr",
    propagate_positions=True,
)


@dataclass(frozen=True)
class Position:
    line: int
    column: int

    @classmethod
    def of(cls, item) -> Position:
        return cls(line=item.line, column=item.column)


@dataclass(frozen=True)
class Name:
    text: str
    position: Position


@dataclass(frozen=True)
class Literal:
    """A degree literal kept as written, parsed later so range errors carry a position."""

    text: str
    position: Position


@dataclass(frozen=True)
class Grade:
    element: Name
    degree: Literal | None


@dataclass(frozen=True)
class DomainDecl:
    name: Name
    elements: tuple[Name, ...]
    position: Position


@dataclass(frozen=True)
class AttributeDecl:
    name: Name
    domain: Name
    world: str | None
    position: Position


@dataclass(frozen=True)
class TermDecl:
    domain: Name
    name: Name
    grades: tuple[Grade, ...]
    position: Position


@dataclass(frozen=True)
class PartDecl:
    attribute: Name
    negated: bool
    term: Name
    weight: Literal | None
    position: Position


@dataclass(frozen=True)
class ConditionDecl:
    parts: tuple[PartDecl, ...]
    connectives: tuple[str, ...]
    position: Position


@dataclass(frozen=True)
class ConclusionDecl:
    attribute: Name
    negated: bool
    term: Name
    position: Position


@dataclass(frozen=True)
class ParamDecl:
    name: Name
    value: Literal


@dataclass(frozen=True)
class OtherwiseDecl:
    alias: Name | None
    params: tuple[ParamDecl, ...]
    position: Position


@dataclass(frozen=True)
class RuleDecl:
    name: Name
    condition: ConditionDecl
    conclusion: ConclusionDecl
    params: tuple[ParamDecl, ...]
    otherwise: OtherwiseDecl | None
    phrasing: tuple[str, str] | None
    position: Position


@dataclass(frozen=True)
class FactDecl:
    attribute: Name
    grades: tuple[Grade, ...] | None
    position: Position


@dataclass(frozen=True)
class BeliefDecl:
    attribute: Name
    grades: tuple[Grade, ...]
    position: Position


Declaration = DomainDecl | AttributeDecl | TermDecl | RuleDecl | FactDecl | BeliefDecl


def _name(token: Token) -> Name:
    return Name(text=str(token), position=Position.of(token))


def _literal(token: Token) -> Literal:
    return Literal(text=str(token), position=Position.of(token))


class DeclarationBuilder(Transformer):
    """Turns the parse tree into declaration records carrying source positions."""

    def start(self, items):
        return list(items)

    def name_list(self, items):
        return tuple(_name(token) for token in items)

    @v_args(meta=True)
    def domain_decl(self, meta, items):
        name, elements = items
        return DomainDecl(name=_name(name), elements=elements, position=Position.of(meta))

    def world(self, items):
        return str(items[0])

    @v_args(meta=True)
    def attribute_decl(self, meta, items):
        name, domain, world = items
        return AttributeDecl(
            name=_name(name), domain=_name(domain), world=world, position=Position.of(meta)
        )

    def grade(self, items):
        element, degree = items
        literal = _literal(degree) if degree is not None else None
        return Grade(element=_name(element), degree=literal)

    def grade_list(self, items):
        return tuple(items)

    @v_args(meta=True)
    def term_decl(self, meta, items):
        domain, name, grades = items
        return TermDecl(
            domain=_name(domain), name=_name(name), grades=grades, position=Position.of(meta)
        )

    def weight(self, items):
        return _literal(items[0])

    def connective(self, items):
        return str(items[0])

    @v_args(meta=True)
    def part(self, meta, items):
        attribute, negation, term, weight = items
        return PartDecl(
            attribute=_name(attribute),
            negated=negation is not None,
            term=_name(term),
            weight=weight,
            position=Position.of(meta),
        )

    @v_args(meta=True)
    def condition(self, meta, items):
        return ConditionDecl(
            parts=tuple(item for item in items if isinstance(item, PartDecl)),
            connectives=tuple(item for item in items if isinstance(item, str)),
            position=Position.of(meta),
        )

    @v_args(meta=True)
    def conclusion(self, meta, items):
        attribute, negation, term = items
        return ConclusionDecl(
            attribute=_name(attribute),
            negated=negation is not None,
            term=_name(term),
            position=Position.of(meta),
        )

    def param(self, items):
        name, value = items
        return ParamDecl(name=_name(name), value=_literal(value))

    def uncertainty(self, items):
        return tuple(items)

    @v_args(meta=True)
    def otherwise(self, meta, items):
        alias, *params = items
        return OtherwiseDecl(
            alias=_name(alias) if alias is not None else None,
            params=tuple(params),
            position=Position.of(meta),
        )

    def phrasing(self, items):
        holds, fails = items
        return json.loads(str(holds)), json.loads(str(fails))

    @v_args(meta=True)
    def rule_decl(self, meta, items):
        name, condition, conclusion, params, otherwise, phrasing = items
        return RuleDecl(
            name=_name(name),
            condition=condition,
            conclusion=conclusion,
            params=params or (),
            otherwise=otherwise,
            phrasing=phrasing,
            position=Position.of(meta),
        )

    @v_args(meta=True)
    def fact_decl(self, meta, items):
        attribute, value = items
        grades = None if isinstance(value, Token) else value
        return FactDecl(attribute=_name(attribute), grades=grades, position=Position.of(meta))

    @v_args(meta=True)
    def belief_decl(self, meta, items):
        attribute, grades = items
        return BeliefDecl(attribute=_name(attribute), grades=grades, position=Position.of(meta))


def _describe(exc: UnexpectedInput) -> str:
    if isinstance(exc, UnexpectedCharacters):
        return f"unexpected character {exc.char!r}"
    if isinstance(exc, UnexpectedEOF):
        return "unexpected end of input"
    token = getattr(exc, "token", None)
    expected = sorted(getattr(exc, "expected", ()) or ())
    found = f"unexpected {token!s}" if token is not None else "unexpected input"
    return f"{found}; expected one of {', '.join(expected)}" if expected else found


def parse_declarations(text: str) -> tuple[list[Declaration], list[Diagnostic]]:
    """Parse text into declarations; never raises, syntax problems become diagnostics."""
    try:
        tree = _parser.parse(text)
    except UnexpectedCharacters as exc:
        diagnostic = Diagnostic(
            code="E001", message=_describe(exc), line=exc.line, column=exc.column
        )
        return [], [diagnostic]
    except UnexpectedInput as exc:
        line = exc.line if isinstance(exc.line, int) and exc.line > 0 else text.count("\n") + 1
        column = exc.column if isinstance(exc.column, int) and exc.column > 0 else 1
        return [], [Diagnostic(code="E002", message=_describe(exc), line=line, column=column)]
    except LarkError as exc:
        logger.warning("parser failure: %s", exc)
        return [], [Diagnostic(code="E002", message=str(exc), line=1, column=1)]
    try:
        return DeclarationBuilder().transform(tree), []
    except VisitError as exc:
        meta = getattr(exc.obj, "meta", None)
        line = getattr(meta, "line", 1) if meta is not None else 1
        column = getattr(meta, "column", 1) if meta is not None else 1
        return [], [Diagnostic(code="E001", message=str(exc.orig_exc), line=line, column=column)]
