"""Line-oriented syllogism documents.

A document declares its properties, optionally a universe size, premises,
exactly one conclusion template, and optional engine options:

    # pets at home
    terms: dog, cat, parrot
    premise: exc[2, 2] * -> dog
    premise: none dog -> cat | parrot
    conclude: abs? * -> *
    options: mode=crisp

Quantifier spellings: the logical keywords ``all``/``none``/``some``/
``not-all``; ``fam[a, b]`` for crisp bounds (``inf`` allowed as upper);
``fam tz(a, b, c, d)`` for trapezoids; ``fam rim(e)`` for regular increasing
monotone proportions.  Families: abs, prop, exc, cmpabs, cmpprop, sim.
Comparative and similarity statements connect their terms with ``vs`` (they
compare two sets); every other family uses ``->`` (restriction -> scope).

Terms combine declared names with ``!``, ``&``, ``|`` and parentheses; ``&``
binds tighter than ``|``; ``*`` denotes the whole universe.  Numbers may be
integers, decimals, or rationals ``p/q``, and parse exactly (0.7 is 7/10).
``#`` starts a comment.  ``print_doc`` renders a parsed document back to
canonical text; parsing that text yields an equal document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .quantifiers import (
    ABSOLUTE,
    COMPARATIVE_ABSOLUTE,
    COMPARATIVE_PROPORTIONAL,
    EXCEPTION,
    LOGICAL_ALL,
    LOGICAL_NONE,
    LOGICAL_NOT_ALL,
    LOGICAL_SOME,
    PROPORTIONAL,
    SIMILARITY,
    Interval,
    QuantifierSpec,
    RimQuantifier,
    Trapezoid,
)
from .statements import COMPARED_FAMILIES, Conclusion, Statement, Syllogism
from .terms import UNIVERSE, And, Not, Or, Prop, Universe

__all__ = ["DslError", "SyllogismDoc", "conclusion_text", "parse", "print_doc"]


class DslError(ValueError):
    """Parse or validation failure, with document position when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = "line %d" % line
            if column is not None:
                where += ", column %d" % column
            where += ": "
        super().__init__(where + message)


_KEYWORD_TO_FAMILY = {
    "all": LOGICAL_ALL,
    "none": LOGICAL_NONE,
    "some": LOGICAL_SOME,
    "not-all": LOGICAL_NOT_ALL,
    "abs": ABSOLUTE,
    "prop": PROPORTIONAL,
    "exc": EXCEPTION,
    "cmpabs": COMPARATIVE_ABSOLUTE,
    "cmpprop": COMPARATIVE_PROPORTIONAL,
    "sim": SIMILARITY,
}
_FAMILY_TO_KEYWORD = {v: k for k, v in _KEYWORD_TO_FAMILY.items()}
_LOGICAL_KEYWORDS = ("all", "none", "some", "not-all")
_NUMERIC_KEYWORDS = ("cmpprop", "cmpabs", "prop", "abs", "exc", "sim")

_RESERVED_NAMES = frozenset({"vs", "inf"})
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUM = r"-?(?:\d+\.\d+|\d+(?:/\d+)?)"
_QSPEC_HEAD = re.compile(
    r"\s*(not-all|cmpprop|cmpabs|prop|abs|exc|sim|all|none|some)\b"
)
_INTERVAL_SHAPE = re.compile(
    r"\s*\[\s*(%s)\s*,\s*(%s|inf)\s*\]" % (_NUM, _NUM)
)
_TZ_SHAPE = re.compile(
    r"\s*tz\(\s*(%s)\s*,\s*(%s)\s*,\s*(%s)\s*,\s*(%s)\s*\)" % ((_NUM,) * 4)
)
_RIM_SHAPE = re.compile(r"\s*rim\(\s*(%s)\s*\)" % _NUM)
_CONCLUDE_HEAD = re.compile(r"\s*(cmpprop|cmpabs|prop|abs|exc|sim)\?")
_OPTION_ITEM = re.compile(r"\s*([a-z-]+)\s*=\s*([^\s,]+)\s*$")


@dataclass(frozen=True)
class SyllogismDoc:
    """A parsed syllogism file: the syllogism plus presentation options."""

    properties: Tuple[str, ...]
    premises: Tuple[Statement, ...]
    conclusion: Conclusion
    universe_size: Optional[Fraction] = None
    options: Dict[str, object] = field(default_factory=dict)

    def to_syllogism(self) -> Syllogism:
        return Syllogism(
            properties=self.properties,
            premises=self.premises,
            conclusion=self.conclusion,
            universe_size=self.universe_size,
        )


def _parse_number(text: str, line: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DslError("malformed number %r" % text, line)


class _TermParser:
    """Recursive-descent parser for term expressions (! over & over |)."""

    def __init__(self, text: str, line: int, base_col: int):
        self.line = line
        self.base_col = base_col
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
                continue
            if ch in "!&|()*":
                self.tokens.append((ch, ch, pos))
                pos += 1
                continue
            m = _IDENT.match(text, pos)
            if not m:
                raise DslError(
                    "unexpected character %r in term" % ch, line, base_col + pos + 1
                )
            self.tokens.append(("name", m.group(0), pos))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.at = 0

    def _peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.at]

    def _take(self) -> Tuple[str, str, int]:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def _fail(self, message: str, tok) -> None:
        raise DslError(message, self.line, self.base_col + tok[2] + 1)

    def parse(self):
        expr = self._or()
        tok = self._peek()
        if tok[0] != "end":
            self._fail("unexpected %r after term" % tok[1], tok)
        return expr

    def _or(self):
        left = self._and()
        while self._peek()[0] == "|":
            self._take()
            left = Or(left, self._and())
        return left

    def _and(self):
        left = self._unary()
        while self._peek()[0] == "&":
            self._take()
            left = And(left, self._unary())
        return left

    def _unary(self):
        tok = self._peek()
        if tok[0] == "!":
            self._take()
            return Not(self._unary())
        return self._atom()

    def _atom(self):
        tok = self._take()
        if tok[0] == "name":
            return Prop(tok[1])
        if tok[0] == "*":
            return UNIVERSE
        if tok[0] == "(":
            expr = self._or()
            closing = self._take()
            if closing[0] != ")":
                self._fail("expected ')'", closing)
            return expr
        self._fail("expected a term, got %r" % (tok[1] or "end of line"), tok)


def _parse_quantifier(rest: str, line: int, col0: int) -> Tuple[QuantifierSpec, str, int]:
    """Parse the quantifier spec at the head of ``rest``; return the tail."""
    m = _QSPEC_HEAD.match(rest)
    if not m:
        raise DslError(
            "expected a quantifier (all/none/some/not-all or a family with a "
            "shape)", line, col0 + 1
        )
    keyword = m.group(1)
    family = _KEYWORD_TO_FAMILY[keyword]
    pos = m.end()
    if keyword in _LOGICAL_KEYWORDS:
        return QuantifierSpec(family), rest[pos:], col0 + pos

    shape = None
    im = _INTERVAL_SHAPE.match(rest, pos)
    if im:
        lo = _parse_number(im.group(1), line)
        hi = None if im.group(2) == "inf" else _parse_number(im.group(2), line)
        shape = Interval(lo, hi)
        pos = im.end()
    else:
        tm = _TZ_SHAPE.match(rest, pos)
        if tm:
            shape = Trapezoid(*(_parse_number(g, line) for g in tm.groups()))
            pos = tm.end()
        else:
            rm = _RIM_SHAPE.match(rest, pos)
            if rm:
                shape = RimQuantifier(_parse_number(rm.group(1), line))
                pos = rm.end()
    if shape is None:
        raise DslError(
            "quantifier %s needs a shape: %s[a, b], %s tz(a, b, c, d) or "
            "%s rim(e)" % (keyword, keyword, keyword, keyword),
            line,
            col0 + pos + 1,
        )
    try:
        spec = QuantifierSpec(family, shape)
    except ValueError as exc:
        raise DslError(str(exc), line, col0 + 1)
    return spec, rest[pos:], col0 + pos


def _split_terms(rest: str, family: str, line: int, col0: int):
    """Split 'TERM -> TERM' (or 'TERM vs TERM') and parse both sides."""
    arrow = rest.find("->")
    vs = re.search(r"\bvs\b", rest)
    wants_vs = family in COMPARED_FAMILIES
    keyword = _FAMILY_TO_KEYWORD[family]
    if wants_vs:
        if vs is None:
            raise DslError(
                "%s compares two terms; connect them with 'vs'" % keyword, line
            )
        if arrow != -1 and arrow < vs.start():
            raise DslError(
                "%s compares two terms; connect them with 'vs', not '->'"
                % keyword,
                line,
                col0 + arrow + 1,
            )
        left, right = rest[: vs.start()], rest[vs.end():]
        right_col = col0 + vs.end()
    else:
        if arrow == -1:
            raise DslError(
                "expected '->' between restriction and scope", line
            )
        if vs is not None and vs.start() < arrow:
            raise DslError(
                "%s restricts a scope; connect the terms with '->', not 'vs'"
                % keyword,
                line,
                col0 + vs.start() + 1,
            )
        left, right = rest[:arrow], rest[arrow + 2:]
        right_col = col0 + arrow + 2
    restriction = _TermParser(left, line, col0).parse()
    scope = _TermParser(right, line, right_col).parse()
    return restriction, scope


def _parse_options(body: str, line: int) -> Dict[str, object]:
    options: Dict[str, object] = {}
    for chunk in body.split(","):
        if not chunk.strip():
            continue
        m = _OPTION_ITEM.match(chunk)
        if not m:
            raise DslError("malformed option %r; expected key=value" % chunk.strip(), line)
        key, value = m.group(1), m.group(2)
        if key == "mode":
            if value not in ("auto", "crisp", "kersup", "alpha"):
                raise DslError("unknown mode %r" % value, line)
            options["mode"] = value
        elif key == "levels":
            if not value.isdigit() or int(value) < 2:
                raise DslError("levels must be an integer >= 2", line)
            options["levels"] = int(value)
        elif key == "epsilon-count":
            options["eps_count"] = _parse_number(value, line)
        elif key == "epsilon-prop":
            options["eps_prop"] = _parse_number(value, line)
        else:
            raise DslError(
                "unknown option %r (mode, levels, epsilon-count, epsilon-prop)"
                % key,
                line,
            )
    return options


def parse(text: str) -> SyllogismDoc:
    """Parse a syllogism document; raise DslError with positions on failure."""
    properties: Optional[Tuple[str, ...]] = None
    universe: Optional[Fraction] = None
    premises: List[Statement] = []
    conclusion: Optional[Conclusion] = None
    options: Dict[str, object] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = re.match(r"\s*(terms|universe|premise|conclude|options)\s*:", line)
        if not m:
            raise DslError(
                "expected 'terms:', 'universe:', 'premise:', 'conclude:' or "
                "'options:'",
                line_no,
                1,
            )
        head = m.group(1)
        body = line[m.end():]
        col0 = m.end()

        if head == "terms":
            if properties is not None:
                raise DslError("duplicate terms declaration", line_no)
            names = [n.strip() for n in body.split(",")]
            if names == [""]:
                raise DslError("terms line declares no names", line_no)
            for name in names:
                if not _IDENT.fullmatch(name):
                    raise DslError("invalid property name %r" % name, line_no)
                if name in _RESERVED_NAMES:
                    raise DslError("%r is a reserved word" % name, line_no)
            if len(set(names)) != len(names):
                raise DslError("duplicate property name", line_no)
            properties = tuple(names)
        elif head == "universe":
            if universe is not None:
                raise DslError("duplicate universe declaration", line_no)
            universe = _parse_number(body.strip(), line_no)
            if universe <= 0:
                raise DslError("universe size must be positive", line_no)
        elif head in ("premise", "conclude"):
            if properties is None:
                raise DslError(
                    "terms must be declared before any %s line" % head, line_no
                )
            if head == "premise":
                spec, rest, col = _parse_quantifier(body, line_no, col0)
                restriction, scope = _split_terms(rest, spec.family, line_no, col)
                stmt = Statement(spec, restriction, scope)
            else:
                if conclusion is not None:
                    raise DslError("duplicate conclusion", line_no)
                cm = _CONCLUDE_HEAD.match(body)
                if not cm:
                    raise DslError(
                        "expected a conclusion family followed by '?' (one of "
                        "abs? prop? exc? cmpabs? cmpprop? sim?)",
                        line_no,
                        col0 + 1,
                    )
                family = _KEYWORD_TO_FAMILY[cm.group(1)]
                restriction, scope = _split_terms(
                    body[cm.end():], family, line_no, col0 + cm.end()
                )
                stmt = None
                conclusion = Conclusion(family, restriction, scope)
            if head == "premise":
                premises.append(stmt)
            declared = set(properties)
            for term in (restriction, scope):
                for leaf in _leaf_names(term):
                    if leaf not in declared:
                        raise DslError(
                            "undeclared property %r (declared: %s)"
                            % (leaf, ", ".join(properties)),
                            line_no,
                        )
        else:
            options.update(_parse_options(body, line_no))

    if properties is None:
        raise DslError("missing terms declaration")
    if not premises:
        raise DslError("a syllogism document needs at least one premise")
    if conclusion is None:
        raise DslError("missing conclude line")
    return SyllogismDoc(
        properties=properties,
        premises=tuple(premises),
        conclusion=conclusion,
        universe_size=universe,
        options=options,
    )


def _leaf_names(term):
    if isinstance(term, Prop):
        yield term.name
    elif isinstance(term, Not):
        yield from _leaf_names(term.arg)
    elif isinstance(term, (And, Or)):
        yield from _leaf_names(term.left)
        yield from _leaf_names(term.right)


def _fmt_number(value: Fraction) -> str:
    """Exact text for a rational: integer, short decimal, or p/q."""
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den == 1:  # decimal-exact
        digits = max(twos, fives)
        scaled = value.numerator * 10**digits // value.denominator
        sign = "-" if scaled < 0 else ""
        text = str(abs(scaled)).rjust(digits + 1, "0")
        return "%s%s.%s" % (sign, text[:-digits], text[-digits:])
    return "%d/%d" % (value.numerator, value.denominator)


def _term_text(term, parent: str = "or") -> str:
    if isinstance(term, Universe):
        return "*"
    if isinstance(term, Prop):
        return term.name
    if isinstance(term, Not):
        return "!" + _term_text(term.arg, "not")
    if isinstance(term, And):
        # & is parsed left-associative, so a right-nested & needs parens
        text = "%s & %s" % (
            _term_text(term.left, "and"),
            _term_text(term.right, "and-right"),
        )
        return "(%s)" % text if parent in ("not", "and-right") else text
    if isinstance(term, Or):
        text = "%s | %s" % (
            _term_text(term.left, "or"),
            _term_text(term.right, "or-right"),
        )
        paren = parent in ("and", "and-right", "not", "or-right")
        return "(%s)" % text if paren else text
    raise TypeError("cannot print term %r" % (term,))


def _quantifier_text(spec: QuantifierSpec) -> str:
    keyword = _FAMILY_TO_KEYWORD[spec.family]
    shape = spec.shape
    if shape is None:
        return keyword
    if isinstance(shape, Interval):
        hi = "inf" if shape.hi is None else _fmt_number(shape.hi)
        return "%s[%s, %s]" % (keyword, _fmt_number(shape.lo), hi)
    if isinstance(shape, Trapezoid):
        return "%s tz(%s)" % (
            keyword,
            ", ".join(_fmt_number(v) for v in shape.as_tuple()),
        )
    if isinstance(shape, RimQuantifier):
        return "%s rim(%s)" % (keyword, _fmt_number(shape.exponent))
    raise TypeError(
        "quantifier shape %s has no document spelling" % type(shape).__name__
    )


def _statement_text(stmt: Statement) -> str:
    connector = "vs" if stmt.family in COMPARED_FAMILIES else "->"
    return "%s %s %s %s" % (
        _quantifier_text(stmt.quantifier),
        _term_text(stmt.restriction),
        connector,
        _term_text(stmt.scope),
    )


def conclusion_text(conclusion: Conclusion) -> str:
    """Document spelling of a conclusion template, e.g. 'abs? * -> *'."""
    connector = "vs" if conclusion.family in COMPARED_FAMILIES else "->"
    return "%s? %s %s %s" % (
        _FAMILY_TO_KEYWORD[conclusion.family],
        _term_text(conclusion.restriction),
        connector,
        _term_text(conclusion.scope),
    )


_OPTION_SPELLING = {
    "mode": "mode",
    "levels": "levels",
    "eps_count": "epsilon-count",
    "eps_prop": "epsilon-prop",
}


def print_doc(doc: SyllogismDoc) -> str:
    """Canonical text of a document; parsing it again gives an equal doc."""
    lines = ["terms: %s" % ", ".join(doc.properties)]
    if doc.universe_size is not None:
        lines.append("universe: %s" % _fmt_number(doc.universe_size))
    for premise in doc.premises:
        lines.append("premise: %s" % _statement_text(premise))
    lines.append("conclude: %s" % conclusion_text(doc.conclusion))
    if doc.options:
        parts = []
        for key in ("mode", "levels", "eps_count", "eps_prop"):
            if key in doc.options:
                value = doc.options[key]
                text = _fmt_number(value) if isinstance(value, Fraction) else str(value)
                parts.append("%s=%s" % (_OPTION_SPELLING[key], text))
        lines.append("options: %s" % ", ".join(parts))
    return "\n".join(lines) + "\n"
