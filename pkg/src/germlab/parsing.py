"""Polynomial text grammar, corpus files and JSON report serialization.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' exp)?
    exp    := INT ('^' exp)?            # right associative
    atom   := INT ('/' INT)? | NAME | '(' expr ')'

Implicit multiplication is rejected (``2x`` is an error, write ``2*x``), and
``^`` binds tighter than unary minus, so ``-x^2`` means ``-(x^2)``.
"""

from __future__ import annotations

import dataclasses
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Optional

from germlab.polyring import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class CorpusError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str):
    pos = 0
    tokens = []
    while True:
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos and not m.lastgroup:
            rest = src[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {src[bad]!r}", *_position(src, bad))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def _position(src: str, offset: int) -> tuple:
    line = src.count("\n", 0, offset) + 1
    col = offset - (src.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, src: str, variables: list):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.n = len(variables)
        self.index = {v: k for k, v in enumerate(variables)}

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, *_position(self.src, tok[2]))

    def expect(self, value: str):
        tok = self.advance()
        if tok[1] != value or tok[0] != "op":
            self.fail(f"expected {value!r}", tok)

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.fail(f"unexpected token {tok[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.advance()
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        tok = self.advance()
        if tok[0] != "int":
            self.fail("exponent must be a nonnegative integer literal", tok)
        k = int(tok[1])
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            k = k ** self.exponent()
        return k

    def atom(self) -> Polynomial:
        tok = self.advance()
        kind, text = tok[0], tok[1]
        if kind == "int":
            value = Fraction(int(text))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.advance()
                den = self.advance()
                if den[0] != "int":
                    self.fail("division is only allowed between integer literals", den)
                if int(den[1]) == 0:
                    self.fail("zero denominator", den)
                value = Fraction(int(text), int(den[1]))
            self._no_juxtaposition()
            return Polynomial.constant(value, self.n)
        if kind == "name":
            if text not in self.index:
                self.fail(f"unknown variable {text!r}", tok)
            self._no_juxtaposition()
            return Polynomial.variable(self.index[text], self.n)
        if kind == "op" and text == "(":
            p = self.expr()
            self.expect(")")
            self._no_juxtaposition()
            return p
        self.fail("unexpected end of input" if kind == "end" else f"unexpected token {text!r}", tok)

    def _no_juxtaposition(self):
        nxt = self.peek()
        if nxt[0] in ("int", "name") or nxt[:2] == ("op", "("):
            self.fail("implicit multiplication is not allowed; use '*'", nxt)


def _check_vars(variables) -> list:
    variables = list(variables)
    if not variables:
        raise ValueError("at least one variable is required")
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {variables}")
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ValueError(f"invalid variable name {v!r}")
    return variables


def parse_poly(src: str, variables) -> Polynomial:
    """Parse ``src`` into a fully expanded polynomial in ``variables``."""
    return _Parser(src, _check_vars(variables)).parse()


def _format_monomial(e, variables) -> str:
    parts = []
    for v, a in zip(variables, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def format_poly(p: Polynomial, variables=None) -> str:
    """Canonical text, terms in descending degree; ``parse_poly`` inverts it."""
    if variables is None:
        variables = default_variables(p.n)
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.items():
        mono = _format_monomial(e, variables)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def default_variables(n: int) -> list:
    if n <= 3:
        return ["x", "y", "z"][:n]
    if n == 4:
        return ["x", "y", "z", "w"]
    return [f"x{i + 1}" for i in range(n)]


@dataclasses.dataclass(frozen=True)
class GermSpec:
    """One corpus entry.  ``tags`` marks families such as ``swh`` or ``homogeneous``."""

    name: str
    vars: tuple
    poly: str
    expected: dict = dataclasses.field(default_factory=dict)
    tags: tuple = ()

    FIELDS = ("name", "vars", "poly", "expected", "tags")
    EXPECTED_KEYS = ("mu", "tau", "nu", "m")

    def parse(self) -> Polynomial:
        return parse_poly(self.poly, self.vars)

    @property
    def n(self) -> int:
        return len(self.vars)

    @classmethod
    def from_dict(cls, data: dict) -> "GermSpec":
        if not isinstance(data, dict):
            raise CorpusError("entry must be a JSON object")
        for key in data:
            if key not in cls.FIELDS:
                raise CorpusError(f"unknown field {key!r}")
        for key in ("name", "vars", "poly"):
            if key not in data:
                raise CorpusError(f"missing field {key!r}")
        expected = data.get("expected") or {}
        for key, value in expected.items():
            if key not in cls.EXPECTED_KEYS:
                raise CorpusError(f"unknown field 'expected.{key}'")
            if not isinstance(value, int):
                raise CorpusError(f"expected.{key} must be an integer")
        try:
            variables = tuple(_check_vars(data["vars"]))
        except ValueError as exc:
            raise CorpusError(str(exc)) from exc
        spec = cls(str(data["name"]), variables, str(data["poly"]), dict(expected),
                   tuple(data.get("tags", ())))
        try:
            f = spec.parse()
        except ParseError as exc:
            raise CorpusError(f"poly: {exc}") from exc
        if f.constant_term() != 0:
            raise CorpusError("germ must vanish at the origin (nonzero constant term)")
        return spec

    def to_dict(self) -> dict:
        d = {"name": self.name, "vars": list(self.vars), "poly": self.poly}
        if self.expected:
            d["expected"] = dict(self.expected)
        if self.tags:
            d["tags"] = list(self.tags)
        return d


def parse_corpus(text: str) -> list:
    specs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            data = json.loads(stripped)
            specs.append(GermSpec.from_dict(data))
        except (json.JSONDecodeError, CorpusError) as exc:
            raise CorpusError(f"line {lineno}: {exc}") from exc
    return specs


def read_corpus(path) -> list:
    return parse_corpus(Path(path).read_text())


def bundled_corpus_path() -> Path:
    return Path(__file__).with_name("data") / "corpus.jsonl"


def bundled_corpus() -> list:
    return read_corpus(bundled_corpus_path())


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclasses.dataclass
class InvariantReport:
    name: str
    n: int
    status: str
    m: Optional[int] = None
    mu: Optional[int] = None
    tau: Optional[int] = None
    ratio: Optional[Fraction] = None
    filtration_dims: Optional[list] = None
    bs_holds: Optional[bool] = None
    f_pow_checks: Optional[dict] = None
    saito_membership: Optional[bool] = None
    theorem_ok: Optional[bool] = None
    equality_case: Optional[bool] = None
    newton: Optional[dict] = None
    sectional: Optional[dict] = None
    message: Optional[str] = None

    STATUSES = ("OK", "SMOOTH", "NOT_ISOLATED", "INPUT_ERROR")

    def to_dict(self) -> dict:
        return {k: _jsonable(v) for k, v in dataclasses.asdict(self).items() if v is not None}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)


def reports_to_json(reports, indent=2) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=indent)
