"""Session language: parsing, printing and typed diagnostics.

A session is a sequence of statements, one per line; ``#`` starts a comment.

    base k = QQ
    base k = Fp(2) subfield of ambient(x, y, z) generated by [x^4, y^4]
    field K = k adjoin insep x^2, y^2
    field L = k adjoin transcendental z adjoin insep x^2*(y^2+z)
    field M = k adjoin root a of X^2 - 2
    field N = k adjoin sqrt -1 as i, 2
    algebra A = descriptor regular=true residually_separable=true residue_fields=[K, L]
    query regular tensor(K, L)

Query forms are listed in ``QUERY_FORMS``.  Parsing is purely syntactic
apart from name resolution; building towers happens in the runner.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional


class DslError(Exception):
    """A diagnostic with a source position (1-based line and column)."""

    kind = "error"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def render(self, source: str = "<session>") -> str:
        return f"{source}:{self.line}:{self.column}: {self.kind}: {self.message}"


class DslSyntaxError(DslError):
    kind = "syntax error"


class UnknownNameError(DslError):
    kind = "unknown name"


class DuplicateNameError(DslError):
    kind = "duplicate name"


class SemanticError(DslError):
    """A definition or query the engine rejected (reducible polynomial, oracle gap, ...)."""

    kind = "semantic error"

    def __init__(self, message, line=0, column=0, cause: str = ""):
        super().__init__(message, line, column)
        self.cause = cause


# -----------------------------------------------------------------------------
# syntax tree
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseDef:
    name: str
    p: int  # 0 means QQ
    ambient_vars: Optional[tuple] = None
    generators: Optional[tuple] = None
    line: int = field(default=0, compare=False)

    def to_text(self) -> str:
        rhs = "QQ" if self.p == 0 else f"Fp({self.p})"
        if self.ambient_vars is not None:
            rhs += (f" subfield of ambient({', '.join(self.ambient_vars)})"
                    f" generated by [{', '.join(self.generators)}]")
        return f"base {self.name} = {rhs}"


@dataclass(frozen=True)
class Adjunction:
    """One ``adjoin`` clause. items are (text, alias) pairs; for roots, (poly, name)."""

    kind: str  # insep | transcendental | root | sqrt
    items: tuple
    column: int = field(default=0, compare=False)

    def to_text(self) -> str:
        if self.kind == "root":
            poly, name = self.items[0]
            return f"adjoin root {name} of {poly}"
        parts = [t if a is None else f"{t} as {a}" for t, a in self.items]
        return f"adjoin {self.kind} {', '.join(parts)}"


@dataclass(frozen=True)
class FieldDef:
    name: str
    over: str
    clauses: tuple
    line: int = field(default=0, compare=False)
    over_column: int = field(default=0, compare=False)

    def to_text(self) -> str:
        return " ".join([f"field {self.name} = {self.over}"] + [c.to_text() for c in self.clauses])


@dataclass(frozen=True)
class AlgebraDef:
    name: str
    flags: tuple  # sorted (key, bool | None) pairs
    residue_fields: tuple
    line: int = field(default=0, compare=False)

    def flag(self, key: str) -> Optional[bool]:
        return dict(self.flags).get(key)

    def to_text(self) -> str:
        words = [f"{k}={_bool_text(v)}" for k, v in self.flags]
        if self.residue_fields:
            words.append(f"residue_fields=[{', '.join(self.residue_fields)}]")
        return " ".join([f"algebra {self.name} = descriptor"] + words)


@dataclass(frozen=True)
class Query:
    kind: str
    args: tuple
    options: tuple = ()  # (key, value) pairs, value is a str or tuple of str
    line: int = field(default=0, compare=False)
    arg_columns: tuple = field(default=(), compare=False)

    def option(self, key, default=None):
        return dict(self.options).get(key, default)

    def to_text(self) -> str:
        return "query " + self.describe()

    def describe(self) -> str:
        a = self.args
        if self.kind in ("regular", "dim", "decompose", "crossvalidate"):
            body = f"{self.kind} tensor({a[0]}, {a[1]})"
        elif self.kind == "intersect":
            body = f"intersect({a[0]}, {a[1]})"
        elif self.kind == "self_tensor":
            body = f"self_tensor {a[0]}"
        elif self.kind == "theorem3":
            body = f"theorem3 {a[0]} {a[1]}"
        elif self.kind == "minpoly":
            body = f"minpoly {a[0]} in {a[1]}"
        else:
            body = f"{self.kind} {a[0]}"
        for k, v in self.options:
            if k == "strict":
                body += " strict"
            elif k == "noetherian":
                body += " noetherian"
            elif k == "assume":
                body += " assume " + ", ".join(v)
            elif k == "over":
                body += f" over {v}"
        return body


@dataclass
class Session:
    statements: list = field(default_factory=list)

    @property
    def bindings(self) -> list:
        return [s for s in self.statements if not isinstance(s, Query)]

    @property
    def field_bindings(self) -> list:
        return [s for s in self.statements if isinstance(s, (BaseDef, FieldDef))]

    @property
    def queries(self) -> list:
        return [s for s in self.statements if isinstance(s, Query)]

    def to_text(self) -> str:
        return "".join(s.to_text() + "\n" for s in self.statements)

    def __eq__(self, other):
        return isinstance(other, Session) and self.statements == other.statements


def _bool_text(v):
    return "unknown" if v is None else str(v).lower()


# -----------------------------------------------------------------------------
# parser
# -----------------------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
DESCRIPTOR_FLAGS = ("regular", "residually_separable", "finitely_generated", "geometrically_regular", "noetherian")
ASSERTION_NAMES = ("i", "ii", "iii", "iv", "v")
QUERY_FORMS = (
    "regular tensor(K, L) [strict]",
    "dim tensor(K, L)",
    "decompose tensor(K, L)",
    "crossvalidate tensor(K, L)",
    "intersect(K, L)",
    "self_tensor K",
    "theorem3 A B [assume ii, ...] [noetherian]",
    "degree K [over E]",
    "classify K [over E]",
    "minpoly EXPR in K [over E]",
)


class _Line:
    """Cursor over one source line with column tracking."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, msg, pos=None) -> DslSyntaxError:
        return DslSyntaxError(msg, self.lineno, (self.pos if pos is None else pos) + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek_word(self) -> Optional[str]:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        return m.group(0) if m else None

    def name(self, what="a name") -> tuple[str, int]:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group(0), m.start() + 1

    def keyword(self, kw: str):
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if not m or m.group(0) != kw:
            raise self.error(f"expected '{kw}'")
        self.pos = m.end()

    def accept_keyword(self, kw: str) -> bool:
        if self.peek_word() == kw:
            self.keyword(kw)
            return True
        return False

    def symbol(self, sym: str):
        self.skip_ws()
        if not self.text.startswith(sym, self.pos):
            raise self.error(f"expected '{sym}'")
        self.pos += len(sym)

    def accept_symbol(self, sym: str) -> bool:
        self.skip_ws()
        if self.text.startswith(sym, self.pos):
            self.pos += len(sym)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group(0))

    def expression(self, stops: tuple = (",",), stop_words: tuple = ()) -> tuple[str, int]:
        """Raw text up to a depth-0 stop symbol, a stop keyword or the end of line."""
        self.skip_ws()
        start, depth, i = self.pos, 0, self.pos
        while i < len(self.text):
            c = self.text[i]
            if c in "([":
                depth += 1
            elif c in ")]":
                if depth == 0:
                    break
                depth -= 1
            elif depth == 0 and c in stops:
                break
            elif depth == 0 and c.isalpha() and (i == 0 or not (self.text[i - 1].isalnum() or self.text[i - 1] == "_")):
                m = _NAME.match(self.text, i)
                if m.group(0) in stop_words:
                    break
                i = m.end()
                continue
            i += 1
        text = self.text[start:i].strip()
        if not text:
            raise self.error("expected an expression")
        self.pos = i
        return text, start + 1


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_session(text: str) -> Session:
    """Parse session text. Raises DslSyntaxError, UnknownNameError or DuplicateNameError."""
    session = Session()
    kinds: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        cur = _Line(body, lineno)
        head = cur.peek_word()
        if head == "base":
            stmt = _parse_base(cur)
        elif head == "field":
            stmt = _parse_field(cur, kinds)
        elif head == "algebra":
            stmt = _parse_algebra(cur, kinds)
        elif head == "query":
            stmt = _parse_query(cur, kinds)
        else:
            raise cur.error("expected 'base', 'field', 'algebra' or 'query'")
        if not cur.at_end():
            raise cur.error("unexpected trailing text")
        if not isinstance(stmt, Query):
            if stmt.name in kinds:
                raise DuplicateNameError(f"{stmt.name!r} is already defined", lineno, 1)
            kinds[stmt.name] = "algebra" if isinstance(stmt, AlgebraDef) else "field"
        session.statements.append(stmt)
    return session


def _resolve(cur: _Line, kinds: dict, name: str, col: int, want: str):
    if name not in kinds:
        raise UnknownNameError(f"{name!r} is not defined", cur.lineno, col)
    if want == "field" and kinds[name] != "field":
        raise SemanticError(f"{name!r} is an algebra descriptor, expected a field", cur.lineno, col)


def _parse_base(cur: _Line) -> BaseDef:
    cur.keyword("base")
    name, _ = cur.name("a base name")
    cur.symbol("=")
    w = cur.peek_word()
    if w == "QQ":
        cur.keyword("QQ")
        return BaseDef(name, 0, line=cur.lineno)
    if w != "Fp":
        raise cur.error("expected 'QQ' or 'Fp(p)'")
    cur.keyword("Fp")
    cur.symbol("(")
    pos = cur.pos
    p = cur.integer()
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise cur.error(f"{p} is not a prime", pos)
    cur.symbol(")")
    if not cur.accept_keyword("subfield"):
        return BaseDef(name, p, line=cur.lineno)
    cur.keyword("of")
    cur.keyword("ambient")
    cur.symbol("(")
    vars_ = [cur.name("a variable")[0]]
    while cur.accept_symbol(","):
        vars_.append(cur.name("a variable")[0])
    cur.symbol(")")
    if len(set(vars_)) != len(vars_):
        raise cur.error("ambient variables must be distinct")
    cur.keyword("generated")
    cur.keyword("by")
    cur.symbol("[")
    gens = [cur.expression((",",))[0]]
    while cur.accept_symbol(","):
        gens.append(cur.expression((",",))[0])
    cur.symbol("]")
    return BaseDef(name, p, tuple(vars_), tuple(gens), line=cur.lineno)


def _alias_list(cur: _Line, stop_words=("adjoin",)) -> tuple:
    items = []
    while True:
        text, _ = cur.expression((",",), stop_words=stop_words + ("as",))
        alias = cur.name("an alias")[0] if cur.accept_keyword("as") else None
        items.append((text, alias))
        if not cur.accept_symbol(","):
            return tuple(items)


def _parse_field(cur: _Line, kinds: dict) -> FieldDef:
    cur.keyword("field")
    name, _ = cur.name("a field name")
    cur.symbol("=")
    over, over_col = cur.name("a base or field name")
    _resolve(cur, kinds, over, over_col, "field")
    clauses = []
    while not cur.at_end():
        col = cur.pos + 1
        cur.keyword("adjoin")
        kind = cur.peek_word()
        if kind == "insep":
            cur.keyword("insep")
            clauses.append(Adjunction("insep", _alias_list(cur), col))
        elif kind == "sqrt":
            cur.keyword("sqrt")
            items = _alias_list(cur)
            for text, _ in items:
                if not re.fullmatch(r"-?\d+", text):
                    raise DslSyntaxError(f"sqrt expects integers, got {text!r}", cur.lineno, col)
            clauses.append(Adjunction("sqrt", items, col))
        elif kind == "transcendental":
            cur.keyword("transcendental")
            names = [cur.name("a variable")[0]]
            while cur.accept_symbol(","):
                names.append(cur.name("a variable")[0])
            clauses.append(Adjunction("transcendental", tuple((n, None) for n in names), col))
        elif kind == "root":
            cur.keyword("root")
            rname, _ = cur.name("a root name")
            cur.keyword("of")
            poly, _ = cur.expression((), stop_words=("adjoin",))
            clauses.append(Adjunction("root", ((poly, rname),), col))
        else:
            raise cur.error("expected 'insep', 'transcendental', 'root' or 'sqrt'")
    return FieldDef(name, over, tuple(clauses), line=cur.lineno, over_column=over_col)


def _parse_algebra(cur: _Line, kinds: dict) -> AlgebraDef:
    cur.keyword("algebra")
    name, _ = cur.name("an algebra name")
    cur.symbol("=")
    cur.keyword("descriptor")
    flags, residues = {}, []
    while not cur.at_end():
        key, kcol = cur.name("a descriptor key")
        cur.symbol("=")
        if key == "residue_fields":
            cur.symbol("[")
            if not cur.accept_symbol("]"):
                while True:
                    n, c = cur.name("a field name")
                    _resolve(cur, kinds, n, c, "field")
                    residues.append(n)
                    if not cur.accept_symbol(","):
                        break
                cur.symbol("]")
            continue
        if key not in DESCRIPTOR_FLAGS:
            raise DslSyntaxError(f"unknown descriptor key {key!r}", cur.lineno, kcol)
        if key in flags:
            raise DslSyntaxError(f"descriptor key {key!r} given twice", cur.lineno, kcol)
        val, vcol = cur.name("true, false or unknown")
        if val not in ("true", "false", "unknown"):
            raise DslSyntaxError("expected true, false or unknown", cur.lineno, vcol)
        flags[key] = None if val == "unknown" else val == "true"
    return AlgebraDef(name, tuple(sorted(flags.items())), tuple(residues), line=cur.lineno)


def _pair(cur: _Line, kinds, want="field"):
    cur.symbol("(")
    a, ca = cur.name()
    cur.symbol(",")
    b, cb = cur.name()
    cur.symbol(")")
    _resolve(cur, kinds, a, ca, want)
    _resolve(cur, kinds, b, cb, want)
    return (a, b), (ca, cb)


def _parse_query(cur: _Line, kinds: dict) -> Query:
    cur.keyword("query")
    kind, kcol = cur.name("a query kind")
    opts = []
    if kind in ("regular", "dim", "decompose", "crossvalidate"):
        cur.keyword("tensor")
        args, cols = _pair(cur, kinds)
        if kind == "regular" and cur.accept_keyword("strict"):
            opts.append(("strict", "true"))
    elif kind == "intersect":
        args, cols = _pair(cur, kinds)
    elif kind in ("self_tensor", "degree", "classify"):
        n, c = cur.name("a field name")
        _resolve(cur, kinds, n, c, "field")
        args, cols = (n,), (c,)
        if kind != "self_tensor" and cur.accept_keyword("over"):
            o, oc = cur.name("a field name")
            _resolve(cur, kinds, o, oc, "field")
            opts.append(("over", o))
    elif kind == "minpoly":
        expr, ecol = cur.expression((), stop_words=("in",))
        cur.keyword("in")
        n, c = cur.name("a field name")
        _resolve(cur, kinds, n, c, "field")
        args, cols = (expr, n), (ecol, c)
        if cur.accept_keyword("over"):
            o, oc = cur.name("a field name")
            _resolve(cur, kinds, o, oc, "field")
            opts.append(("over", o))
    elif kind == "theorem3":
        a, ca = cur.name("an algebra or field name")
        b, cb = cur.name("an algebra or field name")
        _resolve(cur, kinds, a, ca, "any")
        _resolve(cur, kinds, b, cb, "any")
        args, cols = (a, b), (ca, cb)
        assume = []
        noeth = False
        while not cur.at_end():
            if cur.accept_keyword("assume"):
                while True:
                    w, wc = cur.name("an assertion label")
                    if w not in ASSERTION_NAMES:
                        raise DslSyntaxError(f"unknown assertion {w!r}; use one of i, ii, iii, iv, v",
                                             cur.lineno, wc)
                    assume.append(w)
                    if not cur.accept_symbol(","):
                        break
            elif cur.accept_keyword("noetherian"):
                noeth = True
            else:
                raise cur.error("expected 'assume' or 'noetherian'")
        if assume:
            opts.append(("assume", tuple(assume)))
        if noeth:
            opts.append(("noetherian", "true"))
    else:
        raise DslSyntaxError(f"unknown query {kind!r}", cur.lineno, kcol)
    return Query(kind, tuple(args), tuple(opts), line=cur.lineno, arg_columns=tuple(cols))
