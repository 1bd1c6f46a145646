"""The script language: parsing, canonical rendering, execution and reports.

A script declares generators, binds objects and morphisms, and states
checks::

    gens a! z w
    obj x = a' z a
    mor e = eta(a) ; beta(a' | a) ; eps(a)
    check e == e
    assert parity e a = odd
    assert perm m z = [1]
    diagram p q r

``;`` is "then" and binds tighter than ``+``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .coherence import EQUAL, NOT_PARALLEL, Verdict, check_equal
from .core import Letter, PermcohError, Registry, Word
from .semantics import Parity, a_parity, a_permutation
from .terms import (
    Beta,
    Eps,
    Eta,
    Id,
    Inv,
    Term,
    TermTypeError,
    boundaries,
    figure_c,
    figure_eight,
    figure_h,
    then,
    tsum,
)

STATEMENT_KEYWORDS = frozenset({"gens", "obj", "mor", "check", "assert", "diagram"})
MACROS = {"eight": figure_eight, "figC": figure_c, "figH": figure_h}

HOLDS = "holds"
FAILS = "fails"
PASSING = frozenset({EQUAL, HOLDS})


class ScriptError(PermcohError):
    """A parse or binding error, annotated with a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0, kind: str = "parse-error"):
        self.line, self.col, self.kind = line, col, kind
        where = f"{line}:{col}: " if line else ""
        super().__init__(f"{where}{kind}: {message}")


# -- surface syntax -----------------------------------------------------------


@dataclass(frozen=True)
class WordExpr:
    letters: tuple[tuple[str, bool], ...] = ()

    def render(self) -> str:
        return " ".join(n + ("'" if p else "") for n, p in self.letters) or "0"


@dataclass(frozen=True)
class Atom:
    """``op`` is one of id, beta, eta, eps, inv, eight, figC, figH, ref."""

    op: str
    args: tuple = ()
    pos: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class SumExpr:
    parts: tuple


@dataclass(frozen=True)
class CompExpr:
    stages: tuple


@dataclass(frozen=True)
class Gens:
    entries: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class ObjDef:
    name: str
    word: WordExpr


@dataclass(frozen=True)
class MorDef:
    name: str
    expr: object


@dataclass(frozen=True)
class Check:
    lhs: str
    rhs: str


@dataclass(frozen=True)
class AssertParity:
    mor: str
    gen: str
    value: str


@dataclass(frozen=True)
class AssertPerm:
    mor: str
    gen: str
    images: tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    paths: tuple[str, ...]


@dataclass(frozen=True)
class Script:
    statements: tuple = ()

    @property
    def registry(self) -> Registry | None:
        for st in self.statements:
            if isinstance(st, Gens):
                return Registry(st.entries)
        return None


def render_expr(e) -> str:
    if isinstance(e, SumExpr):
        return " + ".join(render_expr(p) for p in e.parts)
    if isinstance(e, CompExpr):
        return " ; ".join(f"({render_expr(s)})" if isinstance(s, SumExpr) else render_expr(s) for s in e.stages)
    if e.op == "ref":
        return e.args[0]
    if e.op == "id":
        return f"id({e.args[0].render()})"
    if e.op == "beta":
        return f"beta({e.args[0].render()} | {e.args[1].render()})"
    if e.op == "inv":
        inner = e.args[0]
        body = render_expr(inner)
        return f"inv(({body}))" if isinstance(inner, (SumExpr, CompExpr)) else f"inv({body})"
    return f"{e.op}({e.args[0]})"


def render_statement(st) -> str:
    if isinstance(st, Gens):
        return "gens " + " ".join(n + ("!" if inv else "") for n, inv in st.entries)
    if isinstance(st, ObjDef):
        return f"obj {st.name} = {st.word.render()}"
    if isinstance(st, MorDef):
        return f"mor {st.name} = {render_expr(st.expr)}"
    if isinstance(st, Check):
        return f"check {st.lhs} == {st.rhs}"
    if isinstance(st, AssertParity):
        return f"assert parity {st.mor} {st.gen} = {st.value}"
    if isinstance(st, AssertPerm):
        return f"assert perm {st.mor} {st.gen} = [{','.join(map(str, st.images))}]"
    if isinstance(st, Diagram):
        return "diagram " + " ".join(st.paths)
    raise TypeError(f"not a statement: {st!r}")


def render_script(script: Script) -> str:
    return "".join(render_statement(st) + "\n" for st in script.statements)


# -- lexer and parser -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)"
    r"|(?P<op>==|[()|+;='!\[\],])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[_Tok]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ScriptError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.gens: dict[str, bool] | None = None
        self.objs: set[str] = set()
        self.mors: set[str] = set()
        self._obj_words: dict[str, WordExpr] = {}

    # token helpers
    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None, kind: str = "parse-error"):
        tok = tok or self.tok
        return ScriptError(msg, tok.line, tok.col, kind)

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def advance(self) -> _Tok:
        tok = self.tok
        self.i += 1
        return tok

    def name(self) -> _Tok:
        if self.tok.kind != "name" or self.tok.text in STATEMENT_KEYWORDS:
            raise self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def fresh_name(self) -> _Tok:
        tok = self.name()
        if tok.text in self.objs or tok.text in self.mors or (self.gens and tok.text in self.gens):
            raise self.error(f"name {tok.text!r} is already bound", tok, "duplicate-name")
        return tok

    def require_gens(self, tok: _Tok):
        if self.gens is None:
            raise self.error("no generators declared (missing 'gens')", tok, "unknown-generator")

    def generator(self, invertible: bool = False, at: _Tok | None = None) -> str:
        tok = self.name()
        self.require_gens(tok)
        if tok.text not in self.gens:
            raise self.error(f"unknown generator {tok.text!r}", tok, "unknown-generator")
        if invertible and not self.gens[tok.text]:
            raise self.error(f"generator {tok.text!r} is not invertible", at or tok, "not-invertible")
        return tok.text

    # grammar
    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self):
        tok = self.tok
        if tok.kind != "name" or tok.text not in STATEMENT_KEYWORDS:
            raise self.error(f"expected a statement, found {tok.text!r}")
        self.advance()
        return getattr(self, "stmt_" + tok.text)(tok)

    def stmt_gens(self, kw):
        if self.gens is not None:
            raise self.error("generators already declared", kw)
        entries = []
        seen: dict[str, bool] = {}
        while self.tok.kind == "name" and self.tok.text not in STATEMENT_KEYWORDS:
            tok = self.advance()
            if tok.text in seen:
                raise self.error(f"duplicate generator {tok.text!r}", tok, "duplicate-name")
            inv = False
            if self.at("!"):
                self.advance()
                inv = True
            seen[tok.text] = inv
            entries.append((tok.text, inv))
        if not entries:
            raise self.error("expected at least one generator")
        self.gens = seen
        return Gens(tuple(entries))

    def stmt_obj(self, kw):
        name = self.fresh_name()
        self.expect("=")
        word = self.word()
        self.objs.add(name.text)
        self._obj_words[name.text] = word
        return ObjDef(name.text, word)

    def stmt_mor(self, kw):
        name = self.fresh_name()
        self.expect("=")
        expr = self.expr()
        self.mors.add(name.text)
        return MorDef(name.text, expr)

    def mor_ref(self) -> str:
        tok = self.name()
        if tok.text not in self.mors:
            raise self.error(f"unbound morphism {tok.text!r}", tok, "unbound-name")
        return tok.text

    def stmt_check(self, kw):
        lhs = self.mor_ref()
        self.expect("==")
        return Check(lhs, self.mor_ref())

    def stmt_assert(self, kw):
        what = self.name()
        if what.text == "parity":
            mor = self.mor_ref()
            gen = self.generator(invertible=True)
            self.expect("=")
            val = self.name()
            if val.text not in ("even", "odd"):
                raise self.error("expected 'even' or 'odd'", val)
            return AssertParity(mor, gen, val.text)
        if what.text == "perm":
            mor = self.mor_ref()
            gen_tok = self.tok
            gen = self.generator()
            if self.gens[gen]:
                raise self.error(f"generator {gen!r} is invertible; assert its parity instead", gen_tok, "not-plain")
            self.expect("=")
            self.expect("[")
            images = []
            while True:
                if self.tok.kind != "int":
                    raise self.error("expected an integer")
                images.append(int(self.advance().text))
                if self.at("]"):
                    break
                self.expect(",")
            self.expect("]")
            return AssertPerm(mor, gen, tuple(images))
        raise self.error("expected 'parity' or 'perm' after 'assert'", what)

    def stmt_diagram(self, kw):
        paths = [self.mor_ref()]
        while self.tok.kind == "name" and self.tok.text not in STATEMENT_KEYWORDS:
            paths.append(self.mor_ref())
        if len(paths) < 2:
            raise self.error("a diagram needs at least two paths", kw)
        return Diagram(tuple(paths))

    def word(self) -> WordExpr:
        """``0`` or a sequence of letters; object names expand in place."""
        if self.tok.kind == "int":
            tok = self.advance()
            if tok.text != "0":
                raise self.error("the only numeric word is 0", tok)
            return WordExpr()
        letters = []
        start = self.tok
        while self.tok.kind == "name" and self.tok.text not in STATEMENT_KEYWORDS:
            tok = self.advance()
            primed = False
            if self.at("'"):
                self.advance()
                primed = True
            if tok.text in self.objs:
                if primed:
                    raise self.error(f"cannot prime object name {tok.text!r}", tok)
                letters.extend(self._obj_words[tok.text].letters)
                continue
            self.require_gens(tok)
            if tok.text not in self.gens:
                raise self.error(f"unknown generator or object {tok.text!r}", tok, "unknown-generator")
            if primed and not self.gens[tok.text]:
                raise self.error(f"generator {tok.text!r} is not invertible", tok, "not-invertible")
            letters.append((tok.text, primed))
        if not letters:
            raise self.error("expected a word", start)
        return WordExpr(tuple(letters))

    def expr(self):
        parts = [self.term()]
        while self.at("+"):
            self.advance()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else SumExpr(tuple(parts))

    def term(self):
        stages = [self.atom()]
        while self.at(";"):
            self.advance()
            stages.append(self.atom())
        return stages[0] if len(stages) == 1 else CompExpr(tuple(stages))

    def atom(self):
        tok = self.tok
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind != "name":
            raise self.error(f"expected a morphism, found {tok.text or 'end of input'!r}")
        pos = (tok.line, tok.col)
        if self.toks[self.i + 1].text != "(":
            return Atom("ref", (self.mor_ref(),), pos)
        op = self.advance().text
        self.expect("(")
        if op == "id":
            args = (self.word(),)
        elif op == "beta":
            left = self.word()
            self.expect("|")
            args = (left, self.word())
        elif op in ("eta", "eps") or op in MACROS:
            args = (self.generator(invertible=True, at=tok),)
        elif op == "inv":
            args = (self.expr(),)
        else:
            raise self.error(f"unknown constructor {op!r}", tok)
        self.expect(")")
        return Atom(op, args, pos)


def parse_script(text: str) -> Script:
    return _Parser(text).script()


# -- execution ---------------------------------------------------------------


@dataclass(frozen=True)
class Result:
    check: str
    status: str
    witnesses: tuple[tuple[str, str, str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return self.status in PASSING


@dataclass(frozen=True)
class Report:
    results: tuple[Result, ...] = ()
    error: str | None = None

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def exit_status(self) -> int:
        if self.error is not None:
            return 2
        return 1 if self.failed else 0


def word_of(reg: Registry, w: WordExpr) -> Word:
    return Word(reg, tuple(Letter(n, p) for n, p in w.letters))


def build_term(reg: Registry, e, mors: dict[str, Term]) -> Term:
    if isinstance(e, SumExpr):
        return tsum(*(build_term(reg, p, mors) for p in e.parts))
    if isinstance(e, CompExpr):
        return then(*(build_term(reg, s, mors) for s in e.stages))
    op, args = e.op, e.args
    if op == "ref":
        return mors[args[0]]
    if op == "id":
        return Id(word_of(reg, args[0]))
    if op == "beta":
        return Beta(word_of(reg, args[0]), word_of(reg, args[1]))
    if op == "eta":
        return Eta(reg, args[0])
    if op == "eps":
        return Eps(reg, args[0])
    if op == "inv":
        return Inv(build_term(reg, args[0], mors))
    return MACROS[op](reg, args[0])


def bind_morphisms(script: Script) -> dict[str, Term]:
    """Build and typecheck every morphism binding; raises ScriptError on a type error."""
    reg = script.registry
    mors: dict[str, Term] = {}
    for st in script.statements:
        if isinstance(st, MorDef):
            t = build_term(reg, st.expr, mors)
            try:
                boundaries(t)
            except TermTypeError as err:
                raise ScriptError(f"in 'mor {st.name}': {err}", kind=err.kind) from None
            mors[st.name] = t
    return mors


def _verdict_result(label: str, v: Verdict) -> Result:
    if v.status == NOT_PARALLEL:
        (s1, t1), (s2, t2) = v.boundary
        return Result(label, v.status, (("", "boundary", f"{s1} -> {t1}", f"{s2} -> {t2}"),))
    return Result(label, v.status, tuple((w.generator, w.kind, str(w.lhs), str(w.rhs)) for w in v.witnesses))


def run_script(script: Script) -> Report:
    try:
        mors = bind_morphisms(script)
    except ScriptError as err:
        return Report(error=str(err))
    results = []
    for st in script.statements:
        label = render_statement(st)
        if isinstance(st, Check):
            results.append(_verdict_result(label, check_equal(mors[st.lhs], mors[st.rhs])))
        elif isinstance(st, Diagram):
            paths = st.paths
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    v = check_equal(mors[paths[i]], mors[paths[j]])
                    results.append(_verdict_result(f"{label}: {paths[i]} == {paths[j]}", v))
        elif isinstance(st, AssertParity):
            got = a_parity(mors[st.mor], st.gen)
            ok = got == Parity.parse(st.value)
            wit = () if ok else ((st.gen, "parity", str(got), st.value),)
            results.append(Result(label, HOLDS if ok else FAILS, wit))
        elif isinstance(st, AssertPerm):
            got = a_permutation(mors[st.mor], st.gen)
            ok = got.images == st.images
            want = "[" + ",".join(map(str, st.images)) + "]"
            wit = () if ok else ((st.gen, "permutation", str(got), want),)
            results.append(Result(label, HOLDS if ok else FAILS, wit))
    return Report(tuple(results))


# -- reports -----------------------------------------------------------------


def report_dict(report: Report) -> dict:
    return {
        "results": [
            {
                "check": r.check,
                "status": r.status,
                "witnesses": [
                    {"generator": g, "kind": k, "lhs": lhs, "rhs": rhs} for g, k, lhs, rhs in r.witnesses
                ],
            }
            for r in report.results
        ],
        "summary": {"passed": report.passed, "failed": report.failed},
    }


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        if report.error is not None:
            return json.dumps({"error": report.error}, indent=2) + "\n"
        return json.dumps(report_dict(report), indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    if report.error is not None:
        return f"error: {report.error}\n"
    lines = []
    for r in report.results:
        lines.append(f"{'ok  ' if r.passed else 'FAIL'} {r.check}: {r.status}")
        for g, k, lhs, rhs in r.witnesses:
            who = f"{g} {k}" if g else k
            lines.append(f"       {who}: {lhs} vs {rhs}")
    lines.append(f"{report.passed} passed, {report.failed} failed")
    return "\n".join(lines) + "\n"
