"""MAMLScript front end: lexer, recursive-descent parser, semantic checks,
and lowering to the event-wiring IR consumed by the transpiler.

The language is a list of listeners, each binding an event to an ordered
body of trigger statements:

    on("click", "button1") {
        show("image2");
        hide("image1");
        swap(val("input3"), "text3");
    }

Listeners: click, change, keydown (with a key name), reach, timer (seconds).
Triggers: show(id), hide(id), swap(content, id); val(id) is the only
value-returning trigger and the only one allowed in nested position.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .document import Diagnostic, MamlDocument

LISTENERS = ("click", "change", "keydown", "reach", "timer")
TRIGGERS = ("val", "show", "hide", "swap")

# Elements whose current value val() can read.
VALUE_KINDS = ("text-field", "dropdown")
# Elements whose visible text swap() can replace.
SWAP_KINDS = ("text", "button", "text-field")


class ScriptError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class LexError(ScriptError):
    pass


class ParseError(ScriptError):
    pass


class ArityError(ScriptError):
    def __init__(self, name: str, message: str, pos: int):
        super().__init__(message, pos)
        self.name = name


class UnknownListener(ScriptError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"unknown listener {name!r}", pos)
        self.name = name


class UnknownTrigger(ScriptError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"unknown trigger {name!r}", pos)
        self.name = name


class NestedNonValueTrigger(ScriptError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"trigger {name!r} does not return a value and cannot be nested", pos)
        self.name = name


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class TriggerCall:
    name: str
    args: tuple["Arg", ...]


Arg = Union[str, TriggerCall]


@dataclass(frozen=True)
class Listener:
    event: str
    subject: str | None = None  # element id, for click/change/keydown/reach
    seconds: float | None = None  # for timer
    key_name: str | None = None  # for keydown
    body: tuple[TriggerCall, ...] = ()


@dataclass(frozen=True)
class ScriptAst:
    listeners: tuple[Listener, ...] = ()


# ---------------------------------------------------------------------------
# Lexer

@dataclass(frozen=True)
class _Token:
    kind: str  # ident | string | number | punct | eof
    value: str | float
    pos: int


_PUNCT = set("(){},;")


def _lex(code: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(code)
    while i < n:
        c = code[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            tokens.append(_Token("punct", c, i))
            i += 1
            continue
        if c == '"':
            start = i
            i += 1
            out: list[str] = []
            while True:
                if i >= n:
                    raise LexError("unterminated string", start)
                c = code[i]
                if c == '"':
                    i += 1
                    break
                if c == "\\":
                    if i + 1 >= n:
                        raise LexError("unterminated escape", i)
                    esc = code[i + 1]
                    mapped = {'"': '"', "\\": "\\", "/": "/", "n": "\n", "t": "\t", "r": "\r"}.get(esc)
                    if mapped is None:
                        raise LexError(f"unknown escape \\{esc}", i)
                    out.append(mapped)
                    i += 2
                    continue
                out.append(c)
                i += 1
            tokens.append(_Token("string", "".join(out), start))
            continue
        if c.isdigit() or (c == "." and i + 1 < n and code[i + 1].isdigit()):
            start = i
            while i < n and (code[i].isdigit() or code[i] == "."):
                i += 1
            text = code[start:i]
            try:
                value = float(text)
            except ValueError:
                raise LexError(f"malformed number {text!r}", start) from None
            tokens.append(_Token("number", value, start))
            continue
        if c.isalpha() or c == "_":
            start = i
            while i < n and (code[i].isalnum() or code[i] == "_"):
                i += 1
            tokens.append(_Token("ident", code[start:i], start))
            continue
        raise LexError(f"unexpected character {c!r}", i)
    tokens.append(_Token("eof", "", n))
    return tokens


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_punct(self, ch: str) -> _Token:
        tok = self.next()
        if tok.kind != "punct" or tok.value != ch:
            raise ParseError(f"expected {ch!r}, got {tok.value!r}", tok.pos)
        return tok

    def expect_string(self, what: str) -> str:
        tok = self.next()
        if tok.kind != "string":
            raise ParseError(f"expected {what} (a string), got {tok.value!r}", tok.pos)
        assert isinstance(tok.value, str)
        return tok.value

    def parse_script(self) -> ScriptAst:
        listeners = []
        while self.peek().kind != "eof":
            listeners.append(self.parse_listener())
        return ScriptAst(tuple(listeners))

    def parse_listener(self) -> Listener:
        tok = self.next()
        if tok.kind != "ident" or tok.value != "on":
            raise ParseError(f"expected 'on', got {tok.value!r}", tok.pos)
        self.expect_punct("(")
        ev_tok = self.next()
        if ev_tok.kind != "string":
            raise ParseError("expected event name string", ev_tok.pos)
        event = ev_tok.value
        assert isinstance(event, str)
        if event not in LISTENERS:
            raise UnknownListener(event, ev_tok.pos)
        self.expect_punct(",")

        subject: str | None = None
        seconds: float | None = None
        key_name: str | None = None
        if event == "timer":
            sec_tok = self.next()
            if sec_tok.kind != "number":
                raise ParseError("timer expects a number of seconds", sec_tok.pos)
            assert isinstance(sec_tok.value, float)
            if sec_tok.value <= 0:
                raise ParseError("timer seconds must be positive", sec_tok.pos)
            seconds = sec_tok.value
        else:
            subject = self.expect_string("element id")
        if event == "keydown":
            self.expect_punct(",")
            key_name = self.expect_string("key name")
        elif self.peek().kind == "punct" and self.peek().value == ",":
            tok = self.peek()
            raise ArityError(event, f"listener {event!r} takes no extra argument", tok.pos)
        self.expect_punct(")")

        self.expect_punct("{")
        body = []
        while not (self.peek().kind == "punct" and self.peek().value == "}"):
            body.append(self.parse_statement())
        self.expect_punct("}")
        return Listener(event=event, subject=subject, seconds=seconds, key_name=key_name, body=tuple(body))

    def parse_statement(self) -> TriggerCall:
        tok = self.peek()
        call = self.parse_call()
        if call.name == "val":
            raise ParseError("val(...) returns a value and is not a statement", tok.pos)
        self.expect_punct(";")
        return call

    def parse_call(self) -> TriggerCall:
        tok = self.next()
        if tok.kind != "ident":
            raise ParseError(f"expected a trigger name, got {tok.value!r}", tok.pos)
        name = tok.value
        assert isinstance(name, str)
        if name not in TRIGGERS:
            raise UnknownTrigger(name, tok.pos)
        self.expect_punct("(")
        args: list[Arg] = []
        if not (self.peek().kind == "punct" and self.peek().value == ")"):
            args.append(self.parse_arg())
            while self.peek().kind == "punct" and self.peek().value == ",":
                self.next()
                args.append(self.parse_arg())
        self.expect_punct(")")
        self._check_arity(name, args, tok.pos)
        return TriggerCall(name, tuple(args))

    def parse_arg(self) -> Arg:
        tok = self.peek()
        if tok.kind == "string":
            self.next()
            assert isinstance(tok.value, str)
            return tok.value
        if tok.kind == "ident":
            call = self.parse_call()
            if call.name != "val":
                raise NestedNonValueTrigger(call.name, tok.pos)
            return call
        raise ParseError(f"expected a string or nested val(...), got {tok.value!r}", tok.pos)

    def _check_arity(self, name: str, args: list[Arg], pos: int) -> None:
        want = 2 if name == "swap" else 1
        if len(args) != want:
            raise ArityError(name, f"{name} expects {want} argument(s), got {len(args)}", pos)
        # id positions must be literal strings; only swap's content may nest.
        id_positions = [1] if name == "swap" else [0]
        for idx in id_positions:
            if not isinstance(args[idx], str):
                raise ParseError(f"{name} expects a literal element id", pos)


def parse_script(code: str) -> ScriptAst:
    """Parse MAMLScript text into an AST; raises a positioned ScriptError."""
    return _Parser(_lex(code)).parse_script()


def serialize_script(ast: ScriptAst) -> str:
    """Canonical MAMLScript text for an AST; re-parsing yields an equal AST."""

    def arg(a: Arg) -> str:
        if isinstance(a, TriggerCall):
            return call(a)
        return json.dumps(a)

    def call(c: TriggerCall) -> str:
        return f"{c.name}({', '.join(arg(a) for a in c.args)})"

    lines = []
    for lst in ast.listeners:
        if lst.event == "timer":
            seconds = lst.seconds
            head = f'on("timer", {int(seconds) if seconds == int(seconds) else seconds})'
        elif lst.event == "keydown":
            head = f'on("keydown", {json.dumps(lst.subject)}, {json.dumps(lst.key_name)})'
        else:
            head = f'on({json.dumps(lst.event)}, {json.dumps(lst.subject)})'
        body = "".join(f"    {call(c)};\n" for c in lst.body)
        lines.append(head + " {\n" + body + "}\n")
    return "".join(lines)


# ---------------------------------------------------------------------------
# Semantic checks

def _referenced_ids(call: TriggerCall) -> list[tuple[str, str]]:
    """(trigger-name, id) pairs for every id an argument refers to."""
    out = []
    if call.name == "swap":
        content, target = call.args
        if isinstance(content, TriggerCall):
            out.extend(_referenced_ids(content))
        assert isinstance(target, str)
        out.append(("swap", target))
    else:
        arg = call.args[0]
        assert isinstance(arg, str)
        out.append((call.name, arg))
    return out


def check_script(ast: ScriptAst, doc: MamlDocument) -> list[Diagnostic]:
    """Resolve every referenced element id against the document and check
    trigger/element kind compatibility. Returns diagnostics, never raises.
    """
    diags: list[Diagnostic] = []
    ids = doc.ids()
    kinds = {eid: doc.elements[i].kind for eid, i in ids.items()}

    reported: set[str] = set()

    def unresolved(eid: str) -> None:
        if eid not in reported:
            reported.add(eid)
            diags.append(Diagnostic("UnresolvedId", f'no element with id "{eid}"'))

    for lst in ast.listeners:
        if lst.subject is not None:
            if lst.subject not in ids:
                unresolved(lst.subject)
        for call in lst.body:
            for trigger, eid in _referenced_ids(call):
                if eid not in ids:
                    unresolved(eid)
                    continue
                kind = kinds[eid]
                if trigger == "val" and kind not in VALUE_KINDS:
                    diags.append(
                        Diagnostic("TypeMismatch", f'val("{eid}") reads a value, but "{eid}" is a {kind}')
                    )
                elif trigger == "swap" and kind not in SWAP_KINDS:
                    diags.append(
                        Diagnostic("TypeMismatch", f'swap target "{eid}" must bear text, but is a {kind}')
                    )
                elif trigger in ("show", "hide") and kind == "script":
                    diags.append(
                        Diagnostic("TypeMismatch", f'{trigger}("{eid}") cannot target a script element')
                    )
    return diags


# ---------------------------------------------------------------------------
# Lowering to the event-wiring IR

@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Val:
    id: str


ValueExpr = Union[Literal, Val]


@dataclass(frozen=True)
class Show:
    id: str


@dataclass(frozen=True)
class Hide:
    id: str


@dataclass(frozen=True)
class Swap:
    value: ValueExpr
    id: str


Statement = Union[Show, Hide, Swap]


@dataclass(frozen=True)
class WiringEntry:
    event: str
    subject: str | None = None
    seconds: float | None = None
    key_name: str | None = None
    statements: tuple[Statement, ...] = ()


@dataclass(frozen=True)
class EventWiring:
    entries: tuple[WiringEntry, ...] = ()

    def to_json(self) -> list:
        """JSON shape consumed by the page runtime's bindListeners."""
        out = []
        for e in self.entries:
            entry: dict = {"event": e.event}
            if e.event == "timer":
                entry["seconds"] = e.seconds
            else:
                entry["subject"] = e.subject
            if e.key_name is not None:
                entry["key"] = e.key_name
            entry["stmts"] = [_stmt_json(s) for s in e.statements]
            out.append(entry)
        return out


def _value_json(v: ValueExpr) -> list:
    if isinstance(v, Literal):
        return ["lit", v.text]
    return ["val", v.id]


def _stmt_json(s: Statement) -> list:
    if isinstance(s, Show):
        return ["show", s.id]
    if isinstance(s, Hide):
        return ["hide", s.id]
    return ["swap", _value_json(s.value), s.id]


def _lower_call(call: TriggerCall) -> Statement:
    if call.name == "show":
        arg = call.args[0]
        assert isinstance(arg, str)
        return Show(arg)
    if call.name == "hide":
        arg = call.args[0]
        assert isinstance(arg, str)
        return Hide(arg)
    assert call.name == "swap"
    content, target = call.args
    assert isinstance(target, str)
    if isinstance(content, TriggerCall):
        inner = content.args[0]
        assert isinstance(inner, str)
        value: ValueExpr = Val(inner)
    else:
        value = Literal(content)
    return Swap(value, target)


def lower_script(ast: ScriptAst) -> EventWiring:
    """Lower a checked AST to the IR: one entry per listener, statements in
    source order. Preserves listener and statement counts exactly.
    """
    entries = []
    for lst in ast.listeners:
        entries.append(
            WiringEntry(
                event=lst.event,
                subject=lst.subject,
                seconds=lst.seconds,
                key_name=lst.key_name,
                statements=tuple(_lower_call(c) for c in lst.body),
            )
        )
    return EventWiring(tuple(entries))
