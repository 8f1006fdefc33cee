"""Concrete syntax: parsing and pretty-printing for all three calculi.

The ASCII grammar, shared by the calculi with the constructor set filtered
per calculus:

    term  := lam | s0 | let | dollar
    lam   := '\\' name+ '.' term
    s0    := 'S0' name '.' term
    let   := 'let' name '=' term 'in' term
    dollar:= app ('$' dollar)?
    app   := atom+
    atom  := name | '(' term ')' | '^(' term ')' | '$(' term ')'

Application is left-associative and binds tighter than the right-associative
binary '$'; binders extend as far right as possible.  The unary operators are
atomic and their opening parenthesis must be adjacent: ``$(`` opens a freeze
while ``$ (`` is the binary operator applied to a parenthesised term.  The
unicode spellings (lambda, up-arrow) are accepted on input.

In ``ld`` the forms ``S0``, binary ``$`` and ``let`` are sugar and expand at
parse time; in ``lamd`` the unary operators are sugar for their macro
definitions.  Open terms are legal everywhere: unbound names parse as free
variables.
"""

from __future__ import annotations

from .terms import (
    Abs,
    App,
    Bound,
    Dollar,
    Freeze,
    Shift0,
    Term,
    Thaw,
    Var,
    free_names,
    shift,
    uses_bound,
)
from .terms import fresh_name as _fresh_display

KEYWORDS = {"S0", "let", "in"}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


# ---------------------------------------------------------------------------
# lexer

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_NAME_CONT = _NAME_START | set("0123456789'")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks: list[tuple[str, str, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "\\λ":
            toks.append(("LAMBDA", c, i))
            i += 1
        elif c == "$" and i + 1 < n and text[i + 1] == "(":
            toks.append(("FREEZE", "$(", i))
            i += 2
        elif (c == "^" or c == "↑") and i + 1 < n and text[i + 1] == "(":
            toks.append(("THAW", c + "(", i))
            i += 2
        elif c == "$":
            toks.append(("DOLLAR", c, i))
            i += 1
        elif c == "(":
            toks.append(("LPAREN", c, i))
            i += 1
        elif c == ")":
            toks.append(("RPAREN", c, i))
            i += 1
        elif c == ".":
            toks.append(("DOT", c, i))
            i += 1
        elif c == "=":
            toks.append(("EQUALS", c, i))
            i += 1
        elif c in _NAME_START:
            j = i + 1
            while j < n and text[j] in _NAME_CONT:
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "NAME"
            toks.append((kind, word, i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    toks.append(("EOF", "", n))
    return toks


# ---------------------------------------------------------------------------
# parser

_ATOM_STARTS = {"NAME", "LPAREN", "FREEZE", "THAW"}

# (\x. S0 k. x k), the lamd expansion of unary thaw; closed, so usable as-is.
_THAW_MACRO = Abs(Shift0(App(Bound(1), Bound(0)), "k"), "x")


class _Parser:
    def __init__(self, text: str, calculus: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.calculus = calculus

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.pos]

    def next(self) -> tuple[str, str, int]:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> tuple[str, str, int]:
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind}, found {t[1] or 'end of input'!r}", t[2])
        return t

    def fail(self, msg: str) -> ParseError:
        return ParseError(msg, self.peek()[2])

    def name(self) -> str:
        return self.expect("NAME")[1]

    def term(self, env: list[str]) -> Term:
        kind = self.peek()[0]
        if kind == "LAMBDA":
            self.next()
            names = [self.name()]
            while self.peek()[0] == "NAME":
                names.append(self.name())
            self.expect("DOT")
            body = self.term(env + names)
            for name in reversed(names):
                body = Abs(body, name)
            return body
        if kind == "S0":
            if self.calculus == "lam":
                raise self.fail("S0 is not part of the lam calculus")
            self.next()
            name = self.name()
            self.expect("DOT")
            body = self.term(env + [name])
            if self.calculus == "lamd":
                return Shift0(body, name)
            return Thaw(Abs(body, name))
        if kind == "let":
            if self.calculus != "ld":
                raise self.fail("let is only available in the ld calculus")
            self.next()
            name = self.name()
            self.expect("EQUALS")
            bound = self.term(env)
            self.expect("in")
            body = self.term(env + [name])
            # let x = M in N  ==>  S0 k. (\x. k $ N) $ M   with k fresh,
            # fully expanded: ^(\k. $(M) (\x. $(N) k)).
            inner = App(
                Freeze(shift(bound, 1)),
                Abs(App(Freeze(shift(body, 1, cutoff=1)), Bound(1)), name),
            )
            return Thaw(Abs(inner, "k"))
        return self.dollar(env)

    def dollar(self, env: list[str]) -> Term:
        left = self.app(env)
        if self.peek()[0] == "DOLLAR":
            if self.calculus == "lam":
                raise self.fail("binary $ is not part of the lam calculus")
            self.next()
            right = self.dollar(env)
            if self.calculus == "lamd":
                return Dollar(left, right)
            return App(Freeze(right), left)  # M $ N is $(N) M in ld
        return left

    def app(self, env: list[str]) -> Term:
        t = self.atom(env)
        while self.peek()[0] in _ATOM_STARTS:
            t = App(t, self.atom(env))
        return t

    def atom(self, env: list[str]) -> Term:
        kind, text, pos = self.next()
        if kind == "NAME":
            if text in env:
                return Bound(env[::-1].index(text))
            return Var(text)
        if kind == "LPAREN":
            t = self.term(env)
            self.expect("RPAREN")
            return t
        if kind == "FREEZE":
            if self.calculus == "lam":
                raise ParseError("$(...) is not part of the lam calculus", pos)
            t = self.term(env)
            self.expect("RPAREN")
            if self.calculus == "lamd":
                # $(e) is sugar for \x. x $ e in lamd
                return Abs(Dollar(Bound(0), shift(t, 1)), "x")
            return Freeze(t)
        if kind == "THAW":
            if self.calculus == "lam":
                raise ParseError("^(...) is not part of the lam calculus", pos)
            t = self.term(env)
            self.expect("RPAREN")
            if self.calculus == "lamd":
                # ^(e) is sugar for (\x. S0 k. x k) e in lamd
                return App(_THAW_MACRO, t)
            return Thaw(t)
        raise ParseError(f"expected a term, found {text or 'end of input'!r}", pos)


def parse(text: str, calculus: str = "ld") -> Term:
    """Parse text in the shared grammar, filtered to the given calculus."""
    if calculus not in ("lam", "ld", "lamd"):
        raise ValueError(f"unknown calculus {calculus!r}")
    p = _Parser(text, calculus)
    t = p.term([])
    kind, trailing, pos = p.peek()
    if kind != "EOF":
        raise ParseError(f"trailing input {trailing!r}", pos)
    return t


def infer_calculus(text: str) -> str:
    """Guess the calculus from the constructors present in the text.

    Unary operators and ``let`` imply ld; otherwise shift0 or binary dollar
    pick lamd; otherwise lam.  An explicit flag always wins over this guess.
    """
    kinds = {k for k, _, _ in _tokenize(text)}
    if "FREEZE" in kinds or "THAW" in kinds or "let" in kinds:
        return "ld"
    if "S0" in kinds or "DOLLAR" in kinds:
        return "lamd"
    return "lam"


# ---------------------------------------------------------------------------
# pretty printer

_BINDER, _DOLLAR, _APP, _ATOM = 0, 1, 2, 3


def pretty(t: Term, fold: bool = True, unicode: bool = False) -> str:
    """Minimal-parentheses rendering; ``parse(pretty(t))`` is alpha-equal to t.

    With fold on, ld terms matching the shift0 / binary dollar / let sugar
    patterns print in their sugared form.  Binder display names come from the
    stored hints, freshened against anything visible in scope.
    """
    lam_tok = "λ" if unicode else "\\"
    thaw_tok = "↑(" if unicode else "^("

    def fresh_name(stem: str, avoid: set[str] | frozenset[str]) -> str:
        return _fresh_display(stem, set(avoid) | KEYWORDS)

    def render(t: Term, need: int, env: list[str], avoid: set[str]) -> str:
        s, level = go(t, env, avoid)
        return f"({s})" if level < need else s

    def go(t: Term, env: list[str], avoid: set[str]) -> tuple[str, int]:
        match t:
            case Var(n):
                return n, _ATOM
            case Bound(k):
                if k < len(env):
                    return env[-1 - k], _ATOM
                return f"?{k - len(env)}", _ATOM  # dangling index, debug only
            case Abs():
                names: list[str] = []
                cur: Term = t
                env2, avoid2 = list(env), set(avoid)
                while type(cur) is Abs:
                    x = fresh_name(cur.hint or "x", avoid2 | set(free_names(cur.body)))
                    names.append(x)
                    env2.append(x)
                    avoid2.add(x)
                    cur = cur.body
                return f"{lam_tok}{' '.join(names)}. {render(cur, _BINDER, env2, avoid2)}", _BINDER
            case Shift0(b):
                x = fresh_name(t.hint or "x", avoid | set(free_names(b)))
                return f"S0 {x}. {render(b, _BINDER, env + [x], avoid | {x})}", _BINDER
            case Thaw(b):
                if fold:
                    folded = fold_thaw(t, env, avoid)
                    if folded is not None:
                        return folded
                return thaw_tok + render(b, _BINDER, env, avoid) + ")", _ATOM
            case Freeze(b):
                return "$(" + render(b, _BINDER, env, avoid) + ")", _ATOM
            case Dollar(l, r):
                return f"{render(l, _APP, env, avoid)} $ {render(r, _DOLLAR, env, avoid)}", _DOLLAR
            case App(f, a):
                if fold and type(f) is Freeze:
                    # $(N) M prints as M $ N
                    ls = render(a, _APP, env, avoid)
                    rs = render(f.body, _DOLLAR, env, avoid)
                    return f"{ls} $ {rs}", _DOLLAR
                return f"{render(f, _APP, env, avoid)} {render(a, _ATOM, env, avoid)}", _APP
        raise TypeError(f"not a term: {t!r}")

    def fold_thaw(t: Thaw, env: list[str], avoid: set[str]) -> tuple[str, int] | None:
        if type(t.body) is not Abs:
            return None
        ab = t.body
        match ab.body:
            # let pattern ^(\k. $(M) (\x. $(N) k)), k used exactly that once
            case App(Freeze(bound), Abs(App(Freeze(body2), Bound(1)))) if (
                not uses_bound(bound, 0) and not uses_bound(body2, 1)
            ):
                inner_abs = ab.body.arg
                m = shift(bound, -1)
                n = shift(body2, -1, cutoff=1)
                x = fresh_name(inner_abs.hint or "x", avoid | set(free_names(n)))
                ms = render(m, _BINDER, env, avoid)
                ns = render(n, _BINDER, env + [x], avoid | {x})
                return f"let {x} = {ms} in {ns}", _BINDER
        x = fresh_name(ab.hint or "x", avoid | set(free_names(ab.body)))
        return f"S0 {x}. {render(ab.body, _BINDER, env + [x], avoid | {x})}", _BINDER

    return render(t, _BINDER, [], set(free_names(t)))
