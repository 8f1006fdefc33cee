"""Term representations shared by the three calculi.

Bound variables are de Bruijn indices, free variables are names, and every
binder node carries a display hint that equality and hashing ignore.  As a
consequence ``==`` on terms is exactly alpha-equivalence, which is what all
the equational machinery in this package asserts.

Three constructor sets share one node language:

* ``lam``  -- plain lambda calculus: ``Var``/``Bound``, ``Abs``, ``App``.
* ``ld``   -- the call-by-value calculus with unary freeze/thaw operators:
  adds ``Freeze`` (written ``$(M)``) and ``Thaw`` (written ``^(M)``).
* ``lamd`` -- the calculus with a binding shift0 and a binary delimiter:
  adds ``Shift0`` (``S0 x. e``) and ``Dollar`` (``e $ e'``).

Terms are immutable after construction; hashes are computed eagerly so that
search visited-sets stay cheap.
"""

from __future__ import annotations

from typing import Callable, Iterator

Path = tuple[int, ...]


class Term:
    """Base class for term nodes.  Do not mutate instances."""

    __slots__ = ("_hash",)

    def __hash__(self) -> int:
        return self._hash

    def __ne__(self, other: object) -> bool:
        return not self.__eq__(other)


class Var(Term):
    """Free variable occurrence, identified by name."""

    __slots__ = ("name",)
    __match_args__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self._hash = hash((1, name))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Var and o.name == self.name)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


class Bound(Term):
    """Bound variable occurrence; the index counts binders outward from 0."""

    __slots__ = ("index",)
    __match_args__ = ("index",)

    def __init__(self, index: int):
        self.index = index
        self._hash = hash((2, index))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Bound and o.index == self.index)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Bound({self.index})"


class Abs(Term):
    """Abstraction.  The hint is only a display name for the binder."""

    __slots__ = ("body", "hint")
    __match_args__ = ("body",)

    def __init__(self, body: Term, hint: str = "x"):
        self.body = body
        self.hint = hint
        self._hash = hash((3, body._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Abs and o.body == self.body)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Abs({self.body!r}, {self.hint!r})"


class App(Term):
    """Application of a function term to an argument term."""

    __slots__ = ("fn", "arg")
    __match_args__ = ("fn", "arg")

    def __init__(self, fn: Term, arg: Term):
        self.fn = fn
        self.arg = arg
        self._hash = hash((4, fn._hash, arg._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (
            type(o) is App and o.fn == self.fn and o.arg == self.arg
        )

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"App({self.fn!r}, {self.arg!r})"


class Freeze(Term):
    """Unary ``$(M)``: reifies a computation as a value (``ld`` only)."""

    __slots__ = ("body",)
    __match_args__ = ("body",)

    def __init__(self, body: Term):
        self.body = body
        self._hash = hash((5, body._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Freeze and o.body == self.body)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Freeze({self.body!r})"


class Thaw(Term):
    """Unary ``^(M)``: reflects a reified computation back (``ld`` only)."""

    __slots__ = ("body",)
    __match_args__ = ("body",)

    def __init__(self, body: Term):
        self.body = body
        self._hash = hash((6, body._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Thaw and o.body == self.body)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Thaw({self.body!r})"


class Shift0(Term):
    """Binding control operator ``S0 x. e`` (``lamd`` only)."""

    __slots__ = ("body", "hint")
    __match_args__ = ("body",)

    def __init__(self, body: Term, hint: str = "x"):
        self.body = body
        self.hint = hint
        self._hash = hash((7, body._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (type(o) is Shift0 and o.body == self.body)

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Shift0({self.body!r}, {self.hint!r})"


class Dollar(Term):
    """Binary delimiter ``e $ e'`` (``lamd`` only); right operand is delimited."""

    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self._hash = hash((8, left._hash, right._hash))

    def __eq__(self, o: object) -> bool:
        return self is o or (
            type(o) is Dollar and o.left == self.left and o.right == self.right
        )

    __hash__ = Term.__hash__

    def __repr__(self) -> str:
        return f"Dollar({self.left!r}, {self.right!r})"


CALCULI = ("lam", "ld", "lamd")

_NODE_CALCULI = {
    Var: CALCULI,
    Bound: CALCULI,
    Abs: CALCULI,
    App: CALCULI,
    Freeze: ("ld",),
    Thaw: ("ld",),
    Shift0: ("lamd",),
    Dollar: ("lamd",),
}


def in_calculus(t: Term, calculus: str) -> bool:
    """True iff every constructor of t belongs to the given calculus."""
    if calculus not in _NODE_CALCULI[type(t)]:
        return False
    return all(in_calculus(c, calculus) for _, c in children(t))


# ---------------------------------------------------------------------------
# structure helpers


def children(t: Term) -> list[tuple[int, Term]]:
    """Indexed children; index 0 is body/function/left, 1 is argument/right."""
    match t:
        case Abs(b) | Freeze(b) | Thaw(b) | Shift0(b):
            return [(0, b)]
        case App(f, a):
            return [(0, f), (1, a)]
        case Dollar(l, r):
            return [(0, l), (1, r)]
        case _:
            return []


def binds(t: Term) -> bool:
    return type(t) in (Abs, Shift0)


def rebuild(t: Term, new_children: list[Term]) -> Term:
    match t:
        case Abs():
            return Abs(new_children[0], t.hint)
        case Shift0():
            return Shift0(new_children[0], t.hint)
        case App():
            return App(new_children[0], new_children[1])
        case Dollar():
            return Dollar(new_children[0], new_children[1])
        case Freeze():
            return Freeze(new_children[0])
        case Thaw():
            return Thaw(new_children[0])
        case _:
            return t


def subterm_at(t: Term, path: Path) -> Term:
    for i in path:
        t = children(t)[i][1]
    return t


def plug_path(t: Term, path: Path, new: Term) -> Term:
    """Replace the subterm at path.  Indices in ``new`` are taken verbatim."""
    if not path:
        return new
    kids = [c for _, c in children(t)]
    kids[path[0]] = plug_path(kids[path[0]], path[1:], new)
    return rebuild(t, kids)


def positions(t: Term) -> Iterator[Path]:
    """All positions of t in depth-first, left-to-right (preorder) order."""

    def walk(t: Term, path: Path) -> Iterator[Path]:
        yield path
        for i, c in children(t):
            yield from walk(c, path + (i,))

    return walk(t, ())


def size(t: Term) -> int:
    """Node count of the parse tree; the induction measure for everything."""
    return 1 + sum(size(c) for _, c in children(t))


# ---------------------------------------------------------------------------
# indices and substitution


def shift(t: Term, d: int, cutoff: int = 0) -> Term:
    """Add d to every dangling index >= cutoff.

    Negative d asserts the vacated band is unused (standard unshift).
    """
    match t:
        case Bound(k):
            if k < cutoff:
                return t
            if d < 0 and k + d < cutoff:
                raise ValueError(f"unshift would capture index {k}")
            return Bound(k + d)
        case Var():
            return t
        case _:
            off = 1 if binds(t) else 0
            kids = [shift(c, d, cutoff + off) for _, c in children(t)]
            return rebuild(t, kids)


def open_term(t: Term, v: Term, depth: int = 0) -> Term:
    """Contract one binder: replace index ``depth`` by v, shifting as needed."""
    match t:
        case Bound(k):
            if k == depth:
                return shift(v, depth)
            return Bound(k - 1) if k > depth else t
        case Var():
            return t
        case _:
            off = 1 if binds(t) else 0
            kids = [open_term(c, v, depth + off) for _, c in children(t)]
            return rebuild(t, kids)


def close_term(t: Term, name: str, depth: int = 0) -> Term:
    """Turn free occurrences of name into references to a new outer binder.

    The argument must be locally closed (no dangling indices).
    """
    match t:
        case Var(n):
            return Bound(depth) if n == name else t
        case Bound():
            return t
        case _:
            off = 1 if binds(t) else 0
            kids = [close_term(c, name, depth + off) for _, c in children(t)]
            return rebuild(t, kids)


def subst(m: Term, v: Term, x: str) -> Term:
    """Capture-avoiding substitution of v for the free variable x in m.

    Binders never capture v's free variables: they bind indices, not names.
    """

    def go(t: Term, depth: int) -> Term:
        match t:
            case Var(n):
                return shift(v, depth) if n == x else t
            case Bound():
                return t
            case _:
                off = 1 if binds(t) else 0
                kids = [go(c, depth + off) for _, c in children(t)]
                return rebuild(t, kids)

    return go(m, 0)


def free_names(t: Term) -> frozenset[str]:
    match t:
        case Var(n):
            return frozenset((n,))
        case Bound():
            return frozenset()
        case _:
            out: frozenset[str] = frozenset()
            for _, c in children(t):
                out |= free_names(c)
            return out


def is_fresh(x: str, m: Term) -> bool:
    """True iff x does not occur free in m."""
    return x not in free_names(m)


def uses_bound(t: Term, index: int = 0) -> bool:
    """Does t reference the binder that sits ``index`` levels above it?"""
    match t:
        case Bound(k):
            return k == index
        case Var():
            return False
        case _:
            off = 1 if binds(t) else 0
            return any(uses_bound(c, index + off) for _, c in children(t))


def count_bound(t: Term, index: int = 0) -> int:
    match t:
        case Bound(k):
            return 1 if k == index else 0
        case Var():
            return 0
        case _:
            off = 1 if binds(t) else 0
            return sum(count_bound(c, index + off) for _, c in children(t))


def locally_closed(t: Term, depth: int = 0) -> bool:
    match t:
        case Bound(k):
            return k < depth
        case Var():
            return True
        case _:
            off = 1 if binds(t) else 0
            return all(locally_closed(c, depth + off) for _, c in children(t))


# ---------------------------------------------------------------------------
# value stratification


def is_value(t: Term, calculus: str) -> bool:
    """Value test per calculus grammar.

    ``ld`` values are variables, abstractions and freezes; applications and
    thaws are the nonvalues.  ``lamd`` and ``lam`` values are variables and
    abstractions.
    """
    match t:
        case Var() | Bound() | Abs():
            return True
        case Freeze():
            return calculus == "ld"
        case _:
            return False


def classify(t: Term) -> str:
    """'value' or 'nonvalue' per the ld grammar (total and exclusive)."""
    return "value" if is_value(t, "ld") else "nonvalue"


# ---------------------------------------------------------------------------
# names


def fresh_name(stem: str, avoid: frozenset[str] | set[str]) -> str:
    """Deterministic fresh name: the lowest unused suffix over the stem."""
    if stem not in avoid:
        return stem
    i = 1
    while f"{stem}{i}" in avoid:
        i += 1
    return f"{stem}{i}"


def canonicalize(t: Term) -> Term:
    """Normalize binder hints to depth-indexed names.

    Alpha-equivalent terms have identical canonical forms, including hints,
    and canonicalization is idempotent.
    """

    def go(t: Term, depth: int) -> Term:
        match t:
            case Abs(b):
                return Abs(go(b, depth + 1), f"x{depth}")
            case Shift0(b):
                return Shift0(go(b, depth + 1), f"x{depth}")
            case _:
                off = 1 if binds(t) else 0
                kids = [go(c, depth + off) for _, c in children(t)]
                return rebuild(t, kids)

    return go(t, 0)


def alpha_eq(a: Term, b: Term) -> bool:
    """Syntactic equality modulo renaming of bound variables."""
    return a == b


# ---------------------------------------------------------------------------
# smart constructors (arguments must be locally closed)


def lam(name: str, body: Term) -> Abs:
    return Abs(close_term(body, name), name)


def lams(names: list[str] | tuple[str, ...], body: Term) -> Term:
    for name in reversed(names):
        body = lam(name, body)
    return body


def s0(name: str, body: Term) -> Shift0:
    """lamd binding shift0."""
    return Shift0(close_term(body, name), name)


def shift0_ld(name: str, body: Term) -> Thaw:
    """ld sugar: ``S0 x. M`` stands for ``^(\\x. M)``."""
    return Thaw(lam(name, body))


def dollar_ld(m: Term, n: Term) -> App:
    """ld sugar: ``M $ N`` stands for ``$(N) M``."""
    return App(Freeze(n), m)


def let_ld(name: str, bound: Term, body: Term) -> Thaw:
    """ld sugar: ``let x = M in N`` stands for ``S0 k. (\\x. k $ N) $ M``."""
    k = fresh_name("k", free_names(bound) | free_names(body) | {name})
    return shift0_ld(k, dollar_ld(lam(name, dollar_ld(Var(k), body)), bound))


def thaw_lamd(e: Term) -> Term:
    """lamd macro for the unary thaw: ``^(e)`` is ``(\\x. S0 k. x k) e``."""
    return App(lam("x", s0("k", App(Var("x"), Var("k")))), e)


def freeze_lamd(e: Term) -> Term:
    """lamd macro for the unary freeze: ``$(e)`` is ``\\x. x $ e``."""
    x = fresh_name("x", free_names(e))
    return lam(x, Dollar(Var(x), e))
