"""Rule tables, contraction and redex enumeration for the three calculi.

Reduction is the full compatible closure: a redex may sit at any position,
including under binders.  ``redexes`` therefore walks every position in
depth-first preorder and tries every rule of the calculus; that ordering is
what makes the leftmost-outermost strategy and recorded traces
deterministic.

Rule tags (these strings appear verbatim in JSON traces):

* ld:    beta_v, eta_v, dollar_v, dollar_shift, shift_dollar, pure, bind
* lam:   beta, eta
* lamd:  beta_v, dollar_v, dollar_slash_shift
* lamd axioms (bidirectional, used only by the equality search):
  ax_beta_v, ax_eta_v, ax_dollar_v, ax_dollar_e, ax_beta_dollar,
  ax_eta_dollar
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (
    Abs,
    App,
    Bound,
    Dollar,
    Freeze,
    Path,
    Shift0,
    Term,
    Thaw,
    Var,
    children,
    count_bound,
    is_value,
    open_term,
    plug_path,
    shift,
    subst,
    subterm_at,
    uses_bound,
)

BETA_V = "beta_v"
ETA_V = "eta_v"
DOLLAR_V = "dollar_v"
DOLLAR_SHIFT = "dollar_shift"
SHIFT_DOLLAR = "shift_dollar"
PURE = "pure"
BIND = "bind"
BETA = "beta"
ETA = "eta"
DOLLAR_SLASH_SHIFT = "dollar_slash_shift"

LD_RULES = (BETA_V, ETA_V, DOLLAR_V, DOLLAR_SHIFT, SHIFT_DOLLAR, PURE, BIND)
LAM_RULES = (BETA, ETA)
LAMD_RULES = (BETA_V, DOLLAR_V, DOLLAR_SLASH_SHIFT)
LAMD_AXIOMS = (
    "ax_beta_v",
    "ax_eta_v",
    "ax_dollar_v",
    "ax_dollar_e",
    "ax_beta_dollar",
    "ax_eta_dollar",
)

RULES = {"ld": LD_RULES, "lam": LAM_RULES, "lamd": LAMD_RULES}


@dataclass(frozen=True)
class Redex:
    """One rule occurrence: a position, the rule tag, and the contractum."""

    path: Path
    rule: str
    contractum: Term


# ---------------------------------------------------------------------------
# bindable contexts


@dataclass(frozen=True)
class AppL:
    """Frame ``[] M``."""

    arg: Term


@dataclass(frozen=True)
class AppR:
    """Frame ``V []``; the function must be a value."""

    fn: Term


@dataclass(frozen=True)
class ThawJ:
    """Frame ``^([])``."""


JFrame = AppL | AppR | ThawJ


def plug_j(j: JFrame, t: Term) -> Term:
    match j:
        case AppL(arg):
            return App(t, arg)
        case AppR(fn):
            return App(fn, t)
        case ThawJ():
            return Thaw(t)


def shift_j(j: JFrame, d: int) -> JFrame:
    match j:
        case AppL(arg):
            return AppL(shift(arg, d))
        case AppR(fn):
            return AppR(shift(fn, d))
        case ThawJ():
            return j


def bind_decompose(t: Term) -> tuple[JFrame, Term] | None:
    """The unique legal decomposition t = J[P] with P a nonvalue, if any.

    An application with a nonvalue function splits at the function; with a
    value function and nonvalue argument it splits at the argument; a thaw
    of a nonvalue splits at the body.  Everything else has no decomposition.
    """
    match t:
        case App(f, a):
            if not is_value(f, "ld"):
                return AppL(a), f
            if not is_value(a, "ld"):
                return AppR(f), a
            return None
        case Thaw(b):
            if not is_value(b, "ld"):
                return ThawJ(), b
            return None
        case _:
            return None


def let_expand(j: JFrame, m: Term) -> Term:
    """``let x = m in J[x]`` fully expanded: ``^(\\k. $(m) (\\x. $(J[x]) k))``.

    Both binders are fresh by construction (they are new indices).
    """
    jx = plug_j(shift_j(j, 2), Bound(0))
    return Thaw(
        Abs(App(Freeze(shift(m, 1)), Abs(App(Freeze(jx), Bound(1)), "x")), "k")
    )


# ---------------------------------------------------------------------------
# pure contexts of lamd


def pure_positions(t: Term) -> list[Path]:
    """Positions p with t = E[t|p] for a pure context E, preorder.

    The hole can sit at the root, in the function part of an application, in
    the argument part when the function is a value, or left of a dollar.
    Holes never cross binders.
    """
    out: list[Path] = [()]
    match t:
        case App(f, a):
            out += [(0,) + p for p in pure_positions(f)]
            if is_value(f, "lamd"):
                out += [(1,) + p for p in pure_positions(a)]
        case Dollar(l, _):
            out += [(0,) + p for p in pure_positions(l)]
    return out


def _capture_context(v: Term, r: Term, p: Path) -> Term:
    # \y. v $ E[y]  where E is r with a hole at p; everything moves under \y.
    return Abs(Dollar(shift(v, 1), plug_path(shift(r, 1), p, Bound(0))), "y")


# ---------------------------------------------------------------------------
# contraction


def contract_all(rule: str, t: Term) -> list[Term]:
    """Every contractum the rule offers at the root of t (usually 0 or 1).

    Freshness side conditions are checked, never assumed; a failed side
    condition is a non-match.
    """
    match rule:
        case "beta_v":
            match t:
                case App(Abs(b), v) if is_value(v, "ld"):
                    return [open_term(b, v)]
        case "eta_v":
            match t:
                case Abs(App(w, Bound(0))) if is_value(w, "ld") and not uses_bound(w, 0):
                    return [shift(w, -1)]
        case "dollar_v":
            # one tag, two disjoint shapes: unary freeze of a value in ld,
            # value-dollar-value in lamd
            match t:
                case Freeze(v) if is_value(v, "ld"):
                    return [Abs(App(Bound(0), shift(v, 1)), "x")]
                case Dollar(v, w) if is_value(v, "lamd") and is_value(w, "lamd"):
                    return [App(v, w)]
        case "dollar_shift":
            match t:
                case Freeze(Thaw(v)) if is_value(v, "ld"):
                    return [v]
        case "shift_dollar":
            match t:
                case Thaw(Freeze(m)):
                    return [m]
        case "pure":
            match t:
                case Thaw(Abs(App(Bound(0), w))) if is_value(w, "ld") and not uses_bound(w, 0):
                    return [shift(w, -1)]
        case "bind":
            d = bind_decompose(t)
            if d is not None:
                j, p = d
                return [let_expand(j, p)]
        case "beta":
            match t:
                case App(Abs(b), n):
                    return [open_term(b, n)]
        case "eta":
            match t:
                case Abs(App(m, Bound(0))) if not uses_bound(m, 0):
                    return [shift(m, -1)]
        case "dollar_slash_shift":
            match t:
                case Dollar(v, r) if is_value(v, "lamd"):
                    out = []
                    for p in pure_positions(r):
                        sub = subterm_at(r, p)
                        if type(sub) is Shift0:
                            out.append(open_term(sub.body, _capture_context(v, r, p)))
                    return out
        case _:
            return _contract_axiom(rule, t)
    return []


def _contract_axiom(rule: str, t: Term) -> list[Term]:
    match rule:
        case "ax_beta_v":
            match t:
                case App(Abs(b), v) if is_value(v, "lamd"):
                    return [open_term(b, v)]
        case "ax_eta_v":
            match t:
                case Abs(App(v, Bound(0))) if is_value(v, "lamd") and not uses_bound(v, 0):
                    return [shift(v, -1)]
        case "ax_dollar_v":
            match t:
                case Dollar(v, w) if is_value(v, "lamd") and is_value(w, "lamd"):
                    return [App(v, w)]
        case "ax_dollar_e":
            match t:
                case Dollar(v, r) if is_value(v, "lamd"):
                    return [
                        Dollar(_capture_context(v, r, p), subterm_at(r, p))
                        for p in pure_positions(r)
                    ]
        case "ax_beta_dollar":
            match t:
                case Dollar(v, Shift0(e)) if is_value(v, "lamd"):
                    return [open_term(e, v)]
        case "ax_eta_dollar":
            match t:
                case Shift0(Dollar(Bound(0), e)) if not uses_bound(e, 0):
                    return [shift(e, -1)]
        case _:
            raise ValueError(f"unknown rule {rule!r}")
    return []


def contract(rule: str, t: Term) -> Term | None:
    """First contractum at the root, or None when the rule does not match."""
    out = contract_all(rule, t)
    return out[0] if out else None


# ---------------------------------------------------------------------------
# redex enumeration and the one-step relation


def redexes(t: Term, calculus: str) -> list[Redex]:
    """Every rule occurrence under the calculus, leftmost-outermost order."""
    rules = RULES[calculus]
    out: list[Redex] = []

    def walk(sub: Term, path: Path) -> None:
        for rule in rules:
            for c in contract_all(rule, sub):
                out.append(Redex(path, rule, c))
        for i, child in children(sub):
            walk(child, path + (i,))

    walk(t, ())
    return out


def apply_redex(t: Term, r: Redex) -> Term:
    return plug_path(t, r.path, r.contractum)


def step(t: Term, calculus: str) -> list[Term]:
    """Alpha-deduplicated one-step reducts, in first-occurrence order."""
    return list(dict.fromkeys(apply_redex(t, r) for r in redexes(t, calculus)))


# ---------------------------------------------------------------------------
# undirected axiom steps of lamd (equality search only)

# Backward beta_v and beta_dollar would have to invert substitution, which
# has unboundedly many preimages; the equality search leaves those inverses
# out and stays a semi-decision (it can time out, it never refutes).


def _axiom_expansions(t: Term) -> list[tuple[str, Term]]:
    out: list[tuple[str, Term]] = []
    if type(t) is App and is_value(t.fn, "lamd") and is_value(t.arg, "lamd"):
        out.append(("ax_dollar_v", Dollar(t.fn, t.arg)))
    if is_value(t, "lamd"):
        out.append(("ax_eta_v", Abs(App(shift(t, 1), Bound(0)), "x")))
    out.append(("ax_eta_dollar", Shift0(Dollar(Bound(0), shift(t, 1)), "x")))
    match t:
        case Dollar(Abs(Dollar(v1, b)), e) if (
            is_value(v1, "lamd") and not uses_bound(v1, 0) and count_bound(b, 0) == 1
        ):
            hole = "\x00hole"  # not a lexable name, cannot collide
            for p in pure_positions(b):
                if subterm_at(b, p) == Bound(0):
                    lowered = shift(plug_path(b, p, Var(hole)), -1)
                    out.append(("ax_dollar_e", Dollar(shift(v1, -1), subst(lowered, e, hole))))
    return out


def axiom_neighbors(t: Term) -> list[tuple[str, bool, Path, Term]]:
    """Single axiom steps from t, both directions, at every position.

    Entries are (tag, forward, path, result); forward means left-to-right
    application of the axiom as written in the rule table.
    """
    out: list[tuple[str, bool, Path, Term]] = []

    def walk(sub: Term, path: Path) -> None:
        for tag in LAMD_AXIOMS:
            for c in _contract_axiom(tag, sub):
                out.append((tag, True, path, plug_path(t, path, c)))
        for tag, expanded in _axiom_expansions(sub):
            out.append((tag, False, path, plug_path(t, path, expanded)))
        for i, child in children(sub):
            walk(child, path + (i,))

    walk(t, ())
    return out
