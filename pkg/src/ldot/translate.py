"""The translation families between the calculi.

* ``cps_star`` / ``cps_dagger``: ld to lam, continuation-passing style.
  The dagger half handles values, the star half general terms.
* ``ds_hash`` / ``ds_natural``: lam back to ld, direct style.  Hash lands on
  general terms, natural on values; ``cps_star(ds_hash(M))`` is M exactly.
* ``iota`` / ``pi``: the macro embeddings between lamd and ld.
* ``cps_ld``: lamd to lam, the classic CPS semantics of shift0/dollar.

All translations are total on their calculus and pure.  Continuation
binders introduced on the way are drawn fresh against the free names in
scope, so no capture can occur.
"""

from __future__ import annotations

from .rules import bind_decompose, plug_j
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
    fresh_name,
    is_value,
    lam,
    open_term,
    s0,
    uses_bound,
)


def _opened(t: Term, stem: str = "x") -> tuple[str, Term]:
    # open a binder body with a fresh free name, keeping terms locally closed
    x = fresh_name(stem, free_names(t))
    return x, open_term(t, Var(x))


# ---------------------------------------------------------------------------
# ld -> lam (CPS)


def cps_star(m: Term) -> Term:
    """CPS translation on general ld terms.

    Values become ``\\k. k <dagger>``; a thawed value translates to the bare
    dagger; a value-value application to the daggered application; any other
    nonvalue splits uniquely at its nonvalue subcomputation P, giving
    ``\\k. P* (\\x. J[x]* k)``.
    """
    if is_value(m, "ld"):
        v = cps_dagger(m)
        k = fresh_name("k", free_names(v))
        return lam(k, App(Var(k), v))
    match m:
        case Thaw(v) if is_value(v, "ld"):
            return cps_dagger(v)
        case App(f, a) if is_value(f, "ld") and is_value(a, "ld"):
            return App(cps_dagger(f), cps_dagger(a))
    j, p = bind_decompose(m)  # total on the remaining nonvalues
    x = fresh_name("x", free_names(m))
    jx_star = cps_star(plug_j(j, Var(x)))
    p_star = cps_star(p)
    k = fresh_name("k", free_names(jx_star) | free_names(p_star) | {x})
    return lam(k, App(p_star, lam(x, App(jx_star, Var(k)))))


def cps_dagger(v: Term) -> Term:
    """CPS translation on ld values; frozen bodies go through the star half."""
    match v:
        case Var() | Bound():
            return v
        case Abs(b):
            x, body = _opened(b, v.hint or "x")
            return lam(x, cps_star(body))
        case Freeze(b):
            return cps_star(b)
    raise ValueError(f"not an ld value: {v!r}")


# ---------------------------------------------------------------------------
# lam -> ld (direct style)


def ds_hash(m: Term) -> Term:
    """Direct-style translation on general lam terms.

    The one special case: ``\\x. x N`` with x not free in N is the shape a
    value takes after CPS, so it maps back through the value half.
    """
    match m:
        case Var() | Bound():
            return Thaw(m)
        case Abs(App(Bound(0), n)) if not uses_bound(n, 0):
            from .terms import shift

            return ds_natural(shift(n, -1))
        case Abs(b):
            x, body = _opened(b, m.hint or "x")
            return Thaw(lam(x, ds_hash(body)))
        case App(f, a):
            return App(ds_natural(f), ds_natural(a))
    raise ValueError(f"not a lam term: {m!r}")


def ds_natural(m: Term) -> Term:
    """Direct-style translation into ld values; always returns a value."""
    match m:
        case Var() | Bound():
            return m
        case Abs(b):
            x, body = _opened(b, m.hint or "x")
            return lam(x, ds_hash(body))
        case App(f, a):
            return Freeze(App(ds_natural(f), ds_natural(a)))
    raise ValueError(f"not a lam term: {m!r}")


# ---------------------------------------------------------------------------
# lamd <-> ld embeddings


def iota(e: Term) -> Term:
    """Embed lamd into ld by expanding shift0 and dollar through the macros."""
    match e:
        case Var() | Bound():
            return e
        case Abs(b):
            x, body = _opened(b, e.hint or "x")
            return lam(x, iota(body))
        case App(f, a):
            return App(iota(f), iota(a))
        case Shift0(b):
            x, body = _opened(b, e.hint or "x")
            return Thaw(lam(x, iota(body)))
        case Dollar(l, r):
            return App(Freeze(iota(r)), iota(l))
    raise ValueError(f"not a lamd term: {e!r}")


def pi(m: Term) -> Term:
    """Project ld into lamd; the unary operators unfold to their macros."""
    match m:
        case Var() | Bound():
            return m
        case Abs(b):
            x, body = _opened(b, m.hint or "x")
            return lam(x, pi(body))
        case App(f, a):
            return App(pi(f), pi(a))
        case Freeze(b):
            inner = pi(b)
            x = fresh_name("x", free_names(inner))
            return lam(x, Dollar(Var(x), inner))
        case Thaw(b):
            return App(lam("x", s0("k", App(Var("x"), Var("k")))), pi(b))
    raise ValueError(f"not an ld term: {m!r}")


# ---------------------------------------------------------------------------
# lamd -> lam (CPS)


def cps_ld(e: Term) -> Term:
    """CPS semantics of lamd: values get a continuation wrapper, shift0 is
    plain abstraction, and the dollar feeds its left result the delimited
    continuation."""
    if is_value(e, "lamd"):
        v = cps_ld_value(e)
        k = fresh_name("k", free_names(v))
        return lam(k, App(Var(k), v))
    match e:
        case App(f, a):
            cf, ca = cps_ld(f), cps_ld(a)
            avoid = free_names(cf) | free_names(ca)
            k = fresh_name("k", avoid)
            x = fresh_name("x", avoid | {k})
            y = fresh_name("y", avoid | {k, x})
            return lam(
                k,
                App(cf, lam(x, App(ca, lam(y, App(App(Var(x), Var(y)), Var(k)))))),
            )
        case Shift0(b):
            x, body = _opened(b, e.hint or "x")
            return lam(x, cps_ld(body))
        case Dollar(l, r):
            cl, cr = cps_ld(l), cps_ld(r)
            avoid = free_names(cl) | free_names(cr)
            k = fresh_name("k", avoid)
            x = fresh_name("x", avoid | {k})
            return lam(k, App(cl, lam(x, App(App(cr, Var(x)), Var(k)))))
    raise ValueError(f"not a lamd term: {e!r}")


def cps_ld_value(v: Term) -> Term:
    match v:
        case Var() | Bound():
            return v
        case Abs(b):
            x, body = _opened(b, v.hint or "x")
            return lam(x, cps_ld(body))
    raise ValueError(f"not a lamd value: {v!r}")


# ---------------------------------------------------------------------------
# dispatch used by the command line

TRANSLATIONS = {
    "star": ("ld", cps_star),
    "dagger": ("ld", cps_dagger),
    "hash": ("lam", ds_hash),
    "natural": ("lam", ds_natural),
    "iota": ("lamd", iota),
    "pi": ("ld", pi),
    "cps-ld": ("lamd", cps_ld),
}
