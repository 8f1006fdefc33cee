"""Rule-table tests, including an independent nominal matcher.

The oracle below re-implements the seven ld rules over a *named* term
representation (binders opened with explicit fresh names, nominal
capture-avoiding substitution).  It shares no code with the de Bruijn rule
engine, so agreement between the two catches index-arithmetic mistakes.
"""

import itertools

import pytest

from conftest import lam as plam, ld as pld, lamd as plamd
from ldot.props import GenConfig, gen_term
from ldot.rules import (
    AppL,
    AppR,
    ThawJ,
    apply_redex,
    bind_decompose,
    contract,
    contract_all,
    plug_j,
    redexes,
    step,
)
from ldot.terms import (
    Abs,
    App,
    Bound,
    Freeze,
    Thaw,
    Var,
    alpha_eq,
    is_value,
    subst,
)


def test_contract_dollar_v():
    out = contract("dollar_v", pld(r"$(\a. a)"))
    assert alpha_eq(out, pld(r"\x. x (\a. a)"))


def test_contract_dollar_v_rejects_nonvalue_body():
    assert contract("dollar_v", pld("$(a b)")) is None


def test_contract_bind_on_value_application_is_empty():
    assert contract("bind", pld(r"(\a. a) b")) is None


def test_contract_bind_on_thawed_nonvalue():
    out = contract("bind", pld("^(a b)"))
    assert alpha_eq(out, pld("let x = a b in ^(x)"))


def test_contract_pure_requires_freshness():
    assert contract("pure", pld(r"^(\x. x x)")) is None
    assert alpha_eq(contract("pure", pld(r"^(\x. x v)")), Var("v"))


def test_contract_eta_v_requires_value_and_freshness():
    assert contract("eta_v", pld(r"\x. $(q) x")) == Freeze(Var("q"))
    assert contract("eta_v", pld(r"\x. (a b) x")) is None  # function not a value
    assert contract("eta_v", pld(r"\x. x x")) is None  # x not fresh


def test_contract_dollar_slash_shift_example():
    # the delimiter captures the surrounding applications into the body
    t = plamd("I $ I (S0 f. f (f z))")
    t = subst(t, plamd(r"\x. x"), "I")
    out = contract("dollar_slash_shift", t)
    expected = plamd(r"(\x. (\q. q) $ (\q. q) x) ((\x. (\q. q) $ (\q. q) x) z)")
    assert alpha_eq(out, expected)


def test_contract_beta_dollar_axiom():
    out = contract_all("ax_beta_dollar", plamd(r"(\v. v) $ (S0 x. x a)"))
    assert len(out) == 1 and alpha_eq(out[0], plamd(r"(\v. v) a"))


def test_redexes_variable_empty():
    assert redexes(Var("x"), "ld") == []


def test_redexes_of_nested_thaw_freeze():
    # every matching rule occurrence is enumerated, cross-checked below by
    # the nominal oracle; this instance has four
    t = pld(r"^($(\x. (\y. y) x))")
    found = {(r.rule, r.path) for r in redexes(t, "ld")}
    assert found == {
        ("shift_dollar", ()),
        ("dollar_v", (0,)),
        ("eta_v", (0, 0)),
        ("beta_v", (0, 0, 0)),
    }


def test_single_dollar_slash_shift_occurrence():
    t = plamd("I $ I (S0 f. f (f z))")
    t = subst(t, plamd(r"\x. x"), "I")
    occ = [r for r in redexes(t, "lamd") if r.rule == "dollar_slash_shift"]
    assert len(occ) == 1
    assert len(redexes(t, "lamd")) == 1


def test_step_beta():
    assert step(plam(r"(\x. x) y"), "lam") == [Var("y")]


def test_step_dollar_shift():
    assert step(pld(r"$(^(\a. a))"), "ld") == [plam(r"\a. a")]


def test_step_first_of_evaluation_example():
    t = subst(plamd("I $ I (S0 f. f (f z))"), plamd(r"\x. x"), "I")
    out = step(t, "lamd")
    assert len(out) == 1
    assert alpha_eq(out[0], subst(plamd(r"(\x. I $ I x) ((\x. I $ I x) z)"), plamd(r"\x. x"), "I"))


def test_bind_decompose_shapes():
    p = pld("a b")  # nonvalue
    v = pld(r"\q. q")
    assert bind_decompose(Thaw(p)) == (ThawJ(), p)
    assert bind_decompose(App(v, p)) == (AppR(v), p)
    assert bind_decompose(App(p, p)) == (AppL(p), p)
    assert bind_decompose(App(v, v)) is None
    assert bind_decompose(Thaw(v)) is None


def test_redex_occurrences_replay():
    cfg = GenConfig(calculus="ld", max_size=10, seed=21)
    for i in range(150):
        t = gen_term(cfg, i)
        reducts = step(t, "ld")
        for r in redexes(t, "ld"):
            assert apply_redex(t, r) in reducts


def test_values_reduce_to_values():
    cfg = GenConfig(calculus="ld", max_size=10, seed=22)
    checked = 0
    for i in range(400):
        t = gen_term(cfg, i)
        if not is_value(t, "ld"):
            continue
        checked += 1
        for n in step(t, "ld"):
            assert is_value(n, "ld"), f"{t} stepped out of the values"
    assert checked > 50


# ---------------------------------------------------------------------------
# nominal oracle


class _Names:
    def __init__(self):
        self.n = 0

    def fresh(self):
        self.n += 1
        return f"n{self.n}"


def to_named(t, env=(), names=None):
    names = names or _Names()
    match t:
        case Var(x):
            return ("var", x)
        case Bound(k):
            return ("var", env[-1 - k])
        case Abs(b):
            x = names.fresh()
            return ("abs", x, to_named(b, env + (x,), names))
        case App(f, a):
            return ("app", to_named(f, env, names), to_named(a, env, names))
        case Freeze(b):
            return ("freeze", to_named(b, env, names))
        case Thaw(b):
            return ("thaw", to_named(b, env, names))
    raise AssertionError(t)


def from_named(nt):
    from ldot.terms import lam as mklam

    match nt:
        case ("var", x):
            return Var(x)
        case ("abs", x, b):
            return mklam(x, from_named(b))
        case ("app", f, a):
            return App(from_named(f), from_named(a))
        case ("freeze", b):
            return Freeze(from_named(b))
        case ("thaw", b):
            return Thaw(from_named(b))
    raise AssertionError(nt)


def nfree(nt):
    match nt:
        case ("var", x):
            return {x}
        case ("abs", x, b):
            return nfree(b) - {x}
        case ("app", f, a):
            return nfree(f) | nfree(a)
        case (_, b):
            return nfree(b)


def nsubst(nt, v, x, names):
    match nt:
        case ("var", y):
            return v if y == x else nt
        case ("abs", y, b):
            if y == x:
                return nt
            if y in nfree(v):
                z = names.fresh()
                b = nsubst(b, ("var", z), y, names)
                return ("abs", z, nsubst(b, v, x, names))
            return ("abs", y, nsubst(b, v, x, names))
        case ("app", f, a):
            return ("app", nsubst(f, v, x, names), nsubst(a, v, x, names))
        case ("freeze", b):
            return ("freeze", nsubst(b, v, x, names))
        case ("thaw", b):
            return ("thaw", nsubst(b, v, x, names))


def nvalue(nt):
    return nt[0] in ("var", "abs", "freeze")


def nominal_contracta(rule, nt, names):
    """The seven ld rules, matched nominally."""
    match rule, nt:
        case "beta_v", ("app", ("abs", x, b), v) if nvalue(v):
            return [nsubst(b, v, x, names)]
        case "eta_v", ("abs", x, ("app", w, ("var", y))) if (
            y == x and nvalue(w) and x not in nfree(w)
        ):
            return [w]
        case "dollar_v", ("freeze", v) if nvalue(v):
            z = names.fresh()
            return [("abs", z, ("app", ("var", z), v))]
        case "dollar_shift", ("freeze", ("thaw", v)) if nvalue(v):
            return [v]
        case "shift_dollar", ("thaw", ("freeze", m)):
            return [m]
        case "pure", ("thaw", ("abs", x, ("app", ("var", y), w))) if (
            y == x and nvalue(w) and x not in nfree(w)
        ):
            return [w]
        case "bind", ("app", f, a) if not nvalue(f):
            return [nominal_let(f, ("app", ("var", "HOLE"), a), names)]
        case "bind", ("app", f, a) if nvalue(f) and not nvalue(a):
            return [nominal_let(a, ("app", f, ("var", "HOLE")), names)]
        case "bind", ("thaw", b) if not nvalue(b):
            return [nominal_let(b, ("thaw", ("var", "HOLE")), names)]
    return []


def nominal_let(p, jhole, names):
    # let x = p in J[x]  ==  thaw(abs k. app(freeze p, abs x. app(freeze J[x], k)))
    x, k = names.fresh(), names.fresh()
    jx = nsubst(jhole, ("var", x), "HOLE", names)
    return ("thaw", ("abs", k, ("app", ("freeze", p), ("abs", x, ("app", ("freeze", jx), ("var", k))))))


def nominal_plug(nt, path, c):
    if not path:
        return c
    match nt:
        case ("abs", x, b):
            return ("abs", x, nominal_plug(b, path[1:], c))
        case ("freeze", b):
            return ("freeze", nominal_plug(b, path[1:], c))
        case ("thaw", b):
            return ("thaw", nominal_plug(b, path[1:], c))
        case ("app", f, a):
            if path[0] == 0:
                return ("app", nominal_plug(f, path[1:], c), a)
            return ("app", f, nominal_plug(a, path[1:], c))
    raise AssertionError(nt)


def nominal_redexes(t):
    """(path, rule, whole contracted term) triples, nominal route."""
    names = _Names()
    nt = to_named(t, (), names)
    out = []

    def walk(sub, path):
        for rule in ("beta_v", "eta_v", "dollar_v", "dollar_shift", "shift_dollar", "pure", "bind"):
            for c in nominal_contracta(rule, sub, names):
                out.append((path, rule, from_named(nominal_plug(nt, path, c))))
        match sub:
            case ("abs", _, b) | ("freeze", b) | ("thaw", b):
                walk(b, path + (0,))
            case ("app", f, a):
                walk(f, path + (0,))
                walk(a, path + (1,))

    walk(nt, ())
    return out


def enumerate_ld_terms(max_size, depth=0):
    """All ld terms of each size up to max_size over one free name."""
    if max_size == 0:
        return
    for s in range(1, max_size + 1):
        yield from _enum(s, depth)


def _enum(s, depth):
    if s == 1:
        yield Var("a")
        for k in range(depth):
            yield Bound(k)
        return
    for b in _enum(s - 1, depth + 1):
        yield Abs(b)
    for b in _enum(s - 1, depth):
        yield Freeze(b)
        yield Thaw(b)
    for i in range(1, s - 1):
        for f in _enum(i, depth):
            for a in _enum(s - 1 - i, depth):
                yield App(f, a)


def test_exhaustive_agreement_with_nominal_oracle():
    count = 0
    for t in enumerate_ld_terms(5):
        count += 1
        mine = [(r.path, r.rule, apply_redex(t, r)) for r in redexes(t, "ld")]
        theirs = nominal_redexes(t)
        assert len(mine) == len(theirs), t
        for (p1, r1, c1), (p2, r2, c2) in zip(
            sorted(mine, key=lambda x: (x[0], x[1])),
            sorted(theirs, key=lambda x: (x[0], x[1])),
        ):
            assert p1 == p2 and r1 == r2 and alpha_eq(c1, c2), (t, r1, c1, c2)
    assert count > 300


def test_exhaustive_bind_uniqueness():
    """At most one legal way to name a subcomputation, by brute decomposition."""
    for t in enumerate_ld_terms(5):
        candidates = []
        match t:
            case App(f, a):
                if not is_value(f, "ld"):
                    candidates.append((AppL(a), f))
                if is_value(f, "ld") and not is_value(a, "ld"):
                    candidates.append((AppR(f), a))
            case Thaw(b):
                if not is_value(b, "ld"):
                    candidates.append((ThawJ(), b))
        assert len(candidates) <= 1
        assert bind_decompose(t) == (candidates[0] if candidates else None)
        if candidates:
            j, p = candidates[0]
            assert plug_j(j, p) == t


def test_no_bound_index_escapes_rule_application():
    from ldot.terms import locally_closed

    cfg = GenConfig(calculus="ld", max_size=11, seed=30)
    for i in range(200):
        t = gen_term(cfg, i)
        for n in step(t, "ld"):
            assert locally_closed(n)
