"""Random term generation and executable checkers for the claimed laws.

Every law the toolkit relies on has a checker here that samples it on
randomly generated terms.  Checkers report one outcome per trial: pass,
fuel exhaustion (inconclusive, the searches are fueled), or a
counterexample.  A counterexample from any of these suites would falsify
the corresponding law, so the accounting keeps refutations strictly apart
from exhaustions.

Trials are deterministic: trial i of a run derives its RNG seed from
(config seed, i), so reports are bit-identical across runs and machines.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .engine import DEFAULT_FUEL, Fuel, equal_axioms_ld, joinable, reaches
from .parser import pretty
from .rules import (
    AppL,
    AppR,
    JFrame,
    ThawJ,
    apply_redex,
    let_expand,
    plug_j,
    pure_positions,
    redexes,
    shift_j,
    step,
)
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
    alpha_eq,
    free_names,
    is_value,
    lam,
    plug_path,
    positions,
    s0,
    shift,
    size,
    subst,
    subterm_at,
)
from .translate import cps_dagger, cps_ld, cps_star, ds_hash, ds_natural, iota, pi

_CONSTRUCTORS = {
    "lam": ("var", "abs", "app"),
    "ld": ("var", "abs", "app", "freeze", "thaw"),
    "lamd": ("var", "abs", "app", "shift0", "dollar"),
}


@dataclass(frozen=True)
class GenConfig:
    """Shape of the random term distribution; fully determines gen_term."""

    calculus: str = "ld"
    max_size: int = 10
    free_var_pool: tuple[str, ...] = ("a", "b", "c")
    seed: int = 42
    weights: dict[str, float] | None = None

    def weight(self, name: str) -> float:
        return (self.weights or {}).get(name, 1.0)


def _trial_rng(cfg: GenConfig, index: int) -> random.Random:
    return random.Random((cfg.seed * 1_000_003 + index) & 0x7FFFFFFFFFFFFFFF)


def gen_term(cfg: GenConfig, index: int = 0, rng: random.Random | None = None) -> Term:
    """A random well-scoped term of the calculus with size <= max_size.

    Binders introduce fresh indices; leaf variables are drawn from the free
    pool and the binders in scope, so freshness side conditions and
    shadowing both get exercised.
    """
    if rng is None:
        rng = _trial_rng(cfg, index)
    return _gen(cfg, rng, max(1, cfg.max_size), 0)


def _gen(cfg: GenConfig, rng: random.Random, budget: int, depth: int) -> Term:
    choices = ["var"]
    if budget >= 2:
        choices += [c for c in _CONSTRUCTORS[cfg.calculus] if c in ("abs", "freeze", "thaw", "shift0")]
    if budget >= 3:
        choices += [c for c in _CONSTRUCTORS[cfg.calculus] if c in ("app", "dollar")]
    pick = rng.choices(choices, [cfg.weight(c) for c in choices])[0]
    if pick == "var":
        leaves: list[Term] = [Var(n) for n in cfg.free_var_pool]
        leaves += [Bound(i) for i in range(depth)]
        return rng.choice(leaves)
    if pick in ("abs", "shift0"):
        body = _gen(cfg, rng, budget - 1, depth + 1)
        hint = "xyzw"[depth % 4]
        return Abs(body, hint) if pick == "abs" else Shift0(body, hint)
    if pick in ("freeze", "thaw"):
        body = _gen(cfg, rng, budget - 1, depth)
        return Freeze(body) if pick == "freeze" else Thaw(body)
    cut = rng.randint(1, budget - 2)
    left = _gen(cfg, rng, cut, depth)
    right = _gen(cfg, rng, budget - 1 - cut, depth)
    return App(left, right) if pick == "app" else Dollar(left, right)


def gen_value(cfg: GenConfig, rng: random.Random) -> Term:
    """A random value of the calculus (retries, then coerces)."""
    for _ in range(5):
        t = _gen(cfg, rng, max(1, cfg.max_size), 0)
        if is_value(t, cfg.calculus):
            return t
    if cfg.calculus == "ld":
        return Freeze(t)
    return Abs(shift(t, 1), "x")


def gen_jframe(cfg: GenConfig, rng: random.Random) -> JFrame:
    kind = rng.choice(["appl", "appr", "thaw"])
    if kind == "appl":
        return AppL(_gen(cfg, rng, cfg.max_size, 0))
    if kind == "appr":
        return AppR(gen_value(cfg, rng))
    return ThawJ()


# ---------------------------------------------------------------------------
# reports


@dataclass
class PropReport:
    """Outcome accounting for one property suite.

    The partition invariant holds by construction:
    passes + fuel_exhaustions + len(counterexamples) == trials.
    """

    name: str
    trials: int = 0
    passes: int = 0
    fuel_exhaustions: int = 0
    counterexamples: list[tuple[str, str]] = field(default_factory=list)

    def record(self, outcome: str, inputs: str = "", detail: str = "") -> None:
        self.trials += 1
        if outcome == "pass":
            self.passes += 1
        elif outcome == "fuel":
            self.fuel_exhaustions += 1
        else:
            self.counterexamples.append((inputs, detail))

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "property": self.name,
            "trials": self.trials,
            "passes": self.passes,
            "fuel_exhaustions": self.fuel_exhaustions,
            "counterexamples": [
                {"inputs": i, "detail": d} for i, d in self.counterexamples
            ],
        }

    def summary(self) -> str:
        return (
            f"{self.name}: {self.trials} trials, {self.passes} passed, "
            f"{self.fuel_exhaustions} fuel-exhausted, "
            f"{len(self.counterexamples)} counterexamples"
        )


def shrink_term(t: Term, fails) -> Term:
    """Greedy shrink: replace subterms by pool variables while still failing."""
    pool = (Var("a"),)
    changed = True
    while changed:
        changed = False
        for path in positions(t):
            if not path:
                continue
            for v in pool:
                cand = plug_path(t, path, v)
                if size(cand) < size(t) and fails(cand):
                    t = cand
                    changed = True
                    break
            if changed:
                break
    return t


def _counterexample(report: PropReport, t: Term, fails, detail: str) -> None:
    small = shrink_term(t, fails)
    report.record("fail", pretty(small), detail)


# ---------------------------------------------------------------------------
# checkers


def check_right_inverse(cfg: GenConfig | None = None, trials: int = 200) -> PropReport:
    """CPS after direct style is the identity on lam, exactly (no fuel)."""
    cfg = replace(cfg or GenConfig(), calculus="lam")
    report = PropReport("right-inverse")
    for i in range(trials):
        m = gen_term(cfg, i)

        def fails(t: Term) -> bool:
            return not (
                alpha_eq(cps_star(ds_hash(t)), t)
                and alpha_eq(cps_dagger(ds_natural(t)), t)
            )

        if fails(m):
            _counterexample(report, m, fails, "round-trip differs")
        else:
            report.record("pass")
    return report


def check_left_post_inverse(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """Every ld term reduces to its own CPS-then-direct-style image."""
    cfg = replace(cfg or GenConfig(), calculus="ld")
    report = PropReport("left-post-inverse")
    for i in range(trials):
        m = gen_term(cfg, i)
        res = reaches(m, ds_hash(cps_star(m)), "ld", fuel)
        if res.found and is_value(m, "ld"):
            res = reaches(m, ds_natural(cps_dagger(m)), "ld", fuel)
        if res.found:
            report.record("pass")
        elif res.status == "fuel_exhausted":
            report.record("fuel", pretty(m))
        else:
            report.record("fail", pretty(m), "search refuted reachability")
    return report


def check_single_step_star(cfg: GenConfig | None = None, trials: int = 100) -> PropReport:
    """One ld step maps to at most one lam step under CPS, checked strictly.

    Known to be refutable: when a step turns a nonvalue into a value inside
    a bindable frame, the CPS images differ by a fixed three-step beta-eta
    chain rather than by at most one step (minimal instance ``^(^($(x)))``
    stepping to ``^(x)``).  The checker reports such occurrences as the
    counterexamples they are, with the multi-step distance in the detail;
    the multi-step simulation itself always holds.
    """
    cfg = replace(cfg or GenConfig(), calculus="ld")
    report = PropReport("single-step-star")
    for i in range(trials):
        m = gen_term(cfg, i)
        m_star = cps_star(m)
        bad = None
        for r in redexes(m, "ld"):
            n = apply_redex(m, r)
            n_star = cps_star(n)
            if alpha_eq(m_star, n_star):
                continue
            if n_star not in step(m_star, "lam"):
                bad = (r, n, n_star)
                break
        if bad is None:
            report.record("pass")
        else:
            r, n, n_star = bad
            multi = reaches(m_star, n_star, "lam", Fuel(10, 5000))
            dist = len(multi.trace.steps) if multi.found else ">10"
            report.record(
                "fail",
                pretty(m),
                f"rule {r.rule} at {list(r.path)} -> {pretty(n)}; "
                f"needs {dist} steps, not 0 or 1",
            )
    return report


def check_single_step_hash(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """One lam step is simulated by both direct-style translations."""
    cfg = replace(cfg or GenConfig(), calculus="lam")
    report = PropReport("single-step-hash")
    for i in range(trials):
        m = gen_term(cfg, i)
        outcome = "pass"
        detail = ""
        for n in step(m, "lam"):
            r1 = reaches(ds_hash(m), ds_hash(n), "ld", fuel)
            r2 = r1 if not r1.found else reaches(ds_natural(m), ds_natural(n), "ld", fuel)
            worst = r2 if r1.found else r1
            if worst.status == "refuted":
                outcome, detail = "fail", f"step to {pretty(n)} not simulated"
                break
            if worst.status == "fuel_exhausted":
                outcome, detail = "fuel", pretty(n)
        report.record(outcome, pretty(m), detail)
    return report


def check_subst_lemmas(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """Substitution commutes with the translations.

    The CPS half is exact alpha-equality; the direct-style half is a
    reduction, so it goes through the reachability search.
    """
    cfg = cfg or GenConfig()
    report = PropReport("subst")
    for i in range(trials):
        rng = _trial_rng(cfg, i)
        x = rng.choice(cfg.free_var_pool)

        ld = replace(cfg, calculus="ld")
        m = gen_term(ld, i, rng)
        v = gen_value(ld, rng)
        star_ok = alpha_eq(
            cps_star(subst(m, v, x)), subst(cps_star(m), cps_dagger(v), x)
        )
        dag_ok = True
        if is_value(m, "ld"):
            dag_ok = alpha_eq(
                cps_dagger(subst(m, v, x)), subst(cps_dagger(m), cps_dagger(v), x)
            )
        if not (star_ok and dag_ok):
            report.record("fail", f"{pretty(m)} [{pretty(v)}/{x}]", "CPS half differs")
            continue

        lamc = replace(cfg, calculus="lam")
        m2 = gen_term(lamc, i, rng)
        n2 = gen_term(lamc, i, rng)
        r1 = reaches(subst(ds_hash(m2), ds_natural(n2), x), ds_hash(subst(m2, n2, x)), "ld", fuel)
        r2 = r1 if not r1.found else reaches(
            subst(ds_natural(m2), ds_natural(n2), x),
            ds_natural(subst(m2, n2, x)),
            "ld",
            fuel,
        )
        worst = r2 if r1.found else r1
        if worst.found:
            report.record("pass")
        elif worst.status == "fuel_exhausted":
            report.record("fuel", f"{pretty(m2)} [{pretty(n2)}/{x}]")
        else:
            report.record("fail", f"{pretty(m2)} [{pretty(n2)}/{x}]", "DS half refuted")
    return report


def check_helper_lemmas(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """The small laws the larger proofs lean on.

    Thawing a natural image reaches the hash image in at most one step, and
    freezing a hash image reaches the natural image likewise; values only
    reduce to values; naming a subcomputation with the let pattern is
    equality; and a delimited bindable (or iterated pure) context can be
    lifted out of the delimiter.
    """
    cfg = cfg or GenConfig()
    report = PropReport("helpers")
    for i in range(trials):
        rng = _trial_rng(cfg, i)
        lamc = replace(cfg, calculus="lam")
        ldc = replace(cfg, calculus="ld")

        m = gen_term(lamc, i, rng)
        if not _at_most_one_step(Thaw(ds_natural(m)), ds_hash(m), "ld"):
            report.record("fail", pretty(m), "thaw of natural image")
            continue
        if not _at_most_one_step(Freeze(ds_hash(m)), ds_natural(m), "ld"):
            report.record("fail", pretty(m), "freeze of hash image")
            continue

        v = gen_value(ldc, rng)
        if any(not is_value(n, "ld") for n in step(v, "ld")):
            report.record("fail", pretty(v), "a value stepped to a nonvalue")
            continue

        j = gen_jframe(ldc, rng)
        mm = gen_term(ldc, i, rng)
        rj = joinable(plug_j(j, mm), let_expand(j, mm), "ld", fuel)
        if rj.status == "refuted":
            report.record("fail", pretty(plug_j(j, mm)), "let naming not joinable")
            continue
        if rj.status == "fuel_exhausted":
            report.record("fuel", pretty(plug_j(j, mm)))
            continue

        vv = gen_value(ldc, rng)
        frames = [gen_jframe(ldc, rng) for _ in range(rng.randint(1, 2))]
        outcome = _check_context_lift(vv, frames, mm, fuel)
        if outcome == "pass":
            report.record("pass")
        elif outcome == "fuel":
            report.record("fuel", pretty(mm))
        else:
            report.record("fail", pretty(mm), "context lift not joinable")
    return report


def _dollar_ld(m: Term, n: Term) -> Term:
    return App(Freeze(n), m)


def _check_context_lift(v: Term, frames: list[JFrame], m: Term, fuel: Fuel) -> str:
    # V $ K[M] vs (\x. V $ K[x]) $ M for K the composition of the frames
    km = m
    for f in reversed(frames):
        km = plug_j(f, km)
    kx = Bound(0)
    for f in reversed(frames):
        kx = plug_j(shift_j(f, 1), kx)
    lhs = _dollar_ld(v, km)
    rhs = _dollar_ld(Abs(_dollar_ld(shift(v, 1), kx), "x"), m)
    res = joinable(lhs, rhs, "ld", fuel)
    if res.found:
        return "pass"
    return "fuel" if res.status == "fuel_exhausted" else "fail"


def _at_most_one_step(a: Term, target: Term, calculus: str) -> bool:
    if alpha_eq(a, target):
        return True
    return target in step(a, calculus)


def check_iota_pi(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel | None = None
) -> PropReport:
    """The embeddings invert each other and translate the axioms soundly.

    Projecting an embedded lamd term back is lamd equality (searched under
    the six axioms); embedding a projected ld term back is ld joinability;
    and each lamd axiom instance stays joinable in ld after embedding.
    """
    cfg = cfg or GenConfig(max_size=8)
    # the context-lifting axiom blows up the search space; keep it small
    fuel = fuel or Fuel(DEFAULT_FUEL.max_steps, 5000)
    report = PropReport("iota-pi")
    for i in range(trials):
        rng = _trial_rng(cfg, i)
        lamd = replace(cfg, calculus="lamd")
        ldc = replace(cfg, calculus="ld")

        e = gen_term(lamd, i, rng)
        r1 = equal_axioms_ld(pi(iota(e)), e, fuel)
        if r1.status == "fuel_exhausted":
            report.record("fuel", pretty(e))
            continue

        m = gen_term(ldc, i, rng)
        r2 = joinable(iota(pi(m)), m, "ld", fuel)
        if r2.status == "refuted":
            report.record("fail", pretty(m), "embedding round trip not joinable")
            continue
        if r2.status == "fuel_exhausted":
            report.record("fuel", pretty(m))
            continue

        bad = _soundness_spot_checks(lamd, rng, fuel)
        if bad is None:
            report.record("pass")
        elif bad[0] == "fuel":
            report.record("fuel", bad[1])
        else:
            report.record("fail", bad[1], bad[0])
    return report


def _soundness_spot_checks(cfg: GenConfig, rng: random.Random, fuel: Fuel):
    """One random instance of each lamd axiom, embedded and joined in ld."""
    small = replace(cfg, max_size=max(3, cfg.max_size // 2))
    v = gen_value(small, rng)
    w = gen_value(small, rng)
    e = gen_term(small, 0, rng)
    b = gen_term(small, 0, rng)
    x = rng.choice(cfg.free_var_pool)

    instances = [
        ("beta_v", App(lam(x, b), v), subst(b, v, x)),
        ("eta_v", Abs(App(shift(v, 1), Bound(0)), "x"), v),
        ("dollar_v", Dollar(v, w), App(v, w)),
        ("beta_dollar", Dollar(v, s0(x, e)), subst(e, v, x)),
        ("eta_dollar", Shift0(Dollar(Bound(0), shift(e, 1)), "x"), e),
    ]
    r = gen_term(small, 1, rng)
    ps = pure_positions(r)
    p = ps[rng.randrange(len(ps))]
    lifted = Dollar(
        Abs(Dollar(shift(v, 1), plug_path(shift(r, 1), p, Bound(0))), "y"),
        subterm_at(r, p),
    )
    instances.append(("dollar_e", Dollar(v, r), lifted))

    for name, lhs, rhs in instances:
        res = joinable(iota(lhs), iota(rhs), "ld", fuel)
        if res.status == "refuted":
            return (f"axiom {name} not joinable after embedding", pretty(lhs))
        if res.status == "fuel_exhausted":
            return ("fuel", pretty(lhs))
    return None


def _free_in(x: str, t: Term) -> bool:
    return x in free_names(t)


def check_cps_equivalence(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """Both CPS routes out of lamd agree up to beta-eta."""
    cfg = replace(cfg or GenConfig(max_size=8), calculus="lamd")
    report = PropReport("cps-equiv")
    for i in range(trials):
        e = gen_term(cfg, i)
        res = joinable(cps_star(iota(e)), cps_ld(e), "lam", fuel)
        if res.found:
            report.record("pass")
        elif res.status == "fuel_exhausted":
            report.record("fuel", pretty(e))
        else:
            report.record("fail", pretty(e), "CPS images not beta-eta joinable")
    return report


def check_confluence_sample(
    cfg: GenConfig | None = None, trials: int = 100, fuel: Fuel = DEFAULT_FUEL
) -> PropReport:
    """Distinct one-step reducts of an ld term rejoin.

    A refutation here would contradict confluence of the calculus, so it is
    the loudest possible failure; expected outcomes are pass or exhaustion.
    """
    cfg = replace(cfg or GenConfig(max_size=8), calculus="ld")
    report = PropReport("confluence")
    for i in range(trials):
        m = gen_term(cfg, i)
        reducts = step(m, "ld")
        outcome, detail = "pass", ""
        for a_idx in range(len(reducts)):
            for b_idx in range(a_idx + 1, len(reducts)):
                res = joinable(reducts[a_idx], reducts[b_idx], "ld", fuel)
                if res.status == "refuted":
                    outcome = "fail"
                    detail = f"reducts {a_idx} and {b_idx} cannot rejoin"
                    break
                if res.status == "fuel_exhausted":
                    outcome = "fuel"
            if outcome == "fail":
                break
        report.record(outcome, pretty(m), detail)
    return report


SUITES = {
    "right-inverse": check_right_inverse,
    "left-post-inverse": check_left_post_inverse,
    "single-step-star": check_single_step_star,
    "single-step-hash": check_single_step_hash,
    "subst": check_subst_lemmas,
    "helpers": check_helper_lemmas,
    "iota-pi": check_iota_pi,
    "cps-equiv": check_cps_equivalence,
    "confluence": check_confluence_sample,
}
