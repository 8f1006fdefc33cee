"""Multi-step reduction, fueled searches, and trace recording.

Every search here is fueled: ``max_steps`` bounds witness length (search
depth) and ``max_frontier`` bounds how many distinct terms may be explored.
Running out of fuel is a first-class outcome, never an exception — these
calculi are untyped and diverge freely.  A search can *refute* only when it
has fully explored a finite reduction graph (or, in the lambda calculus,
when both sides have distinct normal forms, which is conclusive by
confluence).

Visited sets and meets are keyed on the terms themselves, whose equality is
alpha-equivalence, so every result is stable under renaming of bound
variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .parser import pretty
from .rules import apply_redex, axiom_neighbors, contract_all, redexes
from .terms import Path, Term, plug_path, positions, size, subterm_at


@dataclass(frozen=True)
class Fuel:
    """Search budget: maximum witness length and explored-term cap."""

    max_steps: int = 1000
    max_frontier: int = 20000

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_frontier <= 0:
            raise ValueError("fuel bounds must be positive")


DEFAULT_FUEL = Fuel()


@dataclass(frozen=True)
class TraceStep:
    rule: str
    path: Path
    term: Term


@dataclass
class Trace:
    """A witnessed multi-step reduction; replaying the steps reproduces it."""

    initial: Term
    steps: list[TraceStep] = field(default_factory=list)
    status: str = "complete"  # complete | fuel_exhausted

    @property
    def final(self) -> Term:
        return self.steps[-1].term if self.steps else self.initial

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_json(self) -> dict:
        return {
            "initial": pretty(self.initial),
            "steps": [
                {"rule": s.rule, "path": list(s.path), "term": pretty(s.term)}
                for s in self.steps
            ],
            "status": self.status,
        }


def replay_ok(trace: Trace, calculus: str) -> bool:
    """Check that every recorded step re-derives from the rule at its path."""
    cur = trace.initial
    for s in trace.steps:
        sub = subterm_at(cur, s.path)
        if not any(
            plug_path(cur, s.path, c) == s.term for c in contract_all(s.rule, sub)
        ):
            return False
        cur = s.term
    return True


# ---------------------------------------------------------------------------
# strategies


def reduce(
    m: Term,
    calculus: str,
    strategy: str = "leftmost_outermost",
    fuel: Fuel = DEFAULT_FUEL,
) -> Trace:
    """Repeatedly contract the first redex occurrence until normal or fueled out.

    Only the leftmost-outermost strategy produces traces; the all-paths
    expansion of the one-step relation backs ``reaches`` and ``joinable``
    internally.
    """
    if strategy != "leftmost_outermost":
        raise ValueError(f"unsupported strategy {strategy!r}")
    trace = Trace(m)
    cur = m
    for _ in range(fuel.max_steps):
        occ = redexes(cur, calculus)
        if not occ:
            return trace
        cur = apply_redex(cur, occ[0])
        trace.steps.append(TraceStep(occ[0].rule, occ[0].path, cur))
    if redexes(cur, calculus):
        trace.status = "fuel_exhausted"
    return trace


def normalize_lambda(m: Term, fuel: Fuel = DEFAULT_FUEL) -> Term | None:
    """Leftmost-outermost beta-eta normal form, or None when fuel runs out."""
    t = reduce(m, "lam", fuel=fuel)
    return None if t.status == "fuel_exhausted" else t.final


# ---------------------------------------------------------------------------
# reachability


@dataclass
class SearchResult:
    status: str  # found | refuted | fuel_exhausted
    trace: Trace | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


_Parent = tuple[Term, str, Path] | None


def _backtrack(initial: Term, end: Term, parents: dict[Term, _Parent]) -> Trace:
    steps: list[TraceStep] = []
    cur = end
    while True:
        p = parents[cur]
        if p is None:
            break
        prev, rule, path = p
        steps.append(TraceStep(rule, path, cur))
        cur = prev
    steps.reverse()
    return Trace(initial, steps)


def reaches(
    m: Term, target: Term, calculus: str, fuel: Fuel = DEFAULT_FUEL
) -> SearchResult:
    """Breadth-first search for ``m ->> target``; shortest witness wins.

    'refuted' means the whole (finite) reduction graph of m was explored
    without meeting the target; hitting a fuel bound is 'fuel_exhausted' and
    says nothing.
    """
    if m == target:
        return SearchResult("found", Trace(m))
    parents: dict[Term, _Parent] = {m: None}
    frontier = [m]
    for _ in range(fuel.max_steps):
        if not frontier:
            return SearchResult("refuted")
        next_frontier: list[Term] = []
        for t in frontier:
            for r in redexes(t, calculus):
                n = apply_redex(t, r)
                if n in parents:
                    continue
                parents[n] = (t, r.rule, r.path)
                if n == target:
                    return SearchResult("found", _backtrack(m, n, parents))
                if len(parents) >= fuel.max_frontier:
                    return SearchResult("fuel_exhausted")
                next_frontier.append(n)
        frontier = next_frontier
    if frontier:
        return SearchResult("fuel_exhausted")
    return SearchResult("refuted")


# ---------------------------------------------------------------------------
# joinability


@dataclass
class JoinWitness:
    left_trace: Trace
    right_trace: Trace
    meet: Term


@dataclass
class JoinResult:
    status: str  # found | refuted | fuel_exhausted
    witness: JoinWitness | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def _bfs_join(a: Term, b: Term, calculus: str, fuel: Fuel) -> JoinResult:
    if a == b:
        return JoinResult("found", JoinWitness(Trace(a), Trace(b), a))
    sides: list[dict[Term, _Parent]] = [{a: None}, {b: None}]
    frontiers: list[list[Term]] = [[a], [b]]

    def witness(meet: Term) -> JoinResult:
        return JoinResult(
            "found",
            JoinWitness(
                _backtrack(a, meet, sides[0]), _backtrack(b, meet, sides[1]), meet
            ),
        )

    for _ in range(fuel.max_steps):
        if not frontiers[0] and not frontiers[1]:
            return JoinResult("refuted")  # both graphs finite, fully explored
        # expand the smaller live frontier first
        order = sorted((0, 1), key=lambda i: (not frontiers[i], len(frontiers[i])))
        for side in order:
            mine, other = sides[side], sides[1 - side]
            nxt: list[Term] = []
            for t in frontiers[side]:
                for r in redexes(t, calculus):
                    n = apply_redex(t, r)
                    if n in mine:
                        continue
                    mine[n] = (t, r.rule, r.path)
                    if n in other:
                        return witness(n)
                    if len(sides[0]) + len(sides[1]) >= fuel.max_frontier:
                        return JoinResult("fuel_exhausted")
                    nxt.append(n)
            frontiers[side] = nxt
    return JoinResult("fuel_exhausted")


def joinable(
    a: Term, b: Term, calculus: str, fuel: Fuel = DEFAULT_FUEL
) -> JoinResult:
    """Search for a common reduct of a and b.

    In lam both sides are normalized first: equal normal forms give the
    witness directly and distinct normal forms refute conclusively
    (beta-eta is confluent).  Elsewhere, and when normalization runs out of
    fuel, both reduction graphs are grown breadth-first until they meet.
    """
    if a == b:
        return JoinResult("found", JoinWitness(Trace(a), Trace(b), a))
    if calculus == "lam":
        half = Fuel(fuel.max_steps, fuel.max_frontier)
        ta = reduce(a, "lam", fuel=half)
        tb = reduce(b, "lam", fuel=half)
        if ta.status == "complete" and tb.status == "complete":
            if ta.final == tb.final:
                return JoinResult("found", JoinWitness(ta, tb, ta.final))
            return JoinResult("refuted")
    return _bfs_join(a, b, calculus, fuel)


# ---------------------------------------------------------------------------
# lamd equality search


@dataclass(frozen=True)
class EqStep:
    tag: str
    forward: bool
    path: Path
    term: Term


@dataclass
class EqWitness:
    """Axiom chains from both endpoints down to a common meet term."""

    left: list[EqStep]
    right: list[EqStep]
    meet: Term


@dataclass
class EqResult:
    status: str  # found | fuel_exhausted (the axiom graph is never exhausted)
    witness: EqWitness | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


_SIMPLIFIERS = ("ax_beta_v", "ax_dollar_v", "ax_beta_dollar", "ax_eta_v", "ax_eta_dollar")


def _simplify_lamd(t: Term, budget: int) -> tuple[Term, list[EqStep]]:
    """Forward closure under the shrinking axioms, leftmost-outermost."""
    steps: list[EqStep] = []
    for _ in range(budget):
        done = True
        for path in _preorder_paths(t):
            sub = subterm_at(t, path)
            for tag in _SIMPLIFIERS:
                out = contract_all(tag, sub)
                if out:
                    t = plug_path(t, path, out[0])
                    steps.append(EqStep(tag, True, path, t))
                    done = False
                    break
            if not done:
                break
        if done:
            return t, steps
    return t, steps


def _preorder_paths(t: Term) -> list[Path]:
    return list(positions(t))


def equal_axioms_ld(
    a: Term, b: Term, fuel: Fuel = DEFAULT_FUEL, slack: int = 8
) -> EqResult:
    """Semi-decide lamd equality under the six undirected axioms.

    Both endpoints are first simplified by the forward, mostly-shrinking
    axioms; the remainder is a bidirectional breadth-first search over
    single axiom steps in either direction at any position.  Intermediate
    terms larger than the bigger endpoint plus ``slack`` are pruned, which
    keeps the growing axioms (notably the context-lifting one) from running
    away.  Fuel exhaustion is inconclusive; the search never reports
    inequality.
    """
    if a == b:
        return EqResult("found", EqWitness([], [], a))
    sa, left0 = _simplify_lamd(a, fuel.max_steps // 4)
    sb, right0 = _simplify_lamd(b, fuel.max_steps // 4)
    if sa == sb:
        return EqResult("found", EqWitness(left0, right0, sa))

    cap = max(size(sa), size(sb)) + slack
    sides: list[dict[Term, tuple[Term, str, bool, Path] | None]] = [
        {sa: None},
        {sb: None},
    ]
    frontiers = [[sa], [sb]]

    def chain(side: int, end: Term) -> list[EqStep]:
        out: list[EqStep] = []
        cur = end
        while True:
            p = sides[side][cur]
            if p is None:
                break
            prev, tag, fwd, path = p
            out.append(EqStep(tag, fwd, path, cur))
            cur = prev
        out.reverse()
        return out

    def witness(meet: Term) -> EqResult:
        return EqResult(
            "found",
            EqWitness(left0 + chain(0, meet), right0 + chain(1, meet), meet),
        )

    for _ in range(fuel.max_steps):
        if not frontiers[0] and not frontiers[1]:
            return EqResult("fuel_exhausted")
        order = sorted((0, 1), key=lambda i: (not frontiers[i], len(frontiers[i])))
        for side in order:
            mine, other = sides[side], sides[1 - side]
            nxt: list[Term] = []
            # smaller terms first: junk expansions go to the back of the level
            for t in sorted(frontiers[side], key=size):
                for tag, fwd, path, n in axiom_neighbors(t):
                    if size(n) > cap or n in mine:
                        continue
                    mine[n] = (t, tag, fwd, path)
                    if n in other:
                        return witness(n)
                    if len(sides[0]) + len(sides[1]) >= fuel.max_frontier:
                        return EqResult("fuel_exhausted")
                    nxt.append(n)
            frontiers[side] = nxt
    return EqResult("fuel_exhausted")
