#!/usr/bin/env python3
"""The two control calculi express each other by macro expansion.

iota reads binder-style shift0 and the binary delimiter as sugar over the
unary freeze/thaw operators; pi unfolds the unary operators into the
binder style.  Round trips are provable equalities, and the equality
search produces explicit axiom-chain witnesses.
"""

from ldot import equal_axioms_ld, joinable, parse, pretty
from ldot.translate import cps_ld, cps_star, iota, pi

# ---------------------------------------------------------------------
# Embedding lamd into ld.

for text in ("S0 x. x", "a $ b", "I $ I z"):
    e = parse(text, "lamd")
    print(f"iota({text})  =  {pretty(iota(e), fold=False)}")

# Projecting ld into lamd unfolds the unary operators.
for text in ("$(z)", "^(z)", "let x = a b in x"):
    m = parse(text, "ld")
    print(f"pi({text})  =  {pretty(pi(m))}")

# ---------------------------------------------------------------------
# Round trip in lamd: pi(iota(e)) equals e under the six axioms.  The
# searcher returns the axiom chain from each side to a common meet.

e = parse("(a b) $ c", "lamd")
res = equal_axioms_ld(pi(iota(e)), e)
print()
print("pi(iota(e)) = e for e =", pretty(e))
print("  left chain: ", [(s.tag, "fwd" if s.forward else "rev") for s in res.witness.left])
print("  right chain:", [(s.tag, "fwd" if s.forward else "rev") for s in res.witness.right])
print("  meet:       ", pretty(res.witness.meet))

# Round trip in ld: iota(pi(M)) rejoins M by plain reduction.
m = parse("^($(a b) (\\q. q))", "ld")
res2 = joinable(iota(pi(m)), m, "ld")
print("iota(pi(M)) joins M at:", pretty(res2.witness.meet))

# ---------------------------------------------------------------------
# Both CPS routes agree: embedding first and translating, or translating
# the binder-style term directly, are beta-eta equal.

e2 = parse("S0 f. f (f z)", "lamd")
a, b = cps_star(iota(e2)), cps_ld(e2)
print()
print("cps via embedding:", pretty(a))
print("cps direct:       ", pretty(b))
print("beta-eta joinable:", joinable(a, b, "lam").found)
