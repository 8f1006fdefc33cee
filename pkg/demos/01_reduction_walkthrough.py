#!/usr/bin/env python3
"""Walk through a delimited-control evaluation, step by step.

The running example: the identity is installed as a delimiter, and a
shift0 inside the delimited expression grabs the surrounding context
`I $ I []` as a reusable function.
"""

import json

from ldot import parse, pretty, reduce, subst

# ---------------------------------------------------------------------
# The term, in the shift0/dollar calculus ("lamd").  `I` is a plain
# abbreviation we substitute in after parsing.

term = parse("I $ I (S0 f. f (f z))", "lamd")
term = subst(term, parse(r"\x. x", "lamd"), "I")
print("start:", pretty(term))

# ---------------------------------------------------------------------
# Leftmost-outermost reduction.  The first step is the interesting one:
# the delimiter and the application around the shift0 disappear into the
# captured continuation \y. I $ I y, which the body then applies twice.

trace = reduce(term, "lamd")
for s in trace.steps:
    print(f"  --{s.rule:>18}-->  {pretty(s.term)}")
print("final:", pretty(trace.final))
print("rules used:", {r: trace.rules().count(r) for r in set(trace.rules())})

# ---------------------------------------------------------------------
# The same trace as machine-readable JSON (rule, path, resulting term).

print(json.dumps(trace.to_json()["steps"][0], indent=2))

# ---------------------------------------------------------------------
# The unary-operator calculus ("ld") runs on different rules: naming of
# subcomputations (bind) plus local freeze/thaw cancellations.

t2 = parse("let x = f y in ^(x)", "ld")
print()
print("ld example:", pretty(t2))
for s in reduce(t2, "ld").steps:
    print(f"  --{s.rule:>18}-->  {pretty(s.term)}")
