"""Delimited-control calculi, their reduction theories, and the translations
between them, with a property harness that samples every claimed law on
randomly generated terms.

The three calculi share one term language (see :mod:`ldot.terms`):

* ``lam``  -- lambda calculus with beta and eta,
* ``ld``   -- call-by-value with unary freeze/thaw control operators and
  seven local reduction rules,
* ``lamd`` -- the classic presentation with a binding shift0, a binary
  delimiter, three reductions and six undirected axioms.
"""

from .engine import Fuel, Trace, equal_axioms_ld, joinable, normalize_lambda, reaches, reduce
from .parser import ParseError, parse, pretty
from .rules import bind_decompose, contract, redexes, step
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
    canonicalize,
    classify,
    free_names,
    fresh_name,
    is_fresh,
    is_value,
    size,
    subst,
)
from .translate import cps_dagger, cps_ld, cps_star, ds_hash, ds_natural, iota, pi

__all__ = [
    "Abs",
    "App",
    "Bound",
    "Dollar",
    "Freeze",
    "Fuel",
    "ParseError",
    "Shift0",
    "Term",
    "Thaw",
    "Trace",
    "Var",
    "alpha_eq",
    "bind_decompose",
    "canonicalize",
    "classify",
    "contract",
    "cps_dagger",
    "cps_ld",
    "cps_star",
    "ds_hash",
    "ds_natural",
    "equal_axioms_ld",
    "free_names",
    "fresh_name",
    "iota",
    "is_fresh",
    "is_value",
    "joinable",
    "normalize_lambda",
    "parse",
    "pi",
    "pretty",
    "reaches",
    "redexes",
    "reduce",
    "size",
    "step",
    "subst",
]
