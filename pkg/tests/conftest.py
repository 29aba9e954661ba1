"""Shared ring definitions and parsing helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from incgb.incmaps import IncMap
from incgb.problems import _Parser, parse
from incgb.rings import FamilySpec, Monomial, Ring

# A single arity-1 family under pure lex: the plain infinite polynomial ring.
X_RING_TEXT = """
ring {
  family x { arity = 1, constraint = none, weight = 1 }
  order { kind = lex, precedence = [x], weights = true }
}
generators { x[0]; }
"""

# The 2x2 toric kernel input: y[i,j] maps to x[i]*x[j] for i > j.
TORIC_TEXT = """
ring {
  family x { arity = 1, constraint = none, weight = 1 }
  family y { arity = 2, constraint = strictly_decreasing, weight = 2 }
  order { kind = lex, precedence = [x, y], weights = true }
}
generators { y[1,0] - x[1]*x[0]; }
"""

# The orbit membership input with its query polynomial.
MEMBER_TEXT = """
ring {
  family x { arity = 1, constraint = none, weight = 1 }
  order { kind = lex, precedence = [x], weights = true }
}
generators { x[0]*x[1] - x[1]*x[2]^2 + x[1]^2; }
"""

MEMBER_H = (
    "x[0]*x[4]^2 + x[0]*x[1]^2 + x[1]*x[0]^2 - 2*x[1]*x[0]"
    " + x[0]*x[3]*x[4] - x[0]*x[5]^2 - x[0]*x[3]*x[5] - 2*x[1]^2"
)


def expr(problem, text):
    """Parse a polynomial expression in a problem's ring."""
    sub = _Parser(text)
    f = sub.parse_expression(problem.ring)
    assert sub.peek()[0] == "eof", f"trailing input in {text!r}"
    return f


@pytest.fixture(scope="session")
def x_problem():
    return parse(X_RING_TEXT)


@pytest.fixture(scope="session")
def toric_problem():
    return parse(TORIC_TEXT)


@pytest.fixture(scope="session")
def member_problem():
    return parse(MEMBER_TEXT)


@pytest.fixture(scope="session")
def x_ring():
    return Ring((FamilySpec("x"),))


def xvar(i):
    return (0, (i,))


def xmono(*indices):
    exps = {}
    for i in indices:
        exps[xvar(i)] = exps.get(xvar(i), 0) + 1
    return Monomial.from_dict(exps)


def random_incmap(rng: random.Random, max_len=4, max_value=9) -> IncMap:
    d = rng.randrange(max_len + 1)
    if d == 0:
        return IncMap(())
    return IncMap(tuple(sorted(rng.sample(range(max_value + 1), d))))


def random_xmono(rng: random.Random, max_index=5, max_degree=4) -> Monomial:
    deg = rng.randrange(max_degree + 1)
    return xmono(*(rng.randrange(max_index + 1) for _ in range(deg)))


def ideal_equal(A, B) -> bool:
    """Mutual orbit reduction to zero: same equivariant ideal."""
    from incgb.poly import normal_form

    return all(normal_form(f, B).is_zero for f in A) and all(
        normal_form(g, A).is_zero for g in B
    )
