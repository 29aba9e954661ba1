"""Exact rational polynomials over indexed monomials, reduction, normal form.

Coefficients are ``fractions.Fraction`` throughout; there is no floating
point anywhere.  A polynomial stores its terms strictly descending under the
ring's order, so the lead term is ``terms[0]``.

Reduction uses orbit divisibility: a reducer g applies to a term t whenever
some increasing map sends the lead monomial of g onto a divisor of t.
``normal_form`` performs full (tail) reduction and can emit a replayable
trace of the steps it took, which serves as a membership certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .incmaps import IncMap
from .rings import Monomial, Ring, compare, m_act, m_mul, m_quotient, pi_divides


@dataclass(frozen=True)
class Polynomial:
    ring: Ring
    terms: tuple = ()  # ((Fraction, Monomial), ...), strictly descending

    @property
    def is_zero(self):
        return not self.terms

    def width(self):
        return max((m.width() for _, m in self.terms), default=0)

    def degree(self):
        return max((m.degree(self.ring) for _, m in self.terms), default=0)


def poly(ring: Ring, term_iter) -> Polynomial:
    """Build a canonical polynomial from (coefficient, monomial) pairs."""
    acc = {}
    for c, m in term_iter:
        acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
    items = [(c, m) for m, c in acc.items() if c != 0]
    # sort descending under the ring order
    import functools

    items.sort(key=functools.cmp_to_key(lambda s, t: compare(ring, s[1], t[1])), reverse=True)
    return Polynomial(ring, tuple(items))


def zero(ring: Ring) -> Polynomial:
    return Polynomial(ring, ())


def constant(ring: Ring, c) -> Polynomial:
    c = Fraction(c)
    if c == 0:
        return zero(ring)
    return Polynomial(ring, ((c, Monomial()),))


def _same_ring(f: Polynomial, g: Polynomial):
    if f.ring is not g.ring and f.ring != g.ring:
        raise ValueError("operands belong to different rings")


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    return poly(f.ring, list(f.terms) + list(g.terms))


def subtract(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    return poly(f.ring, list(f.terms) + [(-c, m) for c, m in g.terms])


def scale(f: Polynomial, c) -> Polynomial:
    c = Fraction(c)
    if c == 0:
        return zero(f.ring)
    return Polynomial(f.ring, tuple((c * a, m) for a, m in f.terms))


def mul_term(f: Polynomial, c, m: Monomial) -> Polynomial:
    """Multiply by the single term c*m; preserves term order."""
    c = Fraction(c)
    if c == 0 or f.is_zero:
        return zero(f.ring)
    if m.is_unit:
        return scale(f, c)
    return poly(f.ring, [(c * a, m_mul(n, m)) for a, n in f.terms])


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    out = []
    for c, m in g.terms:
        out.extend((c * a, m_mul(n, m)) for a, n in f.terms)
    return poly(f.ring, out)


def act(rho: IncMap, f: Polynomial) -> Polynomial:
    if rho.is_identity:
        return f
    return poly(f.ring, [(c, m_act(rho, m)) for c, m in f.terms])


def lm(f: Polynomial) -> Monomial:
    if f.is_zero:
        raise ValueError("zero polynomial has no lead monomial")
    return f.terms[0][1]


def lc(f: Polynomial) -> Fraction:
    if f.is_zero:
        raise ValueError("zero polynomial has no lead coefficient")
    return f.terms[0][0]


def monic(f: Polynomial) -> Polynomial:
    if f.is_zero:
        return f
    return scale(f, 1 / lc(f))


def pi_reduce_step(f: Polynomial, g: Polynomial):
    """One lead reduction of f by an orbit element of g, or None."""
    if f.is_zero or g.is_zero:
        raise ValueError("reduction needs nonzero polynomials")
    rho = pi_divides(lm(g), lm(f))
    if rho is None:
        return None
    g_img = act(rho, g)
    cof = m_quotient(lm(f), lm(g_img))
    return subtract(f, mul_term(g_img, lc(f) / lc(g_img), cof))


@dataclass(frozen=True)
class ReductionStep:
    reducer: int  # index into the reducer list
    witness: IncMap
    cofactor: Monomial
    ratio: Fraction


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple

    def replay(self, f: Polynomial, reducers) -> Polynomial:
        """Apply the recorded steps to f; must reproduce the normal form."""
        out = f
        for s in self.steps:
            g_img = act(s.witness, reducers[s.reducer])
            out = subtract(out, mul_term(g_img, s.ratio, s.cofactor))
        return out


def normal_form(f: Polynomial, reducers, with_trace=False, max_width=None):
    """Fully reduce f (lead and tail) against orbit elements of the reducers.

    Reducer choice: first reducer in list order admitting a witness, then
    the smallest witness, so results are reproducible.  With ``max_width``
    set, steps whose outcome would exceed the width bound are skipped.
    """
    ring = f.ring
    steps = []
    done = []  # irreducible terms, collected in descending order
    work = f
    while not work.is_zero:
        c, m = work.terms[0]
        reduced = False
        for gi, g in enumerate(reducers):
            if g.is_zero:
                continue
            rho = pi_divides(lm(g), m)
            if rho is None:
                continue
            g_img = act(rho, g)
            if max_width is not None and g_img.width() > max_width:
                continue
            cof = m_quotient(m, lm(g_img))
            ratio = c / lc(g_img)
            work = subtract(work, mul_term(g_img, ratio, cof))
            steps.append(ReductionStep(gi, rho, cof, ratio))
            reduced = True
            break
        if not reduced:
            done.append((c, m))
            work = Polynomial(ring, work.terms[1:])
    result = Polynomial(ring, tuple(done))
    if with_trace:
        return result, ReductionTrace(tuple(steps))
    return result
