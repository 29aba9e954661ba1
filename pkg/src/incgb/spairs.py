"""Finite generating sets for the critical pairs of two orbit generators.

Classically a pair of polynomials has one S-pair.  Here the orbits of f and
g meet in many relative positions, but every position is an index shift of
an "interlacing": a pair of increasing maps from the index ranges of f and g
onto a common initial segment.  Enumerating interlacings therefore yields a
finite generating set of critical pairs, one per interlacing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .incmaps import IncMap
from .poly import Polynomial, lm
from .rings import Monomial, m_act, m_coprime, m_lcm, m_quotient


def interlacings(wf, wg):
    """All pairs of increasing maps [wf] -> [k], [wg] -> [k] whose images
    jointly cover an initial segment {0..k-1}."""
    out = []
    for k in range(max(wf, wg), wf + wg + 1):
        full = frozenset(range(k))
        for a in itertools.combinations(range(k), wf):
            for b in itertools.combinations(range(k), wg):
                if frozenset(a) | frozenset(b) == full:
                    out.append((IncMap(a), IncMap(b)))
    return out


@dataclass(frozen=True)
class SPairGen:
    """One generator of the critical-pair module of basis entries fi, gi.

    cof1 * act(map1, lm(f)) == overlap == cof2 * act(map2, lm(g)).
    """

    fi: int
    gi: int
    map1: IncMap
    map2: IncMap
    cof1: Monomial
    cof2: Monomial
    overlap: Monomial


def spair_generators(f: Polynomial, g: Polynomial, fi=0, gi=1, coprime_filter=True):
    """Critical-pair generators for (f, g), one per productive interlacing.

    Self-pairs skip the diagonal interlacing (zero S-polynomial) and keep
    one of each mirrored pair.  With the coprime filter on, interlacings
    whose instantiated lead monomials share no variable are dropped, as in
    the classical first Buchberger criterion.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("S-pairs need nonzero polynomials")
    gens = []
    same = fi == gi
    for s1, s2 in interlacings(f.width(), g.width()):
        if same:
            if s1 == s2:
                continue
            if s1.values > s2.values:
                continue  # mirror of a pair already listed
        # the order respects the action, so lm commutes with it
        lf = m_act(s1, lm(f))
        lg = m_act(s2, lm(g))
        if coprime_filter and m_coprime(lf, lg):
            continue
        overlap = m_lcm(lf, lg)
        gens.append(
            SPairGen(fi, gi, s1, s2, m_quotient(overlap, lf), m_quotient(overlap, lg), overlap)
        )
    return gens
