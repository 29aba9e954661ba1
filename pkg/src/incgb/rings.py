"""Indexed variable families, monomials, the index-shift action, and orders.

Variables come in declared families: ``x`` of arity 1 gives x[0], x[1], ...;
``y`` of arity 2 with a strictly_decreasing constraint gives y[1,0], y[2,0],
and so on.  An increasing map on the naturals acts entrywise on index tuples,
which preserves every supported constraint.

A variable is stored as ``(rank, indices)`` where rank is its family's
position in the order's precedence list (rank 0 is the greatest family).
Variable comparison is precedence first, then index tuples lexicographically
(larger tuple means larger variable); this comparison is preserved by the
shift action, which is what makes the induced monomial orders usable here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .incmaps import IDENTITY, IncMap, extend_partial

CONSTRAINTS = ("none", "strictly_decreasing", "strictly_increasing", "all_distinct")
ORDER_KINDS = ("lex", "grlex")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    arity: int = 1
    constraint: str = "none"
    weight: int = 1

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"family {self.name}: arity must be >= 1")
        if self.weight < 1:
            raise ValueError(f"family {self.name}: weight must be >= 1")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"family {self.name}: unknown constraint {self.constraint!r}")

    def check_indices(self, indices):
        if len(indices) != self.arity:
            return f"expects {self.arity} indices, got {len(indices)}"
        if any(i < 0 for i in indices):
            return "indices must be naturals"
        c = self.constraint
        if c == "strictly_decreasing" and any(a <= b for a, b in zip(indices, indices[1:])):
            return "indices must be strictly decreasing"
        if c == "strictly_increasing" and any(a >= b for a, b in zip(indices, indices[1:])):
            return "indices must be strictly increasing"
        if c == "all_distinct" and len(set(indices)) != len(indices):
            return "indices must be pairwise distinct"
        return None


@dataclass(frozen=True)
class Ring:
    """A family list plus a monomial order (lex or graded lex)."""

    families: tuple  # FamilySpec, in precedence order: first family is greatest
    order_kind: str = "lex"
    use_weights: bool = True

    def __post_init__(self):
        if self.order_kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.order_kind!r}")
        names = [f.name for f in self.families]
        if len(set(names)) != len(names):
            raise ValueError("family names must be unique")

    def family(self, rank):
        return self.families[rank]

    def rank_of(self, name):
        for r, f in enumerate(self.families):
            if f.name == name:
                return r
        raise KeyError(f"no family named {name!r}")

    def variable(self, name, indices):
        rank = self.rank_of(name)
        problem = self.families[rank].check_indices(tuple(indices))
        if problem is not None:
            raise ValueError(f"{name}{list(indices)}: {problem}")
        return (rank, tuple(indices))


def var_sort_key(var):
    # Ascending sort under this key lists the greatest variable first.
    rank, indices = var
    return (rank, tuple(-i for i in indices))


@dataclass(frozen=True)
class Monomial:
    """A finite product of variables, factors sorted greatest-first."""

    factors: tuple = ()  # ((var, exponent), ...), no zero exponents

    @staticmethod
    def from_dict(exps):
        items = [(v, e) for v, e in exps.items() if e != 0]
        if any(e < 0 for _, e in items):
            raise ValueError("negative exponent")
        items.sort(key=lambda it: var_sort_key(it[0]))
        return Monomial(tuple(items))

    @property
    def is_unit(self):
        return not self.factors

    def exponent(self, var):
        for v, e in self.factors:
            if v == var:
                return e
        return 0

    def degree(self, ring: Ring = None):
        if ring is None or not ring.use_weights:
            return sum(e for _, e in self.factors)
        return sum(e * ring.families[v[0]].weight for v, e in self.factors)

    def indices(self):
        """Sorted distinct indices appearing in this monomial."""
        seen = set()
        for (_, idx), _e in self.factors:
            seen.update(idx)
        return sorted(seen)

    def width(self):
        idx = self.indices()
        return idx[-1] + 1 if idx else 0


UNIT = Monomial()


def m_mul(a: Monomial, b: Monomial) -> Monomial:
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    exps = {v: e for v, e in a.factors}
    for v, e in b.factors:
        exps[v] = exps.get(v, 0) + e
    return Monomial.from_dict(exps)


def m_divides(a: Monomial, b: Monomial) -> bool:
    return all(b.exponent(v) >= e for v, e in a.factors)


def m_quotient(b: Monomial, a: Monomial) -> Monomial:
    exps = {}
    for v, e in b.factors:
        exps[v] = e
    for v, e in a.factors:
        rem = exps.get(v, 0) - e
        if rem < 0:
            raise ValueError("quotient of non-divisor")
        exps[v] = rem
    return Monomial.from_dict(exps)


def m_lcm(a: Monomial, b: Monomial) -> Monomial:
    exps = {v: e for v, e in a.factors}
    for v, e in b.factors:
        exps[v] = max(exps.get(v, 0), e)
    return Monomial.from_dict(exps)


def m_coprime(a: Monomial, b: Monomial) -> bool:
    avars = {v for v, _ in a.factors}
    return all(v not in avars for v, _ in b.factors)


def m_act(rho: IncMap, m: Monomial) -> Monomial:
    if rho.is_identity or m.is_unit:
        return m
    exps = {}
    for (rank, idx), e in m.factors:
        v = (rank, tuple(rho(i) for i in idx))
        exps[v] = exps.get(v, 0) + e
    return Monomial.from_dict(exps)


def _var_cmp(va, vb):
    ka, kb = var_sort_key(va), var_sort_key(vb)
    if ka == kb:
        return 0
    return 1 if ka < kb else -1  # smaller sort key = greater variable


def compare(ring: Ring, a: Monomial, b: Monomial):
    """Total order comparison: -1, 0, or 1."""
    if ring.order_kind == "grlex":
        da, db = a.degree(ring), b.degree(ring)
        if da != db:
            return 1 if da > db else -1
    fa, fb = a.factors, b.factors
    ia = ib = 0
    while ia < len(fa) and ib < len(fb):
        (va, ea), (vb, eb) = fa[ia], fb[ib]
        c = _var_cmp(va, vb)
        if c > 0:
            return 1
        if c < 0:
            return -1
        if ea != eb:
            return 1 if ea > eb else -1
        ia += 1
        ib += 1
    if ia < len(fa):
        return 1
    if ib < len(fb):
        return -1
    return 0


def is_width_order(ring: Ring) -> bool:
    """Whether smaller width always implies smaller monomial.

    Conservative test: true for pure lex with a single family, which is the
    only case used by the width-queued truncation mode.
    """
    return ring.order_kind == "lex" and len(ring.families) == 1


def pi_div_witnesses(a: Monomial, b: Monomial):
    """All increasing maps sending a onto a divisor of b.

    Witnesses map the indices of a into the indices of b (divisibility
    forces the image there) and are extended minimally elsewhere; they are
    listed by ascending image sequence, so the first is the canonical one.
    """
    if a.is_unit:
        return [IDENTITY]
    src = a.indices()
    tgt = b.indices()
    if len(src) > len(tgt):
        return []
    found = []
    for combo in itertools.combinations(tgt, len(src)):
        rho = extend_partial(src, combo)
        if rho is not None and m_divides(m_act(rho, a), b):
            found.append(rho)
    return found


def pi_divides(a: Monomial, b: Monomial):
    """The lexicographically smallest witness, or None."""
    ws = pi_div_witnesses(a, b)
    return ws[0] if ws else None
