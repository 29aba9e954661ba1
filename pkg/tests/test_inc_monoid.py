"""Increasing maps, shift-generator words, and their round trips."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incgb.incmaps import (
    IDENTITY,
    IncMap,
    compose,
    extend_partial,
    increasing_maps,
    map_to_tau,
    standard_form,
    tau,
    tau_to_map,
)

from conftest import random_incmap

incmaps = st.builds(
    lambda vals: IncMap(tuple(sorted(vals))),
    st.sets(st.integers(min_value=0, max_value=12), max_size=5),
)
words = st.lists(st.integers(min_value=0, max_value=6), max_size=8).map(tuple)


class TestApply:
    def test_identity(self):
        assert IDENTITY(7) == 7

    def test_direct_read(self):
        assert IncMap((2, 5))(1) == 5

    def test_minimal_extension(self):
        assert IncMap((2, 5))(4) == 8

    @given(incmaps, st.integers(min_value=0, max_value=100))
    def test_strictly_monotone(self, rho, i):
        assert rho(i) < rho(i + 1)


class TestCanonicalForm:
    def test_trailing_extension_trimmed(self):
        assert IncMap((2, 3, 4)).values == (2,)
        assert IncMap((0, 1, 2)).values == ()

    def test_non_increasing_rejected(self):
        with pytest.raises(ValueError):
            IncMap((3, 3))
        with pytest.raises(ValueError):
            IncMap((-1,))

    @given(incmaps, incmaps)
    def test_structural_equality_is_functional(self, a, b):
        same_fn = all(a(i) == b(i) for i in range(20))
        assert (a == b) == same_fn


class TestCompose:
    def test_identity_neutral(self):
        b = IncMap((0, 2))
        assert compose(IDENTITY, b) == b
        assert compose(b, IDENTITY) == b

    def test_tau0_squared_is_plus_two(self):
        t0 = tau(0)
        sq = compose(t0, t0)
        assert all(sq(i) == i + 2 for i in range(10))
        assert sq.values == (2,)  # canonical trimmed form

    def test_pointwise_example(self):
        a, b = IncMap((1, 2)), IncMap((0, 2))
        c = compose(a, b)
        assert all(c(i) == a(b(i)) for i in range(10))

    @given(incmaps, incmaps)
    def test_pointwise_oracle(self, a, b):
        c = compose(a, b)
        assert all(c(i) == a(b(i)) for i in range(25))

    @given(incmaps, incmaps, incmaps)
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


class TestStandardForm:
    def test_commutation_example(self):
        assert standard_form((3, 1)) == (1, 2)

    def test_already_standard(self):
        assert standard_form((1, 1)) == (1, 1)

    def test_empty(self):
        assert standard_form(()) == ()

    @given(words)
    def test_output_weakly_increasing(self, w):
        out = standard_form(w)
        assert all(a <= b for a, b in zip(out, out[1:]))

    @given(words)
    def test_idempotent_and_length_preserving(self, w):
        out = standard_form(w)
        assert len(out) == len(w)
        assert standard_form(out) == out

    @given(words)
    def test_same_action(self, w):
        a, b = tau_to_map(w), tau_to_map(standard_form(w))
        assert all(a(i) == b(i) for i in range(64))


class TestWordMapBijection:
    def test_single_generator(self):
        rho = tau_to_map((2,))
        assert [rho(i) for i in range(4)] == [0, 1, 3, 4]

    def test_identity_both_ways(self):
        assert tau_to_map(()) == IDENTITY
        assert map_to_tau(IDENTITY) == ()

    def test_image_complement(self):
        rho = tau_to_map((1, 2))
        image = {rho(i) for i in range(10)}
        complement = set(range(max(image) + 1)) - image
        assert complement == {1, 3}

    @given(incmaps)
    def test_map_round_trip(self, rho):
        assert tau_to_map(map_to_tau(rho)) == rho

    @given(words)
    def test_word_round_trip(self, w):
        standard = standard_form(w)
        assert map_to_tau(tau_to_map(standard)) == standard


class TestIncreasingMaps:
    def test_singletons(self):
        maps = increasing_maps(1, 2)
        assert len(maps) == 2
        assert sorted(m(0) for m in maps) == [0, 1]

    def test_binomial_count(self):
        assert len(increasing_maps(2, 4)) == 6

    def test_empty_domain(self):
        assert increasing_maps(0, 5) == [IDENTITY]

    def test_error_when_too_narrow(self):
        with pytest.raises(ValueError):
            increasing_maps(3, 2)


class TestExtendPartial:
    def test_empty_constraints(self):
        assert extend_partial((), ()) == IDENTITY

    def test_minimal_fill(self):
        rho = extend_partial((1, 3), (2, 5))
        assert rho is not None
        assert rho(1) == 2 and rho(3) == 5
        # unconstrained positions take the smallest increasing values
        assert rho(0) == 0 and rho(2) == 3

    def test_infeasible(self):
        assert extend_partial((0, 2), (5, 6)) is None

    @given(incmaps, incmaps)
    def test_recovers_factor(self, a, b):
        # a o b can always be factored back through b at b's image points
        c = compose(a, b)
        span = max(len(a.values) + len(b.values), 1) + 2
        sources = tuple(b(i) for i in range(span))
        targets = tuple(c(i) for i in range(span))
        rho = extend_partial(sources, targets)
        assert rho is not None
        assert all(rho(s) == t for s, t in zip(sources, targets))


def test_apply_compose_sampled_bulk():
    rng = random.Random(7)
    for _ in range(2000):
        a, b = random_incmap(rng), random_incmap(rng)
        i = rng.randrange(10_000)
        assert compose(a, b)(i) == a(b(i))
