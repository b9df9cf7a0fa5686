"""Reflection length, absolute order, reduced words, parabolic closure."""

from collections import deque

import pytest

from dualcox import (
    absolute_leq,
    below_reflections,
    build_group,
    element_from_simple_word,
    enumerate_group,
    first_reduced_word,
    iter_reduced,
    mov_data,
    parabolic_closure,
    reduced_expressions,
    reflection_below,
    reflection_length,
)


def bfs_reflection_distance(g):
    """Independent oracle: Cayley distance over all reflections."""
    dist = {g.identity.images: 0}
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        for t in g.reflections:
            y = t * x
            if y.images not in dist:
                dist[y.images] = dist[x.images] + 1
                queue.append(y)
    return dist


def d4_example():
    g = build_group("D4")
    return g, element_from_simple_word(g, [1, 2, 1, 2, 2, 0, 2, 3])


class TestReflectionLength:
    def test_identity_and_reflections(self):
        g = build_group("B3")
        assert reflection_length(g.identity) == 0
        assert all(reflection_length(t) == 1 for t in g.reflections)

    def test_g2_double_rotation(self):
        g = build_group("G2")
        assert reflection_length(element_from_simple_word(g, [0, 1, 0, 1])) == 2

    def test_d4_example_has_full_length(self):
        _, w = d4_example()
        assert reflection_length(w) == 4

    @pytest.mark.parametrize("name", ["A3", "G2", "I2(7)"])
    def test_matches_cayley_distance(self, name):
        g = build_group(name)
        dist = bfs_reflection_distance(g)
        for x in enumerate_group(g):
            assert reflection_length(x) == dist[x.images]

    def test_mov_dimensions_add_up(self):
        g = build_group("B3")
        for x in enumerate_group(g):
            data = mov_data(x)
            assert len(data.fixed_basis) + len(data.mov_basis) == g.ambient_dim
            assert data.refl_length == reflection_length(x)


class TestAbsoluteOrder:
    def test_identity_below_everything(self):
        g = build_group("A3")
        for x in enumerate_group(g):
            assert absolute_leq(g.identity, x)
            assert absolute_leq(x, x)

    def test_distinct_reflections_incomparable(self):
        g = build_group("A2")
        assert not absolute_leq(g.simple[0], g.simple[1])

    def test_two_routes_to_the_reflection_layer_agree(self):
        # membership of a root in the moved space against the defining
        # length equation, on full sweeps
        for name in ("A3", "B2", "G2"):
            g = build_group(name)
            for x in enumerate_group(g):
                for t in range(g.n_reflections):
                    assert reflection_below(t, x) == absolute_leq(g.reflections[t], x)


class TestReflectionBelow:
    def test_below_identity_is_empty(self):
        g = build_group("B3")
        assert below_reflections(g.identity) == frozenset()

    def test_reflection_below_itself(self):
        g = build_group("B3")
        for t in range(g.n_reflections):
            assert reflection_below(t, g.reflections[t])

    def test_every_reflection_below_the_d4_example(self):
        g, w = d4_example()
        assert below_reflections(w) == frozenset(range(g.n_reflections))


class TestReducedExpressions:
    def test_identity_and_single_reflection(self):
        g = build_group("A2")
        assert reduced_expressions(g.identity).words == ((),)
        assert reduced_expressions(g.reflections[1]).words == ((1,),)

    def test_g2_stst_has_six_words(self):
        g = build_group("G2")
        w = element_from_simple_word(g, [0, 1, 0, 1])
        # oracle: exhaustive search over ordered reflection pairs
        expected = sorted(
            (a, b)
            for a in range(g.n_reflections)
            for b in range(g.n_reflections)
            if g.reflections[a] * g.reflections[b] == w
        )
        assert len(expected) == 6
        assert list(reduced_expressions(w).words) == expected

    def test_lexicographic_order_and_first_word(self):
        g = build_group("B3")
        w = element_from_simple_word(g, [0, 1, 2])
        words = reduced_expressions(w).words
        assert list(words) == sorted(words)
        assert first_reduced_word(w) == words[0]

    def test_subword_property(self):
        g = build_group("B3")
        w = element_from_simple_word(g, [0, 1, 2])
        for word in reduced_expressions(w).words:
            prefix = g.identity
            for k, t in enumerate(word, start=1):
                prefix = prefix * g.reflections[t]
                assert reflection_length(prefix) == k
                assert absolute_leq(prefix, w)

    def test_truncation_is_flagged(self):
        g = build_group("G2")
        w = element_from_simple_word(g, [0, 1, 0, 1])
        red = reduced_expressions(w, cap=4)
        assert red.truncated and len(red.words) == 4
        assert not reduced_expressions(w, cap=6).truncated

    def test_restriction_to_the_closure_changes_nothing(self):
        # reduced words only ever use reflections below the element, so
        # restricting the alphabet to its parabolic closure is invisible
        g = build_group("B3")
        for x in enumerate_group(g):
            full = set(iter_reduced(x))
            restricted = set(iter_reduced(x, letters=parabolic_closure(x).refl_set))
            assert full == restricted


class TestParabolicClosure:
    def test_trivial_cases(self):
        g = build_group("B3")
        assert parabolic_closure(g.identity).rank == 0
        for t in range(g.n_reflections):
            sub = parabolic_closure(g.reflections[t])
            assert sub.refl_set == {t} and sub.rank == 1

    def test_d4_example_closes_to_the_whole_group(self):
        g, w = d4_example()
        sub = parabolic_closure(w)
        assert sub.refl_set == frozenset(range(g.n_reflections))
        assert sub.rank == 4

    def test_rank_equals_length_on_a_sweep(self):
        for name in ("A3", "B3", "I2(8)"):
            g = build_group(name)
            for x in enumerate_group(g):
                assert parabolic_closure(x).rank == reflection_length(x)

    def test_element_lies_in_its_closure(self):
        from dualcox import contains_element

        g = build_group("B3")
        for x in enumerate_group(g):
            assert contains_element(parabolic_closure(x), x)
