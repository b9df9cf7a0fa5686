"""Commuting cycle-type decompositions of group elements.

In the symmetric group, an element splits uniquely into disjoint cycles, the
reflection lengths of the cycles add up, and each cycle generates an
irreducible parabolic subgroup.  The same decomposition exists for any
element whose reduced reflection words generate a parabolic subgroup: group
the letters of one reduced word by the irreducible components of that
subgroup and multiply each group out in word order.  Letters in different
components commute, so the factors are well defined, commute pairwise, have
additive lengths, and are indecomposable; the result does not depend on the
chosen word (a property the test suite sweeps exhaustively).

Elements without that parabolicity still decompose inside the subgroup
generated by any one braid orbit of their reduced words, one decomposition
per orbit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce

from . import dual, hurwitz, subgroups
from .coxeter import Element
from .errors import NotQuasiCoxeterError
from .limits import DEFAULT_ENUM_CAP, DEFAULT_RED_CAP


@dataclass(frozen=True)
class CycleDecomposition:
    """Commuting factors of an element, one per irreducible component.

    ``ambient`` records the group in which the decomposition was taken: the
    full group, or the subgroup generated by one braid orbit.  Factors are
    sorted by the least reflection index of their component, so equal
    decompositions compare equal.
    """

    element: Element
    ambient: subgroups.ReflectionSubgroup
    factors: tuple
    factor_closures: tuple

    def __len__(self):
        return len(self.factors)


def _decompose_along(x: Element, word, container: subgroups.ReflectionSubgroup,
                     ambient: subgroups.ReflectionSubgroup) -> CycleDecomposition:
    """Split a reduced word of x along the components of ``container``."""
    g = x.group
    block_of = {}
    for ci, comp in enumerate(container.components):
        for t in comp.reflections:
            block_of[t] = ci
    letters_by_block: dict[int, list] = {}
    for t in word:
        letters_by_block.setdefault(block_of[t], []).append(t)
    entries = []
    for ci, letters in letters_by_block.items():
        comp = container.components[ci]
        factor = reduce(lambda acc, t: acc * g.reflections[t], letters, g.identity)
        entries.append((min(comp.reflections), factor,
                        subgroups.component_subgroup(container, comp)))
    entries.sort(key=lambda e: e[0])
    return CycleDecomposition(
        element=x,
        ambient=ambient,
        factors=tuple(e[1] for e in entries),
        factor_closures=tuple(e[2] for e in entries),
    )


def cycle_decomposition(x: Element) -> CycleDecomposition:
    """The unique commuting decomposition of a parabolic quasi-Coxeter element.

    The identity decomposes into zero factors.  Raises
    NotQuasiCoxeterError when no reduced word of x generates a parabolic
    subgroup; such elements still decompose per braid orbit, see
    :func:`all_decompositions`.
    """
    if not hurwitz.is_parabolic_quasi_coxeter(x):
        raise NotQuasiCoxeterError(
            "not a parabolic quasi-Coxeter element; "
            "use a per-orbit decomposition instead"
        )
    closure = dual.parabolic_closure(x)
    word = dual.first_reduced_word(x)
    return _decompose_along(x, word, closure, subgroups.full_subgroup(x.group))


def decomposition_from_word(x: Element, word) -> CycleDecomposition:
    """Decomposition of a parabolic quasi-Coxeter element along a given word.

    Exists so independence from the chosen reduced word can be tested; the
    word must be a reduced reflection word of x.
    """
    if not hurwitz.is_parabolic_quasi_coxeter(x):
        raise NotQuasiCoxeterError("not a parabolic quasi-Coxeter element")
    return _decompose_along(
        x, word, dual.parabolic_closure(x), subgroups.full_subgroup(x.group)
    )


def decomposition_in_subgroup(x: Element,
                              amb: subgroups.ReflectionSubgroup) -> CycleDecomposition:
    """Decomposition of x taken inside a reflection subgroup it generates.

    Requires x to be quasi-Coxeter in ``amb``: some reduced word of x over
    the reflections of ``amb`` must generate all of ``amb``.  Reflection
    lengths inside the subgroup agree with those in the full group, so the
    word can be found greedily over the restricted letter set.
    """
    if not subgroups.contains_element(amb, x):
        raise NotQuasiCoxeterError("element is not quasi-Coxeter in the given subgroup")
    word = dual.first_reduced_word(x, letters=amb.refl_set)
    if subgroups.reflection_closure(x.group, set(word)).refl_set != amb.refl_set:
        raise NotQuasiCoxeterError("element is not quasi-Coxeter in the given subgroup")
    return _decompose_along(x, word, amb, amb)


@dataclass(frozen=True)
class AllDecompositions:
    """Per-orbit decompositions plus the cross-orbit comparison report."""

    element: Element
    entries: tuple  # of (HurwitzOrbit, CycleDecomposition)
    #: orbit index pairs whose factor multisets coincide
    equal_factor_pairs: tuple
    #: closure multisets are pairwise distinct across orbits
    closure_sets_distinct: bool


def all_decompositions(x: Element, cap: int = DEFAULT_RED_CAP) -> AllDecompositions:
    """The decomposition of x inside every braid-orbit subgroup.

    Distinct orbits can repeat the same factor list while their component
    subgroups differ; the report records where that happens.
    """
    entries = []
    for orbit in hurwitz.hurwitz_orbits(x, cap):
        amb = orbit.subgroup
        dec = _decompose_along(x, orbit.representative, amb, amb)
        entries.append((orbit, dec))
    factor_keys = [
        Counter(f.images for f in dec.factors) for _, dec in entries
    ]
    closure_keys = [
        Counter(c.refl_set for c in dec.factor_closures) for _, dec in entries
    ]
    equal_pairs = tuple(
        (i, j)
        for i in range(len(entries))
        for j in range(i + 1, len(entries))
        if factor_keys[i] == factor_keys[j]
    )
    distinct = all(
        closure_keys[i] != closure_keys[j]
        for i in range(len(entries))
        for j in range(i + 1, len(entries))
    )
    return AllDecompositions(
        element=x,
        entries=tuple(entries),
        equal_factor_pairs=equal_pairs,
        closure_sets_distinct=distinct,
    )


def is_indecomposable_brute(x: Element, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Exhaustive search for a commuting, length-additive splitting.

    True when no u with 0 < len(u) < len(x), lengths adding up, and
    u x = x u exists.  The identity is decomposable by convention (its empty
    decomposition).  Used as the oracle against the fast path.
    """
    from .coxeter import enumerate_group

    total = dual.reflection_length(x)
    if total == 0:
        return False
    if total == 1:
        return True
    for u in enumerate_group(x.group, cap):
        lu = dual.reflection_length(u)
        if not 0 < lu < total:
            continue
        if dual.reflection_length(u.inv() * x) != total - lu:
            continue
        if u * x == x * u:
            return False
    return True


def is_indecomposable(x: Element, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether x admits no nontrivial commuting length-additive splitting.

    Parabolic quasi-Coxeter elements are indecomposable exactly when their
    decomposition has a single factor; everything else falls back to the
    exhaustive search.
    """
    if x.is_identity():
        return False
    if hurwitz.is_parabolic_quasi_coxeter(x):
        return len(cycle_decomposition(x)) == 1
    return is_indecomposable_brute(x, cap)


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of independently checking a claimed decomposition."""

    checks: tuple  # of (name, ok, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def verify_decomposition(x: Element, factors,
                         cap: int = DEFAULT_ENUM_CAP) -> DecompositionReport:
    """Check a claimed commuting decomposition of x, condition by condition.

    Verifies that the factors multiply to x, commute pairwise, have additive
    reflection lengths, and are each indecomposable under the exhaustive
    search.  Failures are reported, not raised.
    """
    factors = tuple(factors)
    g = x.group
    checks = []

    product = reduce(lambda a, b: a * b, factors, g.identity)
    checks.append(("product", product == x,
                   "factors multiply to the element"))

    commute = all(
        factors[i] * factors[j] == factors[j] * factors[i]
        for i in range(len(factors))
        for j in range(i + 1, len(factors))
    )
    checks.append(("pairwise_commute", commute, "all factor pairs commute"))

    additive = sum(dual.reflection_length(f) for f in factors) == dual.reflection_length(x)
    checks.append(("lengths_additive", additive,
                   "reflection lengths of the factors add up"))

    indec = all(is_indecomposable_brute(f, cap) for f in factors)
    checks.append(("factors_indecomposable", indec,
                   "every factor is indecomposable (exhaustive search)"))

    return DecompositionReport(checks=tuple(checks))
