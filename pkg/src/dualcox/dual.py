"""Reflection length, absolute order, reduced reflection words, parabolic closure.

For an element w of a group with a linear model, the moved space is the image
of (w - 1) and the fixed space is its kernel; their dimensions add up to the
ambient dimension, and the reflection length of w equals the codimension of
the fixed space.  A reflection t lies below w in absolute order exactly when
the root of t lies in the moved space, which makes the length-one layer of
the order cheap to scan.  Both facts are exercised against independent
oracles in the test suite.

Moved-space data is computed once per element and cached on the group, keyed
by the element's root action, so sweeps over a whole group never recompute a
kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import subgroups
from .algebra import Matrix, kernel_basis, reduces_to_zero, row_space_rref
from .coxeter import Element
from .errors import MixedGroupsError
from .limits import DEFAULT_RED_CAP


@dataclass(frozen=True)
class MovData:
    """Fixed space, moved space and reflection length of one element."""

    element: Element
    fixed_basis: tuple
    mov_basis: tuple
    refl_length: int


def _mov_record(x: Element):
    """(length, mov rref rows, mov pivots, fixed basis), cached per group."""
    g = x.group
    rec = g._mov_cache.get(x.images)
    if rec is None:
        delta = x.matrix() - Matrix.identity(g.ambient_dim)
        mov_rows, mov_pivots = row_space_rref(delta.columns())
        fixed = tuple(kernel_basis(delta))
        rec = (len(mov_rows), mov_rows, mov_pivots, fixed)
        g._mov_cache[x.images] = rec
    return rec


def mov_data(x: Element) -> MovData:
    """Exact fixed/moved decomposition data (linear models only)."""
    length, mov_rows, _, fixed = _mov_record(x)
    return MovData(
        element=x,
        fixed_basis=fixed,
        mov_basis=tuple(tuple(r) for r in mov_rows),
        refl_length=length,
    )


def _dihedral_class(x: Element) -> int:
    """0 identity, 1 reflection, 2 nontrivial rotation."""
    if x.is_identity():
        return 0
    m = x.group.dihedral_m
    i0 = x.images[0] >> 1
    i1 = x.images[1] >> 1
    return 2 if (i0 + 1) % m == i1 else 1


def reflection_length(x: Element) -> int:
    """Minimal number of reflections multiplying to x."""
    if not x.group.is_linear:
        return _dihedral_class(x)
    return _mov_record(x)[0]


def absolute_leq(u: Element, v: Element) -> bool:
    """u <= v in absolute order: lengths add along u, u^-1 v."""
    if u.group is not v.group:
        raise MixedGroupsError("absolute order compares elements of one group")
    return reflection_length(u) + reflection_length(u.inv() * v) == reflection_length(v)


def reflection_below(t: int, x: Element) -> bool:
    """Whether reflection t lies below x: the root of t sits in Mov(x)."""
    g = x.group
    if not 0 <= t < g.n_reflections:
        raise IndexError(f"reflection index {t} out of range")
    if not g.is_linear:
        cls = _dihedral_class(x)
        if cls == 0:
            return False
        if cls == 2:
            return True
        return g.reflection_index(x) == t
    _, mov_rows, mov_pivots, _ = _mov_record(x)
    return reduces_to_zero(g.roots[t], mov_rows, mov_pivots)


def below_reflections(x: Element) -> frozenset:
    """All reflections below x in absolute order; cached per group."""
    g = x.group
    cached = g._below_cache.get(x.images)
    if cached is None:
        cached = frozenset(
            t for t in range(g.n_reflections) if reflection_below(t, x)
        )
        g._below_cache[x.images] = cached
    return cached


def first_reduced_word(x: Element, letters=None) -> tuple:
    """Lexicographically least reduced reflection word for x.

    With ``letters`` given, only those reflection indices may be used; the
    set must be the full reflection set of a subgroup containing x, which
    guarantees the greedy walk never gets stuck.
    """
    word = []
    y = x
    while not y.is_identity():
        pool = below_reflections(y)
        if letters is not None:
            pool = pool & letters
        if not pool:
            raise ValueError("element does not factor over the allowed letters")
        t = min(pool)
        word.append(t)
        y = y.group.reflections[t] * y
    return tuple(word)


def iter_reduced(x: Element, letters=None):
    """Yield every reduced reflection word of x, in lexicographic order.

    Each word (t_1, ..., t_k) satisfies t_1 t_2 ... t_k = x with k the
    reflection length; prepending a below-reflection and recursing emits each
    word exactly once.
    """
    if x.is_identity():
        yield ()
        return
    pool = below_reflections(x)
    if letters is not None:
        pool = pool & letters
    refl = x.group.reflections
    for t in sorted(pool):
        for tail in iter_reduced(refl[t] * x, letters):
            yield (t,) + tail


@dataclass(frozen=True)
class RedSet:
    """Reduced reflection words of one element, possibly truncated at a cap."""

    words: tuple
    truncated: bool

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)


def reduced_expressions(x: Element, cap: int = DEFAULT_RED_CAP,
                        letters=None) -> RedSet:
    """Collect reduced words with an explicit truncation flag.

    At most ``cap`` words are returned; ``truncated`` reports whether more
    exist.  Truncation is never silent: callers that need the complete set
    must check the flag.
    """
    words = []
    truncated = False
    for word in iter_reduced(x, letters):
        if len(words) >= cap:
            truncated = True
            break
        words.append(word)
    return RedSet(tuple(words), truncated)


def parabolic_closure(x: Element) -> subgroups.ReflectionSubgroup:
    """Smallest parabolic subgroup containing x.

    Generated by every reflection below x; its rank equals the reflection
    length of x and it contains x.
    """
    return subgroups.reflection_closure(x.group, below_reflections(x))
