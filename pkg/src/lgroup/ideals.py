"""Ideal lattices, quotients, and congruence tests.

An ideal here is always an order-convex sublattice subgroup, represented
structurally so that membership, containment, meet, and join are all
decided by shape recursion:

* ``AtomIdeal(full)``   -- {0} or all of Z;
* ``ProdIdeal(parts)``  -- a componentwise product of child ideals (every
  ideal of a finite product decomposes this way, by convexity);
* ``LexIdeal(inner)``   -- either the whole lexicographic extension
  (``inner is None``) or {0} x inner: any member with a nonzero dominant
  component generates everything, so proper ideals live in the bottom.

Because the class only has finitely many ideals per structure, the whole
lattice is enumerable and every ideal turns out to be principal; the
enumeration order is fixed (zero first, whole group last) and all outputs
respect it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Union

from .core import (
    Atom,
    Element,
    Lex,
    LGroupError,
    Path,
    Prod,
    ShapeMismatch,
    Structure,
    UnitalGroup,
    check_element,
    sub,
    zero,
)


@dataclass(frozen=True, slots=True, repr=False)
class AtomIdeal:
    full: bool

    def __repr__(self) -> str:
        return "all" if self.full else "zero"


@dataclass(frozen=True, slots=True, repr=False)
class ProdIdeal:
    parts: tuple

    def __repr__(self) -> str:
        return "(%s)" % ",".join(repr(p) for p in self.parts)


@dataclass(frozen=True, slots=True, repr=False)
class LexIdeal:
    inner: Optional["Ideal"]  # None means the whole group

    def __repr__(self) -> str:
        return "all" if self.inner is None else f"bottom({self.inner!r})"


Ideal = Union[AtomIdeal, ProdIdeal, LexIdeal]


def ideal_label(I: Ideal) -> str:
    """Compact deterministic rendering, e.g. ``(zero,bottom(all))``."""
    return repr(I)


def _structure_of(g) -> Structure:
    return g.structure if isinstance(g, UnitalGroup) else g


def zero_ideal(structure) -> Ideal:
    structure = _structure_of(structure)
    if isinstance(structure, Atom):
        return AtomIdeal(False)
    if isinstance(structure, Prod):
        return ProdIdeal(tuple(zero_ideal(c) for c in structure.children))
    return LexIdeal(zero_ideal(structure.bottom))


def all_ideal(structure) -> Ideal:
    structure = _structure_of(structure)
    if isinstance(structure, Atom):
        return AtomIdeal(True)
    if isinstance(structure, Prod):
        return ProdIdeal(tuple(all_ideal(c) for c in structure.children))
    return LexIdeal(None)


def is_zero_ideal(I: Ideal) -> bool:
    if isinstance(I, AtomIdeal):
        return not I.full
    if isinstance(I, ProdIdeal):
        return all(is_zero_ideal(p) for p in I.parts)
    return I.inner is not None and is_zero_ideal(I.inner)


def is_all_ideal(I: Ideal) -> bool:
    if isinstance(I, AtomIdeal):
        return I.full
    if isinstance(I, ProdIdeal):
        return all(is_all_ideal(p) for p in I.parts)
    return I.inner is None


def is_proper(I: Ideal) -> bool:
    return not is_all_ideal(I)


def check_ideal(structure, I: Ideal, path: Path = ()) -> None:
    """Validate that ``I`` matches the shape of ``structure``."""
    structure = _structure_of(structure)
    if isinstance(structure, Atom):
        if not isinstance(I, AtomIdeal):
            raise ShapeMismatch(path, f"expected an atom ideal, got {I!r}")
    elif isinstance(structure, Prod):
        n = len(structure.children)
        if not isinstance(I, ProdIdeal) or len(I.parts) != n:
            raise ShapeMismatch(path, f"expected a {n}-part product ideal, got {I!r}")
        for i, (child, part) in enumerate(zip(structure.children, I.parts)):
            check_ideal(child, part, path + (i,))
    else:
        if not isinstance(I, LexIdeal):
            raise ShapeMismatch(path, f"expected a lex ideal, got {I!r}")
        if I.inner is not None:
            check_ideal(structure.bottom, I.inner, path + ("bottom",))


def contains(structure, I: Ideal, g: Element) -> bool:
    """Decide membership g in I.

    Atom: zero holds only 0; Prod: componentwise; Lex: the whole group
    holds everything, while {0} x J holds (a, t) iff a = 0 and t in J.
    """
    structure = _structure_of(structure)
    check_ideal(structure, I)
    check_element(structure, g)
    return _contains(structure, I, g)


def _contains(structure, I, g) -> bool:
    if isinstance(structure, Atom):
        return I.full or g == 0
    if isinstance(structure, Prod):
        return all(
            _contains(c, p, a) for c, p, a in zip(structure.children, I.parts, g)
        )
    if I.inner is None:
        return True
    return g[0] == 0 and _contains(structure.bottom, I.inner, g[1])


def ideal_leq(I: Ideal, J: Ideal) -> bool:
    """Containment I subseteq J, decided structurally."""
    if isinstance(I, AtomIdeal):
        return J.full or not I.full
    if isinstance(I, ProdIdeal):
        return all(ideal_leq(a, b) for a, b in zip(I.parts, J.parts))
    if J.inner is None:
        return True
    if I.inner is None:
        return False
    return ideal_leq(I.inner, J.inner)


def ideal_meet(I: Ideal, J: Ideal) -> Ideal:
    if isinstance(I, AtomIdeal):
        return AtomIdeal(I.full and J.full)
    if isinstance(I, ProdIdeal):
        return ProdIdeal(tuple(ideal_meet(a, b) for a, b in zip(I.parts, J.parts)))
    if I.inner is None:
        return J
    if J.inner is None:
        return I
    return LexIdeal(ideal_meet(I.inner, J.inner))


def ideal_join(I: Ideal, J: Ideal) -> Ideal:
    if isinstance(I, AtomIdeal):
        return AtomIdeal(I.full or J.full)
    if isinstance(I, ProdIdeal):
        return ProdIdeal(tuple(ideal_join(a, b) for a, b in zip(I.parts, J.parts)))
    if I.inner is None or J.inner is None:
        return LexIdeal(None)
    return LexIdeal(ideal_join(I.inner, J.inner))


def ideal_lattice_op(G, kind: str, I: Ideal, J: Ideal) -> Ideal:
    """Dispatch form of the lattice operations: kind is "meet" or "join"."""
    structure = _structure_of(G)
    check_ideal(structure, I)
    check_ideal(structure, J)
    if kind == "meet":
        return ideal_meet(I, J)
    if kind == "join":
        return ideal_join(I, J)
    raise LGroupError(f"unknown lattice operation {kind!r}")


def principal_ideal(structure, g: Element) -> Ideal:
    """The smallest ideal containing g.

    A nonzero dominant component in a lex extension forces the whole
    group; otherwise generation happens inside the bottom.
    """
    structure = _structure_of(structure)
    check_element(structure, g)
    return _principal(structure, g)


def _principal(structure, g) -> Ideal:
    if isinstance(structure, Atom):
        return AtomIdeal(g != 0)
    if isinstance(structure, Prod):
        return ProdIdeal(
            tuple(_principal(c, a) for c, a in zip(structure.children, g))
        )
    if g[0] != 0:
        return LexIdeal(None)
    return LexIdeal(_principal(structure.bottom, g[1]))


def generated_ideal(structure, elements: Iterable[Element]) -> Ideal:
    """Join of the principal ideals of ``elements``; empty input gives zero."""
    structure = _structure_of(structure)
    out = zero_ideal(structure)
    for g in elements:
        out = ideal_join(out, principal_ideal(structure, g))
    return out


def full_generator(structure) -> Element:
    """A canonical single generator of the improper ideal."""
    structure = _structure_of(structure)
    if isinstance(structure, Atom):
        return 1
    if isinstance(structure, Prod):
        return tuple(full_generator(c) for c in structure.children)
    return (1, zero(structure.bottom))


def canonical_generator(structure, I: Ideal) -> Element:
    """A witness g with <g> = I (in this class every ideal is principal)."""
    structure = _structure_of(structure)
    if isinstance(structure, Atom):
        return 1 if I.full else 0
    if isinstance(structure, Prod):
        return tuple(
            canonical_generator(c, p) for c, p in zip(structure.children, I.parts)
        )
    if I.inner is None:
        return full_generator(structure)
    return (0, canonical_generator(structure.bottom, I.inner))


@dataclass(frozen=True)
class IdealLattice:
    """The complete (finite, distributive) lattice of ideals of a group."""

    group: UnitalGroup
    ideals: tuple
    principal: tuple
    generators: tuple

    def __len__(self) -> int:
        return len(self.ideals)

    def index(self, I: Ideal) -> int:
        try:
            return self.ideals.index(I)
        except ValueError:
            raise LGroupError(f"ideal {ideal_label(I)} is not in the lattice") from None

    @property
    def bottom(self) -> Ideal:
        return self.ideals[0]

    @property
    def top(self) -> Ideal:
        return self.ideals[-1]


@lru_cache(maxsize=None)
def _enumerate(structure) -> tuple:
    if isinstance(structure, Atom):
        return (AtomIdeal(False), AtomIdeal(True))
    if isinstance(structure, Prod):
        pools = [_enumerate(c) for c in structure.children]
        return tuple(ProdIdeal(combo) for combo in itertools.product(*pools))
    inner = tuple(LexIdeal(i) for i in _enumerate(structure.bottom))
    return inner + (LexIdeal(None),)


@lru_cache(maxsize=None)
def enumerate_ideals(G: UnitalGroup) -> IdealLattice:
    """Enumerate all ideals in canonical order (zero first, whole group last).

    Principality flags are computed honestly: each ideal gets a canonical
    generator candidate and the flag records whether that candidate
    actually generates it.
    """
    ideals = _enumerate(G.structure)
    generators = tuple(canonical_generator(G.structure, I) for I in ideals)
    principal = tuple(
        _principal(G.structure, g) == I for g, I in zip(generators, ideals)
    )
    return IdealLattice(G, ideals, principal, generators)


@dataclass(eq=False)
class QuotientResult:
    """A quotient group with its element and ideal projections.

    ``group`` is None exactly when the quotient collapsed to the trivial
    group (quotient by the improper ideal); ``trivial`` flags that case.
    ``project_ideal`` is only meaningful on ideals containing the divisor.
    """

    group: Optional[UnitalGroup]
    project: Callable
    project_ideal: Callable
    trivial: bool


def _identity(x):
    return x


def _quotient(structure, I):
    """Return (new_structure, project_element, project_ideal) or None if trivial."""
    if isinstance(structure, Atom):
        if I.full:
            return None
        return (structure, _identity, _identity)
    if isinstance(structure, Prod):
        results = [
            (i, _quotient(c, p))
            for i, (c, p) in enumerate(zip(structure.children, I.parts))
        ]
        kept = [(i, r) for i, r in results if r is not None]
        if not kept:
            return None
        if len(kept) == 1:
            i, (st, pe, pi) = kept[0]
            return (
                st,
                lambda e, i=i, pe=pe: pe(e[i]),
                lambda J, i=i, pi=pi: pi(J.parts[i]),
            )
        sts = tuple(r[0] for _, r in kept)

        def project(e, kept=kept):
            return tuple(pe(e[i]) for i, (st, pe, pi) in kept)

        def project_ideal(J, kept=kept):
            return ProdIdeal(tuple(pi(J.parts[i]) for i, (st, pe, pi) in kept))

        return (Prod(sts), project, project_ideal)
    # Lex: quotient by the whole group is trivial; by {0} x J it is the
    # lex extension of bottom/J, collapsing to an Atom when J was all of
    # the bottom.
    if I.inner is None:
        return None
    below = _quotient(structure.bottom, I.inner)
    if below is None:
        def project_ideal_atom(J):
            return AtomIdeal(J.inner is None)

        return (Atom(), lambda e: e[0], project_ideal_atom)
    st, pe, pi = below

    def project_lex(e, pe=pe):
        return (e[0], pe(e[1]))

    def project_ideal_lex(J, pi=pi):
        if J.inner is None:
            return LexIdeal(None)
        return LexIdeal(pi(J.inner))

    return (Lex(st), project_lex, project_ideal_lex)


@lru_cache(maxsize=None)
def _quotient_shape(structure, I):
    if isinstance(I, AtomIdeal):
        return None if I.full else structure
    if isinstance(I, ProdIdeal):
        kept = [
            q
            for q in (
                _quotient_shape(c, p)
                for c, p in zip(structure.children, I.parts)
            )
            if q is not None
        ]
        if not kept:
            return None
        if len(kept) == 1:
            return kept[0]
        return Prod(tuple(kept))
    if I.inner is None:
        return None
    below = _quotient_shape(structure.bottom, I.inner)
    return Atom() if below is None else Lex(below)


def quotient_structure(structure, I: Ideal) -> Optional[Structure]:
    """Shape of the quotient, or None when it is trivial."""
    return _quotient_shape(_structure_of(structure), I)


def quotient(G: UnitalGroup, I: Ideal) -> QuotientResult:
    """Quotient of G by I, staying inside the class.

    Trivial factors are dropped eagerly (a one-child product collapses to
    the child, a fully collapsed bottom turns a lex extension into an
    Atom), so the result is again a valid structure with unit the image
    of G's unit.
    """
    check_ideal(G.structure, I)
    res = _quotient(G.structure, I)
    if res is None:
        return QuotientResult(None, lambda e: None, lambda J: None, True)
    st, pe, pi = res
    return QuotientResult(UnitalGroup(st, pe(G.unit)), pe, pi, False)


def congruent(G: UnitalGroup, g: Element, h: Element, I: Ideal) -> bool:
    """True iff g and h fall in the same congruence class modulo I."""
    check_element(G.structure, g)
    check_element(G.structure, h)
    check_ideal(G.structure, I)
    return contains(G.structure, I, sub(G.structure, g, h))
