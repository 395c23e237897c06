"""Radicals, semisimplicity, and strong semisimplicity.

Semisimplicity is decided through the radical (the intersection of all
maximal ideals): that route is exact and finite here.  The Archimedean
search below is deliberately kept as an independent cross-check, not a
decision procedure.
"""

from __future__ import annotations

from typing import Iterator, Optional, Tuple

from .core import (
    Atom,
    Element,
    InternalInvariantViolation,
    Prod,
    Structure,
    UnitalGroup,
    leq,
    scale,
    zero,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    ideal_leq,
    ideal_meet,
    is_zero_ideal,
    quotient,
)
from .spectrum import compute_spectrum


def radical(G: UnitalGroup) -> Ideal:
    """Intersection of all maximal ideals."""
    maxes = compute_spectrum(G).max_ideals()
    if not maxes:
        raise InternalInvariantViolation(
            "a validated unital group always has a maximal ideal"
        )
    out = maxes[0]
    for m in maxes[1:]:
        out = ideal_meet(out, m)
    return out


def is_semisimple(G: UnitalGroup) -> bool:
    return is_zero_ideal(radical(G))


def is_strongly_semisimple(G: UnitalGroup) -> Tuple[bool, Optional[Ideal]]:
    """Check that every quotient by a principal ideal is semisimple.

    In this class every ideal is principal, the trivial ideal included, so
    the check sweeps the whole lattice (the quotient by the improper ideal
    is the trivial group, which is vacuously semisimple).  On failure the
    witness is the lattice-least failing ideal, ties broken by enumeration
    order.
    """
    failures = []
    for P in enumerate_ideals(G).ideals:
        q = quotient(G, P)
        if q.trivial:
            continue
        if not is_semisimple(q.group):
            failures.append(P)
    if not failures:
        return True, None
    minimal = [
        f
        for f in failures
        if not any(g != f and ideal_leq(g, f) for g in failures)
    ]
    return False, minimal[0]


def dominated(structure: Structure, g: Element, h: Element) -> bool:
    """Decide exactly whether n*g <= h for every integer n >= 1.

    The only way a positive g can stay below all of its multiples' bound
    is through a lex extension: a zero dominant component against a
    positive one.  The recursion mirrors that; when a dominant component
    is negative, only the finitely many multiples that have not yet
    dropped strictly below h need an explicit comparison.
    """
    if isinstance(structure, Atom):
        if g > 0:
            return False
        if g == 0:
            return h >= 0
        return g <= h
    if isinstance(structure, Prod):
        return all(
            dominated(c, a, b) for c, a, b in zip(structure.children, g, h)
        )
    a, t = g
    b, s = h
    if a > 0:
        return False
    if a == 0:
        if b > 0:
            return True
        if b < 0:
            return False
        return dominated(structure.bottom, t, s)
    n = 1
    while n * a >= b:
        if n * a > b or not leq(structure.bottom, scale(structure.bottom, n, t), s):
            return False
        n += 1
    return True


def _first_positive(structure: Structure) -> Element:
    """A minimal positive element touching only the first coordinate."""
    if isinstance(structure, Atom):
        return 1
    if isinstance(structure, Prod):
        parts = [zero(c) for c in structure.children]
        parts[0] = _first_positive(structure.children[0])
        return tuple(parts)
    return (1, zero(structure.bottom))


def _embed_at(structure: Prod, i: int, value: Element) -> Element:
    return tuple(
        value if j == i else zero(c) for j, c in enumerate(structure.children)
    )


def _lex_witnesses(structure: Structure) -> Iterator[Tuple[Element, Element]]:
    """Yield (g, h) candidates, one per lex position, outermost first.

    At a lex node the infinitesimal pair is g = (0, positive) against
    h = (1, 0); in surrounding positions both members are zero.
    """
    if isinstance(structure, Atom):
        return
    if isinstance(structure, Prod):
        for i, child in enumerate(structure.children):
            for g, h in _lex_witnesses(child):
                yield _embed_at(structure, i, g), _embed_at(structure, i, h)
        return
    yield (0, _first_positive(structure.bottom)), (1, zero(structure.bottom))
    for g, h in _lex_witnesses(structure.bottom):
        yield (0, g), (0, h)


def archimedean_falsify(
    G: UnitalGroup, bound: int
) -> Optional[Tuple[Element, Element]]:
    """Search for 0 < g with n*g <= h for every n, within the given bound.

    Candidate pairs are generated structurally, one per lexicographic
    position (the only places a violation can live in this class), with
    coordinate magnitudes at most 1 <= bound; each candidate is verified
    exactly before being returned.  Returns the first surviving witness,
    or None when there is none.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    z = zero(G.structure)
    for g, h in _lex_witnesses(G.structure):
        if g != z and leq(G.structure, z, g) and dominated(G.structure, g, h):
            return g, h
    return None
