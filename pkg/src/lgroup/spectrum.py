"""Prime spectra with the hull-kernel topology, computed extensionally.

A proper ideal is prime when the quotient is totally ordered, and maximal
when the quotient collapses all the way to a single integer coordinate.
Spectra in this class are finite posets under containment, so the
vanishing-locus / kernel Galois connection, the closure operator, and all
the topological laws can be checked by exhaustive enumeration; the report
at the bottom of this module does exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterable

from .core import Atom, LGroupError, UnitalGroup, check_element, is_chain
from .ideals import (
    Ideal,
    all_ideal,
    check_ideal,
    contains,
    enumerate_ideals,
    ideal_label,
    ideal_leq,
    ideal_meet,
    is_proper,
    quotient,
    quotient_structure,
)


class UnknownPrime(LGroupError):
    """A locus referenced an ideal that is not a prime of this spectrum."""


@dataclass(frozen=True)
class SpectrumSpace:
    """All prime ideals of a group, with maximality flags.

    ``primes`` follows the canonical ideal enumeration order, and the
    specialization order is plain containment (closed sets are the
    vanishing loci, so a prime specializes to every prime above it).
    """

    group: UnitalGroup
    primes: tuple
    maximal: tuple

    def __len__(self) -> int:
        return len(self.primes)

    def index(self, p: Ideal) -> int:
        try:
            return self.primes.index(p)
        except ValueError:
            raise UnknownPrime(f"{ideal_label(p)} is not a prime of this spectrum") from None

    def is_maximal(self, p: Ideal) -> bool:
        return self.maximal[self.index(p)]

    def max_ideals(self) -> tuple:
        return tuple(p for p, m in zip(self.primes, self.maximal) if m)

    def specializes(self, p: Ideal, q: Ideal) -> bool:
        """p <= q in the specialization order, i.e. p is contained in q."""
        self.index(p)
        self.index(q)
        return ideal_leq(p, q)


@lru_cache(maxsize=None)
def compute_spectrum(G: UnitalGroup) -> SpectrumSpace:
    """Filter the ideal lattice down to primes; flag the maximal ones."""
    primes = []
    maximal = []
    for I in enumerate_ideals(G).ideals:
        if not is_proper(I):
            continue
        qs = quotient_structure(G.structure, I)
        if qs is None or not is_chain(qs):
            continue
        primes.append(I)
        maximal.append(isinstance(qs, Atom))
    return SpectrumSpace(G, tuple(primes), tuple(maximal))


def _space_of(x) -> SpectrumSpace:
    return x if isinstance(x, SpectrumSpace) else compute_spectrum(x)


def vanishing_locus(space, R) -> FrozenSet[Ideal]:
    """V(R): primes containing R (an Ideal, or an iterable of elements).

    ``space`` may be a SpectrumSpace or a UnitalGroup (spectra are cached).
    """
    space = _space_of(space)
    if isinstance(R, (list, tuple, set, frozenset)):
        elements = list(R)
        for g in elements:
            check_element(space.group.structure, g)
        return frozenset(
            p
            for p in space.primes
            if all(contains(space.group.structure, p, g) for g in elements)
        )
    check_ideal(space.group.structure, R)
    return frozenset(p for p in space.primes if ideal_leq(R, p))


def ideal_of_locus(space, S: Iterable[Ideal]) -> Ideal:
    """I(S): the intersection of the primes in S; the whole group for S empty."""
    space = _space_of(space)
    out = all_ideal(space.group.structure)
    for p in S:
        space.index(p)
        out = ideal_meet(out, p)
    return out


def closure(space, S: Iterable[Ideal]) -> FrozenSet[Ideal]:
    """Topological closure: the vanishing locus of the kernel of S."""
    space = _space_of(space)
    return vanishing_locus(space, ideal_of_locus(space, S))


@dataclass
class LawCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SpectralReport:
    group: UnitalGroup
    laws: list = field(default_factory=list)
    max_dense: bool = False

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def failures(self) -> list:
        return [law for law in self.laws if not law.passed]


def _subsets(items):
    n = len(items)
    for mask in range(1 << n):
        yield frozenset(items[i] for i in range(n) if mask >> i & 1)


def spectral_axioms_report(G: UnitalGroup) -> SpectralReport:
    """Exhaustively verify the hull-kernel topology laws on a finite spectrum.

    Checks, over every enumerated ideal R and every subset S of primes:
    the Galois adjunction, the closure-operator laws, both fixed-point
    characterisations, that closed sets are specialization up-sets, T0 and
    sobriety, the principal-ideal description of compact opens, and that
    the maximal spectrum is a discrete antichain.  Density of the maximal
    spectrum is reported as a flag rather than a law, since it holds
    exactly for the semisimple instances.
    """
    space = compute_spectrum(G)
    lattice = enumerate_ideals(G)
    ideals = lattice.ideals
    primes = list(space.primes)
    report = SpectralReport(G)
    subsets = list(_subsets(primes))
    V = {I: vanishing_locus(space, I) for I in ideals}
    closed_family = set(V.values())

    bad = [
        (I, S)
        for I in ideals
        for S in subsets
        if ideal_leq(I, ideal_of_locus(space, S)) != (S <= V[I])
    ]
    report.laws.append(
        LawCheck(
            "galois-adjunction",
            not bad,
            "" if not bad else f"first failure at R={ideal_label(bad[0][0])}",
        )
    )

    cl = {S: closure(space, S) for S in subsets}
    ok = (
        all(S <= cl[S] for S in subsets)
        and all(cl[S] <= cl[T] for S in subsets for T in subsets if S <= T)
        and all(cl[cl[S]] == cl[S] for S in subsets)
        and all(cl[S | T] == cl[S] | cl[T] for S in subsets for T in subsets)
        and cl[frozenset()] == frozenset()
    )
    report.laws.append(LawCheck("closure-operator", ok))

    ok = all(ideal_of_locus(space, V[I]) == I for I in ideals)
    report.laws.append(LawCheck("ideal-fixed-points", ok))

    ok = all((cl[S] == S) == (S in closed_family) for S in subsets)
    report.laws.append(LawCheck("locus-fixed-points", ok))

    ok = all(
        q in C
        for C in closed_family
        for p in C
        for q in primes
        if ideal_leq(p, q)
    )
    report.laws.append(LawCheck("closed-up-sets", ok))

    t0 = all(
        cl[frozenset([p])] != cl[frozenset([q])]
        for p in primes
        for q in primes
        if p != q
    )
    sober = True
    for C in closed_family:
        if not C:
            continue
        reducible = any(
            A | B == C
            for A in closed_family
            for B in closed_family
            if A < C and B < C
        )
        if reducible:
            continue
        generic = [p for p in C if cl[frozenset([p])] == C]
        if len(generic) != 1:
            sober = False
    report.laws.append(LawCheck("t0-sober", t0 and sober))

    # In this class every ideal is principal, so the compact opens are
    # exactly the complements of the closed sets, and the complement map
    # must be an order isomorphism from the ideal lattice.
    principal = [I for I, flag in zip(ideals, lattice.principal) if flag]
    all_primes = frozenset(primes)
    opens = {all_primes - C for C in closed_family}
    ok = {all_primes - V[P] for P in principal} == opens
    ok = ok and all(
        (all_primes - V[P]) & (all_primes - V[Q]) in opens
        for P in principal
        for Q in principal
    )
    ok = ok and all(
        ideal_leq(P, Q) == ((all_primes - V[P]) <= (all_primes - V[Q]))
        for P in principal
        for Q in principal
    )
    ok = ok and all(
        ideal_leq(P, Q) == (V[P] >= V[Q]) for P in principal for Q in principal
    )
    report.laws.append(LawCheck("compact-open-basis", ok))

    maxes = space.max_ideals()
    antichain = not any(
        p != q and ideal_leq(p, q) for p in maxes for q in maxes
    )
    discrete = all(
        frozenset([m]) == vanishing_locus(space, m) & frozenset(maxes) for m in maxes
    )
    report.laws.append(LawCheck("max-hausdorff", antichain and discrete))

    report.max_dense = closure(space, maxes) == all_primes
    return report


@dataclass
class CorrespondenceCheck:
    """Outcome of matching Spec(G/I) against the primes above I."""

    ideal: Ideal
    passed: bool
    pairs: list = field(default_factory=list)
    detail: str = ""


def quotient_spectrum_correspondence(G: UnitalGroup, I: Ideal) -> CorrespondenceCheck:
    """Check that J -> J/I is an order isomorphism from the primes above I
    onto the spectrum of the quotient, preserving maximality."""
    space = compute_spectrum(G)
    above = [p for p in space.primes if ideal_leq(I, p)]
    q = quotient(G, I)
    if q.trivial:
        ok = not above
        return CorrespondenceCheck(I, ok, [], "" if ok else "trivial quotient with nonempty locus")
    qspace = compute_spectrum(q.group)
    mapped = [q.project_ideal(p) for p in above]
    pairs = list(zip(above, mapped))
    ok = (
        len(set(mapped)) == len(mapped)
        and set(mapped) == set(qspace.primes)
        and all(
            ideal_leq(p1, p2) == ideal_leq(m1, m2)
            for p1, m1 in pairs
            for p2, m2 in pairs
        )
        and all(
            space.is_maximal(p) == qspace.is_maximal(m) for p, m in pairs
        )
    )
    return CorrespondenceCheck(I, ok, pairs)


def specialization_dot(space: SpectrumSpace) -> str:
    """DOT digraph of the specialization order (cover edges only);
    maximal primes are drawn double-circled."""
    lines = ["digraph spectrum {", "  rankdir=BT;"]
    for i, (p, mx) in enumerate(zip(space.primes, space.maximal)):
        shape = ", shape=doublecircle" if mx else ""
        lines.append(f'  p{i} [label="{ideal_label(p)}"{shape}];')
    n = len(space.primes)
    for i in range(n):
        for j in range(n):
            if i == j or not ideal_leq(space.primes[i], space.primes[j]):
                continue
            covered = any(
                k != i
                and k != j
                and ideal_leq(space.primes[i], space.primes[k])
                and ideal_leq(space.primes[k], space.primes[j])
                for k in range(n)
            )
            if not covered:
                lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def spectrum_json(space: SpectrumSpace) -> dict:
    """JSON-ready description: primes with flags, specialization pairs, and
    the closure of each singleton (closures of unions follow, since the
    closure operator preserves finite unions)."""
    from .serialize import ideal_to_json

    ids = {p: f"p{i}" for i, p in enumerate(space.primes)}
    singleton_closures = {
        ids[p]: sorted(ids[q] for q in closure(space, [p])) for p in space.primes
    }
    return {
        "primes": [
            {"id": ids[p], "ideal": ideal_to_json(p), "maximal": mx}
            for p, mx in zip(space.primes, space.maximal)
        ],
        "specialization": [
            [ids[p], ids[q]]
            for p in space.primes
            for q in space.primes
            if p != q and ideal_leq(p, q)
        ],
        "closure": singleton_closures,
        "max_dense": closure(space, space.max_ideals()) == frozenset(space.primes),
    }
