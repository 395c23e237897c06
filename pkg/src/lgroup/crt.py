"""Congruence patching: the classical, strong, and zero-set solvers.

The classical solver accepts any finite system of (ideal, target)
constraints, checks pairwise compatibility modulo the join of each pair of
ideals, and merges targets left to right: at each step the difference
between the running solution and the next target is split across the meet
of the processed ideals and the next ideal, and the processed-side part is
subtracted off.  Distributivity of the ideal lattice guarantees the
difference lies in the join that is being split, so the merge never gets
stuck once the compatibility check has passed.

The strong solver demands agreement only at maximal ideals above each
pairwise join; on strongly semisimple groups that weaker hypothesis
upgrades to full compatibility and the classical merge finishes the job.
When strong semisimplicity fails the solver refuses with a certificate
that also reports whether the stronger classical hypothesis happened to
hold anyway (on these groups, that is exactly when a solution exists).

The zero-set solver is the functional form of the strong one: constraints
are given by generator elements (whose zero sets say where each target
must be matched) and agreement is checked through exact rational values.

Hypotheses are always checked, never assumed; every failure carries a
structured certificate naming the violated condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .core import (
    Element,
    InternalInvariantViolation,
    LGroupError,
    UnitalGroup,
    check_element,
    sub,
    zero,
)
from .ideals import (
    AtomIdeal,
    Ideal,
    ProdIdeal,
    all_ideal,
    check_ideal,
    congruent,
    contains,
    ideal_join,
    ideal_label,
    ideal_leq,
    ideal_meet,
    is_zero_ideal,
    principal_ideal,
)
from .semisimple import is_strongly_semisimple, radical
from .spectrum import compute_spectrum
from .yosida import holder_eval, principal_zero_set


class NotInJoin(LGroupError):
    """The element to split does not belong to the join of the two ideals."""


class LengthMismatch(LGroupError):
    """Generator and target lists have different lengths."""


@dataclass(frozen=True)
class CongruenceSystem:
    """An ordered list of (ideal, target) constraints; duplicates allowed."""

    constraints: Tuple[Tuple[Ideal, Element], ...]

    @classmethod
    def of(cls, pairs) -> "CongruenceSystem":
        return cls(tuple((I, g) for I, g in pairs))

    def __len__(self) -> int:
        return len(self.constraints)

    def __iter__(self):
        return iter(self.constraints)


SystemLike = Union[CongruenceSystem, Sequence[Tuple[Ideal, Element]]]


@dataclass(frozen=True)
class Incompatible:
    """Targets i and j disagree modulo the join of their ideals."""

    i: int
    j: int
    difference: Element
    join_ideal: Ideal


@dataclass(frozen=True)
class MaxHypothesisViolated:
    """Targets i and j disagree at a maximal ideal above their join."""

    i: int
    j: int
    maximal: Ideal


@dataclass(frozen=True)
class NotStronglySemisimple:
    """The group fails the strong-semisimplicity hypothesis.

    ``witness`` is the least principal ideal with a non-semisimple
    quotient.  ``keimel_hypothesis_holds`` reports whether the system
    happened to satisfy the unconditional pairwise hypothesis anyway; on
    these groups a solution exists exactly in that case, so it doubles as
    a solvability diagnostic.  ``incompatible_pair`` names the first pair
    breaking the pairwise hypothesis when there is one.
    """

    witness: Ideal
    keimel_hypothesis_holds: bool
    incompatible_pair: Optional[Tuple[int, int]] = None

    @property
    def solution_exists(self) -> bool:
        return self.keimel_hypothesis_holds


@dataclass(frozen=True)
class IncompatibleOnZeroSets:
    """Targets i and j take different values on a shared zero-set point."""

    i: int
    j: int
    maximal: Ideal


Certificate = Union[
    Incompatible, MaxHypothesisViolated, NotStronglySemisimple, IncompatibleOnZeroSets
]


@dataclass(frozen=True)
class PatchResult:
    """Outcome of a patching run.

    When ``solution`` is present it has been re-verified against every
    constraint; otherwise ``certificate`` names the violated hypothesis.
    ``unique`` is meaningful for the zero-set solver only, where it means
    the zero sets covered the whole maximal spectrum.
    """

    solution: Optional[Element] = None
    unique: bool = False
    certificate: Optional[Certificate] = None

    @property
    def solved(self) -> bool:
        return self.solution is not None


def _normalize(G: UnitalGroup, system: SystemLike) -> CongruenceSystem:
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem.of(system)
    for I, g in system:
        check_ideal(G.structure, I)
        check_element(G.structure, g)
    return system


def riesz_split(
    G: UnitalGroup, d: Element, I: Ideal, J: Ideal
) -> Tuple[Element, Element]:
    """Write d (which must lie in the join of I and J) as a + b with a in I
    and b in J.

    Deterministic: a coordinate claimable by both ideals goes to the first
    one.  Raises NotInJoin otherwise.
    """
    check_element(G.structure, d)
    check_ideal(G.structure, I)
    check_ideal(G.structure, J)
    if not contains(G.structure, ideal_join(I, J), d):
        raise NotInJoin(
            f"{d!r} is not in {ideal_label(I)} v {ideal_label(J)}"
        )
    a, b = _split(G.structure, d, I, J)
    if not (
        contains(G.structure, I, a)
        and contains(G.structure, J, b)
        and G.add(a, b) == d
    ):
        raise InternalInvariantViolation("riesz split postcondition failed")
    return a, b


def _split(structure, d, I: Ideal, J: Ideal):
    if isinstance(I, AtomIdeal):
        if I.full:
            return d, 0
        if J.full:
            return 0, d
        return 0, 0  # d == 0 here, guaranteed by the join membership check
    if isinstance(I, ProdIdeal):
        pairs = [
            _split(c, x, p, q)
            for c, x, p, q in zip(structure.children, d, I.parts, J.parts)
        ]
        return tuple(a for a, _ in pairs), tuple(b for _, b in pairs)
    if I.inner is None:
        return d, (0, zero(structure.bottom))
    if J.inner is None:
        # give the first ideal its maximal share of the bottom component
        ta, tb = _split(
            structure.bottom, d[1], I.inner, all_ideal(structure.bottom)
        )
        return (0, ta), (d[0], tb)
    ta, tb = _split(structure.bottom, d[1], I.inner, J.inner)
    return (0, ta), (0, tb)


def _pairwise_failure(G: UnitalGroup, system: CongruenceSystem):
    cons = system.constraints
    for i in range(len(cons)):
        for j in range(i + 1, len(cons)):
            (Ii, gi), (Ij, gj) = cons[i], cons[j]
            joined = ideal_join(Ii, Ij)
            diff = sub(G.structure, gi, gj)
            if not contains(G.structure, joined, diff):
                return i, j, diff, joined
    return None


def _verify(G: UnitalGroup, system: CongruenceSystem, g: Element) -> None:
    for I, gi in system:
        if not congruent(G, g, gi, I):
            raise InternalInvariantViolation(
                f"patch result fails its congruence modulo {ideal_label(I)}"
            )


def keimel_patch(G: UnitalGroup, system: SystemLike) -> PatchResult:
    """Solve a congruence system under the pairwise-compatibility hypothesis.

    Checks that every two targets agree modulo the join of their ideals
    (returning an Incompatible certificate with 0-based constraint indices
    on failure), then merges targets sequentially.  The loop keeps the
    invariant that the running element is congruent to every processed
    target; the empty system solves to zero.
    """
    system = _normalize(G, system)
    bad = _pairwise_failure(G, system)
    if bad is not None:
        i, j, diff, joined = bad
        return PatchResult(certificate=Incompatible(i, j, diff, joined))
    cons = system.constraints
    if not cons:
        return PatchResult(solution=zero(G.structure))
    g = cons[0][1]
    processed = cons[0][0]
    for Ik, gk in cons[1:]:
        d = sub(G.structure, g, gk)
        a, _ = riesz_split(G, d, processed, Ik)
        g = sub(G.structure, g, a)
        processed = ideal_meet(processed, Ik)
    _verify(G, system, g)
    return PatchResult(solution=g)


def strong_patch(G: UnitalGroup, system: SystemLike) -> PatchResult:
    """Solve a system whose targets agree at maximal ideals above each join.

    The system's ideals must be principal, which is a representation
    invariant of this class (every enumerable ideal carries a generator).
    Three phases: verify the maximal-ideal hypothesis for every pair (the
    diagonal is vacuous); gate on strong semisimplicity, refusing with a
    diagnostic certificate otherwise; then hand over to the classical
    merge, whose stronger hypothesis is now guaranteed to hold.
    """
    system = _normalize(G, system)
    space = compute_spectrum(G)
    maxes = space.max_ideals()
    cons = system.constraints
    for i in range(len(cons)):
        for j in range(i + 1, len(cons)):
            (Ii, gi), (Ij, gj) = cons[i], cons[j]
            joined = ideal_join(Ii, Ij)
            diff = sub(G.structure, gi, gj)
            for m in maxes:
                if ideal_leq(joined, m) and not contains(G.structure, m, diff):
                    return PatchResult(
                        certificate=MaxHypothesisViolated(i, j, m)
                    )
    ok, witness = is_strongly_semisimple(G)
    if not ok:
        bad = _pairwise_failure(G, system)
        return PatchResult(
            certificate=NotStronglySemisimple(
                witness=witness,
                keimel_hypothesis_holds=bad is None,
                incompatible_pair=None if bad is None else (bad[0], bad[1]),
            )
        )
    result = keimel_patch(G, system)
    if result.solution is None:
        raise InternalInvariantViolation(
            "maximal agreement failed to upgrade on a strongly semisimple group"
        )
    # the solution matches each target at every prime above its ideal
    for I, gi in system:
        diff = sub(G.structure, result.solution, gi)
        for p in space.primes:
            if ideal_leq(I, p) and not contains(G.structure, p, diff):
                raise InternalInvariantViolation("prime agreement lost after merge")
    return result


def zero_set_patch(
    G: UnitalGroup,
    generators: Sequence[Element],
    targets: Sequence[Element],
) -> PatchResult:
    """Match targets on the zero sets of the generators.

    Each generator h carries the constraint "agree with the corresponding
    target wherever h vanishes".  Compatibility is checked pointwise on
    overlaps through exact rational values; the group must be strongly
    semisimple, after which the strong solver produces the element.  The
    result is unique exactly when the zero sets cover the whole maximal
    spectrum: two solutions then agree everywhere, and the trivial radical
    forces them equal.
    """
    if len(generators) != len(targets):
        raise LengthMismatch(
            f"{len(generators)} generators against {len(targets)} targets"
        )
    for e in (*generators, *targets):
        check_element(G.structure, e)
    space = compute_spectrum(G)
    zsets = [principal_zero_set(G, h, space) for h in generators]
    for i in range(len(zsets)):
        for j in range(i + 1, len(zsets)):
            for m in sorted(
                zsets[i] & zsets[j], key=space.index
            ):
                vi = holder_eval(G, targets[i], m)
                vj = holder_eval(G, targets[j], m)
                if vi != vj:
                    return PatchResult(
                        certificate=IncompatibleOnZeroSets(i, j, m)
                    )
    system = CongruenceSystem.of(
        (principal_ideal(G.structure, h), g)
        for h, g in zip(generators, targets)
    )
    ok, witness = is_strongly_semisimple(G)
    if not ok:
        bad = _pairwise_failure(G, system)
        return PatchResult(
            certificate=NotStronglySemisimple(
                witness=witness,
                keimel_hypothesis_holds=bad is None,
                incompatible_pair=None if bad is None else (bad[0], bad[1]),
            )
        )
    result = strong_patch(G, system)
    if result.solution is None:
        raise InternalInvariantViolation(
            "zero-set compatibility failed to carry over to the strong solver"
        )
    for i, Zi in enumerate(zsets):
        for m in Zi:
            if holder_eval(G, result.solution, m) != holder_eval(G, targets[i], m):
                raise InternalInvariantViolation("zero-set agreement lost")
    covered = frozenset().union(*zsets) if zsets else frozenset()
    unique = covered == frozenset(space.max_ideals())
    if unique and not is_zero_ideal(radical(G)):
        # covering zero sets pin the solution only because the radical is
        # trivial; strong semisimplicity already implies that
        raise InternalInvariantViolation(
            "strongly semisimple group with nontrivial radical"
        )
    return PatchResult(solution=result.solution, unique=unique)
