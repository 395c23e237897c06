"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random

from lgroup import (
    Atom,
    Lex,
    Prod,
    UnitalGroup,
    Z,
    atom_count,
    lex,
    prod,
    validate_unital_group,
)

A2 = validate_unital_group(prod(Z, Z), (1, 1))
C3 = validate_unital_group(prod(Z, Z, Z), (1, 2, 1))
LEX = validate_unital_group(lex(Z), (1, 0))
MIX = validate_unital_group(prod(Z, lex(Z)), (1, (1, 0)))
CHAIN3 = validate_unital_group(lex(lex(Z)), (2, (-1, 5)))

GALLERY_GROUPS = {"a2": A2, "c3": C3, "lex": LEX, "mix": MIX}


def random_structure(rng: random.Random, max_depth: int = 3, max_width: int = 4):
    if max_depth <= 1 or rng.random() < 0.3:
        return Atom()
    if rng.random() < 0.4:
        return Lex(random_structure(rng, max_depth - 1, max_width))
    width = rng.randint(2, max_width)
    return Prod(
        tuple(random_structure(rng, max_depth - 1, max_width) for _ in range(width))
    )


def random_element(rng: random.Random, structure, bound: int = 3):
    if isinstance(structure, Atom):
        return rng.randint(-bound, bound)
    if isinstance(structure, Prod):
        return tuple(random_element(rng, c, bound) for c in structure.children)
    return (rng.randint(-bound, bound), random_element(rng, structure.bottom, bound))


def random_unit(rng: random.Random, structure):
    if isinstance(structure, Atom):
        return rng.randint(1, 3)
    if isinstance(structure, Prod):
        return tuple(random_unit(rng, c) for c in structure.children)
    return (rng.randint(1, 3), random_element(rng, structure.bottom, 2))


def random_group(rng: random.Random, max_atoms: int = 7) -> UnitalGroup:
    while True:
        structure = random_structure(rng)
        if atom_count(structure) <= max_atoms:
            return UnitalGroup(structure, random_unit(rng, structure))
