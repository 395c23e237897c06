"""JSON interchange for structures, elements, ideals, and instance files.

The instance-file schema:

    {
      "structure": "Z" | {"prod": [structure, ...]} | {"lex": structure},
      "unit":      element,
      "ideals":    {name: ideal, ...}              (optional)
      "elements":  {name: element
                    | {"mv": true, "value": element}, ...}   (optional)
      "task":      {"mode": "keimel" | "strong",
                    "ideals": [ideal, ...], "targets": [element, ...]}
                 | {"mode": "zeroset",
                    "generators": [element, ...], "targets": [element, ...]}
                                                   (optional)
    }

Elements are integers for atoms, arrays of child elements for products,
and [top, bottom] pairs for lexicographic extensions.  Ideals are "zero" |
"all" | {"prod": [...]} | {"bottom": ideal}; the two string shorthands are
accepted at any position and normalised structurally.  Unknown keys are
rejected everywhere.  Serialisation is canonical (sorted keys, two-space
indent, trailing newline), so equal values always produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from .core import (
    Atom,
    Element,
    Lex,
    LGroupError,
    NotAStrongUnit,
    Prod,
    ShapeMismatch,
    Structure,
    UnitalGroup,
)
from .ideals import (
    Ideal,
    LexIdeal,
    ProdIdeal,
    all_ideal,
    is_all_ideal,
    is_zero_ideal,
    zero_ideal,
)


class ParseError(LGroupError):
    """Malformed instance input, with a JSON-path diagnostic."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def structure_to_json(structure: Structure):
    if isinstance(structure, Atom):
        return "Z"
    if isinstance(structure, Prod):
        return {"prod": [structure_to_json(c) for c in structure.children]}
    return {"lex": structure_to_json(structure.bottom)}


def structure_from_json(obj, path: str = "structure") -> Structure:
    if obj == "Z":
        return Atom()
    if isinstance(obj, dict):
        if set(obj) == {"prod"}:
            kids = obj["prod"]
            if not isinstance(kids, list) or len(kids) < 2:
                raise ParseError(path, "prod needs a list of at least 2 structures")
            return Prod(
                tuple(
                    structure_from_json(k, f"{path}.prod[{i}]")
                    for i, k in enumerate(kids)
                )
            )
        if set(obj) == {"lex"}:
            return Lex(structure_from_json(obj["lex"], f"{path}.lex"))
        raise ParseError(path, f"unknown structure keys {sorted(obj)}")
    raise ParseError(path, f"expected \"Z\", prod, or lex, got {obj!r}")


def element_to_json(structure: Structure, e: Element):
    if isinstance(structure, Atom):
        return e
    if isinstance(structure, Prod):
        return [element_to_json(c, p) for c, p in zip(structure.children, e)]
    return [e[0], element_to_json(structure.bottom, e[1])]


def element_from_json(structure: Structure, obj, path: str = "element") -> Element:
    if isinstance(structure, Atom):
        if not _is_int(obj):
            raise ParseError(path, f"expected an integer, got {obj!r}")
        return obj
    if isinstance(structure, Prod):
        n = len(structure.children)
        if not isinstance(obj, list) or len(obj) != n:
            raise ParseError(path, f"expected an array of {n} elements")
        return tuple(
            element_from_json(c, o, f"{path}[{i}]")
            for i, (c, o) in enumerate(zip(structure.children, obj))
        )
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(path, "expected a [top, bottom] pair")
    if not _is_int(obj[0]):
        raise ParseError(f"{path}[0]", f"expected an integer, got {obj[0]!r}")
    return (obj[0], element_from_json(structure.bottom, obj[1], f"{path}[1]"))


def ideal_to_json(I: Ideal):
    # canonical form compacts the trivial and improper ideals to their
    # shorthands at every level, so serialisation is byte-stable
    if is_zero_ideal(I):
        return "zero"
    if is_all_ideal(I):
        return "all"
    if isinstance(I, ProdIdeal):
        return {"prod": [ideal_to_json(p) for p in I.parts]}
    return {"bottom": ideal_to_json(I.inner)}


def ideal_from_json(structure: Structure, obj, path: str = "ideal") -> Ideal:
    if obj == "zero":
        return zero_ideal(structure)
    if obj == "all":
        return all_ideal(structure)
    if isinstance(obj, dict) and set(obj) == {"prod"}:
        if not isinstance(structure, Prod):
            raise ParseError(path, "prod ideal against a non-product structure")
        kids = obj["prod"]
        n = len(structure.children)
        if not isinstance(kids, list) or len(kids) != n:
            raise ParseError(path, f"expected {n} component ideals")
        return ProdIdeal(
            tuple(
                ideal_from_json(c, k, f"{path}.prod[{i}]")
                for i, (c, k) in enumerate(zip(structure.children, kids))
            )
        )
    if isinstance(obj, dict) and set(obj) == {"bottom"}:
        if not isinstance(structure, Lex):
            raise ParseError(path, "bottom ideal against a non-lex structure")
        return LexIdeal(ideal_from_json(structure.bottom, obj["bottom"], f"{path}.bottom"))
    raise ParseError(path, f"expected \"zero\", \"all\", prod, or bottom, got {obj!r}")


@dataclass(frozen=True)
class ElementEntry:
    value: Element
    mv: bool = False


@dataclass(frozen=True)
class PatchTask:
    mode: str  # "keimel" or "strong"
    ideals: Tuple[Ideal, ...]
    targets: Tuple[Element, ...]


@dataclass(frozen=True)
class ZeroSetTask:
    generators: Tuple[Element, ...]
    targets: Tuple[Element, ...]


Task = Union[PatchTask, ZeroSetTask]


@dataclass
class Instance:
    group: UnitalGroup
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    elements: Dict[str, ElementEntry] = field(default_factory=dict)
    task: Optional[Task] = None


def _require_keys(obj: dict, allowed: set, path: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(path, f"unknown keys {sorted(unknown)}")


def _parse_task(structure: Structure, obj, path: str) -> Task:
    if not isinstance(obj, dict):
        raise ParseError(path, "task must be an object")
    mode = obj.get("mode")
    if mode in ("keimel", "strong"):
        _require_keys(obj, {"mode", "ideals", "targets"}, path)
        ideals = obj.get("ideals")
        targets = obj.get("targets")
        if not isinstance(ideals, list) or not isinstance(targets, list):
            raise ParseError(path, "ideals and targets must be arrays")
        if len(ideals) != len(targets):
            raise ParseError(path, "ideals and targets must have equal length")
        return PatchTask(
            mode,
            tuple(
                ideal_from_json(structure, k, f"{path}.ideals[{i}]")
                for i, k in enumerate(ideals)
            ),
            tuple(
                element_from_json(structure, t, f"{path}.targets[{i}]")
                for i, t in enumerate(targets)
            ),
        )
    if mode == "zeroset":
        _require_keys(obj, {"mode", "generators", "targets"}, path)
        gens = obj.get("generators")
        targets = obj.get("targets")
        if not isinstance(gens, list) or not isinstance(targets, list):
            raise ParseError(path, "generators and targets must be arrays")
        if len(gens) != len(targets):
            raise ParseError(path, "generators and targets must have equal length")
        return ZeroSetTask(
            tuple(
                element_from_json(structure, g, f"{path}.generators[{i}]")
                for i, g in enumerate(gens)
            ),
            tuple(
                element_from_json(structure, t, f"{path}.targets[{i}]")
                for i, t in enumerate(targets)
            ),
        )
    raise ParseError(f"{path}.mode", f"expected keimel, strong, or zeroset, got {mode!r}")


def instance_from_json(obj) -> Instance:
    if not isinstance(obj, dict):
        raise ParseError("$", "instance file must be a JSON object")
    _require_keys(obj, {"structure", "unit", "ideals", "elements", "task"}, "$")
    if "structure" not in obj or "unit" not in obj:
        raise ParseError("$", "structure and unit are required")
    structure = structure_from_json(obj["structure"])
    unit = element_from_json(structure, obj["unit"], "unit")
    try:
        group = UnitalGroup(structure, unit)
    except (ShapeMismatch, NotAStrongUnit) as exc:
        raise ParseError("unit", str(exc)) from exc
    instance = Instance(group)
    ideals = obj.get("ideals", {})
    if not isinstance(ideals, dict):
        raise ParseError("ideals", "must be an object of named ideals")
    for name, raw in ideals.items():
        instance.ideals[name] = ideal_from_json(structure, raw, f"ideals.{name}")
    elements = obj.get("elements", {})
    if not isinstance(elements, dict):
        raise ParseError("elements", "must be an object of named elements")
    for name, raw in elements.items():
        path = f"elements.{name}"
        if isinstance(raw, dict):
            _require_keys(raw, {"mv", "value"}, path)
            if raw.get("mv") is not True or "value" not in raw:
                raise ParseError(path, "tagged entries need \"mv\": true and a value")
            value = element_from_json(structure, raw["value"], f"{path}.value")
            instance.elements[name] = ElementEntry(value, mv=True)
        else:
            instance.elements[name] = ElementEntry(
                element_from_json(structure, raw, path)
            )
    if "task" in obj:
        instance.task = _parse_task(structure, obj["task"], "task")
    return instance


def instance_to_json(instance: Instance) -> dict:
    structure = instance.group.structure
    out: dict = {
        "structure": structure_to_json(structure),
        "unit": element_to_json(structure, instance.group.unit),
    }
    if instance.ideals:
        out["ideals"] = {
            name: ideal_to_json(I) for name, I in instance.ideals.items()
        }
    if instance.elements:
        rendered = {}
        for name, entry in instance.elements.items():
            value = element_to_json(structure, entry.value)
            rendered[name] = {"mv": True, "value": value} if entry.mv else value
        out["elements"] = rendered
    task = instance.task
    if isinstance(task, PatchTask):
        out["task"] = {
            "mode": task.mode,
            "ideals": [ideal_to_json(I) for I in task.ideals],
            "targets": [element_to_json(structure, t) for t in task.targets],
        }
    elif isinstance(task, ZeroSetTask):
        out["task"] = {
            "mode": "zeroset",
            "generators": [element_to_json(structure, g) for g in task.generators],
            "targets": [element_to_json(structure, t) for t in task.targets],
        }
    return out


def certificate_to_json(structure: Structure, cert) -> dict:
    """Structured rendering of a patching failure certificate."""
    from .crt import (
        Incompatible,
        IncompatibleOnZeroSets,
        MaxHypothesisViolated,
        NotStronglySemisimple,
    )

    if isinstance(cert, Incompatible):
        return {
            "kind": "incompatible",
            "i": cert.i,
            "j": cert.j,
            "difference": element_to_json(structure, cert.difference),
            "join_ideal": ideal_to_json(cert.join_ideal),
        }
    if isinstance(cert, MaxHypothesisViolated):
        return {
            "kind": "max-hypothesis-violated",
            "i": cert.i,
            "j": cert.j,
            "maximal": ideal_to_json(cert.maximal),
        }
    if isinstance(cert, NotStronglySemisimple):
        out = {
            "kind": "not-strongly-semisimple",
            "witness": ideal_to_json(cert.witness),
            "keimel_hypothesis_holds": cert.keimel_hypothesis_holds,
            "solution_exists": cert.solution_exists,
        }
        if cert.incompatible_pair is not None:
            out["incompatible_pair"] = list(cert.incompatible_pair)
        return out
    if isinstance(cert, IncompatibleOnZeroSets):
        return {
            "kind": "incompatible-on-zero-sets",
            "i": cert.i,
            "j": cert.j,
            "maximal": ideal_to_json(cert.maximal),
        }
    raise LGroupError(f"unknown certificate {cert!r}")


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"invalid JSON: {exc}") from exc
    return instance_from_json(obj)
