"""Parsers and canonical serializers for the on-disk formats.

Family text format: a header line ``n=<int>``, then one set per line as
comma-separated 1-based elements (``-`` for the empty set); ``#`` starts a
comment line.  Structured formats are JSON: families as ``{"n":, "sets":}``,
systems as ``{"n":, "members": [{"S":, "H":}]}``, certificates with all four
fields.  Parsing then serializing then parsing is the identity on canonical
values.
"""

from __future__ import annotations

import json

from .errors import ParseError, ShatterlabError
from .families import SetFamily, elements_of_mask, mask_from_elements
from .sperner import SpernerSystem


# -- families ------------------------------------------------------------------

def parse_family_text(text: str) -> SetFamily:
    n = None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, eq, value = line.partition("=")
            if key.strip() != "n" or not eq:
                raise ParseError("expected header n=<int> before any set line", lineno)
            try:
                n = int(value.strip())
            except ValueError:
                raise ParseError(f"bad ground set size {value.strip()!r}", lineno) from None
            if not 0 <= n:
                raise ParseError(f"ground set size {n} is negative", lineno)
            continue
        mask = _parse_set_line(line, n, lineno)
        if mask in seen:
            raise ParseError(f"duplicate set {line!r}", lineno)
        seen.add(mask)
        masks.append(mask)
    if n is None:
        raise ParseError("missing header line n=<int>")
    try:
        return SetFamily.of(n, masks)
    except ShatterlabError as exc:
        raise ParseError(str(exc)) from None


def _parse_set_line(line: str, n: int, lineno: int) -> int:
    if line == "-":
        return 0
    elements = []
    for piece in line.split(","):
        piece = piece.strip()
        try:
            e = int(piece)
        except ValueError:
            raise ParseError(f"bad element {piece!r}", lineno) from None
        if not 1 <= e <= n:
            raise ParseError(f"element {e} outside ground set [{n}]", lineno)
        if e in elements:
            raise ParseError(f"repeated element {e}", lineno)
        elements.append(e)
    return mask_from_elements(elements, n)


def format_family_text(fam: SetFamily) -> str:
    lines = [f"n={fam.n}"]
    for mask in fam.masks:
        elems = elements_of_mask(mask)
        lines.append(",".join(str(e) for e in elems) if elems else "-")
    return "\n".join(lines) + "\n"


def family_to_object(fam: SetFamily) -> dict:
    return {"n": fam.n, "sets": [list(elements_of_mask(m)) for m in fam.masks]}


def family_from_object(obj) -> SetFamily:
    if not isinstance(obj, dict):
        raise ParseError("family object must be a JSON object")
    if "n" not in obj or "sets" not in obj:
        raise ParseError("family object needs fields 'n' and 'sets'")
    n = obj["n"]
    sets = obj["sets"]
    if not isinstance(n, int) or not isinstance(sets, list):
        raise ParseError("'n' must be an integer and 'sets' an array")
    try:
        return SetFamily.from_sets(n, sets)
    except ShatterlabError as exc:
        raise ParseError(str(exc)) from None


def parse_family(text: str) -> SetFamily:
    """Accept either encoding; JSON when the first character is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return family_from_object(_load_json(text))
    return parse_family_text(text)


# -- systems ---------------------------------------------------------------------

def system_to_object(system: SpernerSystem) -> dict:
    return {
        "n": system.n,
        "members": [
            {"S": list(elements_of_mask(s)), "H": list(elements_of_mask(h))}
            for s, h in system.members
        ],
    }


def system_from_object(obj) -> SpernerSystem:
    if not isinstance(obj, dict):
        raise ParseError("system object must be a JSON object")
    if "n" not in obj or "members" not in obj:
        raise ParseError("system object needs fields 'n' and 'members'")
    n = obj["n"]
    members = obj["members"]
    if not isinstance(n, int) or not isinstance(members, list):
        raise ParseError("'n' must be an integer and 'members' an array")
    pairs = []
    for k, entry in enumerate(members):
        if not isinstance(entry, dict) or "S" not in entry or "H" not in entry:
            raise ParseError(f"member {k} needs fields 'S' and 'H'")
        try:
            s = mask_from_elements(entry["S"], n)
            h = mask_from_elements(entry["H"], n)
        except ShatterlabError as exc:
            raise ParseError(f"member {k}: {exc}") from None
        pairs.append((s, h))
    try:
        return SpernerSystem.of(n, pairs)
    except ShatterlabError as exc:
        raise ParseError(str(exc)) from None


def parse_system(text: str) -> SpernerSystem:
    return system_from_object(_load_json(text))


# -- certificates ------------------------------------------------------------------

def certificate_to_object(cert) -> dict:
    return {
        "chosen_member": list(elements_of_mask(cert.chosen_member)),
        "added_set": list(elements_of_mask(cert.added_set)),
        "successor": system_to_object(cert.successor),
        "augmented_family": family_to_object(cert.augmented_family),
    }


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def roundtrip_stable(text: str) -> bool:
    """Parse, serialize canonically, re-parse: must give the same value."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = _load_json(text)
        if isinstance(obj, dict) and "members" in obj:
            system = system_from_object(obj)
            return system_from_object(system_to_object(system)) == system
        fam = family_from_object(obj)
        return family_from_object(family_to_object(fam)) == fam
    fam = parse_family_text(text)
    return parse_family_text(format_family_text(fam)) == fam
