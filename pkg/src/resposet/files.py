"""The shared JSON structure-file schema.

One schema serves all structure kinds by progressive enrichment:

    {
      "elements":   ["0", "a", ...],
      "covers":     [["0", "a"], ...],
      "involution": {"0": "1", ...},           optional
      "unit":       "1",                        optional, with odot/arrow
      "odot":       {"0": {"0": "0", ...}, ...} optional
      "arrow":      {...},                      optional
      "provenance": {...}                       optional, free-form
    }

Unknown fields are rejected.  Labels starting with "#" are reserved for
construction-generated chain elements and only the canonical "#c<i>"
forms are accepted back on input (so construction output round-trips).
"""

import json
import re

from .errors import (
    InvariantViolation,
    MalformedDocument,
    ReservedLabel,
    SchemaViolation,
    StructureError,
)
from .involution import (
    InvolutedPoset,
    check_antitone_involution,
    involution_from_mapping,
)
from .order import Poset, poset_from_covers, poset_from_relation
from .residuation import ResiduatedStructure, structure_from_tables

_KNOWN_FIELDS = {"elements", "covers", "involution", "unit", "odot", "arrow", "provenance"}
_GENERATED = re.compile(r"^#c[0-9]+$")


class Bundle:
    """Everything a structure file can carry; richest() picks the public type."""

    def __init__(self, poset, involution=None, structure=None, provenance=None):
        self.poset = poset
        self.involution = involution
        self.structure = structure
        self.provenance = provenance

    def richest(self):
        if self.structure is not None:
            return self.structure
        if self.involution is not None:
            return InvolutedPoset(self.poset, self.involution)
        return self.poset


def _expect(doc, key, kind, path):
    if key not in doc:
        raise SchemaViolation(f"required field {key!r} is missing", path)
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaViolation(f"field {key!r} has the wrong type", f"{path}/{key}")
    return value


def _check_label(x, path):
    if not isinstance(x, str):
        raise SchemaViolation("labels must be strings", path)
    if x.startswith("#") and not _GENERATED.match(x):
        raise ReservedLabel(
            f"label {x!r}: the '#' prefix is reserved for generated chain elements"
        )
    return x


def parse_structure(doc, full_order=False) -> Bundle:
    """Validate a decoded JSON document and build the richest structure.

    With full_order=True the "covers" field is read as the complete
    order relation instead of the Hasse relation; it is closed and
    validated identically.
    """
    if not isinstance(doc, dict):
        raise SchemaViolation("document must be a JSON object", "/")
    unknown = sorted(set(doc) - _KNOWN_FIELDS)
    if unknown:
        raise SchemaViolation(f"unknown field {unknown[0]!r}", f"/{unknown[0]}")

    elements = _expect(doc, "elements", list, "/")
    elements = [_check_label(x, f"/elements/{i}") for i, x in enumerate(elements)]
    covers = _expect(doc, "covers", list, "/")
    pairs = []
    for i, pair in enumerate(covers):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise SchemaViolation("covers entries must be 2-arrays", f"/covers/{i}")
        pairs.append((pair[0], pair[1]))
    build = poset_from_relation if full_order else poset_from_covers
    poset = build(elements, pairs)

    involution = None
    if "involution" in doc:
        mapping = _expect(doc, "involution", dict, "/")
        for x in mapping:
            if x not in poset:
                raise SchemaViolation(f"involution key {x!r} is not an element", "/involution")
        involution = involution_from_mapping(poset, mapping)
        report = check_antitone_involution(poset, involution)
        if not report.overall:
            bad = report.failed()[0]
            raise InvariantViolation(
                f"involution violates {bad.name} at {bad.witness}", witness=bad.witness
            )

    structure = None
    table_fields = [f for f in ("unit", "odot", "arrow") if f in doc]
    if table_fields:
        if len(table_fields) != 3:
            missing = sorted({"unit", "odot", "arrow"} - set(table_fields))
            raise SchemaViolation(
                f"residuated structures need unit/odot/arrow together; missing {missing[0]!r}",
                "/",
            )
        unit = _expect(doc, "unit", str, "/")
        if unit not in poset:
            raise SchemaViolation(f"unit {unit!r} is not an element", "/unit")
        odot = _read_table(doc, "odot", poset)
        arrow = _read_table(doc, "arrow", poset)
        structure = structure_from_tables(poset, unit, odot, arrow)

    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, dict):
        raise SchemaViolation("provenance must be an object", "/provenance")
    return Bundle(poset, involution, structure, provenance)


def _read_table(doc, key, poset):
    table = _expect(doc, key, dict, "/")
    for x in poset.elements:
        if x not in table:
            raise SchemaViolation(f"row {x!r} is missing", f"/{key}")
        row = table[x]
        if not isinstance(row, dict):
            raise SchemaViolation(f"row {x!r} must be an object", f"/{key}/{x}")
        for y in poset.elements:
            if y not in row:
                raise SchemaViolation(f"entry {y!r} is missing", f"/{key}/{x}")
            if row[y] not in poset:
                raise SchemaViolation(
                    f"value {row[y]!r} is not an element", f"/{key}/{x}/{y}"
                )
        extra = sorted(set(row) - set(poset.elements))
        if extra:
            raise SchemaViolation(f"unknown column {extra[0]!r}", f"/{key}/{x}")
    extra = sorted(set(table) - set(poset.elements))
    if extra:
        raise SchemaViolation(f"unknown row {extra[0]!r}", f"/{key}")
    return table


def load_structure(stream, full_order=False) -> Bundle:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return parse_structure(doc, full_order=full_order)


def poset_to_doc(p: Poset) -> dict:
    return {
        "elements": list(p.elements),
        "covers": [[x, y] for x, y in p.covers()],
    }


def involuted_to_doc(ip: InvolutedPoset) -> dict:
    doc = poset_to_doc(ip.poset)
    doc["involution"] = {x: ip.involution(x) for x in ip.poset.elements}
    return doc


def structure_to_doc(s: ResiduatedStructure, involution=None, provenance=None) -> dict:
    doc = poset_to_doc(s.poset)
    if involution is not None:
        doc["involution"] = {x: involution(x) for x in s.poset.elements}
    doc["unit"] = s.unit
    doc["odot"] = s.table_as_labels("odot")
    doc["arrow"] = s.table_as_labels("arrow")
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def dump(doc: dict, stream):
    json.dump(doc, stream, indent=2, ensure_ascii=False)
    stream.write("\n")
