"""Knot catalogs: built-in torus knots plus JSON files of Seifert matrices.

A catalog file is a JSON array of objects::

    [{"name": "trefoil2", "seifert_matrix": [[-1, 1], [0, -1]]}]
"""
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DuplicateName, LTError, ParseError, UnknownKnot, ValidationError
from .seifert import KnotSpec, from_matrix, torus_knot

__all__ = [
    "CatalogEntry",
    "builtin_catalog",
    "parse_catalog",
    "load_catalog",
    "dump_catalog",
    "lookup",
    "ALIASES",
]

BUILTIN_TORUS = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]
ALIASES = {"trefoil": "T(2,3)"}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    seifert_matrix: tuple
    source: str = "builtin"

    @property
    def knot(self) -> KnotSpec:
        return from_matrix(self.name, self.seifert_matrix)

    def to_json(self):
        return {"name": self.name, "seifert_matrix": [list(r) for r in self.seifert_matrix]}


@lru_cache(maxsize=1)
def builtin_catalog():
    entries = [CatalogEntry("unknot", ())]
    for p, q in BUILTIN_TORUS:
        K = torus_knot(p, q)
        entries.append(CatalogEntry(K.name, K.matrix.entries))
    return tuple(entries)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_catalog(text, source="<string>"):
    """Parse and validate catalog JSON text; returns a list of entries."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, list):
        raise ParseError(f"{source}: top level must be a JSON array")
    entries = []
    seen = set()
    for idx, item in enumerate(data):
        if not isinstance(item, dict) or set(item) - {"name", "seifert_matrix"}:
            raise ParseError(f"{source}: entry {idx} must be an object with 'name' and 'seifert_matrix'")
        name = item.get("name")
        matrix = item.get("seifert_matrix")
        if not isinstance(name, str) or not name:
            raise ParseError(f"{source}: entry {idx}: 'name' must be a nonempty string")
        if not isinstance(matrix, list) or not all(
            isinstance(r, list) and all(_is_int(x) for x in r) for r in matrix
        ):
            raise ParseError(f"{source}: entry {name!r}: 'seifert_matrix' must be an array of integer arrays")
        if name in seen:
            raise DuplicateName(f"{source}: duplicate knot name {name!r}")
        seen.add(name)
        try:
            from_matrix(name, matrix)
        except (LTError, ValueError) as e:
            raise ValidationError(f"{source}: entry {name!r}: {type(e).__name__}: {e}") from None
        entries.append(CatalogEntry(name, tuple(tuple(r) for r in matrix), source))
    return entries


def load_catalog(path, include_builtins=True):
    """Read a catalog file and merge it after the built-in entries."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    entries = parse_catalog(text, str(path))
    if not include_builtins:
        return entries
    builtin = list(builtin_catalog())
    taken = {e.name for e in builtin} | set(ALIASES)
    for e in entries:
        if e.name in taken:
            raise DuplicateName(f"{path}: knot name {e.name!r} clashes with a built-in entry")
    return builtin + entries


def dump_catalog(entries, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump([e.to_json() for e in entries], fh, indent=1)
        fh.write("\n")


def lookup(entries, name) -> KnotSpec:
    name = ALIASES.get(name, name)
    for e in entries:
        if e.name == name:
            return e.knot
    raise UnknownKnot(f"no knot named {name!r} in the catalog")
