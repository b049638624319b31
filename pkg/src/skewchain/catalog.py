"""Built-in instances, shipped as JSON files in ``skewchain/data``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .chaingroup import ChainGroupRep
from .io import parse_matrix_document, parse_matroid_document, parse_multilinear_document
from .matroid import Matroid
from .multilinear import MultilinearRep

PAYLOADS = ("rep", "matroid", "multilinear")


class UnknownEntry(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    payload: str
    provenance: str
    expected: dict
    document: dict

    def load(self) -> ChainGroupRep | Matroid | MultilinearRep:
        if self.payload == "rep":
            return parse_matrix_document(self.document)
        if self.payload == "matroid":
            return parse_matroid_document(self.document)
        return parse_multilinear_document(self.document)

    def rep(self) -> ChainGroupRep:
        if self.payload != "rep":
            raise TypeError(f"{self.name} holds a {self.payload}, not a rep")
        return self.load()

    def to_json(self) -> dict:
        return {"name": self.name, "payload": self.payload, "provenance": self.provenance,
                "expected": self.expected, "document": self.document}


def _data_dir():
    return resources.files("skewchain") / "data"


@lru_cache(maxsize=None)
def _entries() -> dict:
    out = {}
    for path in sorted(_data_dir().iterdir(), key=lambda p: p.name):
        if not path.name.endswith(".json"):
            continue
        raw = json.loads(path.read_text())
        entry = CatalogEntry(raw["name"], raw["payload"], raw["provenance"], raw["expected"],
                             raw["document"])
        if entry.payload not in PAYLOADS:
            raise ValueError(f"{path.name}: unknown payload {entry.payload!r}")
        out[entry.name] = entry
    return out


def names() -> list:
    return list(_entries())


def get(name: str) -> CatalogEntry:
    try:
        return _entries()[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; try one of {names()}") from None


def load(name: str):
    return get(name).load()
