"""JSON documents for complexes and analysis reports."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .complex import SimplicialComplex, from_facets

__all__ = ["ComplexDocument", "DocumentError", "load_document", "dump_json", "SCHEMA"]

SCHEMA = 1


class DocumentError(ValueError):
    pass


@dataclass
class ComplexDocument:
    """``{"name": str, "m": int, "facets": [[int, ...], ...], "metadata": {...}}``; facets are 1-based."""

    name: str
    m: int
    facets: list
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_complex(cls, K: SimplicialComplex, name: str, metadata: dict | None = None) -> ComplexDocument:
        return cls(name, K.m, [list(f) for f in K.facets], dict(metadata or {}))

    def to_complex(self) -> SimplicialComplex:
        try:
            return from_facets(self.m, self.facets)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None

    def to_dict(self) -> dict:
        d = {"name": self.name, "m": self.m, "facets": [list(f) for f in self.facets]}
        if self.metadata:
            d["metadata"] = self.metadata
        return d

    def dumps(self) -> str:
        return dump_json(self.to_dict())

    @classmethod
    def from_dict(cls, d, where: str = "<document>") -> ComplexDocument:
        if not isinstance(d, dict):
            raise DocumentError(f"{where}: top level must be an object")
        for key in ("name", "m", "facets"):
            if key not in d:
                raise DocumentError(f"{where}: missing field {key!r}")
        if not isinstance(d["name"], str):
            raise DocumentError(f"{where}: 'name' must be a string")
        m = d["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 0:
            raise DocumentError(f"{where}: 'm' must be a non-negative integer")
        facets = d["facets"]
        if not isinstance(facets, list):
            raise DocumentError(f"{where}: 'facets' must be a list")
        for i, f in enumerate(facets):
            if not isinstance(f, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
                raise DocumentError(f"{where}: facets[{i}] must be a list of integers")
        meta = d.get("metadata", {})
        if not isinstance(meta, dict):
            raise DocumentError(f"{where}: 'metadata' must be an object")
        doc = cls(d["name"], m, [list(f) for f in facets], meta)
        try:
            doc.to_complex()
        except DocumentError as exc:
            raise DocumentError(f"{where}: {exc}") from None
        return doc

    @classmethod
    def loads(cls, text: str, where: str = "<document>") -> ComplexDocument:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{where}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return cls.from_dict(d, where)


def load_document(path) -> ComplexDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    return ComplexDocument.loads(text, str(path))


_SCALAR_LIST = re.compile(r"\[\s*((?:-?[\d.eE+-]+|true|false|null)(?:,\s*(?:-?[\d.eE+-]+|true|false|null))*)\s*\]")


def dump_json(obj) -> str:
    """Indented JSON with lists of numbers kept on one line; ends with a newline."""
    text = json.dumps(obj, indent=2)
    text = _SCALAR_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"
