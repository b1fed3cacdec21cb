"""JSON file format for category presentations.

Object vectors are written as ``{name: multiplicity}`` maps without zero
entries, index sets as name lists in indecomposable order, and tau/shift as
``{name: name}`` maps. Optional fields are omitted when absent and flags when
false, so serialization is canonical and byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .model import CategoryPresentation, Conflation

FIELDS = ("name", "indecomposables", "hom", "ext", "shift", "tau", "projectives",
          "injectives", "conflations", "generator", "cluster_tilting", "is_truncation")


class ParseError(ValueError):
    """Malformed document. ``line``/``column`` are set for JSON syntax errors."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


def _expect(cond, msg):
    if not cond:
        raise ParseError(msg)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_dict(doc: Any) -> CategoryPresentation:
    _expect(isinstance(doc, dict), "top level must be an object")
    unknown = sorted(set(doc) - set(FIELDS))
    _expect(not unknown, f"unknown field(s): {', '.join(unknown)}")
    _expect("name" in doc and isinstance(doc["name"], str), "'name' must be a string")
    names = doc.get("indecomposables")
    _expect(isinstance(names, list) and all(isinstance(s, str) for s in names),
            "'indecomposables' must be a list of strings")
    index: dict[str, int] = {}
    for i, s in enumerate(names):
        index.setdefault(s, i)
    n = len(names)

    def idx(name, where):
        _expect(isinstance(name, str), f"{where}: expected an indecomposable name, got {name!r}")
        _expect(name in index, f"{where}: unknown indecomposable {name!r}")
        return index[name]

    def name_set(key):
        if key not in doc:
            return None
        val = doc[key]
        _expect(isinstance(val, list), f"'{key}' must be a list of names")
        return frozenset(idx(s, key) for s in val)

    def matrix(key):
        if key not in doc:
            return None
        m = doc[key]
        _expect(isinstance(m, list) and all(isinstance(r, list) and all(_is_int(x) for x in r)
                                            for r in m), f"'{key}' must be a matrix of integers")
        return tuple(tuple(r) for r in m)

    def name_map(key):
        val = doc[key]
        _expect(isinstance(val, dict), f"'{key}' must be an object mapping names to names")
        out: list[Optional[int]] = [None] * n
        for src, dst in val.items():
            out[idx(src, key)] = idx(dst, f"{key}[{src}]")
        return out

    def vector(obj, where):
        _expect(isinstance(obj, dict), f"{where}: object vector must be a name->multiplicity map")
        v = [0] * n
        for s, k in obj.items():
            _expect(_is_int(k), f"{where}: multiplicity of {s!r} must be an integer")
            v[idx(s, where)] += k
        return tuple(v)

    shift = None
    if "shift" in doc:
        m = name_map("shift")
        _expect(all(x is not None for x in m), "'shift' must be defined on every indecomposable")
        shift = tuple(m)
    tau = tuple(name_map("tau")) if "tau" in doc else None

    confs = []
    raw = doc.get("conflations", [])
    _expect(isinstance(raw, list), "'conflations' must be a list")
    for k, c in enumerate(raw):
        where = f"conflations[{k}]"
        _expect(isinstance(c, dict), f"{where} must be an object")
        extra = sorted(set(c) - {"a", "b", "c", "ar", "rel_t"})
        _expect(not extra, f"{where}: unknown field(s) {', '.join(extra)}")
        flags = {}
        for f in ("ar", "rel_t"):
            flags[f] = c.get(f, False)
            _expect(isinstance(flags[f], bool), f"{where}.{f} must be a boolean")
        confs.append(Conflation(vector(c.get("a", {}), where + ".a"),
                                vector(c.get("b", {}), where + ".b"),
                                vector(c.get("c", {}), where + ".c"), **flags))

    trunc = doc.get("is_truncation", False)
    _expect(isinstance(trunc, bool), "'is_truncation' must be a boolean")
    return CategoryPresentation(
        name=doc["name"], indecomposables=tuple(names), conflations=tuple(confs),
        projectives=name_set("projectives") or frozenset(),
        injectives=name_set("injectives") or frozenset(),
        hom=matrix("hom"), ext=matrix("ext"), shift=shift, tau=tau,
        generator=name_set("generator"), cluster_tilting=name_set("cluster_tilting"),
        is_truncation=trunc)


def to_dict(p: CategoryPresentation) -> dict:
    names = p.indecomposables

    def vec(v):
        return {names[i]: k for i, k in enumerate(v) if k}

    def names_of(s):
        return [names[i] for i in sorted(s)]

    doc: dict[str, Any] = {"name": p.name, "indecomposables": list(names)}
    if p.hom is not None:
        doc["hom"] = [list(r) for r in p.hom]
    if p.ext is not None:
        doc["ext"] = [list(r) for r in p.ext]
    if p.shift is not None:
        doc["shift"] = {names[i]: names[j] for i, j in enumerate(p.shift)}
    if p.tau is not None:
        doc["tau"] = {names[i]: names[j] for i, j in enumerate(p.tau) if j is not None}
    doc["projectives"] = names_of(p.projectives)
    doc["injectives"] = names_of(p.injectives)
    confs = []
    for c in p.conflations:
        d: dict[str, Any] = {"a": vec(c.a), "b": vec(c.b), "c": vec(c.c)}
        if c.ar:
            d["ar"] = True
        if c.rel_t:
            d["rel_t"] = True
        confs.append(d)
    doc["conflations"] = confs
    if p.generator is not None:
        doc["generator"] = names_of(p.generator)
    if p.cluster_tilting is not None:
        doc["cluster_tilting"] = names_of(p.cluster_tilting)
    if p.is_truncation:
        doc["is_truncation"] = True
    return doc


def dumps(p: CategoryPresentation) -> str:
    """Canonical text: one top-level field per line, matrix rows and
    conflations one per line."""
    doc = to_dict(p)

    def compact(x):
        return json.dumps(x, ensure_ascii=False)

    lines = []
    for key, val in doc.items():
        if key in ("hom", "ext", "conflations") and val:
            inner = ",\n".join("    " + compact(r) for r in val)
            lines.append(f"  {compact(key)}: [\n{inner}\n  ]")
        else:
            lines.append(f"  {compact(key)}: {compact(val)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> CategoryPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    return from_dict(doc)


def load(path) -> CategoryPresentation:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(p: CategoryPresentation, path) -> None:
    Path(path).write_text(dumps(p), encoding="utf-8")
