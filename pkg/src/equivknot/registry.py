"""
Quotient data for named strongly invertible knots.

The two quotient knots of each entry are read from figures and enter as data,
each with a provenance string. Entries with a ``parameter`` field are families
whose descriptors contain ``{m}`` and are instantiated on lookup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .knots import Descriptor, parse_descriptor

REGISTRY_SCHEMA_VERSION = 1
_REQUIRED = ("name", "q1", "q2", "provenance")


class RegistryError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientData:
    name: str
    q1: Descriptor
    q2: Descriptor
    provenance: str
    u_tilde_upper: Optional[int] = None
    u_tilde_provenance: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "q1": str(self.q1), "q2": str(self.q2), "provenance": self.provenance}
        if self.u_tilde_upper is not None:
            out["u_tilde_upper"] = self.u_tilde_upper
            out["u_tilde_provenance"] = self.u_tilde_provenance
        return out


@dataclass(frozen=True)
class _Entry:
    raw: dict
    line: int

    @property
    def name(self) -> str:
        return self.raw["name"]

    @property
    def parameter(self) -> Optional[str]:
        return self.raw.get("parameter")

    def instantiate(self, **values) -> QuotientData:
        raw = self.raw
        param = self.parameter
        name = raw["name"]
        if param is not None:
            if param not in values:
                raise RegistryError(f"{name} is a family: give a value for {param}")
            fill = {param: int(values[param])}
            q1, q2 = raw["q1"].format(**fill), raw["q2"].format(**fill)
            name = name.replace(f"_{param}", f"_{fill[param]}")
        else:
            q1, q2 = raw["q1"], raw["q2"]
        return QuotientData(
            name, parse_descriptor(q1), parse_descriptor(q2), raw["provenance"],
            raw.get("u_tilde_upper"), raw.get("u_tilde_provenance", ""),
        )


class Registry:
    def __init__(self, entries: list[_Entry]):
        self._entries = {e.name: e for e in entries}

    def names(self) -> list[str]:
        return list(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def is_family(self, name: str) -> bool:
        return self._entries[name].parameter is not None

    def get(self, name: str, **values) -> QuotientData:
        if name not in self._entries:
            raise KeyError(f"unknown knot {name!r}; known: {', '.join(self._entries)}")
        return self._entries[name].instantiate(**values)


def _line_of(text: str, name: str) -> int:
    needle = json.dumps(name)
    for k, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return k
    return 0


def parse_registry(text: str) -> Registry:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryError(f"registry is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("knots"), list):
        raise RegistryError("registry must be an object with a 'knots' list")
    version = data.get("schema_version", REGISTRY_SCHEMA_VERSION)
    if version != REGISTRY_SCHEMA_VERSION:
        raise RegistryError(f"unsupported registry schema version {version}")
    entries: list[_Entry] = []
    seen: set[str] = set()
    for k, raw in enumerate(data["knots"]):
        if not isinstance(raw, dict):
            raise RegistryError(f"entry {k}: expected an object")
        line = _line_of(text, raw.get("name", ""))
        where = f"entry {k} ({raw.get('name', '?')}), line {line}"
        for key in _REQUIRED:
            if not isinstance(raw.get(key), str) or not raw[key].strip():
                raise RegistryError(f"{where}: field '{key}' must be a nonempty string")
        if raw["name"] in seen:
            raise RegistryError(f"{where}: duplicate name")
        seen.add(raw["name"])
        upper = raw.get("u_tilde_upper")
        if upper is not None and (not isinstance(upper, int) or upper < 0):
            raise RegistryError(f"{where}: field 'u_tilde_upper' must be a nonnegative integer")
        entry = _Entry(raw, line)
        probe = {entry.parameter: 0} if entry.parameter else {}
        for key in ("q1", "q2"):
            try:
                text_value = raw[key].format(**probe) if probe else raw[key]
                parse_descriptor(text_value)
            except (ValueError, KeyError, IndexError) as exc:
                raise RegistryError(f"{where}: field '{key}': {exc}") from None
        entries.append(entry)
    return Registry(entries)


def load_registry(path: Union[str, Path, None] = None) -> Registry:
    """Load a registry file, or the bundled default when ``path`` is None."""
    if path is None:
        text = resources.files("equivknot").joinpath("data/registry.json").read_text()
    else:
        text = Path(path).read_text()
    return parse_registry(text)
