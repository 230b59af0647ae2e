"""JSON system files.

A system file is one JSON object with an integer ``n`` and arrays ``a``, ``b``,
``c``, ``p``, ``q``, ``y`` of scalar strings (``"32"``, ``"751/32"``,
``"-2.2838"``). Values are kept exact; float conversion happens at solve time.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import BorderedSystem, validate_system
from .errors import BadFile
from .scalar import format_scalar

__all__ = ["system_to_dict", "system_from_dict", "dumps_system", "read_system", "write_system"]


def system_to_dict(S: BorderedSystem) -> dict:
    out = {"n": S.n}
    for name in ("a", "b", "c", "p", "q", "y"):
        out[name] = [format_scalar(v) for v in getattr(S, name)]
    return out


def system_from_dict(data) -> BorderedSystem:
    if not isinstance(data, dict):
        raise BadFile("system file must hold a JSON object")
    return validate_system(data)


def dumps_system(S: BorderedSystem) -> str:
    return json.dumps(system_to_dict(S), indent=1) + "\n"


def read_system(path) -> BorderedSystem:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadFile(f"{path}: not valid JSON ({exc})") from None
    return system_from_dict(data)


def write_system(S: BorderedSystem, path) -> None:
    Path(path).write_text(dumps_system(S))
