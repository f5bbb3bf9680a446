"""Reading input files and writing canonical JSON."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .combinatorics import Character, Combinatorics, InvalidCharacter, InvalidCombinatorics
from .geometry import Arrangement, GeometryError
from .wiring import WiringDiagram, WiringError, parse_wiring


class InputError(ValueError):
    pass


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_json(path: str | Path) -> Any:
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field_errors(path, fn, *args):
    try:
        return fn(*args)
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: malformed document ({type(exc).__name__}: {exc})") from None
    except (GeometryError, InvalidCharacter, InvalidCombinatorics, ZeroDivisionError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_arrangement(path: str | Path) -> Arrangement:
    data = load_json(path)
    if not isinstance(data, dict) or "lines" not in data:
        raise InputError(f"{path}: expected an object with a 'lines' array")
    return _field_errors(path, Arrangement.from_json, data)


def load_character(path: str | Path, lines: Sequence[str] | None = None) -> Character:
    data = load_json(path)
    if not isinstance(data, dict) or "exponents" not in data:
        raise InputError(f"{path}: expected an object with an 'exponents' map")
    return _field_errors(path, Character.from_json, data, lines)


def load_combinatorics(path: str | Path) -> Combinatorics:
    return _field_errors(path, Combinatorics.from_json, load_json(path))


def load_wiring(path: str | Path) -> WiringDiagram:
    text = _read(path)
    try:
        if str(path).endswith(".json"):
            return WiringDiagram.from_json(json.loads(text))
        return parse_wiring(text)
    except (WiringError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed document ({exc})") from None


def dumps(obj: Any) -> str:
    """Canonical JSON: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
