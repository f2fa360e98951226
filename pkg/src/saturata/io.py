"""Family file formats.

JSON::

    {"n": 3, "sets": [[1], [1, 2], [1, 3], [1, 2, 3]]}

Compact::

    n=3
    aa

The second line is the membership bitmap as lowercase hex, most significant
digit first, so the last digit covers masks 0..3 (mask 0 in its lowest bit).
It always has max(1, 2^n / 4) digits.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from saturata.family import MAX_N, SetFamily, mask_of

FORMATS = ("json", "compact")


class FamilyFormatError(ValueError):
    pass


def hex_digits(n: int) -> int:
    return max(1, (1 << n) // 4)


def to_hex(F: SetFamily) -> str:
    packed = np.packbits(F.membership, bitorder="little").tobytes()
    value = int.from_bytes(packed, "little")
    return format(value, "x").zfill(hex_digits(F.n))


def from_hex(n: int, digits: str) -> SetFamily:
    value = int(digits, 16)
    size = 1 << n
    if value >> size:
        raise FamilyFormatError(f"bitmap has bits beyond 2^{n} masks")
    raw = value.to_bytes(max(1, size // 8), "little")
    mem = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
    return SetFamily(n, mem.astype(bool))


def dumps(F: SetFamily, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps({"n": F.n, "sets": F.sets()}) + "\n"
    if fmt == "compact":
        return f"n={F.n}\n{to_hex(F)}\n"
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def _parse_n(value) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= MAX_N:
        raise FamilyFormatError(f"field 'n': expected an integer in 0..{MAX_N}, got {value!r}")
    return value


def _loads_json(text: str) -> SetFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid JSON at byte {exc.pos}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FamilyFormatError("top level must be an object with fields 'n' and 'sets'")
    for key in ("n", "sets"):
        if key not in data:
            raise FamilyFormatError(f"missing field {key!r}")
    n = _parse_n(data["n"])
    sets = data["sets"]
    if not isinstance(sets, list):
        raise FamilyFormatError("field 'sets': expected a list of lists")
    masks = []
    for i, s in enumerate(sets):
        if not isinstance(s, list):
            raise FamilyFormatError(f"field 'sets[{i}]': expected a list")
        for j, e in enumerate(s):
            if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
                raise FamilyFormatError(f"field 'sets[{i}][{j}]': element {e!r} outside 1..{n}")
        masks.append(mask_of(s))
    return SetFamily.from_masks(n, masks)


_HEADER = re.compile(r"n=(\d+)")


def _loads_compact(text: str) -> SetFamily:
    lines = text.split("\n")
    m = _HEADER.fullmatch(lines[0].strip())
    if not m:
        raise FamilyFormatError("line 1: expected 'n=<int>'")
    n = _parse_n(int(m.group(1)))
    if len(lines) < 2:
        raise FamilyFormatError("line 2: missing bitmap")
    digits = lines[1].strip()
    offset = len(lines[0]) + 1
    for i, ch in enumerate(digits):
        if ch not in "0123456789abcdef":
            raise FamilyFormatError(f"byte {offset + i}: {ch!r} is not a lowercase hex digit")
    if len(digits) != hex_digits(n):
        raise FamilyFormatError(
            f"line 2: expected {hex_digits(n)} hex digits for n={n}, got {len(digits)}"
        )
    if any(line.strip() for line in lines[2:]):
        raise FamilyFormatError("unexpected content after line 2")
    return from_hex(n, digits)


def loads(text: str) -> SetFamily:
    """Parse either format; detection is by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _loads_json(stripped)
    if stripped.startswith("n="):
        return _loads_compact(stripped)
    raise FamilyFormatError("byte 0: expected '{' (JSON) or 'n=' (compact)")


def read_family(path: str | Path) -> SetFamily:
    try:
        text = Path(path).read_text()
    except UnicodeDecodeError as exc:
        raise FamilyFormatError(f"byte {exc.start}: not valid UTF-8") from None
    return loads(text)


def write_family(F: SetFamily, path: str | Path, fmt: str = "json") -> None:
    Path(path).write_text(dumps(F, fmt))
