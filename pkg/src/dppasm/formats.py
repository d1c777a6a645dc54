"""Text and JSON serialization of every object kind.

Text forms::

    dpp                6 6 6 6 5 / 5 4 4 4 / 3 3      ('-' when empty)
    partition          6 6 6 6 5 5 4 4 4 3 3          ('-' when empty)
    monotone-triangle  4 / 4 6 / 3 4 6                (apex first)
    asm                0 1 0; 1 -1 1; 0 1 0
    permutation        463512                         (space separated if n > 9)

JSON documents are ``{"kind": ..., "n": ..., "payload": ...}`` where the
payload is the nested integer list of the text form.
"""

from __future__ import annotations

import json

from .core import Asm, Dpp, MonotoneTriangle, Partition, Permutation
from .errors import DppasmError

KINDS = ("dpp", "partition", "monotone-triangle", "asm", "permutation")

_TYPES = {
    Dpp: "dpp",
    Partition: "partition",
    MonotoneTriangle: "monotone-triangle",
    Asm: "asm",
    Permutation: "permutation",
}


class ParseError(DppasmError):
    pass


def kind_of(obj) -> str:
    return _TYPES[type(obj)]


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}") from None


def _rows(text: str, sep: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(_ints(chunk) for chunk in text.split(sep))


def _payload_to_object(kind: str, payload, n: int | None):
    if kind == "dpp":
        if n is None:
            raise ParseError("a DPP needs an explicit order n")
        return Dpp(tuple(tuple(r) for r in payload), n)
    if kind == "partition":
        return Partition(tuple(payload))
    if kind == "monotone-triangle":
        obj = MonotoneTriangle(tuple(tuple(r) for r in payload))
    elif kind == "asm":
        obj = Asm(tuple(tuple(r) for r in payload))
    elif kind == "permutation":
        obj = Permutation(tuple(payload))
    else:
        raise ParseError(f"unknown kind {kind!r}")
    if n is not None and obj.n != n:
        raise ParseError(f"{kind} has order {obj.n}, expected {n}")
    return obj


def parse_text(kind: str, text: str, n: int | None = None):
    """Parse the text form of ``kind``.  ``n`` is required for DPPs."""
    text = text.strip()
    if kind in ("dpp", "monotone-triangle"):
        payload = _rows(text, "/")
    elif kind == "asm":
        payload = _rows(text, ";")
    elif kind == "partition":
        payload = () if text in ("", "-") else _ints(text)
    elif kind == "permutation":
        if text in ("", "-"):
            payload = ()
        elif " " in text:
            payload = _ints(text)
        else:
            payload = _ints(" ".join(text))
    else:
        raise ParseError(f"unknown kind {kind!r}")
    return _payload_to_object(kind, payload, n)


def to_text(obj) -> str:
    return str(obj)


def payload_of(obj):
    if isinstance(obj, Dpp):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, MonotoneTriangle):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Asm):
        return [list(r) for r in obj.entries]
    if isinstance(obj, Permutation):
        return list(obj.images)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_document(obj, n: int | None = None) -> dict:
    if n is None:
        n = obj.parts[0] if isinstance(obj, Partition) and obj.parts else getattr(obj, "n", 0)
    return {"kind": kind_of(obj), "n": n, "payload": payload_of(obj)}


def from_document(doc: dict):
    try:
        kind, n, payload = doc["kind"], doc["n"], doc["payload"]
    except (KeyError, TypeError):
        raise ParseError("document needs 'kind', 'n' and 'payload'") from None
    return _payload_to_object(kind, payload, n)


def dumps(obj, n: int | None = None) -> str:
    return json.dumps(to_document(obj, n))


def loads(text: str):
    try:
        return from_document(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
