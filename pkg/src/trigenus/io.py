"""Text formats for triangulations and colourings.

Triangulation (``tri4 v1``)::

    tri4 v1 <n>
    types <5n digits>            optional
    <p> <f> <q> <g> <perm>       one line per glued pair, (p, f) < (q, g)

Lines are sorted by ``(p, f)``; ``perm`` lists the image slot of slots
0..4.  Colouring (``colour v1``)::

    colour v1
    <p>:<slot> <colour>          one line per vertex class, by representative
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .colouring import Colouring
from .triangulation import Triangulation, TriangulationError

__all__ = [
    "ParseError",
    "write_triangulation",
    "read_triangulation",
    "write_colouring",
    "read_colouring",
    "save_triangulation",
    "load_triangulation",
]


class ParseError(TriangulationError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


def write_triangulation(tri: Triangulation) -> str:
    out = [f"tri4 v1 {tri.size}"]
    if tri.vertex_types is not None:
        types = tri.vertex_types
        if types.min() < 0 or types.max() > 9:
            raise TriangulationError("vertex types must be single digits to be written")
        out.append("types " + "".join(str(int(t)) for t in types.ravel()))
    for p, f, q, g, perm in tri.gluings():
        out.append(f"{p} {f} {q} {g} " + "".join(str(x) for x in perm))
    return "\n".join(out) + "\n"


def _int(token, line, what):
    if not token.isdigit():
        raise ParseError(line, f"expected {what}, got {token!r}")
    return int(token)


def _lines(text):
    if not text:
        raise ParseError(1, "empty input")
    lines = text.split("\n")
    if lines[-1] != "":
        raise ParseError(len(lines), "truncated input: last line has no line feed")
    lines.pop()
    for i, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            raise ParseError(i, "CR line endings are not allowed")
    return lines


def read_triangulation(text: str) -> Triangulation:
    lines = _lines(text)
    head = lines[0].split(" ")
    if len(head) != 3 or head[:2] != ["tri4", "v1"]:
        raise ParseError(1, "expected 'tri4 v1 <n>'")
    n = _int(head[2], 1, "pentachoron count")
    if n < 1:
        raise ParseError(1, "pentachoron count must be positive")
    body = 1
    types = None
    if len(lines) > 1 and lines[1].startswith("types"):
        parts = lines[1].split(" ")
        if len(parts) != 2 or not parts[1].isdigit() or len(parts[1]) != 5 * n:
            raise ParseError(2, f"expected 'types' followed by {5 * n} digits")
        types = np.frombuffer(parts[1].encode(), dtype=np.uint8).astype(np.int64) - ord("0")
        types = types.reshape(n, 5)
        body = 2
    seen = set()
    gluings = []
    prev = None
    for lineno, line in enumerate(lines[body:], start=body + 1):
        parts = line.split(" ")
        if len(parts) != 5:
            raise ParseError(lineno, "expected '<p> <f> <q> <g> <perm>'")
        p, f, q, g = (_int(x, lineno, "an integer") for x in parts[:4])
        perm = parts[4]
        if len(perm) != 5 or sorted(perm) != list("01234"):
            raise ParseError(lineno, f"bad permutation {perm!r}")
        if p >= n or q >= n or f > 4 or g > 4:
            raise ParseError(lineno, "facet index out of range")
        if not (p, f) < (q, g):
            raise ParseError(lineno, "gluing must be listed from its smaller facet")
        if prev is not None and (p, f) <= prev:
            raise ParseError(lineno, "gluing lines must be sorted by (p, f)")
        prev = (p, f)
        for facet in ((p, f), (q, g)):
            if facet in seen:
                raise ParseError(lineno, f"facet {facet} glued twice")
            seen.add(facet)
        perm = tuple(int(c) for c in perm)
        if perm[f] != g:
            raise ParseError(lineno, "permutation must map the omitted slot f to g")
        gluings.append((p, f, q, g, perm))
    return Triangulation(n, gluings, vertex_types=types)


def write_colouring(colouring: Colouring) -> str:
    out = ["colour v1"]
    for (p, s), c in sorted(zip(colouring.representatives, colouring.colours)):
        out.append(f"{p}:{s} {c}")
    return "\n".join(out) + "\n"


def read_colouring(text: str) -> Colouring:
    lines = _lines(text)
    if lines[0] != "colour v1":
        raise ParseError(1, "expected 'colour v1'")
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2 or ":" not in parts[0]:
            raise ParseError(lineno, "expected '<p>:<slot> <colour>'")
        p, s = parts[0].split(":", 1)
        rep = (_int(p, lineno, "a pentachoron"), _int(s, lineno, "a slot"))
        c = _int(parts[1], lineno, "a colour")
        if c > 2 or rep[1] > 4:
            raise ParseError(lineno, "colour must be 0..2 and slot 0..4")
        entries.append((rep, c))
    entries.sort()
    return Colouring(tuple(r for r, _ in entries), tuple(c for _, c in entries))


def save_triangulation(tri, path):
    Path(path).write_text(write_triangulation(tri), encoding="utf-8", newline="\n")


def load_triangulation(path) -> Triangulation:
    return read_triangulation(Path(path).read_text(encoding="utf-8"))
