"""Text formats for lattices and operators.

Lattice file::

    # comments and blank lines anywhere
    5             <- number of elements
    0 1           <- "a b": b covers a (0-based)
    label 1 b1    <- optional display name

Operator file: one non-comment line of ``n`` integers, entry ``x`` is ``d(x)``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .lattice import Lattice, PosetSpec, build_from_covers, covers_of
from .operators import Operator, as_operator

PathLike = Union[str, Path]


class FileFormatError(ValueError):
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = f"{source or '<input>'}:{lineno}: " if lineno is not None else f"{source or '<input>'}: "
        super().__init__(where + message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_lattice_text(text: str, source: str | None = None) -> PosetSpec:
    size = None
    covers = []
    labels: dict[int, str] = {}
    for lineno, line in _content_lines(text):
        fields = line.split()
        if size is None:
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise FileFormatError("first line must be a positive element count", lineno, source)
            size = int(fields[0])
            continue
        if fields[0] == "label":
            if len(fields) < 3 or not fields[1].isdigit():
                raise FileFormatError("expected 'label <index> <name>'", lineno, source)
            i = int(fields[1])
            if i >= size:
                raise FileFormatError(f"label index {i} out of range", lineno, source)
            labels[i] = " ".join(fields[2:])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise FileFormatError(f"expected 'a b' cover pair, got {line!r}", lineno, source)
        a, b = int(fields[0]), int(fields[1])
        if a >= size or b >= size:
            raise FileFormatError(f"cover ({a}, {b}) out of range for {size} elements", lineno, source)
        covers.append((a, b))
    if size is None:
        raise FileFormatError("empty lattice file", None, source)
    names = tuple(labels.get(i, str(i)) for i in range(size)) if labels else None
    return PosetSpec(size, tuple(covers), names)


def load_lattice(path: PathLike) -> Lattice:
    path = Path(path)
    spec = parse_lattice_text(path.read_text(), str(path))
    l = build_from_covers(spec)
    return Lattice(l.size, l.meet, l.join, l.bottom, l.top, l.labels, path.stem)


def lattice_text(l: Lattice, with_labels: bool = True) -> str:
    lines = [str(l.size)]
    lines += [f"{a} {b}" for a, b in covers_of(l)]
    if with_labels:
        lines += [f"label {i} {name}" for i, name in enumerate(l.labels)]
    return "\n".join(lines) + "\n"


def parse_operator_text(text: str, size: int | None = None, source: str | None = None) -> tuple[int, ...]:
    rows = list(_content_lines(text))
    if len(rows) != 1:
        raise FileFormatError(f"operator file must hold exactly one line of images, found {len(rows)}",
                              rows[1][0] if len(rows) > 1 else None, source)
    lineno, line = rows[0]
    try:
        image = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise FileFormatError("operator entries must be integers", lineno, source) from None
    if size is not None and len(image) != size:
        raise FileFormatError(f"operator has {len(image)} entries but the lattice has {size}", lineno, source)
    return image


def load_operator(path: PathLike, l: Lattice) -> Operator:
    path = Path(path)
    image = parse_operator_text(path.read_text(), l.size, str(path))
    try:
        return as_operator(l, image)
    except ValueError as exc:
        raise FileFormatError(str(exc), None, str(path)) from None


def operator_line(d) -> str:
    return " ".join(str(v) for v in d)
