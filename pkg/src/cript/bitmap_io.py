"""Black-white bitmaps, their serialization, and per-row switching sequences.

A bitmap row is turned into its switching sequence: the strictly increasing
1-based column positions where the color flips between white and black,
scanning left to right with white assumed outside the image.  The sequence
always has even length; entry pairs (odd, even) delimit black runs, so the
first entry is the first black column and (last entry - 1) the last one.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError

__all__ = ["Bitmap", "load_bitmap", "save_bitmap", "switching_sequence", "row_from_switching"]

_ASCII_BLACK = frozenset("#1")
_ASCII_WHITE = frozenset(".0")


@dataclass(frozen=True)
class Bitmap:
    """Rectangular grid of black (True) / white (False) cells.

    Row 0 is the top of the image and carries the highest level; this fixes
    the order of code strings produced downstream without per-call flags.
    """

    cells: np.ndarray = field(repr=False)

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=bool)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise FormatError(f"bitmap must be a non-empty 2-D grid, got shape {cells.shape}")
        object.__setattr__(self, "cells", cells)

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    def row(self, index: int) -> np.ndarray:
        return self.cells[index]

    def __eq__(self, other):
        if not isinstance(other, Bitmap):
            return NotImplemented
        return self.cells.shape == other.cells.shape and bool(np.array_equal(self.cells, other.cells))

    @classmethod
    def from_rows(cls, rows) -> "Bitmap":
        return cls(np.array(rows, dtype=bool))


def switching_sequence(row) -> np.ndarray:
    """1-based positions where the row flips color, white assumed outside.

    For [white, black, black, white] the result is [2, 4]: the first black
    pixel sits at position 2 and the last black pixel at 4 - 1 = 3.
    """
    arr = np.asarray(row, dtype=bool)
    if arr.ndim != 1:
        raise ValueError("switching_sequence expects a single row")
    padded = np.empty(arr.size + 2, dtype=bool)
    padded[0] = padded[-1] = False
    padded[1:-1] = arr
    return (np.flatnonzero(padded[:-1] != padded[1:]) + 1).astype(np.int32)


def row_from_switching(switches, width: int) -> np.ndarray:
    """Inverse of switching_sequence: expand positions back to a pixel row."""
    row = np.zeros(width, dtype=bool)
    sw = list(switches)
    if len(sw) % 2:
        raise ValueError("switching sequence must have even length")
    for start, stop in zip(sw[::2], sw[1::2]):
        row[start - 1:stop - 1] = True
    return row


def _as_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("ascii", errors="replace")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("ascii", errors="replace")
    return data


def load_bitmap(source, format: str | None = None) -> Bitmap:
    """Parse a bitmap from PBM P1 text or ascii-art ('#'/'1' black, '.'/'0' white).

    format: "pbm", "ascii", or None to sniff from the leading magic.
    """
    text = _as_text(source)
    if format is None:
        format = "pbm" if text.lstrip().startswith("P1") else "ascii"
    if format in ("pbm", "pbm-p1", "p1"):
        return _load_pbm(text)
    if format in ("ascii", "ascii-art"):
        return _load_ascii(text)
    raise FormatError(f"unknown bitmap format {format!r}")


def _load_pbm(text: str) -> Bitmap:
    # Tokenize per netpbm: whitespace-separated header, '#' comments to EOL,
    # raster digits may be packed without separators.
    line = 1
    col = 0
    pos = 0
    n = len(text)

    def error(msg):
        raise FormatError(msg, line=line, column=col + 1)

    def advance():
        nonlocal pos, line, col
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 0
        else:
            col += 1
        pos += 1
        return ch

    def skip_separators():
        nonlocal pos
        while pos < n:
            ch = text[pos]
            if ch == "#":
                while pos < n and text[pos] != "\n":
                    advance()
            elif ch.isspace():
                advance()
            else:
                return

    def read_token():
        skip_separators()
        if pos >= n:
            error("unexpected end of PBM data")
        start = pos
        while pos < n and not text[pos].isspace() and text[pos] != "#":
            advance()
        return text[start:pos]

    magic = read_token()
    if magic != "P1":
        error(f"expected PBM magic 'P1', got {magic!r}")
    dims = []
    for name in ("width", "height"):
        token = read_token()
        if not token.isdigit():
            error(f"expected {name}, got {token!r}")
        dims.append(int(token))
    width, height = dims
    if width < 1 or height < 1:
        error(f"zero-sized bitmap ({width}x{height}) rejected")

    bits = np.empty(width * height, dtype=bool)
    count = 0
    while count < width * height:
        skip_separators()
        if pos >= n:
            error(f"raster ended after {count} of {width * height} pixels")
        ch = advance()
        if ch == "0":
            bits[count] = False
        elif ch == "1":
            bits[count] = True
        else:
            error(f"invalid raster character {ch!r}")
        count += 1
    skip_separators()
    if pos < n:
        error("trailing raster data beyond declared dimensions")
    return Bitmap(bits.reshape(height, width))


def _load_ascii(text: str) -> Bitmap:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.rstrip()
        if not stripped:
            continue
        row = []
        for colno, ch in enumerate(stripped, start=1):
            if ch in _ASCII_BLACK:
                row.append(True)
            elif ch in _ASCII_WHITE:
                row.append(False)
            else:
                raise FormatError(f"invalid ascii-art character {ch!r}", line=lineno, column=colno)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError(
                f"ragged row: expected {width} columns, got {len(row)}", line=lineno
            )
        rows.append(row)
    if not rows:
        raise FormatError("empty ascii-art bitmap")
    return Bitmap.from_rows(rows)


def save_bitmap(bitmap: Bitmap, format: str = "pbm") -> str:
    """Serialize a bitmap; exact inverse of load_bitmap up to whitespace."""
    if format in ("pbm", "pbm-p1", "p1"):
        out = io.StringIO()
        out.write(f"P1\n{bitmap.width} {bitmap.height}\n")
        for row in bitmap.cells:
            out.write(" ".join("1" if px else "0" for px in row))
            out.write("\n")
        return out.getvalue()
    if format in ("ascii", "ascii-art"):
        return "".join("".join("#" if px else "." for px in row) + "\n" for row in bitmap.cells)
    raise FormatError(f"unknown bitmap format {format!r}")
