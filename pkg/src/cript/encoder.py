"""CRIPT encoding: band strings, full codes, minimal codes, code text.

A band sits between two adjacent bitmap rows (virtual all-white rows border
the image above and below, so every component is born and dies inside the
code).  Scanning the two rows' switching sequences yields the band's
letters:

  B  a crossing-component end created by a birth: a lower run with no black
     above it, or a run splitting around a lower white gap;
  D  the dual death events read top-down;
  C  a crossing that continues straight through the band.

Letters are ordered left to right by sort key: the defining lower switch
for B, the defining upper switch for D, and the midpoint of the paired
switches for C; ties fall back to the opposite-end coordinate and then the
kind precedence C < B < D.  The concatenated kinds form the band's CRIPT
string; dropping trivial (all-C) and empty strings gives the minimal code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from .bitmap_io import Bitmap, switching_sequence
from .errors import FormatError

__all__ = [
    "BandLetter",
    "Band",
    "FullCode",
    "band_string",
    "encode",
    "encode_rows",
    "minimal_code",
    "is_trivial",
    "serialize_code",
    "parse_code",
]

ALPHABET = frozenset("BCD")


@dataclass(frozen=True)
class BandLetter:
    """One crossing component of a band, with its placement metadata.

    lower_pos / upper_pos are 1-based ranks among the band's ends on the
    lower / upper level; 0 means the component has no end on that level.
    source holds the defining 1-based switch indices (j into the upper
    sequence, i into the lower one; 0 marks a sentinel).
    """

    kind: str
    sort_key: float
    lower_pos: int
    upper_pos: int
    source: tuple[int, int]


@dataclass(frozen=True)
class Band:
    """One band of a full code: its level and its letters in position order."""

    level: float
    kinds: str
    keys2: np.ndarray = field(repr=False)  # 2x sort key per letter

    @property
    def trivial(self) -> bool:
        return bool(self.kinds) and set(self.kinds) == {"C"}

    @property
    def empty(self) -> bool:
        return not self.kinds


@dataclass(frozen=True)
class FullCode:
    """All height+1 band strings of a bitmap, top band first.

    Levels are band positions in row units from the top (index + 0.5); they
    increase with the band index, i.e. decrease with geometric height.
    """

    bands: tuple[Band, ...]
    width: int | None = None
    height: int | None = None

    def strings(self) -> tuple[str, ...]:
        return tuple(band.kinds for band in self.bands)


def band_string(upper, lower) -> list[BandLetter]:
    """Letters of the band between two rows' switching sequences.

    upper belongs to the row above (higher level), lower to the row below;
    either may be empty.  The returned letters are in position order, so
    their concatenated kinds are the band's CRIPT string.
    """
    rank, key2, tie2, jj, ii = _kernel.band_scan(upper, lower)
    letters = []
    lower_rank = 0
    upper_rank = 0
    for r, k2, j, i in zip(rank, key2, jj, ii):
        kind = _kernel.KIND_BYTES[r:r + 1].decode("ascii")
        if kind in ("B", "C"):
            lower_rank += 1
            lo = lower_rank
        else:
            lo = 0
        if kind in ("C", "D"):
            upper_rank += 1
            up = upper_rank
        else:
            up = 0
        letters.append(
            BandLetter(kind=kind, sort_key=k2 / 2.0, lower_pos=lo, upper_pos=up,
                       source=(int(j), int(i)))
        )
    return letters


def encode(bitmap: Bitmap) -> FullCode:
    """Full CRIPT code of a bitmap: one string per band, height+1 in total."""
    return encode_rows(bitmap.width, bitmap.cells)


def encode_rows(width: int, rows: Iterable) -> FullCode:
    """Streaming variant of encode: consumes rows top to bottom in one pass.

    Holds only the previous row's switching sequence plus the output, which
    keeps memory proportional to two rows for arbitrarily tall images.
    """
    bands = []
    prev = np.empty(0, dtype=np.int32)
    index = 0
    for row in rows:
        cur = switching_sequence(row)
        bands.append(_make_band(index, prev, cur))
        prev = cur
        index += 1
    bands.append(_make_band(index, prev, np.empty(0, dtype=np.int32)))
    return FullCode(bands=tuple(bands), width=width, height=index)


def _make_band(index: int, upper, lower) -> Band:
    rank, key2, _, _, _ = _kernel.band_scan(upper, lower)
    return Band(level=index + 0.5, kinds=_kernel.kinds_text(rank), keys2=key2)


def is_trivial(string: str) -> bool:
    """A non-empty string consisting of crossings only."""
    return bool(string) and set(string) == {"C"}


def minimal_code(full: FullCode) -> tuple[str, ...]:
    """Minimal CRIPT code: the non-trivial, non-empty strings in order."""
    return tuple(b.kinds for b in full.bands if b.kinds and not b.trivial)


def serialize_code(code: Sequence[str]) -> str:
    """Code word over the alphabet {B, C, D, ;}: strings joined by ';'."""
    return ";".join(code)


def parse_code(text: str) -> tuple[str, ...]:
    """Parse a code word; case-insensitive, whitespace ignored.

    Any character outside the alphabet is rejected with its 1-based
    position in the original text.
    """
    strings: list[str] = []
    current: list[str] = []
    saw_any = False
    for pos, ch in enumerate(text, start=1):
        if ch.isspace():
            continue
        saw_any = True
        if ch == ";":
            strings.append("".join(current))
            current = []
            continue
        upper = ch.upper()
        if upper not in ALPHABET:
            raise FormatError(f"invalid code character {ch!r} at character {pos}", column=pos)
        current.append(upper)
    if not saw_any:
        return ()
    strings.append("".join(current))
    return tuple(strings)
