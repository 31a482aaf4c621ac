"""Binary persistence of a :class:`~lyndex.index.LyndonIndex`.

Layout (all integers little-endian)::

    header   magic "LYNSLP01" | version u32 | sigma u32 | n u64 | g u32 |
             flags u32 | start u32 | base u64 | seed u64 | crc32 u32
    section  tag 4s | payload length u64 | payload | crc32(payload) u32

Sections, in order: RULE, LENS, FING, ORDR, GRID, PRNT.
"""

from __future__ import annotations

import io
import os
import struct
import zlib
from typing import BinaryIO, Dict, List, Union

import numpy as np

from lyndex.access import FingerprintTable
from lyndex.grammar import AdmissibleGrammar, LyndonSlp
from lyndex.index import LyndonIndex, VariableOrders
from lyndex.wavelet import OccurrenceGrid

MAGIC = b"LYNSLP01"
VERSION = 1
NO_CHAR = 0xFFFFFFFF
FLAG_SENTINEL = 1

_HEADER = struct.Struct("<8sIIQIIIQQ")
_SECTION = struct.Struct("<4sQ")
_CRC = struct.Struct("<I")
SECTIONS = (b"RULE", b"LENS", b"FING", b"ORDR", b"GRID", b"PRNT")


class IndexFormatError(ValueError):
    """Base class for unreadable index images."""


class TruncatedStream(IndexFormatError):
    pass


class BadMagic(IndexFormatError):
    pass


class VersionMismatch(IndexFormatError):
    pass


class ChecksumError(IndexFormatError):
    pass


def _u32(values) -> bytes:
    return np.asarray(values, dtype="<u4").tobytes()


def _u64(values) -> bytes:
    return np.asarray(values, dtype="<u8").tobytes()


def _encode_parents(index: LyndonIndex) -> bytes:
    ag = index.ag
    out = [_u32([len(ag.rules)])]
    for x in sorted(ag.rules):
        expr = ag.rules[x]
        out.append(_u32([x, len(expr)]))
        out.append(_u32(expr))
    absorbed = sorted(ag.absorbed.items())
    out.append(_u32([len(absorbed)]))
    out.append(_u32([k for k, _ in absorbed]))
    out.append(_u32([h for _, (h, _) in absorbed]))
    out.append(_u64([o for _, (_, o) in absorbed]))
    flat = [(sym, p, o, k) for sym in sorted(index.parents)
            for p, o, k in index.parents[sym]]
    out.append(_u32([len(flat)]))
    out.append(_u32([f[0] for f in flat]))
    out.append(_u32([f[1] for f in flat]))
    out.append(_u64([f[2] for f in flat]))
    out.append(_u32([f[3] for f in flat]))
    return b"".join(out)


def dumps(index: LyndonIndex) -> bytes:
    slp, fpt, orders, grid = index.slp, index.fpt, index.orders, index.grid
    g = slp.g
    sigma = max((c for c in slp.char if c >= 0), default=0) + 1
    header = _HEADER.pack(MAGIC, VERSION, sigma, index.n, g,
                          FLAG_SENTINEL if slp.shift else 0, slp.start,
                          fpt.base, fpt.seed)
    chars = [NO_CHAR if c < 0 else c for c in slp.char]
    payloads = {
        b"RULE": _u32(slp.left) + _u32(slp.right) + _u32(chars),
        b"LENS": _u64(slp.length),
        b"FING": _u64(fpt.fp) + _u64(fpt.pw),
        b"ORDR": _u32(orders.L) + _u32(orders.Lrev),
        b"GRID": _u64([len(grid)]) + _u32(grid.xs) + _u32(grid.ys) + _u32(grid.labels),
        b"PRNT": _encode_parents(index),
    }
    parts = [header, _CRC.pack(zlib.crc32(header))]
    for tag in SECTIONS:
        body = payloads[tag]
        parts.append(_SECTION.pack(tag, len(body)))
        parts.append(body)
        parts.append(_CRC.pack(zlib.crc32(body)))
    return b"".join(parts)


def save(index: LyndonIndex, sink: Union[str, os.PathLike, BinaryIO]) -> int:
    """Write ``index`` to a path or binary stream; returns the byte count."""
    data = dumps(index)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "wb") as fh:
            fh.write(data)
    else:
        sink.write(data)
    return len(data)


class _Reader:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise TruncatedStream("truncated stream")
        out = self.data[self.pos:self.pos + k]
        self.pos += k
        return out

    def u32s(self, k: int) -> List[int]:
        return np.frombuffer(self.take(4 * k), dtype="<u4").tolist()

    def u64s(self, k: int) -> List[int]:
        return np.frombuffer(self.take(8 * k), dtype="<u8").tolist()


def _decode_parents(r: _Reader):
    rules: Dict[int, List[int]] = {}
    for _ in range(r.u32s(1)[0]):
        x, k = r.u32s(2)
        rules[x] = r.u32s(k)
    k = r.u32s(1)[0]
    keys, hosts, offs = r.u32s(k), r.u32s(k), r.u64s(k)
    absorbed = {v: (h, o) for v, h, o in zip(keys, hosts, offs)}
    k = r.u32s(1)[0]
    syms, pars, offs, idxs = r.u32s(k), r.u32s(k), r.u64s(k), r.u32s(k)
    parents: Dict[int, list] = {}
    for s, p, o, i in zip(syms, pars, offs, idxs):
        parents.setdefault(s, []).append((p, o, i))
    return rules, absorbed, parents


def loads(data: bytes) -> LyndonIndex:
    r = _Reader(data)
    if len(data) < len(MAGIC):
        raise TruncatedStream("truncated stream")
    if data[:len(MAGIC)] != MAGIC:
        raise BadMagic("bad magic")
    header = r.take(_HEADER.size)
    magic, version, _sigma, _n, g, flags, start, base, seed = _HEADER.unpack(header)
    if version != VERSION:
        raise VersionMismatch(f"version mismatch: image {version}, reader {VERSION}")
    if _CRC.unpack(r.take(4))[0] != zlib.crc32(header):
        raise ChecksumError("checksum failure in header")
    bodies = {}
    for tag in SECTIONS:
        got, size = _SECTION.unpack(r.take(_SECTION.size))
        if got != tag:
            raise IndexFormatError(f"expected section {tag!r}, found {got!r}")
        body = r.take(size)
        if _CRC.unpack(r.take(4))[0] != zlib.crc32(body):
            raise ChecksumError(f"checksum failure in section {tag.decode()}")
        bodies[tag] = _Reader(body)

    b = bodies[b"RULE"]
    left, right, chars = b.u32s(g + 1), b.u32s(g + 1), b.u32s(g + 1)
    chars = [-1 if c == NO_CHAR else c for c in chars]
    length = bodies[b"LENS"].u64s(g + 1)
    slp = LyndonSlp(left, right, chars, length, start, 1 if flags & FLAG_SENTINEL else 0)
    b = bodies[b"FING"]
    fpt = FingerprintTable(base, seed, b.u64s(g + 1), b.u64s(g + 1))
    b = bodies[b"ORDR"]
    orders = VariableOrders(b.u32s(g), b.u32s(g))
    b = bodies[b"GRID"]
    k = b.u64s(1)[0]
    grid = OccurrenceGrid(list(zip(b.u32s(k), b.u32s(k), b.u32s(k))))
    rules, absorbed, parents = _decode_parents(bodies[b"PRNT"])
    ag = AdmissibleGrammar(rules, start, absorbed)
    return LyndonIndex(slp, fpt, orders, grid, ag, parents)


def load(source: Union[str, os.PathLike, BinaryIO, bytes]) -> LyndonIndex:
    """Read an index from a path, a binary stream or raw bytes."""
    if isinstance(source, (bytes, bytearray)):
        return loads(bytes(source))
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return loads(fh.read())
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return loads(source.read())
    raise TypeError(f"cannot load from {type(source).__name__}")
