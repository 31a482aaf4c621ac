import io
import struct

import pytest

from conftest import SAMPLE
from lyndex.index import LyndonIndex
from lyndex.serialize import (
    MAGIC,
    BadMagic,
    ChecksumError,
    IndexFormatError,
    TruncatedStream,
    VersionMismatch,
    dumps,
    load,
    loads,
    save,
)


@pytest.fixture(scope="module")
def image():
    return dumps(LyndonIndex.build(SAMPLE, seed=7))


def test_round_trip_paths_and_streams(tmp_path, image):
    index = loads(image)
    path = tmp_path / "sample.idx"
    assert save(index, path) == len(image)
    assert path.read_bytes() == image
    for source in (path, str(path), io.BytesIO(image), image):
        clone = load(source)
        assert clone.locate(b"bab") == [3, 8]
        assert clone.seed == 7 and clone.n == 11


def test_deterministic():
    assert dumps(LyndonIndex.build(b"banana", seed=1)) == dumps(LyndonIndex.build(b"banana", seed=1))


def test_sentinel_flag_survives():
    clone = loads(dumps(LyndonIndex.build(b"banana")))
    assert clone.slp.shift == 1
    assert clone.extract(1, 6) == b"banana"
    assert clone.locate(b"ana") == [2, 4]


def test_header_fields(image):
    magic, version, sigma, n, g = struct.unpack_from("<8sIIQI", image)
    assert magic == MAGIC and version == 1
    assert n == 11 and g == 9 and sigma == ord("b") + 2


@pytest.mark.parametrize("cut", [0, 5, 20, 60, -5])
def test_truncated(image, cut):
    with pytest.raises(TruncatedStream, match="truncated"):
        loads(image[:cut])


def test_bad_magic(image):
    with pytest.raises(BadMagic):
        loads(b"NOTANIDX" + image[8:])


def test_version_mismatch(image):
    bumped = image[:8] + struct.pack("<I", 99) + image[12:]
    with pytest.raises(VersionMismatch, match="version"):
        loads(bumped)


def test_checksum_detects_flipped_rule_bit(image):
    header_and_crc = struct.calcsize("<8sIIQIIIQQ") + 4
    pos = header_and_crc + struct.calcsize("<4sQ") + 5
    bad = bytearray(image)
    bad[pos] ^= 0x10
    with pytest.raises(ChecksumError, match="RULE"):
        loads(bytes(bad))


def test_checksum_detects_header_edit(image):
    bad = bytearray(image)
    bad[20] ^= 1  # inside n
    with pytest.raises(ChecksumError, match="header"):
        loads(bytes(bad))


def test_errors_share_a_base():
    for cls in (TruncatedStream, BadMagic, VersionMismatch, ChecksumError):
        assert issubclass(cls, IndexFormatError)


def test_load_rejects_unknown_source():
    with pytest.raises(TypeError):
        load(12)
