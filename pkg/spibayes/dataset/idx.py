"""Reader and writer for the big-endian IDX containers used by MNIST.

Image files::

    [offset] [type]          [value]
    0000     32 bit integer  0x00000803 magic number
    0004     32 bit integer  number of images
    0008     32 bit integer  number of rows
    0012     32 bit integer  number of columns
    0016     unsigned byte   pixels, row-major, one byte each

Label files::

    0000     32 bit integer  0x00000801 magic number
    0004     32 bit integer  number of items
    0008     unsigned byte   labels, one byte each
"""
import gzip
import logging
import struct
from collections import namedtuple

import numpy as np

from spibayes.exceptions import IdxFormatError, IdxLengthError

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801
NUM_DIGITS = 10

RawIdxSet = namedtuple("RawIdxSet", ["count", "rows", "cols", "pixels"])
RawIdxSet.__doc__ = """Images exactly as stored in an IDX file.

Attributes:
    count (int): Number of images.
    rows (int): Rows per image.
    cols (int): Columns per image.
    pixels (numpy.ndarray): ``uint8`` array of shape ``(count, rows, cols)``.
"""


def _as_bytes(data):
    if hasattr(data, "read"):
        data = data.read()
    return bytes(data)


def _read_magic(data, expected, kind):
    if len(data) < 4:
        raise IdxLengthError("IDX {kind} data is shorter than its magic number.".format(
            kind=kind))
    magic, = struct.unpack(">I", data[:4])
    if magic != expected:
        raise IdxFormatError("Bad magic number 0x{magic:08x} for IDX {kind}; "
                             "expected 0x{expected:08x}.".format(magic=magic, kind=kind,
                                                                 expected=expected))


def parse_idx_images(data):
    """Parse an uncompressed IDX image file.

    Args:
        data (Union[bytes, file-like]): Raw IDX bytes or a binary stream.

    Returns:
        RawIdxSet: Header fields and pixel bytes.

    Raises:
        IdxFormatError: If the magic number is not ``0x00000803``.
        IdxLengthError: If the header or payload is truncated or has trailing bytes.
    """
    data = _as_bytes(data)
    _read_magic(data, IMAGES_MAGIC, "images")
    if len(data) < 16:
        raise IdxLengthError("IDX images header is truncated.")
    count, rows, cols = struct.unpack(">III", data[4:16])
    expected = 16 + count * rows * cols
    if len(data) != expected:
        raise IdxLengthError(
            "IDX images payload has {have} bytes, header promises {want}.".format(
                have=len(data) - 16, want=expected - 16))
    pixels = np.frombuffer(data, dtype=np.uint8, offset=16).reshape(count, rows, cols)
    logging.info("Read {count} images of {rows}x{cols}".format(count=count, rows=rows,
                                                               cols=cols))
    return RawIdxSet(count, rows, cols, pixels)


def parse_idx_labels(data):
    """Parse an uncompressed IDX label file of digit labels.

    Args:
        data (Union[bytes, file-like]): Raw IDX bytes or a binary stream.

    Returns:
        numpy.ndarray: ``uint8`` labels in file order.

    Raises:
        IdxFormatError: If the magic number is not ``0x00000801`` or a label exceeds 9.
        IdxLengthError: If the payload is truncated or has trailing bytes.
    """
    data = _as_bytes(data)
    _read_magic(data, LABELS_MAGIC, "labels")
    if len(data) < 8:
        raise IdxLengthError("IDX labels header is truncated.")
    count, = struct.unpack(">I", data[4:8])
    if len(data) != 8 + count:
        raise IdxLengthError(
            "IDX labels payload has {have} bytes, header promises {want}.".format(
                have=len(data) - 8, want=count))
    labels = np.frombuffer(data, dtype=np.uint8, offset=8)
    bad = np.flatnonzero(labels >= NUM_DIGITS)
    if bad.size:
        raise IdxFormatError("Label {value} at index {index} is not a digit.".format(
            value=int(labels[bad[0]]), index=int(bad[0])))
    logging.info("Read {count} labels".format(count=count))
    return labels


def serialize_idx_images(raw):
    """Encode a :class:`RawIdxSet` back into IDX bytes."""
    pixels = np.ascontiguousarray(raw.pixels, dtype=np.uint8)
    if pixels.shape != (raw.count, raw.rows, raw.cols):
        raise IdxLengthError("Pixel array shape {shape} does not match the header.".format(
            shape=pixels.shape))
    return struct.pack(">IIII", IMAGES_MAGIC, raw.count, raw.rows, raw.cols) + pixels.tobytes()


def serialize_idx_labels(labels):
    """Encode digit labels into IDX bytes."""
    labels = np.asarray(labels, dtype=np.uint8)
    return struct.pack(">II", LABELS_MAGIC, labels.size) + labels.tobytes()


def read_idx_bytes(path):
    """Read an IDX file, decompressing it first when the name ends in ``.gz``.

    Args:
        path (str): File path.

    Returns:
        bytes: Raw IDX bytes ready for :func:`parse_idx_images` or :func:`parse_idx_labels`.
    """
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rb") as f:
        return f.read()
