"""Named-tensor checkpoint archive.

Layout: magic "NTA1", u32 little-endian manifest length, manifest JSON
(entry names + shapes + sha256 of the data section), then the entries'
float64 values row-major, concatenated in manifest order.
"""

from __future__ import annotations

import hashlib
import json
import struct

import numpy as np

MAGIC = b"NTA1"


class ArchiveError(RuntimeError):
    pass


def save_archive(path, arrays):
    entries = []
    blobs = []
    for name in sorted(arrays):
        arr = np.ascontiguousarray(arrays[name], dtype=np.float64)
        entries.append({"name": name, "shape": list(arr.shape)})
        blobs.append(arr.astype("<f8").tobytes())
    data = b"".join(blobs)
    manifest = json.dumps(
        {"entries": entries, "sha256": hashlib.sha256(data).hexdigest()},
        sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<I", len(manifest)))
        f.write(manifest)
        f.write(data)


def load_archive(path):
    with open(path, "rb") as f:
        if f.read(4) != MAGIC:
            raise ArchiveError(f"{path}: not a named-tensor archive")
        (mlen,) = struct.unpack("<I", f.read(4))
        manifest = json.loads(f.read(mlen).decode("utf-8"))
        data = f.read()
    if hashlib.sha256(data).hexdigest() != manifest["sha256"]:
        raise ArchiveError(f"{path}: checksum mismatch")
    out = {}
    offset = 0
    for entry in manifest["entries"]:
        shape = tuple(entry["shape"])
        count = int(np.prod(shape)) if shape else 1
        arr = np.frombuffer(data, dtype="<f8", count=count, offset=offset)
        out[entry["name"]] = arr.reshape(shape).astype(np.float64)
        offset += count * 8
    if offset != len(data):
        raise ArchiveError(f"{path}: trailing data after last entry")
    return out
