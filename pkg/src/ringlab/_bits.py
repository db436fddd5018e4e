"""Subsets of ``range(n)`` encoded as Python int bitmasks."""

import numpy as np


def mask_of(indices, n):
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(indices, dtype=np.int64)] = True
    return mask_of_flags(flags)


def mask_of_flags(flags):
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def indices_of(mask):
    if mask == 0:
        return []
    raw = np.frombuffer(mask.to_bytes((mask.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).tolist()


def is_subset(a, b):
    return a & ~b == 0


def popcount(mask):
    return bin(mask).count("1")
