"""graph6 bit-level helpers.

The encoding packs the upper triangle of the adjacency matrix in column-major
order -- x(0,1), x(0,2), x(1,2), x(0,3), ... -- into 6-bit groups, each offset
by 63 into printable ASCII.  The same bit order doubles as the canonical-form
key, so both the codec and the canonical labeler live on top of this module.
"""

from __future__ import annotations

from .errors import GraphParseError


def triangle_bits(n: int) -> int:
    return n * (n - 1) // 2


def key_from_adj(n: int, adj) -> int:
    """Pack the upper triangle of ``adj`` (bitmask rows) into one integer.

    Bit order is graph6's; the first transmitted bit is the most significant.
    """
    key = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            key = (key << 1) | ((row >> i) & 1)
    return key


def adj_from_key(n: int, key: int) -> list[int]:
    """Inverse of :func:`key_from_adj`."""
    adj = [0] * n
    nbits = triangle_bits(n)
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (key >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in range(30, -1, -6)])
    raise ValueError("vertex count exceeds graph6 range")


def encode(n: int, key: int) -> bytes:
    """graph6 bytes for an ``n``-vertex graph with packed upper-triangle ``key``."""
    nbits = triangle_bits(n)
    pad = (-nbits) % 6
    value = key << pad
    groups = bytearray(_encode_size(n))
    for shift in range(nbits + pad - 6, -1, -6):
        groups.append(63 + ((value >> shift) & 63))
    return bytes(groups)


def decode(data: bytes) -> tuple[int, list[int]]:
    """Parse graph6 bytes into ``(n, adjacency bitmasks)``.

    Strict: every byte must be in the printable graph6 range, the byte count
    must match ``n`` exactly, and padding bits must be zero.
    """
    if not data:
        raise GraphParseError("empty graph6 string", position=0)
    pos = 0
    if data[pos] == 126:
        if len(data) >= 2 and data[1] == 126:
            size_bytes, pos = data[2:8], 8
            want = 6
        else:
            size_bytes, pos = data[1:4], 4
            want = 3
        if len(size_bytes) != want:
            raise GraphParseError("truncated graph6 size", position=len(data))
        n = 0
        for b in size_bytes:
            if not 63 <= b <= 126:
                raise GraphParseError(f"invalid graph6 byte {b}", position=pos)
            n = (n << 6) | (b - 63)
    else:
        b = data[0]
        if not 63 <= b <= 126:
            raise GraphParseError(f"invalid graph6 byte {b}", position=0)
        n = b - 63
        pos = 1
    nbits = triangle_bits(n)
    ngroups = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != ngroups:
        raise GraphParseError(
            f"graph6 body for {n} vertices needs {ngroups} bytes, got {len(body)}",
            position=pos,
        )
    value = 0
    for off, b in enumerate(body):
        if not 63 <= b <= 126:
            raise GraphParseError(f"invalid graph6 byte {b}", position=pos + off)
        value = (value << 6) | (b - 63)
    pad = ngroups * 6 - nbits
    if value & ((1 << pad) - 1):
        raise GraphParseError("nonzero graph6 padding bits", position=len(data) - 1)
    return n, adj_from_key(n, value >> pad)
