"""Plain-text code files.

One codeword per line (b1 first), ``#`` lines are comments, all codewords
must have the same length.  Writers put ``key=value`` provenance pairs in a
leading comment line.
"""
from __future__ import annotations

import os
from typing import IO, Iterable, Mapping

import numpy as np

from .bitword import MAX_LENGTH, WordParseError, parse_bits
from .codes import Code, CodeStream


class CodeFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def parse_code(text: str) -> tuple[Code, dict[str, str]]:
    """Parse code file contents; returns the code and header pairs."""
    header: dict[str, str] = {}
    masks: list[int] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                key, eq, value = tok.partition("=")
                if eq:
                    header[key] = value
            continue
        if n is None:
            n = len(line)
            if n > MAX_LENGTH:
                raise CodeFileError(f"codeword longer than {MAX_LENGTH}", lineno)
        elif len(line) != n:
            raise CodeFileError(f"ragged file: expected length {n}, got {len(line)}", lineno)
        try:
            masks.append(parse_bits(line))
        except WordParseError as exc:
            raise CodeFileError(str(exc), lineno) from None
    if n is None:
        raise CodeFileError("no codewords found")
    return Code.from_masks(n, masks), header


def read_code(path: str | os.PathLike) -> tuple[Code, dict[str, str]]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_code(fh.read())


def _render_chunk(chunk: np.ndarray, n: int) -> bytes:
    bits = (chunk[:, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)
    out = np.empty((chunk.size, n + 1), dtype=np.uint8)
    out[:, :n] = bits.astype(np.uint8) + ord("0")
    out[:, n] = ord("\n")
    return out.tobytes()


def write_code(
    fh: IO[bytes],
    code: Code | CodeStream,
    header: Mapping[str, object] | None = None,
) -> int:
    """Write ``code`` to a binary stream; returns the number of codewords."""
    if header:
        fh.write(("# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n").encode())
    chunks: Iterable[np.ndarray] = [code.masks] if isinstance(code, Code) else code.chunks()
    written = 0
    for chunk in chunks:
        fh.write(_render_chunk(chunk, code.n))
        written += chunk.size
    return written
