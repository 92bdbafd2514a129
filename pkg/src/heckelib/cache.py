"""Persistent, append-only, human-inspectable trace cache.

File `traces.v1` under HECKE_CACHE_DIR (or the per-user cache dir).
Header line "HECKECACHE v1"; records are one line each with a crc32
checksum so a truncated or corrupted file degrades to recomputation,
never to a wrong value.

  T k N charhash n : r c0n/c0d ... ; crc
  C D : h w ; crc
"""

from __future__ import annotations

import os
import zlib
from fractions import Fraction
from pathlib import Path

from .cyclotomic import CyclotomicRational

_HEADER = "HECKECACHE v1"


def default_cache_dir() -> Path:
    env = os.environ.get("HECKE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hecke"


class TraceCache:
    """Single-writer append-only cache of exact trace values."""

    def __init__(self, directory: Path | None = None):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.path = self.directory / "traces.v1"
        self._traces: dict[tuple, CyclotomicRational] = {}
        self._classnums: dict[int, tuple[int, int]] = {}
        self._load()

    # --- public API ---------------------------------------------------
    def get_trace(self, key: tuple) -> CyclotomicRational | None:
        return self._traces.get(self._norm(key))

    def put_trace(self, key: tuple, value: CyclotomicRational) -> None:
        key = self._norm(key)
        if key in self._traces:
            return
        self._traces[key] = value
        k, N, charhash, n = key
        coeffs = " ".join(f"{c.numerator}/{c.denominator}" for c in value.coeffs)
        self._append(f"T {k} {N} {charhash} {n} : {value.order} {coeffs}")

    def get_classnum(self, D: int) -> tuple[int, int] | None:
        return self._classnums.get(D)

    def put_classnum(self, D: int, h: int, w: int) -> None:
        if D in self._classnums:
            return
        self._classnums[D] = (h, w)
        self._append(f"C {D} : {h} {w}")

    def __len__(self) -> int:
        return len(self._traces) + len(self._classnums)

    # --- internals ----------------------------------------------------
    @staticmethod
    def _norm(key: tuple) -> tuple:
        k, N, charhash, n = key
        return (int(k), int(N), str(charhash), int(n))

    def _append(self, payload: str) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        fresh = not self.path.exists() or self.path.stat().st_size == 0
        with open(self.path, "a") as fh:
            if fresh:
                fh.write(_HEADER + "\n")
            fh.write(f"{payload} ; {zlib.crc32(payload.encode()):08x}\n")

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            with open(self.path) as fh:
                lines = fh.read().splitlines()
        except OSError:
            return
        if not lines or lines[0].strip() != _HEADER:
            return  # version mismatch or corrupt header: ignore, recompute
        for ln in lines[1:]:
            self._load_record(ln.strip())

    def _load_record(self, ln: str) -> None:
        if not ln or " ; " not in ln:
            return
        payload, _, crc = ln.rpartition(" ; ")
        try:
            if int(crc, 16) != zlib.crc32(payload.encode()):
                return
        except ValueError:
            return
        parts = payload.split()
        try:
            if parts[0] == "T":
                k, N, charhash, n = int(parts[1]), int(parts[2]), parts[3], int(parts[4])
                assert parts[5] == ":"
                order = int(parts[6])
                coeffs = [Fraction(tok) for tok in parts[7 : 7 + order]]
                if len(coeffs) != order:
                    return
                self._traces[(k, N, charhash, n)] = CyclotomicRational(order, coeffs)
            elif parts[0] == "C":
                D = int(parts[1])
                assert parts[2] == ":"
                self._classnums[D] = (int(parts[3]), int(parts[4]))
        except (ValueError, AssertionError, IndexError, ZeroDivisionError):
            return
