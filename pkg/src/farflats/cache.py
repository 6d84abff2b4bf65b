"""On-disk cache of lattices and the data derived from them.

A cache file is the magic line ``FFLT1`` followed by one JSON document.
Files are keyed by the root-order digest, so a file written for a different
root ordering is refused instead of silently reused.
"""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import invariants as inv
from .arrangement import Flat, IntersectionLattice, mask_of
from .coxeter import generate_root_system
from .errors import StaleCacheError

MAGIC = b"FFLT1\n"
ENV_VAR = "FARFLATS_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "farflats"


def cache_path(cache_dir, symbol: str, max_codim: int) -> Path:
    safe = symbol.replace("(", "_").replace(")", "")
    return Path(cache_dir) / f"{safe}-c{max_codim}.fflt"


@dataclass
class CacheFile:
    symbol: str
    digest: str
    lattice: IntersectionLattice
    labels: list
    mobius: list
    os_data: dict          # orbit label -> OSData

    @property
    def max_codim(self) -> int:
        return self.lattice.max_codim


def snapshot(ws) -> CacheFile:
    """Collect everything worth caching from a Workspace."""
    L = ws.lattice
    od = ws.orbit_data
    os_data = {}
    for T in od:
        try:
            os_data[T.label] = inv.os_exponents(L, T.representative, od)
        except Exception:
            continue
    mob = inv.mobius(L) if L.is_complete else []
    return CacheFile(str(ws.type), ws.roots.digest, L, [T.label for T in od], mob, os_data)


def _encode(cf: CacheFile) -> bytes:
    L = cf.lattice
    doc = {
        "symbol": cf.symbol,
        "digest": cf.digest,
        "max_codim": L.max_codim,
        "levels": [[list(L.flats[i].root_set) for i in lvl] for lvl in L.levels],
        "parents": [list(p) for p in L.parents],
        "labels": cf.labels,
        "mobius": cf.mobius,
        "os_data": {k: {"exponents": list(v.exponents), "provenance": v.provenance}
                    for k, v in cf.os_data.items()},
    }
    return MAGIC + json.dumps(doc, separators=(",", ":"), sort_keys=True).encode()


def store(cf: CacheFile, path) -> Path:
    """Write atomically: temp file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(_encode(cf))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(path, expect_symbol: str | None = None) -> CacheFile:
    raw = Path(path).read_bytes()
    if not raw.startswith(MAGIC):
        raise StaleCacheError(f"{path}: not a cache file (bad magic)")
    doc = json.loads(raw[len(MAGIC):])
    if expect_symbol is not None and doc["symbol"] != expect_symbol:
        raise StaleCacheError(f"{path}: holds {doc['symbol']}, wanted {expect_symbol}")
    rs = generate_root_system(doc["symbol"])
    if rs.digest != doc["digest"]:
        raise StaleCacheError(f"{path}: root-order digest {doc['digest']} != {rs.digest}")
    n = rs.rank
    levels = [[Flat(mask_of(r), k, n) for r in lvl] for k, lvl in enumerate(doc["levels"])]
    parents = [tuple(p) for p in doc["parents"]]
    L = IntersectionLattice(rs, doc["max_codim"], levels, parents)
    os_data = {k: inv.OSData(tuple(v["exponents"]), v["provenance"]) for k, v in doc["os_data"].items()}
    return CacheFile(doc["symbol"], doc["digest"], L, doc["labels"], doc["mobius"], os_data)
