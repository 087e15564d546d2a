"""Named ring catalogs: the built-in list of worked-example rings,
user files, and Z_n ranges.

Catalog files are UTF-8, one ring per line, with an optional ``name =``
prefix; ``#`` starts a comment and blank lines are ignored::

    # small examples
    Z6
    ring_a = Z2 x Z4
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .arith import is_prime
from .ringspec import RingSpec, RingSpecError, Zn, check_order, format_spec, parse_ring_spec

log = logging.getLogger(__name__)

BUILTIN = (
    ("Z4", "Z4"),
    ("Z6", "Z6"),
    ("Z8", "Z8"),
    ("Z9", "Z9"),
    ("Z10", "Z10"),
    ("Z12", "Z12"),
    ("Z16", "Z16"),
    ("Z22", "Z22"),
    ("Z169", "Z169"),
    ("Z390", "Z390"),
    ("Z2xZ4", "Z2 x Z4"),
    ("Z2xZ2[x]/(x^2)", "Z2 x Z2[x]/(x^2)"),
    ("Z3xZ2[x]/(x^2)", "Z3 x Z2[x]/(x^2)"),
    ("Z4xGF(4)", "Z4 x GF(4)"),
    ("Z2[x]/(x^2)xGF(4)", "Z2[x]/(x^2) x GF(4)"),
    ("Z2xZ2xZ3", "Z2 x Z2 x Z3"),
    ("Z2xZ2", "Z2 x Z2"),
    ("Z2xZ2xZ2", "Z2 x Z2 x Z2"),
)


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = ""):
        where = f"{source}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


@dataclass(frozen=True)
class Catalog:
    entries: tuple[tuple[str, RingSpec], ...]
    source: str = "builtin"

    def __post_init__(self):
        names = [name for name, _ in self.entries]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise CatalogError(f"duplicate names: {', '.join(dupes)}")
        for _, spec in self.entries:
            check_order(spec)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]

    def get(self, name: str) -> RingSpec:
        for n, spec in self.entries:
            if n == name:
                return spec
        raise KeyError(name)


def builtin_catalog() -> Catalog:
    return Catalog(tuple((name, parse_ring_spec(text)) for name, text in BUILTIN), "builtin")


def parse_catalog(text: str, source: str = "<string>") -> Catalog:
    entries = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            name, _, body = line.partition("=")
            name, body = name.strip(), body.strip()
            if not name:
                raise CatalogError("empty name before '='", lineno, source)
        else:
            name, body = line.replace(" ", ""), line
        try:
            spec = parse_ring_spec(body)
        except RingSpecError as exc:
            raise CatalogError(str(exc), lineno, source) from None
        if name in seen:
            raise CatalogError(f"duplicate name {name!r} (first on line {seen[name]})", lineno, source)
        seen[name] = lineno
        entries.append((name, spec))
    return Catalog(tuple(entries), source)


def load_catalog(path) -> Catalog:
    path = Path(path)
    return parse_catalog(path.read_text(encoding="utf-8"), str(path))


def dump_catalog(catalog: Catalog) -> str:
    """Text that ``parse_catalog`` reads back to the same entries."""
    return "".join(f"{name} = {format_spec(spec)}\n" for name, spec in catalog.entries)


def generate_zn_range(lo: int, hi: int) -> Catalog:
    """Z_n for every composite n in [lo, hi]; primes give fields and are skipped."""
    if not 2 <= lo <= hi:
        raise CatalogError(f"need 2 <= lo <= hi, got {lo}, {hi}")
    entries = []
    for n in range(lo, hi + 1):
        if is_prime(n):
            log.info("skipping Z%d: a field has no nonzero zero-divisors", n)
            continue
        entries.append((f"Z{n}", Zn(n)))
    return Catalog(tuple(entries), f"zn-range:{lo}-{hi}")
