"""Algorithm catalogs (CSV ``name,time,space``) and round-robin ranking."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Tuple

from .comparator import ComparisonVerdict, ScanRange, Winner, compare
from .errors import CatalogError, ComplexityError
from .metric import DEFAULT_CONFIG, A1Config, AlgorithmProfile

HEADER = ("name", "time", "space")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    time: str
    space: str
    line: int = 0

    def profile(self) -> AlgorithmProfile:
        return AlgorithmProfile.from_text(self.name, self.time, self.space)


def parse_catalog(text: str) -> List[CatalogEntry]:
    numbered = [(i, line) for i, line in enumerate(text.splitlines(), 1)
                if line.strip() and not line.lstrip().startswith("#")]
    if not numbered:
        raise CatalogError("catalog is empty")
    rows = list(csv.reader(line for _, line in numbered))
    header_line, _ = numbered[0]
    if tuple(c.strip() for c in rows[0]) != HEADER:
        raise CatalogError(f"header must be {','.join(HEADER)}", header_line)

    entries: List[CatalogEntry] = []
    seen: Dict[str, int] = {}
    for (lineno, _), row in zip(numbered[1:], rows[1:]):
        if len(row) != 3:
            raise CatalogError(f"expected 3 columns, got {len(row)}", lineno)
        name, time, space = (c.strip() for c in row)
        if not name:
            raise CatalogError("empty algorithm name", lineno)
        if name in seen:
            raise CatalogError(f"duplicate name {name!r} (first defined on line {seen[name]})", lineno)
        entry = CatalogEntry(name, time, space, lineno)
        try:
            entry.profile()
        except ComplexityError as exc:
            raise CatalogError(f"{name}: {exc}", lineno) from None
        seen[name] = lineno
        entries.append(entry)
    return entries


def load_catalog(path) -> List[CatalogEntry]:
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class Ranking:
    names: Tuple[str, ...]
    verdicts: Dict[Tuple[str, str], ComparisonVerdict]
    wins: Dict[str, int]
    ties: Dict[str, int]

    def winner_of(self, a: str, b: str) -> str:
        if (a, b) in self.verdicts:
            return self.verdicts[(a, b)].winner_name()
        return self.verdicts[(b, a)].winner_name()

    def order(self) -> List[str]:
        return sorted(self.names, key=lambda n: (-self.wins[n], -self.ties[n], n))


def rank(entries: List[CatalogEntry], n_star: float = 3.0, config: A1Config = DEFAULT_CONFIG,
         scan_range: ScanRange = ScanRange()) -> Ranking:
    if len(entries) < 2:
        raise CatalogError(f"need at least 2 algorithms to rank, got {len(entries)}")
    profiles = {e.name: e.profile() for e in entries}
    names = tuple(sorted(profiles))
    verdicts = {}
    wins = dict.fromkeys(names, 0)
    ties = dict.fromkeys(names, 0)
    for a, b in combinations(names, 2):
        v = compare(profiles[a], profiles[b], n_star, config, scan_range)
        verdicts[(a, b)] = v
        if v.winner is Winner.X:
            wins[a] += 1
        elif v.winner is Winner.Y:
            wins[b] += 1
        else:
            ties[a] += 1
            ties[b] += 1
    return Ranking(names, verdicts, wins, ties)
