"""Standings tables and pairwise matchup matrices."""

from __future__ import annotations

import csv
from dataclasses import dataclass


class StandingsError(ValueError):
    pass


@dataclass(frozen=True)
class StandingsTable:
    rows: tuple  # ((team, pct), ...)

    def __post_init__(self):
        seen = set()
        for i, (team, pct) in enumerate(self.rows, start=1):
            if team in seen:
                raise StandingsError(f"row {i}: duplicate team {team!r}")
            seen.add(team)
            if not 0 < pct < 1:
                raise StandingsError(
                    f"row {i}: {team!r} has pct {pct!r}; percentages must lie strictly "
                    "inside (0, 1) because J is undefined at the corners (0, 0) and (1, 1)"
                )

    @property
    def teams(self):
        return [t for t, _ in self.rows]

    @property
    def pcts(self):
        return [p for _, p in self.rows]


def read_standings(path) -> StandingsTable:
    """Parse a ``team,pct`` CSV with a header line."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["team", "pct"]:
            raise StandingsError(f"expected header 'team,pct', got {header!r}")
        rows = []
        for i, rec in enumerate(reader, start=1):
            if not rec or all(not c.strip() for c in rec):
                continue
            if len(rec) != 2:
                raise StandingsError(f"row {i}: expected 2 fields, got {len(rec)}")
            team, raw = rec[0].strip(), rec[1].strip()
            try:
                pct = float(raw)
            except ValueError:
                raise StandingsError(f"row {i}: {team!r} has non-numeric pct {raw!r}") from None
            rows.append((team, pct))
    return StandingsTable(tuple(rows))


def matchup_matrix(J, table: StandingsTable) -> list:
    """``M[i][j] = J(p_i, p_j)``: probability that team ``i`` beats team ``j``."""
    ps = table.pcts
    n = len(ps)
    return [[0.5 if i == j else J(ps[i], ps[j]) for j in range(n)] for i in range(n)]


def write_matrix_csv(table: StandingsTable, matrix, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["team", *table.teams])
    for team, row in zip(table.teams, matrix):
        w.writerow([team, *(f"{v:.12g}" for v in row)])
