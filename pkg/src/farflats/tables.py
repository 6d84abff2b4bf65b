"""Tables of full-support parabolic subgroup counts, refined by core.

Every cell records how its value was obtained:

- ``enum``: direct enumeration of flats;
- ``thm``: enumeration, confirmed equal to the closed formula;
- ``lattice``: read off the intersection lattice (flat counts).

A ``thm`` cell whose formula disagreed would raise instead of rendering.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations

from . import faraway as fw
from .arrangement import mask_of, restriction
from .errors import CorrectnessAlarm

FORMATS = ("markdown", "csv", "json")


@dataclass(frozen=True)
class Cell:
    value: int
    route: str

    def markdown(self) -> str:
        return f"**{self.value}**" if self.route == "thm" else str(self.value)


@dataclass
class Table:
    title: str
    corner: str
    columns: list
    rows: list = field(default_factory=list)     # (group, label, [Cell | None])

    def add(self, group: str, label: str, cells: list):
        self.rows.append((group, label, cells))

    def cell(self, label: str, column: str, group: str | None = None) -> Cell | None:
        j = self.columns.index(column)
        for g, lab, cells in self.rows:
            if lab == label and (group is None or g == group):
                return cells[j]
        raise KeyError(label)


def _set_label(I) -> str:
    return "{" + ",".join(str(s + 1) for s in I) + "}" if I else "{}"


def _check(rep: fw.CountReport) -> str:
    if rep.rhs is None:
        return "enum"
    if not rep.match:
        raise CorrectnessAlarm(f"{rep.identity}: enumeration {rep.lhs} != formula {rep.rhs}")
    return "thm"


def _cores_by_type(ws, k):
    od = ws.orbit_data
    out = {}
    for I in combinations(range(ws.rank), k):
        out.setdefault(od.orbit_of[ws.std_flat(I)], []).append(I)
    return dict(sorted(out.items()))


def core_rank_table(ws, k: int) -> Table:
    """Rows: target types one rank above the cores; columns: the cores of
    size k, then per core type its total and u-column."""
    n = ws.rank
    if not 0 <= k <= n - 2:
        raise ValueError(f"core rank must lie in 0..{n - 2}")
    ws.require(k + 1)
    od = ws.orbit_data
    groups = _cores_by_type(ws, k)
    cores = [I for Is in groups.values() for I in Is]
    targets = od.at_codim(k + 1)
    cols = [_set_label(I) for I in cores]
    for x in groups:
        cols += [f"G([{od[x].label}])", f"u[{od[x].label}]"]
    T = Table(f"{ws.type}: full-support simple extensions of cores of rank {k}", "[Y] \\ I", cols)
    for Y in targets:
        cells = [Cell(len(fw.enumerate_g(ws, fw.GQuery(Y.id, core=mask_of(I)))), "enum") for I in cores]
        for x in groups:
            rep = fw.g_sets(ws, fw.GQuery(Y.id, core_type=x)).report
            cells += [Cell(rep.lhs, _check(rep)), Cell(ws.os_matrix[x, Y.id], "lattice")]
        T.add("", Y.label, cells)
    cells = [Cell(fw.nfw_se(ws, I).lhs, "enum") for I in cores]
    for x in groups:
        rep = fw.nfw_se(ws, x)
        size = len(restriction(ws.lattice, od[x].representative).hyperplanes)
        cells += [Cell(rep.lhs, _check(rep)), Cell(size, "lattice")]
    T.add("", "nfw_se", cells)
    return T


def full_table(ws) -> Table:
    """Every core of rank <= n-2 against every proper nonzero target type,
    grouped by core type, with a type total and u-row per group."""
    n = ws.rank
    ws.require(n - 1)
    od = ws.orbit_data
    targets = [Y for Y in od if 1 <= Y.codim <= n - 1]
    cols = [Y.label for Y in targets] + ["nfw_se"]
    T = Table(f"{ws.type}: full-support parabolic subgroups by core", "I \\ [Y]", cols)
    for k in range(n - 1):
        for x, Is in _cores_by_type(ws, k).items():
            X = od[x]
            for I in Is:
                m = mask_of(I)
                cells = [Cell(len(fw.enumerate_g(ws, fw.GQuery(Y.id, core=m))), "enum")
                         if Y.codim > k else None for Y in targets]
                cells.append(Cell(fw.nfw_se(ws, I).lhs, "enum"))
                T.add(X.label, _set_label(I), cells)
            cells = []
            for Y in targets:
                if Y.codim <= k:
                    cells.append(None)
                    continue
                rep = fw.g_sets(ws, fw.GQuery(Y.id, core_type=x)).report
                cells.append(Cell(rep.lhs, _check(rep)))
            rep = fw.nfw_se(ws, x)
            cells.append(Cell(rep.lhs, _check(rep)))
            T.add(X.label, f"G([{X.label}])", cells)
            cells = [Cell(ws.os_matrix[x, Y.id], "lattice") if Y.codim >= k else None for Y in targets]
            cells.append(Cell(len(restriction(ws.lattice, X.representative).hyperplanes), "lattice"))
            T.add(X.label, f"u[{X.label}]", cells)
    return T


# -- rendering -----------------------------------------------------------------

def to_markdown(T: Table) -> str:
    grouped = any(g for g, _, _ in T.rows)
    head = (["type"] if grouped else []) + [T.corner] + T.columns
    out = [f"### {T.title}", "", "| " + " | ".join(head) + " |",
           "|" + "|".join("---" for _ in head) + "|"]
    for g, label, cells in T.rows:
        row = ([g] if grouped else []) + [label] + [c.markdown() if c else "" for c in cells]
        out.append("| " + " | ".join(row) + " |")
    out += ["", "Bold: enumerated and equal to the closed formula."]
    return "\n".join(out) + "\n"


def to_csv(T: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "row", "column", "value", "route"])
    for g, label, cells in T.rows:
        for col, c in zip(T.columns, cells):
            if c is not None:
                w.writerow([g, label, col, c.value, c.route])
    return buf.getvalue()


def to_json(T: Table) -> str:
    doc = {
        "title": T.title,
        "columns": T.columns,
        "rows": [{"group": g, "row": label,
                  "cells": [None if c is None else {"value": c.value, "route": c.route} for c in cells]}
                 for g, label, cells in T.rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render(T: Table, fmt: str) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    return {"markdown": to_markdown, "csv": to_csv, "json": to_json}[fmt](T)
