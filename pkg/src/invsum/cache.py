"""On-disk cache of count tables, one JSON file per (kind, structure)."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from .counting import (
    CountTable,
    MTable,
    NTable,
    m_value,
    m_value_bruteforce,
    n_value_bruteforce,
    n_value_formula,
    m_table,
)
from .structures import Structure

_KINDS = {"mtable": MTable, "ntable": NTable}


def table_path(directory, kind: str, structure: Structure) -> Path:
    return Path(directory) / f"{kind}_{structure.descriptor}.json"


def dump_table(table: CountTable) -> str:
    return json.dumps(table.to_dict(), separators=(",", ":"))


def parse_table(text: str, structure: Structure) -> CountTable:
    data = json.loads(text)
    kind = data["kind"]
    if kind not in _KINDS:
        raise ValueError(f"unknown table kind {kind!r}")
    if data["structure"] != structure.descriptor:
        raise ValueError(f"cached table is for {data['structure']}, not {structure.descriptor}")
    values = data["values"]
    if sorted(values, key=int) != [str(i) for i in range(structure.order)]:
        raise ValueError("cached table does not cover the structure")
    return _KINDS[kind](structure, [int(values[str(i)]) for i in range(structure.order)])


def write_table(directory, table: CountTable) -> Path:
    path = table_path(directory, table.kind, table.structure)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(dump_table(table))
    os.replace(tmp, path)
    return path


def read_table(directory, kind: str, structure: Structure) -> Optional[CountTable]:
    path = table_path(directory, kind, structure)
    if not path.exists():
        return None
    return parse_table(path.read_text(), structure)


def _spot_indices(order: int) -> list[int]:
    return sorted({0, 1 % order, order // 2, order - 1})


def spot_check(table: CountTable) -> bool:
    """Recompute a few entries from scratch and compare."""
    s = table.structure
    for i in _spot_indices(s.order):
        if table.kind == "mtable":
            fresh = m_value(i, s) if s.is_field else m_value_bruteforce(i, s)
        elif s.is_field:
            fresh = n_value_formula(i, m_table(s))
        else:
            fresh = n_value_bruteforce(i, s)
        if fresh != table.values[i]:
            return False
    return True


def cached_table(
    directory,
    kind: str,
    structure: Structure,
    build: Callable[[], CountTable],
    trust: bool = False,
) -> CountTable:
    """Load a table if present (validated unless ``trust``), else build and store it."""
    if directory is None:
        return build()
    try:
        table = read_table(directory, kind, structure)
    except (ValueError, KeyError, json.JSONDecodeError):
        table = None
    if table is not None and table.kind == kind and (trust or spot_check(table)):
        return table
    table = build()
    write_table(directory, table)
    return table
