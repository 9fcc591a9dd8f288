#!/usr/bin/env python3
"""
Knot table loading and the invariant-versus-oracle table run

A table is a CSV file with the header  name,strands,word .  Every row is
checked independently: the Jones pipeline against the bracket oracle, and for
knots the Burau Alexander pipeline against the Fox oracle.  A row that does
not parse is recorded as a row error and the run carries on.
"""

import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Union

from braids.braid_words import BraidWord, parse_braid
from config import settings
from invariants.oracles import (bracket_jones, fox_alexander,
                                jones_in_bracket_variable)
from invariants.yang_baxter import alexander, jones, jones_structure
from utils.report import Report


class TableError(ValueError):
    """The table file itself cannot be read."""


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    strands: int
    word: str
    braid: BraidWord

    @property
    def components(self) -> int:
        return self.braid.component_count()


@dataclass(frozen=True)
class RowError:
    line: int
    name: str
    message: str


Row = Union[KnotTableEntry, RowError]


def parse_row(line: int, record: dict) -> Row:
    name = (record.get('name') or '').strip() or f"row {line}"
    try:
        strands = int((record.get('strands') or '').strip())
        braid = parse_braid(record.get('word') or '', strands)
    except ValueError as e:
        return RowError(line, name, str(e))
    return KnotTableEntry(name, strands, (record.get('word') or '').strip(), braid)


def load_table(path: str = None) -> List[Row]:
    path = path or settings.KNOT_TABLE_PATH
    try:
        with open(path, newline='') as handle:
            records = list(csv.DictReader(handle))
    except OSError as e:
        raise TableError(f"cannot read knot table {path}: {e}")
    # line 1 is the header
    return [parse_row(line, record) for line, record in enumerate(records, start=2)]


def check_entry(entry: KnotTableEntry) -> dict:
    """Both pipelines and both oracles for one entry, as a JSON-ready record."""
    b = entry.braid
    record = {'name': entry.name, 'strands': entry.strands, 'word': entry.word,
              'components': entry.components}
    try:
        value = jones(b)
        oracle = bracket_jones(b)
        record['jones'] = value.to_json()
        record['bracket'] = oracle.to_json()
        record['jones_match'] = jones_in_bracket_variable(value) == oracle
        if b.is_knot():
            alex = alexander(b)
            fox = fox_alexander(b)
            record['alexander'] = alex.to_json()
            record['fox'] = fox.to_json()
            record['alexander_match'] = alex == fox
    except (ArithmeticError, ValueError) as e:
        record['error'] = f"{type(e).__name__}: {e}"
    return record


def _row_record(row: Row) -> dict:
    if isinstance(row, RowError):
        return {'name': row.name, 'line': row.line, 'error': row.message}
    return check_entry(row)


def is_mismatch(record: dict) -> bool:
    return record.get('jones_match') is False or record.get('alexander_match') is False


def run_table(path: str = None, workers: Optional[int] = None) -> Report:
    rows = load_table(path)
    report = Report(f"Knot table {path or settings.KNOT_TABLE_PATH}")
    if not rows:
        report.data['rows'] = []
        return report
    # the enhancement is shared by every row; solve it once before fanning out
    jones_structure()
    workers = workers or settings.TABLE_WORKERS
    with ThreadPoolExecutor(max_workers=workers) as pool:
        records = list(pool.map(_row_record, rows))
    for record in records:
        if 'error' in record:
            report.add(record['name'], False, record['error'])
            continue
        detail = 'jones' + (' + alexander' if 'alexander_match' in record else '')
        report.add(record['name'], not is_mismatch(record), detail)
    report.data['rows'] = records
    return report


def json_lines(report: Report) -> str:
    return '\n'.join(json.dumps(record) for record in report.data.get('rows', []))
