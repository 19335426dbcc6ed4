"""Parser for the verbatim copy of the printed benchmark tables.

Kept separate from the package loader so the curation test compares two
independent readings of the same numbers.
"""
import re
from pathlib import Path

PRINTED = Path(__file__).parent / "data" / "printed_tables.txt"

# a printed number: minus, optional whitespace (the layout splits "- 0.99"),
# digits with optional thin-space digit groups ("-2.238 00")
NUMBER = re.compile(r"-\s*\d+\.\d+(?: \d+)*")
ROW = re.compile(r"^\s*(?:(\d[spdf])\s+)?(\d\.\d+)\s+(.*)$")

COLUMNS = {
    1: ["e_paper"],
    2: ["e_paper", "ref_21", "ref_20"],
    3: ["e_paper", "ref_19"],
    4: ["e_paper", "ref_23", "ref_22"],
}


def _clean(token):
    return re.sub(r"\s+", "", token)


def parse_printed_tables(path=PRINTED):
    rows = []
    table = None
    state = None
    for line in path.read_text().splitlines():
        m = re.match(r"^Table (\d):", line)
        if m:
            table = int(m.group(1))
            state = None
            continue
        if table is None or not line.strip():
            continue
        m = ROW.match(line)
        if not m:
            continue
        if m.group(1):
            state = m.group(1)
        values = [_clean(t) for t in NUMBER.findall(m.group(3))]
        row = {"table_id": table, "state": state, "param": m.group(2)}
        for col, value in zip(COLUMNS[table], values):
            row[col] = value
        rows.append(row)
    return rows
