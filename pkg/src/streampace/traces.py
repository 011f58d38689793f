# CSV trace files: header `time,<name>,...`, one row per time index in
# order, empty cells for time points with no value.

import csv
import io
from typing import Dict, List, Tuple

from .semantics import FiniteStream


class TraceFormatError(Exception):
    pass


def read_trace(text: str) -> Dict[str, FiniteStream]:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [row for row in rows if row]
    if not rows:
        raise TraceFormatError("empty trace file")
    header = [col.strip() for col in rows[0]]
    if not header or header[0] != "time":
        raise TraceFormatError("first column must be named 'time'")
    names = header[1:]
    if len(set(names)) != len(names):
        raise TraceFormatError("duplicate stream columns")
    streams: Dict[str, List] = {name: [] for name in names}
    for t, row in enumerate(rows[1:]):
        row = [cell.strip() for cell in row]
        if len(row) != len(header):
            raise TraceFormatError(f"row {t}: expected {len(header)} cells")
        if row[0] != str(t):
            raise TraceFormatError(
                f"row {t}: time column reads {row[0]!r}, expected {t}")
        for name, cell in zip(names, row[1:]):
            if cell == "":
                streams[name].append(None)
            else:
                try:
                    streams[name].append(int(cell))
                except ValueError:
                    raise TraceFormatError(
                        f"row {t}, column {name}: {cell!r} is not an integer"
                    ) from None
    return {name: tuple(w) for name, w in streams.items()}


def write_trace(streams: Dict[str, FiniteStream],
                names: Tuple[str, ...] = None,
                horizon: int = None) -> str:
    if names is None:
        names = tuple(streams)
    if horizon is None:
        horizon = max((len(streams[name]) for name in names), default=0)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["time", *names])
    for t in range(horizon):
        writer.writerow(
            [t] + ["" if streams[name][t] is None else streams[name][t]
                   for name in names])
    return out.getvalue()
