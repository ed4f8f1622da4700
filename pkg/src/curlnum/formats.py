"""Text encodings: sequence strings, b-files, and CSV plumbing.

Sequences over {2,3} travel as bare digit strings ("2323"); anything else is
comma-separated integers.  B-files are the OEIS interchange format: one
"index value" pair per line, indices strictly consecutive.
"""

import csv
import io
import re
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from .errors import FormatError

_BINARY_RE = re.compile(r"[23]+\Z")
_INT_RE = re.compile(r"-?\d+\Z")
_BFILE_LINE_RE = re.compile(r"(-?\d+) (-?\d+)\Z")


def parse_seq(text: str) -> Tuple[int, ...]:
    """Decode a sequence argument; raises ValueError on malformed text."""
    text = text.strip()
    if _BINARY_RE.match(text):
        return tuple(int(ch) for ch in text)
    parts = [part.strip() for part in text.split(",")]
    if all(_INT_RE.match(part) for part in parts):
        return tuple(int(part) for part in parts)
    raise ValueError("sequence must be a string of 2s and 3s or comma-separated "
                     "integers, got %r" % text)


def seq_to_text(s: Sequence[int]) -> str:
    """Inverse of parse_seq; {2,3}-sequences compress to digit strings."""
    if s and all(v in (2, 3) for v in s):
        return "".join(str(v) for v in s)
    return ",".join(str(v) for v in s)


class BFile(NamedTuple):
    offset: int
    records: Tuple[Tuple[int, int], ...]


def make_bfile(offset: int, values: Iterable[int]) -> BFile:
    return BFile(offset, tuple((offset + i, int(v)) for i, v in enumerate(values)))


def render_bfile(bf: BFile) -> str:
    _validate(bf)
    return "".join("%d %d\n" % rec for rec in bf.records)


def parse_bfile(text: str) -> BFile:
    if not text:
        raise FormatError("b-file is empty")
    if not text.endswith("\n"):
        raise FormatError("b-file must end with a newline")
    records: List[Tuple[int, int]] = []
    for ln, line in enumerate(text.splitlines(), start=1):
        m = _BFILE_LINE_RE.match(line)
        if not m:
            raise FormatError("b-file line %d is not 'index value': %r" % (ln, line))
        records.append((int(m.group(1)), int(m.group(2))))
    bf = BFile(records[0][0], tuple(records))
    _validate(bf)
    return bf


def _validate(bf: BFile) -> None:
    if not bf.records:
        raise FormatError("b-file has no records")
    for pos, (idx, _) in enumerate(bf.records):
        if idx != bf.offset + pos:
            raise FormatError("b-file index %d at position %d breaks the run "
                              "starting at %d" % (idx, pos, bf.offset))


def write_bfile(path: str, bf: BFile) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(render_bfile(bf))


def read_bfile(path: str) -> BFile:
    with open(path, newline="") as fh:
        return parse_bfile(fh.read())


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Comma-separated, header row, LF endings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def read_csv_rows(path: str) -> Tuple[List[str], List[List[str]]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise FormatError("CSV %s is empty" % path)
    return rows[0], rows[1:]
