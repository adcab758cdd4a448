"""Triangle rendering and b-file reconciliation.

Supported triangle names:

  A, B, D            the per-series support-rank tables
  sheared-catalan    the sheared ballot triangle (rows t >= 0)
  pascal             C(t, s)
  lucas              [t over s], with the open (0,0) corner

b-file format: ASCII lines "<index> <value>", '#' comments and blank lines
ignored, indices increasing by 1 from the sequence offset.  Offline fixture
files shipped with the package are authoritative; a live fetch from oeis.org
is opt-in and falls back to the fixture with a warning on any failure.

Sequence ids and their generators (offsets as in the shipped fixtures):

  A009766  type-A table read by rows (n >= 0), offset 0
  A059481  type-B table read by rows (n >= 0), offset 0
  A241188  type-D table read by rows (n >= 2), offset 1
  A008315  ballot triangle rows n >= 0, entries s <= n//2, offset 0
  A007318  Pascal triangle read by rows, offset 0
  A029635  Lucas triangle read by rows with corner value 2, offset 0
  A129869  type-D main diagonal a_n(D_n), n = 2, 3, ..., offset 0
"""

from __future__ import annotations

import os
import sys
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from . import formulas

FIXTURE_ENV_VAR = "DYNKIN_TILTING_FIXTURES"
_FIXTURE_DIR = Path(__file__).parent / "fixtures"

TRIANGLE_NAMES = ("A", "B", "D", "sheared-catalan", "pascal", "lucas")


class BFileError(ValueError):
    """Malformed b-file content."""


@dataclass(frozen=True)
class TriangleDoc:
    """A rendered triangle: rows plus row sums, read row by row."""

    name: str
    first_row: int
    rows: tuple[tuple[int, ...], ...]
    sums: tuple[int, ...]
    offset: int  # linear index of the first b-file term


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]

    @property
    def offset(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)


def _series_rows(series: str, count: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    first = 2 if series == "D" else 0
    for n in range(first, first + count):
        yield n, formulas.a_row(series, n)


def triangle_doc(name: str, rows: int) -> TriangleDoc:
    """Build a TriangleDoc with `rows` rows of the named triangle."""
    if rows < 1 or rows > 1000:
        raise ValueError("row count must be within 1..1000")
    if name in ("A", "B", "D"):
        first = 2 if name == "D" else 0
        data = tuple(row for _, row in _series_rows(name, rows))
        return TriangleDoc(
            name, first, data, tuple(sum(r) for r in data), 1 if name == "D" else 0
        )
    if name == "sheared-catalan":
        data = tuple(
            tuple(formulas.z_value("A", t, s) for s in range((t + 1) // 2 + 1))
            for t in range(rows)
        )
        return TriangleDoc(name, 0, data, tuple(sum(r) for r in data), 0)
    if name == "pascal":
        data = tuple(tuple(formulas.binom(t, s) for s in range(t + 1)) for t in range(rows))
        return TriangleDoc(name, 0, data, tuple(sum(r) for r in data), 0)
    if name == "lucas":
        # row 0 is the open corner; OEIS A029635 pins it to 2
        data = tuple(
            (2,) if t == 0 else tuple(formulas.bailey(t, s) for s in range(t + 1))
            for t in range(rows)
        )
        return TriangleDoc(name, 0, data, tuple(sum(r) for r in data), 0)
    raise ValueError(f"unknown triangle {name!r}; choose one of {', '.join(TRIANGLE_NAMES)}")


def render_triangle(name: str, rows: int, fmt: str) -> bytes:
    """Render a triangle as pretty text, CSV, or a b-file."""
    doc = triangle_doc(name, rows)
    if fmt == "pretty":
        return _render_pretty(doc).encode()
    if fmt == "csv":
        return _render_csv(doc).encode()
    if fmt == "bfile":
        return _render_bfile(doc).encode()
    raise ValueError(f"unknown format {fmt!r}; choose pretty, csv, or bfile")


def _render_pretty(doc: TriangleDoc) -> str:
    width = max(len(str(v)) for row in doc.rows for v in row)
    sum_width = max(len(str(v)) for v in doc.sums)
    with_sums = doc.name in ("A", "B", "D")
    lines = []
    dot_rows: list[tuple[int, tuple[str, ...]]] = []
    if doc.name == "D":
        dot_rows = [(0, ("·",)), (1, ("·", "·"))]
    if doc.name == "lucas":
        # re-show the corner as the open dot; the value 2 is OEIS-only
        dot_rows = [(0, ("·",))]
        doc = TriangleDoc(doc.name, 1, doc.rows[1:], doc.sums[1:], doc.offset)
    for n, cells in dot_rows:
        body = " ".join(c.rjust(width) for c in cells)
        lines.append(f"{n:>3}  {body}")
    for k, row in enumerate(doc.rows):
        n = doc.first_row + k
        body = " ".join(str(v).rjust(width) for v in row)
        if with_sums:
            lines.append(f"{n:>3}  {body}  | {str(doc.sums[k]).rjust(sum_width)}")
        else:
            lines.append(f"{n:>3}  {body}")
    return "\n".join(lines) + "\n"


def _render_csv(doc: TriangleDoc) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in doc.rows) + "\n"


def _render_bfile(doc: TriangleDoc) -> str:
    lines = [f"# {doc.name} triangle read by rows, first row {doc.first_row}"]
    if doc.name == "lucas":
        lines.append("# corner (0,0) uses the OEIS convention value 2")
    idx = doc.offset
    for row in doc.rows:
        for v in row:
            lines.append(f"{idx} {v}")
            idx += 1
    return "\n".join(lines) + "\n"


# --- sequence generators for reconciliation ---------------------------------


def _flat(name: str, terms: int, offset: int) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    rows_needed = terms + 2
    doc = triangle_doc(name, rows_needed)
    idx = offset
    for row in doc.rows:
        for v in row:
            out.append((idx, v))
            idx += 1
            if len(out) == terms:
                return out
    return out


def _d_diagonal(terms: int) -> list[tuple[int, int]]:
    return [(k, formulas.bailey(2 * k + 2, k)) for k in range(terms)]


def _ballot_rows(terms: int) -> list[tuple[int, int]]:
    # OEIS row convention: T(n,k) = C(n,k) - C(n,k-1) for 0 <= k <= n//2,
    # which is the sheared triangle's row t = n-1 preceded by a lone 1.
    out: list[tuple[int, int]] = []
    idx = 0
    n = 0
    while len(out) < terms:
        for k in range(n // 2 + 1):
            out.append((idx, formulas.catalan_bracket(n, k)))
            idx += 1
            if len(out) == terms:
                return out
        n += 1
    return out


_GENERATORS: dict[str, Callable[[int], list[tuple[int, int]]]] = {
    "A009766": lambda t: _flat("A", t, 0),
    "A059481": lambda t: _flat("B", t, 0),
    "A241188": lambda t: _flat("D", t, 1),
    "A008315": _ballot_rows,
    "A007318": lambda t: _flat("pascal", t, 0),
    "A029635": lambda t: _flat("lucas", t, 0),
    "A129869": _d_diagonal,
}

SEQUENCE_IDS = tuple(sorted(_GENERATORS))


def generate_terms(sequence_id: str, terms: int) -> list[tuple[int, int]]:
    """First `terms` (index, value) pairs of a supported sequence."""
    if sequence_id not in _GENERATORS:
        raise ValueError(f"unsupported sequence {sequence_id!r}; known: {', '.join(SEQUENCE_IDS)}")
    if terms < 1:
        raise ValueError("need at least one term")
    return _GENERATORS[sequence_id](terms)


# --- b-file parsing and fetching --------------------------------------------


def parse_bfile(sequence_id: str, text: str) -> BFile:
    """Parse b-file text; malformed lines report their line number."""
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from exc
        if val < 0:
            raise BFileError(f"line {lineno}: negative value {val}")
        if entries and idx != entries[-1][0] + 1:
            raise BFileError(
                f"line {lineno}: index {idx} does not follow {entries[-1][0]}"
            )
        entries.append((idx, val))
    if not entries:
        raise BFileError("b-file contains no entries")
    return BFile(sequence_id, tuple(entries))


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV_VAR)
    return Path(env) if env else _FIXTURE_DIR


def fixture_path(sequence_id: str) -> Path:
    return fixture_dir() / f"b{sequence_id[1:]}.txt"


def fetch_bfile(sequence_id: str, online: bool = False, timeout: float = 10.0) -> BFile:
    """Load a b-file from the fixture directory, or from oeis.org if asked.

    A failed live fetch warns on stderr and falls back to the fixture.
    """
    if online:
        url = f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt"
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                return parse_bfile(sequence_id, resp.read().decode())
        except Exception as exc:  # noqa: BLE001 - any network failure falls back
            print(
                f"warning: fetching {url} failed ({exc}); falling back to fixture",
                file=sys.stderr,
            )
    path = fixture_path(sequence_id)
    if not path.exists():
        raise FileNotFoundError(
            f"no fixture for {sequence_id} at {path} (set ${FIXTURE_ENV_VAR} to override)"
        )
    return parse_bfile(sequence_id, path.read_text())


@dataclass(frozen=True)
class ReconcileResult:
    sequence_id: str
    terms: int
    passed: bool
    detail: str


def reconcile(sequence_id: str, terms: int, online: bool = False) -> ReconcileResult:
    """Compare the first `terms` generated values against the b-file."""
    generated = generate_terms(sequence_id, terms)
    bfile = fetch_bfile(sequence_id, online=online)
    reference = list(bfile.entries[:terms])
    if len(reference) < terms:
        return ReconcileResult(
            sequence_id, terms, False, f"b-file has only {len(reference)} terms"
        )
    note = " (corner convention 2)" if sequence_id == "A029635" else ""
    for (gi, gv), (ri, rv) in zip(generated, reference):
        if (gi, gv) != (ri, rv):
            return ReconcileResult(
                sequence_id,
                terms,
                False,
                f"mismatch at index {ri}: generated ({gi},{gv}) vs b-file ({ri},{rv})",
            )
    return ReconcileResult(sequence_id, terms, True, f"{terms} terms agree{note}")
