"""Read/write character tables with power maps in a plain text format.

Grammar (UNISING-TBL v1), one record per line:

    file     = magic NL header sections
    magic    = "UNISING-TBL v1"
    header   = "NAME" name NL "ORDER" int NL "CLASSES" int NL "CHARS" int
    sections = "BEGIN CLASSES" NL classline* "END CLASSES" NL
               "BEGIN CHARS" NL charline* "END CHARS"
    classline= label SP order SP size SP powers      ; powers = label ("," label)*
    charline = label ("|" value)*                    ; value in E(n) syntax

Labels contain no whitespace, ',' or '|'.  The power list of a class has
exactly `order` entries (g^0 .. g^(order-1)); power maps are mandatory,
never inferred.  A parsed table is fully validated (orthogonality, power
maps, sum of squared degrees) before use.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources

from .cyclo import CycError, parse_cyc, render_cyc
from .tables import CharRow, CharTable, ConjClass, FamilyId, INGESTED, TableError

MAGIC = "UNISING-TBL v1"

FIXTURES = ("M11", "Sz2", "Ree3")


class IngestError(TableError):
    pass


def render_table(table: CharTable) -> str:
    out = [MAGIC]
    out.append(f"NAME {table.name or table.family}")
    out.append(f"ORDER {table.group_order}")
    out.append(f"CLASSES {len(table.classes)}")
    out.append(f"CHARS {len(table.chars)}")
    out.append("BEGIN CLASSES")
    for c in table.classes:
        out.append(f"{c.label} {c.order} {c.size} {','.join(c.power_to)}")
    out.append("END CLASSES")
    out.append("BEGIN CHARS")
    for x in table.chars:
        out.append("|".join([x.label] + [render_cyc(v) for v in x.values]))
    out.append("END CHARS")
    return "\n".join(out) + "\n"


def parse_table(text: str, *, validate: bool = True) -> CharTable:
    lines = text.splitlines()

    def err(i: int, msg: str) -> IngestError:
        return IngestError(f"line {i + 1}: {msg}")

    if not lines or lines[0].strip() != MAGIC:
        raise err(0, f"missing magic line {MAGIC!r}")
    header: dict[str, str] = {}
    i = 1
    for key in ("NAME", "ORDER", "CLASSES", "CHARS"):
        if i >= len(lines) or not lines[i].startswith(key + " "):
            raise err(i, f"expected {key} header")
        header[key] = lines[i][len(key) + 1:].strip()
        i += 1
    try:
        order = int(header["ORDER"])
        n_classes = int(header["CLASSES"])
        n_chars = int(header["CHARS"])
    except ValueError as exc:
        raise err(1, f"bad integer in header: {exc}") from None

    if i >= len(lines) or lines[i].strip() != "BEGIN CLASSES":
        raise err(i, "expected BEGIN CLASSES")
    i += 1
    classes: list[ConjClass] = []
    while i < len(lines) and lines[i].strip() != "END CLASSES":
        parts = lines[i].split()
        if len(parts) != 4:
            raise err(i, "class line needs: label order size powers")
        label, o_s, size_s, powers_s = parts
        try:
            o, size = int(o_s), int(size_s)
        except ValueError:
            raise err(i, "order/size must be integers") from None
        powers = tuple(powers_s.split(","))
        if len(powers) != o:
            raise err(i, f"class {label}: {len(powers)} power entries for order {o}")
        try:
            classes.append(ConjClass(label, o, size, powers))
        except TableError as exc:
            raise err(i, str(exc)) from None
        i += 1
    if i >= len(lines):
        raise err(i - 1, "missing END CLASSES")
    i += 1
    if i >= len(lines) or lines[i].strip() != "BEGIN CHARS":
        raise err(i, "expected BEGIN CHARS")
    i += 1
    chars: list[CharRow] = []
    while i < len(lines) and lines[i].strip() != "END CHARS":
        parts = lines[i].split("|")
        if len(parts) != n_classes + 1:
            raise err(i, f"character line needs label and {n_classes} values")
        label = parts[0].strip()
        try:
            values = tuple(parse_cyc(v) for v in parts[1:])
        except CycError as exc:
            raise err(i, str(exc)) from None
        chars.append(CharRow(label, values))
        i += 1
    if i >= len(lines):
        raise err(i - 1, "missing END CHARS")

    if len(classes) != n_classes:
        raise IngestError(f"header says {n_classes} classes, file has {len(classes)}")
    if len(chars) != n_chars:
        raise IngestError(f"header says {n_chars} characters, file has {len(chars)}")
    table = CharTable(FamilyId(INGESTED, 0), order, tuple(classes), tuple(chars),
                      name=header["NAME"])
    if validate:
        table.validate()
    return table


def _fixture_text(name: str) -> str:
    fname = f"{name.lower()}.tbl"
    override = os.environ.get("UNISING_FIXTURE_DIR")
    if override:
        path = os.path.join(override, fname)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                return fh.read()
    ref = resources.files("unising").joinpath("fixtures", fname)
    if not ref.is_file():
        raise IngestError(f"unknown fixture {name!r} (no bundled {fname})")
    return ref.read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def fixture(name: str) -> CharTable:
    """A bundled (or UNISING_FIXTURE_DIR-provided) table, validated."""
    return parse_table(_fixture_text(name))
