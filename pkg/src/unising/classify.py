"""Unisingularity verdicts, the classification predicates, and the
cross-check harness comparing computed verdicts against the predicates.

A character is unisingular when every group element's image matrix has
eigenvalue 1, i.e. when the eigenvalue-1 multiplicity is at least 1 on
every conjugacy class.  The predicates encode, per family, exactly which
characters fail: keyed on degree, congruences and primality of q, and
rationality of the character values (a row is rational-valued iff every
stored value has conductor 1).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .gtables import build_table
from .gtables.arith import prime_power
from .mult import eig1_mult
from .tables import CharRow, CharTable, INGESTED, PGL2, PGU3, PSL2, PSU3, REE2G2, SUZUKI


@dataclass
class Verdict:
    char_label: str
    degree: int
    unisingular: bool
    witnesses: list[tuple[str, int]] = field(default_factory=list)


@dataclass
class PredictedStatus:
    char_label: str
    expected_unisingular: bool
    rule_fired: str


class SpecificationGapError(RuntimeError):
    """predict() found no matching clause; should be unreachable."""


def is_unisingular(table: CharTable, char_label: str) -> Verdict:
    row = table.char(char_label)
    witnesses = []
    for cls in table.classes:
        if eig1_mult(table, char_label, cls.label) == 0:
            witnesses.append((cls.label, 0))
    return Verdict(char_label, row.degree, not witnesses, witnesses)


def quasikernel_check(table: CharTable, char_label: str) -> bool:
    """Whether the quasikernel {g : |chi(g)| = chi(1)} equals the kernel."""
    row = table.char(char_label)
    deg = row.degree
    degsq = deg * deg
    for v in row.values:
        in_quasi = (v * v.conj()).as_rational() == degsq
        in_ker = v.as_rational() == deg
        if in_quasi != in_ker:
            return False
    return True


def is_rational_row(row: CharRow) -> bool:
    return all(v.n == 1 for v in row.values)


def _is_prime(q: int) -> bool:
    pp = prime_power(q)
    return pp is not None and pp[1] == 1


def predict(family_tag: str, q: int, row: CharRow, *, fixture: str | None = None) -> PredictedStatus:
    """Expected status from the encoded classification clauses."""
    tag = family_tag.upper()
    deg = row.degree
    lab = row.label

    # the principal character is the only unisingular linear character
    if deg == 1:
        if lab in ("1", "lin"):
            return PredictedStatus(lab, True, "principal")
        return PredictedStatus(lab, False, "nontrivial-linear")

    if tag == INGESTED:
        return _predict_fixture(fixture or "", row)

    if tag == PGL2:
        if deg == q and _pgl2_steinberg(q, row):
            return PredictedStatus(lab, False, "pPGL2(2)")
        if deg == q - 1 and q % 2 == 1 and _is_prime(q):
            return PredictedStatus(lab, False, "pPGL2(3)")
        return PredictedStatus(lab, True, "pPGL2-none")

    if tag == PSL2:
        if q % 2 == 0 and deg == q:
            return PredictedStatus(lab, False, "Thm1.1(3)")
        if deg == q - 1 and q % 2 == 1 and _is_prime(q):
            return PredictedStatus(lab, False, "Thm1.1(2)")
        if deg == (q - 1) // 2 and q > 3 and _is_prime(q) and q % 4 == 3:
            return PredictedStatus(lab, False, "Thm1.1(1)")
        return PredictedStatus(lab, True, "PSL2-none")

    if tag == PGU3:
        if deg == q * q - q and (_is_prime(q) or is_rational_row(row)):
            return PredictedStatus(lab, False, "pPGU3(2)")
        if deg == q * q - q + 1 and _is_prime(q) and q % 2 == 1 and not is_rational_row(row):
            return PredictedStatus(lab, False, "pPGU3(3)")
        return PredictedStatus(lab, True, "pPGU3-none")

    if tag == PSU3:
        if deg == q * q - q and (q % 3 != 2 or _is_prime(q)):
            return PredictedStatus(lab, False, "Thm1.1(4)")
        if deg == q * q - q + 1 and _is_prime(q) and q % 2 == 1 and not is_rational_row(row):
            return PredictedStatus(lab, False, "Thm1.1(5)")
        return PredictedStatus(lab, True, "PSU3-none")

    if tag == SUZUKI:
        return PredictedStatus(lab, True, "Prop.Sz")
    if tag == REE2G2:
        return PredictedStatus(lab, True, "Prop.2G2")

    raise SpecificationGapError(f"no clause for family {family_tag}")


def _pgl2_steinberg(q: int, row: CharRow) -> bool:
    """Among the degree-q rows of PGL2(q), the Steinberg is the one whose
    value at an element of order q-1 is 1 (for even q it is unique)."""
    if q % 2 == 0:
        return True
    return row.values[2].as_rational() == 1  # the first a-family class, a^1


def _predict_fixture(name: str, row: CharRow) -> PredictedStatus:
    deg = row.degree
    lab = row.label
    name = name.upper()
    if name.startswith("M11"):
        if deg == 10:
            return PredictedStatus(lab, False, "Prop6.1(8)")
        return PredictedStatus(lab, True, "M11-none")
    if name.startswith("M23"):
        return PredictedStatus(lab, deg != 22, "Prop6.1(9)" if deg == 22 else "M23-none")
    if name.startswith("HS") or name.startswith("MCL"):
        which = "Prop6.1(10)" if name.startswith("HS") else "Prop6.1(11)"
        return PredictedStatus(lab, deg != 22, which if deg == 22 else name + "-none")
    if name.startswith("SZ2"):
        return PredictedStatus(lab, deg != 4, "Sz(2)-deg4" if deg == 4 else "Sz2-none")
    if name.startswith("REE3"):
        if deg == 8:
            return PredictedStatus(lab, False, "2G2(3)-deg8")
        if deg == 7 and not is_rational_row(row):
            return PredictedStatus(lab, False, "2G2(3)-deg7-irrational")
        return PredictedStatus(lab, True, "Ree3-none")
    raise SpecificationGapError(f"no fixture rule set named {name!r}")


# -- cross-check harness -----------------------------------------------


@dataclass
class CheckRow:
    char_label: str
    degree: int
    unisingular: bool
    witnesses: list[str]
    expected: bool
    rule: str

    @property
    def agree(self) -> bool:
        return self.unisingular == self.expected


@dataclass
class Report:
    family: str
    q: int
    rows: list[CheckRow]
    notes: list[str] = field(default_factory=list)

    @property
    def disagreements(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.agree]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.notes

    def to_text(self) -> str:
        out = [f"# {self.family} q={self.q}: {len(self.rows)} characters, "
               f"{sum(1 for r in self.rows if not r.unisingular)} not unisingular, "
               f"{len(self.disagreements)} disagreements"]
        for r in self.rows:
            wit = ",".join(r.witnesses) if r.witnesses else "-"
            out.append(
                f"{r.char_label}\tdeg={r.degree}\tunisingular={str(r.unisingular).lower()}\t"
                f"witnesses={wit}\trule={r.rule}\tagree={str(r.agree).lower()}"
            )
        for n in self.notes:
            out.append(f"! {n}")
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "q", "char_label", "degree", "unisingular",
                    "witness_classes", "rule_fired", "agree"])
        for r in self.rows:
            w.writerow([self.family, self.q, r.char_label, r.degree,
                        str(r.unisingular).lower(), ";".join(r.witnesses),
                        r.rule, str(r.agree).lower()])
        return buf.getvalue()


def classify_table(table: CharTable, *, fixture: str | None = None) -> Report:
    fam = table.family.tag
    q = table.family.q
    rows = []
    for char in table.chars:
        v = is_unisingular(table, char.label)
        pred = predict(fam, q, char, fixture=fixture)
        rows.append(CheckRow(char.label, v.degree, v.unisingular,
                             [wl for wl, _ in v.witnesses], pred.expected_unisingular,
                             pred.rule_fired))
    name = table.name if fam == INGESTED else fam
    return Report(name, q, rows)


def cross_check(family_tag: str, q: int, *, table: CharTable | None = None) -> Report:
    """Build, classify, compare against the predicates, and verify the
    stated witness locations (orders q+1 and p for the PGL2/PSL2 clauses)."""
    t = table if table is not None else build_table(family_tag, q)
    rep = classify_table(t)

    p, _k = prime_power(q)
    for r in rep.rows:
        if r.unisingular or not r.agree:
            continue
        orders = {t.conj_class(w).order for w in r.witnesses}
        if r.rule in ("pPGL2(2)", "Thm1.1(3)"):
            bad = {o for o in orders if (q + 1) % o or o == 1}
            if bad:
                rep.notes.append(
                    f"{r.char_label}: witnesses of order {sorted(bad)}, expected order q+1 elements")
            if q + 1 not in orders:
                rep.notes.append(f"{r.char_label}: no witness of order exactly q+1")
        elif r.rule in ("pPGL2(3)", "Thm1.1(2)", "Thm1.1(1)"):
            if orders != {p}:
                rep.notes.append(
                    f"{r.char_label}: witnesses of orders {sorted(orders)}, expected p={p}")
    return rep


def verify_range(family_tag: str, qs: list[int]) -> list[Report]:
    return [cross_check(family_tag, q) for q in qs]
