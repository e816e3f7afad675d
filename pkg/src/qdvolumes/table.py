"""The shipped table of volumes: loading, structural checks and verification
against the pipeline."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .strata import InvalidSignature, StratumSignature, invariants, parse_signature, to_profile

COLUMNS = ("dim", "genus", "stratum", "num", "den", "pi_power")


class TableFormatError(ValueError):
    pass


@dataclass(frozen=True)
class TableRow:
    dim: int
    genus: int
    stratum: StratumSignature
    num_text: str
    den_text: str
    pi_power: int
    stratum_text: str
    line: int

    @property
    def coefficient(self) -> Fraction:
        return Fraction(int(self.num_text), int(self.den_text))

    @property
    def weight(self) -> int:
        return invariants(to_profile(self.stratum)).weight

    def serialize(self) -> str:
        return f"{self.dim},{self.genus},{self.stratum_text},{self.num_text},{self.den_text},{self.pi_power}"


def default_table_path():
    return resources.files("qdvolumes") / "data" / "appendix_b.csv"


def parse_row(fields: dict, line: int) -> TableRow:
    try:
        dim = int(fields["dim"])
        genus = int(fields["genus"])
        pi_power = int(fields["pi_power"])
        num, den = fields["num"].strip(), fields["den"].strip()
        if int(den) <= 0 or int(num) <= 0:
            raise TableFormatError(f"line {line}: coefficient must be a positive fraction")
        text = fields["stratum"].strip()
        sig = parse_signature(text)
    except (KeyError, ValueError, InvalidSignature) as exc:
        raise TableFormatError(f"line {line}: {exc}") from exc
    inv = invariants(to_profile(sig))
    if inv.dim != dim or inv.genus != genus:
        raise TableFormatError(f"line {line}: {sig} has dim {inv.dim}, genus {inv.genus}; row says {dim}, {genus}")
    if pi_power != 2 * inv.g_eff:
        raise TableFormatError(f"line {line}: pi power {pi_power} != 2 g_eff = {2 * inv.g_eff}")
    return TableRow(dim, genus, sig, num, den, pi_power, text, line)


def load_table(path=None) -> list[TableRow]:
    if path is None:
        text = default_table_path().read_text()
    else:
        with open(path, newline="") as fh:
            text = fh.read()
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise TableFormatError(f"expected columns {','.join(COLUMNS)}, got {reader.fieldnames}")
    return [parse_row(r, i) for i, r in enumerate(reader, start=2)]


def serialize_table(rows) -> str:
    return "\n".join([",".join(COLUMNS)] + [r.serialize() for r in rows]) + "\n"


def find_conflicts(rows) -> dict[StratumSignature, list[TableRow]]:
    groups: dict = {}
    for r in rows:
        groups.setdefault(r.stratum, []).append(r)
    return {s: rs for s, rs in groups.items() if len({r.coefficient for r in rs}) > 1}


@dataclass
class RowReport:
    row: TableRow
    status: str  # PASS, FAIL, CONFLICT, SKIP, ERROR
    computed: Fraction | None = None
    detail: str = ""

    def line(self) -> str:
        c = "" if self.computed is None else f" computed={self.computed}"
        d = f" ({self.detail})" if self.detail else ""
        return f"{self.status:8s} Q({self.row.stratum.display()}) table={self.row.coefficient}·π^{self.row.pi_power}{c}{d}"


def _compute(args):
    orders, variant, cap, route = args
    from .volumes import compute_volume

    try:
        r = compute_volume(StratumSignature(orders), "aez", "eo", variant, cap, route=route)
        return orders, r.coefficient, r.pi_power, ""
    except Exception as exc:  # reported per row
        return orders, None, None, f"{type(exc).__name__}: {exc}"


def verify_table(
    rows, weight_cap: int = 6, variant: str = "frobenius", workers: int = 1, route: str = "characters"
) -> list[RowReport]:
    """Compare every row with weight <= cap against the pipeline.

    Rows of a stratum that appears more than once with different values are
    reported as CONFLICT, each with the computed value alongside when the
    stratum is within the cap.
    """
    conflicts = find_conflicts(rows)
    todo = sorted({r.stratum.orders for r in rows if r.weight <= weight_cap})
    jobs = [(o, variant, weight_cap, route) for o in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_compute, jobs))
    else:
        results = [_compute(j) for j in jobs]
    computed = {o: (c, e, err) for o, c, e, err in results}
    out = []
    for r in sorted(rows, key=lambda r: (r.dim, r.stratum.orders, r.coefficient)):
        if r.stratum.orders not in computed:
            status = "CONFLICT" if r.stratum in conflicts else "SKIP"
            out.append(RowReport(r, status, detail=f"weight {r.weight} > {weight_cap}, not computed"))
            continue
        c, e, err = computed[r.stratum.orders]
        if err:
            out.append(RowReport(r, "ERROR", detail=err))
            continue
        match = c == r.coefficient and e == r.pi_power
        if r.stratum in conflicts:
            out.append(RowReport(r, "CONFLICT", c, "matches pipeline" if match else "differs from pipeline"))
        else:
            out.append(RowReport(r, "PASS" if match else "FAIL", c))
    return out


def summarize(reports) -> dict[str, int]:
    out: dict[str, int] = {}
    for r in reports:
        out[r.status] = out.get(r.status, 0) + 1
    return out
