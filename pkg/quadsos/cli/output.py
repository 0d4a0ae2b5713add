# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Writers for sweep listings, decisions, interval data and check reports.

Standard output carries data only. CSV uses LF line endings and no padding.
"""

import contextlib
import csv
import json
import sys
from typing import Any, Dict, Iterable, Iterator, List, Optional, TextIO, Tuple

from quadsos.field.quad_arith import MODE_1, basis_mode
from quadsos.representation.bounds import Case, theorem2_intervals
from quadsos.representation.decision import Decision

LISTING_HEADER = ("m", "D")
BOUNDS_HEADER = ("m", "case", "label", "lo", "hi", "lo_approx", "hi_approx")


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """The file at ``path`` opened for writing, or standard output when None."""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def _csv_writer(stream: TextIO):
    return csv.writer(stream, lineterminator="\n")


def basis_name(d: int) -> str:
    """Label of the integral basis used for the coordinates of ``d``."""
    return "1 mod 4" if basis_mode(d) == MODE_1 else "2,3 mod 4"


def bounds_records(m: int) -> List[Dict[str, Any]]:
    """Exclusion intervals of both cases for ``m``, endpoints symbolic and approximate."""
    records = []
    for case in Case.for_multiplier(m):
        for interval in theorem2_intervals(m, case).intervals:
            records.append(
                {
                    "m": m,
                    "case": case.value,
                    "label": interval.label,
                    "lo": str(interval.lo),
                    "hi": "inf" if interval.hi is None else str(interval.hi),
                    "lo_approx": round(interval.lo.approx(), 6),
                    "hi_approx": None if interval.hi is None else round(interval.hi.approx(), 6),
                }
            )
    return records


def write_listing(
    stream: TextIO,
    rows: Iterable[Tuple[int, List[int]]],
    fmt: str,
    bounds: Optional[List[Dict[str, Any]]] = None,
):
    """Write ``(m, accepted d)`` rows; ``bounds`` adds the interval section.

    In CSV the listing section is left out when there are no rows but there are bounds.
    """
    rows = list(rows)
    if fmt == "csv":
        writer = _csv_writer(stream)
        if rows or bounds is None:
            writer.writerow(LISTING_HEADER)
            for m, accepted in rows:
                writer.writerows((m, d) for d in accepted)
        if bounds is not None:
            if rows:
                stream.write("\n")
            writer.writerow(BOUNDS_HEADER)
            for record in bounds:
                writer.writerow(
                    "" if record[key] is None else record[key] for key in BOUNDS_HEADER
                )
    elif fmt == "json":
        payload: Dict[str, Any] = {"rows": [{"m": m, "D": accepted} for m, accepted in rows]}
        if bounds is not None:
            payload["bounds"] = bounds
        write_json(stream, payload)
    else:
        for m, accepted in rows:
            stream.write("m=%d: %s\n" % (m, ", ".join(str(d) for d in accepted)))
        if bounds is not None:
            for record in bounds:
                stream.write(
                    "m=%d %s %s: [%s, %s]\n"
                    % (record["m"], record["case"], record["label"], record["lo"], record["hi"])
                )


def witness_record(decision: Decision) -> Dict[str, Any]:
    """The witness of a negative decision as a flat record."""
    witness = decision.witness
    return {
        "m": decision.m,
        "D": decision.d,
        "i": witness.i,
        "r": witness.r,
        "alpha": [witness.value.x, witness.value.y],
        "basis": basis_name(decision.d),
    }


def write_decision(stream: TextIO, decision: Decision, fmt: str):
    """Report of one decision."""
    if fmt == "json":
        payload: Dict[str, Any] = {
            "m": decision.m,
            "D": decision.d,
            "answer": "YES" if decision.answer else "NO",
            "indecomposables": decision.indecomposable_count,
            "reason": decision.reason,
        }
        if not decision.answer:
            payload["witness"] = witness_record(decision)
        write_json(stream, payload)
        return
    if fmt == "csv":
        writer = _csv_writer(stream)
        writer.writerow(("m", "D", "answer", "indecomposables", "i", "r", "x", "y"))
        witness = decision.witness
        writer.writerow(
            (
                decision.m,
                decision.d,
                "YES" if decision.answer else "NO",
                "" if decision.indecomposable_count is None else decision.indecomposable_count,
                "" if witness is None else witness.i,
                "" if witness is None else witness.r,
                "" if witness is None else witness.value.x,
                "" if witness is None else witness.value.y,
            )
        )
        return
    answer = "YES" if decision.answer else "NO"
    stream.write("%s m=%d D=%d (%s)\n" % (answer, decision.m, decision.d, decision.reason))
    if decision.indecomposable_count is not None:
        stream.write("indecomposables: %d\n" % decision.indecomposable_count)
    if decision.witness is not None:
        witness = decision.witness
        stream.write(
            "witness: alpha_{%d,%d} = %s, coordinates [%d, %d] in basis %s\n"
            % (
                witness.i,
                witness.r,
                witness.value,
                witness.value.x,
                witness.value.y,
                basis_name(decision.d),
            )
        )


def write_json(stream: TextIO, payload: Any):
    """Indented JSON followed by a newline."""
    stream.write(json.dumps(payload, indent=2))
    stream.write("\n")
