"""JSON and CSV readers/writers for ideals, Hilbert functions and Betti tables."""

from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path

from .errors import MalformedInput
from .ideal import BettiTable, MonomialIdeal, minimalize
from .macaulay import HilbertFunction

log = logging.getLogger(__name__)


def load_json(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedInput(f"{path}: expected a JSON object")
    return data


def ideal_from_json(data: dict) -> tuple[MonomialIdeal, bool]:
    """Parse ``{"vars": N, "generators": [...]}``; returns the ideal and whether the input was minimal."""
    try:
        nvars = data["vars"]
        raw = [tuple(t) for t in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad ideal JSON: {exc}") from None
    if type(nvars) is not int or nvars < 1:
        raise MalformedInput("vars must be a positive integer")
    ideal = minimalize(raw, nvars)
    was_minimal = len(set(raw)) == len(raw) == len(ideal.generators)
    if not was_minimal:
        log.warning("input generators were not minimal; using %d minimal generators", len(ideal.generators))
    return ideal, was_minimal


def load_ideal(path) -> tuple[MonomialIdeal, bool]:
    return ideal_from_json(load_json(path))


def load_hilbert(path) -> HilbertFunction:
    return HilbertFunction.from_json(load_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def betti_csv(table: BettiTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in table.csv_rows():
        writer.writerow(row)
    return buf.getvalue()


def betti_from_json(data: dict) -> BettiTable:
    try:
        return BettiTable(
            tuple(data["betas"]),
            {int(d): tuple(v) for d, v in data.get("by_degree", {}).items()},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad Betti table JSON: {exc}") from None
