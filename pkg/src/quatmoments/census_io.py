"""Census export: one record per graph, as JSON lines, CSV, or text.

The two census kinds share one schema; bipartite records add the white
vertex counts and report the pairing under ``gamma`` instead of
``matching``/``twists``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Iterator, Optional, Sequence

from . import bipartite, moebius

WIGNER_FIELDS = ["matching", "twists", "v", "e", "f", "chi", "components"]
WISHART_FIELDS = ["gamma", "w", "w_colors", "v", "e", "f", "chi", "components"]


def wigner_census_records(deg: Sequence[int],
                          colors: Optional[Sequence[int]] = None,
                          bound: Optional[int] = None) -> Iterator[dict]:
    kwargs = {} if bound is None else {"bound": bound}
    for graph in moebius.enumerate_graphs(deg, colors, **kwargs):
        yield {
            "matching": [list(p) for p in graph.matching],
            "twists": [int(t) for t in graph.twists],
            "v": graph.v,
            "e": graph.e,
            "f": graph.f,
            "chi": graph.chi,
            "components": graph.components(),
        }


def wishart_census_records(deg: Sequence[int],
                           colors: Optional[Sequence[int]] = None,
                           bound: Optional[int] = None) -> Iterator[dict]:
    kwargs = {} if bound is None else {"bound": bound}
    for graph in bipartite.enumerate_bipartite_graphs(deg, colors, **kwargs):
        yield {
            "gamma": [list(p) for p in graph.gamma],
            "w": graph.w,
            "w_colors": {str(c): k for c, k in graph.w_by_color},
            "v": graph.m,
            "e": graph.e,
            "f": graph.f,
            "chi": graph.chi,
            "components": graph.components(),
        }


def _flatten(value) -> str:
    if isinstance(value, list):
        return "|".join("-".join(str(x) for x in item) if isinstance(item, list)
                        else str(item) for item in value)
    if isinstance(value, dict):
        return "|".join(f"{k}:{v}" for k, v in sorted(value.items()))
    return str(value)


def records_to_jsonl(records: Iterable[dict]) -> Iterator[str]:
    for record in records:
        yield json.dumps(record, separators=(", ", ": "))


def records_to_csv(records: Iterable[dict], fields: Sequence[str]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for record in records:
        writer.writerow([_flatten(record[f]) for f in fields])
    return out.getvalue()


def records_to_text(records: Iterable[dict], fields: Sequence[str]) -> Iterator[str]:
    for i, record in enumerate(records):
        body = "  ".join(f"{f}={_flatten(record[f])}" for f in fields)
        yield f"[{i}] {body}"
