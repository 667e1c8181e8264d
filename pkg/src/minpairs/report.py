"""Rendering of accuracy tables and per-word traces.

Reports regenerate byte-identically from the same inputs: rendering is
pure, ordering is fixed by the grammar's condition order or first
appearance in the deterministic generation stream, and no timestamps are
embedded.  Accuracies render with two decimals in text tables; the CSV
output keeps full precision.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .evaluate import AccuracyTable, PairResult, word_trace
from .generation import MinimalPair
from .grammar import ConditionInfo


@dataclass
class ReportRow:
    section: str
    label: str
    values: dict[str, object]  # column -> float (accuracy), int (count), or str


@dataclass
class ReportDocument:
    title: str
    columns: list[str]
    rows: list[ReportRow] = field(default_factory=list)


def _fmt_text(v: object) -> str:
    if isinstance(v, float):
        return f"{v:.2f}"
    return str(v)


def _fmt_csv(v: object) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_text(doc: ReportDocument) -> str:
    label_w = max([len(r.label) for r in doc.rows] + [len(doc.title)])
    col_w = {
        c: max([len(_fmt_text(r.values.get(c, ""))) for r in doc.rows] + [len(c)])
        for c in doc.columns
    }
    lines = [doc.title, ""]
    header = " ".join([" " * label_w] + [c.rjust(col_w[c]) for c in doc.columns])
    lines.append(header.rstrip())
    section = None
    for row in doc.rows:
        if row.section != section:
            section = row.section
            if section:
                lines.append(f"{section}:")
        cells = [_fmt_text(row.values.get(c, "")).rjust(col_w[c]) for c in doc.columns]
        lines.append(" ".join([row.label.ljust(label_w)] + cells).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "row"] + doc.columns)
    for row in doc.rows:
        writer.writerow([row.section, row.label]
                        + [_fmt_csv(row.values.get(c, "")) for c in doc.columns])
    return buf.getvalue()


def emit_overall(column_tables: dict[str, AccuracyTable],
                 pair_counts: dict[str, int],
                 conditions: Sequence[ConditionInfo],
                 title: str = "Overall accuracies") -> ReportDocument:
    """One row per condition family in declaration order, one accuracy
    column per scorer, and a sentence-count column (two per pair)."""
    for name, table in column_tables.items():
        if table.keys != ("condition",):
            raise ValueError(
                f"column {name!r} is grouped by {table.keys}, not condition")
    doc = ReportDocument(title=title,
                         columns=list(column_tables) + ["# sents"])
    for cond in conditions:
        values: dict[str, object] = {}
        for name, table in column_tables.items():
            stats = table.get((cond.id,))
            if stats is not None:
                values[name] = stats.accuracy
        values["# sents"] = 2 * pair_counts.get(cond.id, 0)
        doc.rows.append(ReportRow(section=cond.section, label=cond.display,
                                  values=values))
    return doc


def slash_notation(pair: MinimalPair) -> str:
    """Merge a pair into grammatical/*ungrammatical slash form."""
    out = []
    for i, tok in enumerate(pair.grammatical):
        if i in pair.contrast_positions:
            out.append(f"{tok}/*{pair.ungrammatical[i]}")
        else:
            out.append(tok)
    return " ".join(out)


def emit_crosstab(column_results: dict[str, Iterable[PairResult]],
                  condition: str,
                  axes: Sequence[str],
                  pairs: Iterable[MinimalPair] = (),
                  feature_filter: dict[str, str] | None = None,
                  title: str | None = None) -> ReportDocument:
    """Accuracy broken down by feature-axis combinations within a condition.

    Row order follows first appearance in the (deterministic) result
    streams.  The example column shows the first generated pair of each
    cell in slash notation.
    """
    feature_filter = feature_filter or {}

    def keep(obj) -> bool:
        if obj.condition != condition:
            return False
        return all(obj.features.get(k) == v for k, v in feature_filter.items())

    order: list[tuple[str, ...]] = []
    tables: dict[str, AccuracyTable] = {}
    for name, results in column_results.items():
        table = AccuracyTable(keys=tuple(axes))
        for r in results:
            if not keep(r):
                continue
            group = tuple(r.group_value(k) for k in axes)
            if group not in order:
                order.append(group)
            table.add(group, r.correct, r.tie)
        tables[name] = table

    examples: dict[tuple[str, ...], str] = {}
    for pair in pairs:
        if not keep(pair):
            continue
        group = tuple(pair.features.get(k, "n/a") for k in axes)
        if group not in examples:
            examples[group] = slash_notation(pair)
        if group not in order:
            order.append(group)

    doc = ReportDocument(
        title=title or f"{condition} by {' x '.join(axes)}",
        columns=list(column_results) + ["count", "example"],
    )
    for group in order:
        values: dict[str, object] = {}
        for name, table in tables.items():
            stats = table.get(group)
            if stats is not None:
                values[name] = stats.accuracy
                values["count"] = stats.count
        if group in examples:
            values["example"] = examples[group]
        doc.rows.append(ReportRow(section="", label="/".join(group), values=values))
    return doc


def trace_rows(pair: MinimalPair, scorer) -> list[tuple[str, str, int, str, float]]:
    """Long-format (pair_id, member, position, token, logprob) rows for both
    members, the sentence-end term included as the final position."""
    rows = []
    for member, tokens in (("grammatical", pair.grammatical),
                           ("ungrammatical", pair.ungrammatical)):
        trace = word_trace(scorer, tokens)
        labels = list(tokens) + ["</s>"]
        for pos, (tok, lp) in enumerate(zip(labels, trace)):
            rows.append((pair.pair_id, member, pos, tok, lp))
    return rows


def write_traces(rows: Iterable[tuple], path) -> int:
    n = 0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["pair_id", "member", "position", "token", "logprob"])
        for row in rows:
            writer.writerow([row[0], row[1], row[2], row[3], repr(row[4])])
            n += 1
    return n
