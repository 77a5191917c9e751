"""Edit spans over corrupted text, parallel pairs, and span application.

An Edit says: the corrupted text's half-open span [start, end) should read
``replacement`` in the corrected text. Applying a pair's edits right to left
therefore reconstructs the reference exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, TextIO


class ErrorCategory(Enum):
    TYPOGRAPHICAL = "typographical"
    PUNCTUATION = "punctuation"
    SIMILAR_SOUNDING = "similar-sounding"
    SPACES = "spaces"
    ASSIMILATION_GEMINATION = "assimilation-gemination"
    CASING = "casing"
    OTHER = "other"


CATEGORY_BY_VALUE = {cat.value: cat for cat in ErrorCategory}


@dataclass(frozen=True, order=True)
class Edit:
    start: int
    end: int
    replacement: str
    category: ErrorCategory | None = None

    def __post_init__(self):
        if not (0 <= self.start <= self.end):
            raise ValueError(f"bad edit span [{self.start}, {self.end})")


@dataclass(frozen=True)
class ParallelPair:
    """A (corrupted source, reference target) pair with gold edits."""

    id: str
    source: str
    target: str
    edits: tuple[Edit, ...]


def check_edits_sorted_disjoint(edits: Sequence[Edit], text_len: int) -> None:
    prev_end = -1
    prev_start = -1
    for e in edits:
        if e.end > text_len:
            raise ValueError(f"edit {e} extends past text of length {text_len}")
        if e.start < prev_start or (e.start == prev_start and e.end < prev_end):
            raise ValueError("edits not sorted")
        if e.start < prev_end:
            raise ValueError(f"edit {e} overlaps a previous edit")
        prev_start, prev_end = e.start, e.end


def apply_edits(text: str, edits: Sequence[Edit]) -> str:
    """Replace each edit span with its replacement, right to left."""
    ordered = sorted(edits, key=lambda e: (e.start, e.end))
    check_edits_sorted_disjoint(ordered, len(text))
    for e in reversed(ordered):
        text = text[:e.start] + e.replacement + text[e.end:]
    return text


# ---------------------------------------------------------------------------
# Corruption plans. A plan replaces span [start, end) of the current text with
# ``corrupt`` and remembers which error family produced it. apply_plans turns
# kept plans into text plus inverse edits, shifting earlier edits as needed.

@dataclass(frozen=True)
class Plan:
    start: int
    end: int
    corrupt: str
    category: ErrorCategory


def _intersects(s1: int, e1: int, s2: int, e2: int) -> bool:
    # Half-open spans; zero-width points touching a boundary do not intersect.
    if s1 == e1:
        return s2 < s1 < e2
    if s2 == e2:
        return s1 < s2 < e1
    return s1 < e2 and s2 < e1


def drop_conflicting(plans: Sequence[Plan], blocked: Sequence[Edit]) -> list[Plan]:
    """Keep plans in planning order, dropping any that intersect ``blocked``
    spans or an earlier kept plan."""
    blocked_spans = sorted((e.start, e.end) for e in blocked)
    kept: list[Plan] = []
    kept_spans: list[tuple[int, int]] = []

    import bisect

    def hits_blocked(s: int, e: int) -> bool:
        # Only neighbours around the insertion point can intersect.
        i = bisect.bisect_left(blocked_spans, (s, e))
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(blocked_spans):
                bs, be = blocked_spans[j]
                if _intersects(s, e, bs, be):
                    return True
        return False

    for p in plans:
        if hits_blocked(p.start, p.end):
            continue
        i = bisect.bisect_left(kept_spans, (p.start, p.end))
        clash = False
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(kept_spans):
                ks, ke = kept_spans[j]
                if _intersects(p.start, p.end, ks, ke):
                    clash = True
                    break
        if clash:
            continue
        bisect.insort(kept_spans, (p.start, p.end))
        kept.append(p)
    return kept


def apply_plans(text: str, edits: Sequence[Edit], plans: Sequence[Plan]) -> tuple[str, list[Edit]]:
    """Apply non-conflicting plans to ``text``; return new text and the full
    edit list (old edits shifted + inverse edits of the plans), sorted.

    Callers must have filtered ``plans`` through drop_conflicting against
    ``edits`` first; spans may touch but never intersect.
    """
    ordered = sorted(plans, key=lambda p: (p.start, p.end))
    segments: list[str] = []
    new_edits: list[Edit] = []
    pos = 0
    delta = 0
    deltas: list[tuple[int, int]] = []  # (plan end, cumulative delta after it)
    for p in ordered:
        segments.append(text[pos:p.start])
        segments.append(p.corrupt)
        shifted = p.start + delta
        new_edits.append(Edit(shifted, shifted + len(p.corrupt), text[p.start:p.end], p.category))
        delta += len(p.corrupt) - (p.end - p.start)
        deltas.append((p.end, delta))
        pos = p.end
    segments.append(text[pos:])
    new_text = "".join(segments)

    shifted_old: list[Edit] = []
    di = 0
    shift = 0
    for e in sorted(edits, key=lambda e: (e.start, e.end)):
        while di < len(deltas) and deltas[di][0] <= e.start:
            shift = deltas[di][1]
            di += 1
        shifted_old.append(Edit(e.start + shift, e.end + shift, e.replacement, e.category))

    merged = sorted(shifted_old + new_edits, key=lambda e: (e.start, e.end))
    return new_text, merged


# ---------------------------------------------------------------------------
# Parallel corpus JSONL: {"id", "source", "target", "edits": [[s, e, repl, cat], ...]}

def pair_to_json(pair: ParallelPair) -> str:
    edits = [
        [e.start, e.end, e.replacement, e.category.value if e.category else None]
        for e in pair.edits
    ]
    return json.dumps(
        {"id": pair.id, "source": pair.source, "target": pair.target, "edits": edits},
        ensure_ascii=False,
    )


def pair_from_json(line: str) -> ParallelPair:
    record = json.loads(line)
    edits = tuple(
        Edit(int(s), int(e), repl, CATEGORY_BY_VALUE[cat] if cat else None)
        for s, e, repl, cat in record["edits"]
    )
    return ParallelPair(str(record["id"]), record["source"], record["target"], edits)


def read_pairs(fp: TextIO) -> Iterator[ParallelPair]:
    for lineno, line in enumerate(fp, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield pair_from_json(line)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad pair record on line {lineno}: {exc}") from exc


def write_pairs(pairs: Iterable[ParallelPair], fp: TextIO) -> int:
    count = 0
    for pair in pairs:
        fp.write(pair_to_json(pair) + "\n")
        count += 1
    return count
