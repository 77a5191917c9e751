"""Seeded synthetic error injection producing parallel pairs with gold edits.

Six error families run in a fixed order (typos, confusions, gemination,
assimilation, casing, spaces), each driven by its own RNG stream derived from
(seed, sample id, family index), so output is reproducible and independent of
worker scheduling or which other families are enabled.

Gold edits are expressed in corrupted-text coordinates and canonicalized
through the same alignment the evaluator uses, so scoring a hypothesis equal
to the reference yields exact precision/recall 1.0.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field

import numpy as np

from .alignment import extract_edits
from .confusions import ConfusionGroup, ConfusionTable, default_table
from .corpus import TextSample, _L, _U
from .edits import Edit, ErrorCategory, ParallelPair, Plan, apply_plans, drop_conflicting
from .keyboard import KeyboardModel, default_keyboard

SUBSTITUTION = "substitution"
DELETION = "deletion"
INSERTION = "insertion"
TRANSPOSITION = "transposition"
TYPO_OPS = (SUBSTITUTION, DELETION, INSERTION, TRANSPOSITION)

DEFAULT_TYPO_MIX = {
    SUBSTITUTION: 0.361,
    DELETION: 0.317,
    INSERTION: 0.178,
    TRANSPOSITION: 0.144,
}

ALL_GROUPS = frozenset(
    {
        ErrorCategory.TYPOGRAPHICAL,
        ErrorCategory.PUNCTUATION,
        ErrorCategory.SIMILAR_SOUNDING,
        ErrorCategory.SPACES,
        ErrorCategory.ASSIMILATION_GEMINATION,
        ErrorCategory.CASING,
    }
)


@dataclass(frozen=True)
class CorruptionConfig:
    typo_rate: float = 0.02
    typo_mix: dict = field(default_factory=lambda: dict(DEFAULT_TYPO_MIX))
    confusion_rate: float = 0.02
    other_rate: float = 0.02
    enabled_groups: frozenset = ALL_GROUPS
    seed: int = 0

    def __post_init__(self):
        for name in ("typo_rate", "confusion_rate", "other_rate"):
            rate = getattr(self, name)
            if not 0.0 <= rate <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {rate}")
        if set(self.typo_mix) != set(TYPO_OPS):
            raise ValueError(f"typo_mix must have exactly the keys {TYPO_OPS}")
        if any(w < 0 for w in self.typo_mix.values()):
            raise ValueError("typo_mix weights must be non-negative")
        if abs(sum(self.typo_mix.values()) - 1.0) > 1e-6:
            raise ValueError("typo_mix weights must sum to 1")
        bad = set(self.enabled_groups) - ALL_GROUPS
        if bad:
            raise ValueError(f"unsupported groups: {sorted(c.value for c in bad)}")


def sample_rng(seed: int, sample_id: str, family_index: int) -> np.random.Generator:
    """Per-(sample, family) RNG stream; stable across runs and worker counts."""
    digest = hashlib.sha256(sample_id.encode("utf-8")).digest()
    words = [int.from_bytes(digest[k:k + 8], "little") for k in range(0, 32, 8)]
    entropy = [seed % (1 << 64), family_index, *words]
    return np.random.default_rng(np.random.SeedSequence(entropy))


# ---------------------------------------------------------------------------
# Family planners. Each returns corruption Plans on the given text in a fixed
# planning order; conflict resolution (drop later-planned overlaps) happens in
# drop_conflicting.

_LINE_BREAKS = frozenset("\n\r")


def _plan_typos(text: str, cfg: CorruptionConfig, kbd: KeyboardModel,
                rng: np.random.Generator) -> list[Plan]:
    n = len(text)
    if n == 0 or cfg.typo_rate == 0.0:
        return []
    mix = np.array([cfg.typo_mix[op] for op in TYPO_OPS], dtype=np.float64)
    mix = mix / mix.sum()
    u = rng.random(n)
    sub_cache: dict[str, tuple[list[str], np.ndarray]] = {}

    def options_for(ch: str):
        cached = sub_cache.get(ch)
        if cached is None:
            chars, ws = kbd.substitution_options(ch)
            probs = np.array(ws, dtype=np.float64)
            if probs.size:
                probs = probs / probs.sum()
            cached = (chars, probs)
            sub_cache[ch] = cached
        return cached

    plans: list[Plan] = []
    cat = ErrorCategory.TYPOGRAPHICAL
    for i in range(n):
        if text[i] in _LINE_BREAKS or u[i] >= cfg.typo_rate:
            continue
        op = TYPO_OPS[int(rng.choice(4, p=mix))]
        if op == SUBSTITUTION:
            chars, probs = options_for(text[i])
            if not chars:
                continue
            repl = chars[int(rng.choice(len(chars), p=probs))]
            if repl == text[i]:
                continue
            plans.append(Plan(i, i + 1, repl, cat))
        elif op == DELETION:
            plans.append(Plan(i, i + 1, "", cat))
        elif op == INSERTION:
            chars, probs = options_for(text[i])
            if not chars:
                continue
            ins = chars[int(rng.choice(len(chars), p=probs))]
            plans.append(Plan(i + 1, i + 1, ins, cat))
        else:
            j = i + 1 if i + 1 < n else i - 1
            if j < 0:
                continue
            lo = min(i, j)
            if text[lo] == text[lo + 1]:
                continue
            plans.append(Plan(lo, lo + 2, text[lo + 1] + text[lo], cat))
    return plans


def _plan_confusions(text: str, groups: tuple[ConfusionGroup, ...], rate: float,
                     rng: np.random.Generator) -> list[Plan]:
    if rate == 0.0:
        return []
    plans: list[Plan] = []
    option_cache: dict[tuple[str, str], tuple[list[str], np.ndarray]] = {}
    for g in groups:
        matches = [m for m in g.regex.finditer(text) if m.end() > m.start()]
        if not matches:
            continue
        u = rng.random(len(matches))
        for k, m in enumerate(matches):
            if u[k] >= rate:
                continue
            key = (g.pattern, m.group())
            cached = option_cache.get(key)
            if cached is None:
                options, probs = g.replacement_options(m.group())
                cached = (options, np.array(probs, dtype=np.float64))
                option_cache[key] = cached
            options, probs = cached
            if not options:
                continue
            repl = options[int(rng.choice(len(options), p=probs))]
            plans.append(Plan(m.start(), m.end(), repl, g.category))
    return plans


_CONSONANTS = frozenset("bcčdfghjklmnprsštvzžqwx")
_SIBILANTS = frozenset("cčsšzž")


def gemination_sites(text: str) -> list[int]:
    """Leftmost non-overlapping doubled consonants or sibilant pairs."""
    sites: list[int] = []
    i = 0
    n = len(text)
    while i < n - 1:
        c1 = text[i].lower()
        c2 = text[i + 1].lower()
        if (c1 == c2 and c1 in _CONSONANTS) or (c1 in _SIBILANTS and c2 in _SIBILANTS):
            sites.append(i)
            i += 2
        else:
            i += 1
    return sites


def _plan_gemination(text: str, rate: float, rng: np.random.Generator) -> list[Plan]:
    sites = gemination_sites(text)
    if not sites or rate == 0.0:
        return []
    u = rng.random(len(sites))
    cat = ErrorCategory.ASSIMILATION_GEMINATION
    return [Plan(i, i + 1, "", cat) for k, i in enumerate(sites) if u[k] < rate]


_VOICELESS = frozenset("ptksš")
_VOICED = frozenset("bdgzž")
VOICING_SWAP = {"p": "b", "b": "p", "t": "d", "d": "t", "k": "g", "g": "k",
                "s": "z", "z": "s", "š": "ž", "ž": "š"}


def assimilation_sites(text: str) -> list[int]:
    """Positions where a voiceless consonant precedes a voiced one or vice versa."""
    sites: list[int] = []
    for i in range(len(text) - 1):
        c1 = text[i].lower()
        c2 = text[i + 1].lower()
        if (c1 in _VOICELESS and c2 in _VOICED) or (c1 in _VOICED and c2 in _VOICELESS):
            sites.append(i)
    return sites


def _plan_assimilation(text: str, rate: float, rng: np.random.Generator) -> list[Plan]:
    sites = assimilation_sites(text)
    if not sites or rate == 0.0:
        return []
    u = rng.random(len(sites))
    plans: list[Plan] = []
    cat = ErrorCategory.ASSIMILATION_GEMINATION
    for k, i in enumerate(sites):
        if u[k] >= rate:
            continue
        ch = text[i]
        swapped = VOICING_SWAP[ch.lower()]
        if ch.isupper():
            swapped = swapped.upper()
        plans.append(Plan(i, i + 1, swapped, cat))
    return plans


_WORD = re.compile(r"\w+")
_CASING_SKIP = frozenset(" \t\n\r\"„“”'‘’«»()[]{}—–-")
_SENTENCE_END = frozenset(".!?…")


def casing_sites(text: str) -> list[int]:
    """Start offsets of words eligible for a first-letter case flip.

    Sentence-initial words (the first word, or one following ., ! or ? plus
    whitespace and any quotes or brackets) are excluded.
    """
    sites: list[int] = []
    for m in _WORD.finditer(text):
        start = m.start()
        ch = text[start]
        if not ch.isalpha():
            continue
        flipped = ch.swapcase()
        if flipped == ch or len(flipped) != 1:
            continue
        k = start - 1
        while k >= 0 and text[k] in _CASING_SKIP:
            k -= 1
        if k < 0 or text[k] in _SENTENCE_END:
            continue
        sites.append(start)
    return sites


def _plan_casing(text: str, rate: float, rng: np.random.Generator) -> list[Plan]:
    sites = casing_sites(text)
    if not sites or rate == 0.0:
        return []
    u = rng.random(len(sites))
    cat = ErrorCategory.CASING
    return [
        Plan(i, i + 1, text[i].swapcase(), cat)
        for k, i in enumerate(sites)
        if u[k] < rate
    ]


def space_sites(text: str) -> tuple[list[int], list[int]]:
    """(deletable space positions, intra-word insertion points)."""
    dels = [i for i, ch in enumerate(text) if ch == " "]
    ins = [
        i for i in range(1, len(text))
        if text[i - 1].isalpha() and text[i].isalpha()
    ]
    return dels, ins


def _plan_spaces(text: str, rate: float, rng: np.random.Generator) -> list[Plan]:
    dels, ins = space_sites(text)
    cat = ErrorCategory.SPACES
    plans: list[Plan] = []
    if dels and rate > 0.0:
        u = rng.random(len(dels))
        plans.extend(Plan(i, i + 1, "", cat) for k, i in enumerate(dels) if u[k] < rate)
    if ins and rate > 0.0:
        u = rng.random(len(ins))
        plans.extend(Plan(i, i, " ", cat) for k, i in enumerate(ins) if u[k] < rate)
    return plans


# ---------------------------------------------------------------------------
# Rule-invertible errors: the exact inverses of the three cleanup fixers.
# Useful for benchmarking the rule-based corrector on errors it can undo.

_QUOTE_GLYPHS = frozenset("„“")
_MISSING_INVERSES = (
    re.compile(r"(?<=\d) (?=[md]\.)"),
    re.compile(rf"(?<![{_L}{_U}])[{_U}]\. (?=[{_U}][{_L}])"),
    re.compile(rf"(?<![{_L}{_U}])[{_L}{_U}]\. (?=[{_L}{_U}]\.)"),
)
_PUNCT_AFTER = frozenset(",.;:!?)]}")


def _quote_style_options() -> tuple[list[str], np.ndarray]:
    group = default_table().groups[-1]
    options = [v for v, _ in group.variants]
    probs = np.array([c for _, c in group.variants], dtype=np.float64)
    return options, probs / probs.sum()


def _plan_rule_errors(text: str, rate: float, rng: np.random.Generator) -> list[Plan]:
    plans: list[Plan] = []
    quotes = [i for i, ch in enumerate(text) if ch in _QUOTE_GLYPHS]
    if quotes and rate > 0.0:
        options, probs = _quote_style_options()
        u = rng.random(len(quotes))
        for k, i in enumerate(quotes):
            if u[k] >= rate:
                continue
            repl = options[int(rng.choice(len(options), p=probs))]
            plans.append(Plan(i, i + 1, repl, ErrorCategory.PUNCTUATION))

    seen: set[int] = set()
    for regex in _MISSING_INVERSES:
        for m in regex.finditer(text):
            seen.add(m.end() - 1)
    spaces = sorted(seen)
    if spaces and rate > 0.0:
        u = rng.random(len(spaces))
        plans.extend(
            Plan(i, i + 1, "", ErrorCategory.SPACES)
            for k, i in enumerate(spaces)
            if u[k] < rate
        )

    punct = [
        i for i, ch in enumerate(text)
        if ch in _PUNCT_AFTER and i > 0 and not text[i - 1].isspace()
    ]
    if punct and rate > 0.0:
        u = rng.random(len(punct))
        plans.extend(
            Plan(i, i, " ", ErrorCategory.SPACES)
            for k, i in enumerate(punct)
            if u[k] < rate
        )
    return plans


# ---------------------------------------------------------------------------
# Public single-family ops: corrupt text with one family, returning the new
# text and the exact inverse edits.

def _run_family(text: str, plans: list[Plan]) -> tuple[str, list[Edit]]:
    kept = drop_conflicting(plans, [])
    return apply_plans(text, [], kept)


def corrupt_typos(text: str, cfg: CorruptionConfig, kbd: KeyboardModel,
                  rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_typos(text, cfg, kbd, rng))


def corrupt_confusions(text: str, table: ConfusionTable, rate: float,
                       rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_confusions(text, table.groups, rate, rng))


def corrupt_gemination(text: str, rate: float, rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_gemination(text, rate, rng))


def corrupt_assimilation(text: str, rate: float, rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_assimilation(text, rate, rng))


def corrupt_casing(text: str, rate: float, rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_casing(text, rate, rng))


def corrupt_spaces(text: str, rate: float, rng: np.random.Generator) -> tuple[str, list[Edit]]:
    return _run_family(text, _plan_spaces(text, rate, rng))


# ---------------------------------------------------------------------------
# Full corruption of a sample: all enabled families in order, then gold edits
# canonicalized through alignment extraction with categories mapped back from
# the raw corruption spans.

def _span_gap(a_start: int, a_end: int, b_start: int, b_end: int) -> int:
    return max(b_start - a_end, a_start - b_end, 0)


def _categorize_canonical(canonical: list[Edit], raw: list[Edit]) -> list[Edit]:
    if not raw:
        return canonical
    out: list[Edit] = []
    for e in canonical:
        best = None
        best_gap = None
        for r in raw:
            gap = _span_gap(e.start, e.end, r.start, r.end)
            if best_gap is None or gap < best_gap:
                best, best_gap = r, gap
                if gap == 0:
                    break
        out.append(Edit(e.start, e.end, e.replacement, best.category))
    return out


def corrupt(sample: TextSample, cfg: CorruptionConfig,
            table: ConfusionTable | None = None,
            kbd: KeyboardModel | None = None) -> ParallelPair:
    """Corrupt one sample with every enabled family; deterministic in
    (cfg.seed, sample.id)."""
    table = table if table is not None else default_table()
    kbd = kbd if kbd is not None else default_keyboard()
    enabled = cfg.enabled_groups
    confusion_groups = table.by_category(
        enabled & {ErrorCategory.PUNCTUATION, ErrorCategory.SIMILAR_SOUNDING}
    )

    text = sample.text
    raw: list[Edit] = []
    families = (
        (ErrorCategory.TYPOGRAPHICAL in enabled,
         lambda t, r: _plan_typos(t, cfg, kbd, r)),
        (bool(confusion_groups),
         lambda t, r: _plan_confusions(t, confusion_groups, cfg.confusion_rate, r)),
        (ErrorCategory.ASSIMILATION_GEMINATION in enabled,
         lambda t, r: _plan_gemination(t, cfg.other_rate, r)),
        (ErrorCategory.ASSIMILATION_GEMINATION in enabled,
         lambda t, r: _plan_assimilation(t, cfg.other_rate, r)),
        (ErrorCategory.CASING in enabled,
         lambda t, r: _plan_casing(t, cfg.other_rate, r)),
        (ErrorCategory.SPACES in enabled,
         lambda t, r: _plan_spaces(t, cfg.other_rate, r)),
    )
    for index, (on, planner) in enumerate(families):
        if not on:
            continue
        rng = sample_rng(cfg.seed, sample.id, index)
        plans = planner(text, rng)
        kept = drop_conflicting(plans, raw)
        text, raw = apply_plans(text, raw, kept)

    canonical = extract_edits(text, sample.text)
    gold = _categorize_canonical(canonical, raw)
    return ParallelPair(sample.id, text, sample.text, tuple(gold))


_RULE_ERROR_STREAM = 6  # family index reserved for the rule-error generator


def corrupt_rule_errors(sample: TextSample, rate: float = 0.02,
                        seed: int = 0) -> ParallelPair:
    """Corrupt with quote-style swaps and the space errors the cleanup fixers
    undo; every emitted error is rule-invertible."""
    rng = sample_rng(seed, sample.id, _RULE_ERROR_STREAM)
    plans = _plan_rule_errors(sample.text, rate, rng)
    kept = drop_conflicting(plans, [])
    text, raw = apply_plans(sample.text, [], kept)
    canonical = extract_edits(text, sample.text)
    gold = _categorize_canonical(canonical, raw)
    return ParallelPair(sample.id, text, sample.text, tuple(gold))
