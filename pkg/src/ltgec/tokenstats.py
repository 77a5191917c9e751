"""Token-count statistics under interchangeable tokenizers."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .corpus import TextSample


class EmptyCorpusError(ValueError):
    pass


def tokenize_chars(text: str) -> list[str]:
    return list(text)


def tokenize_bytes(text: str) -> list[str]:
    """One token per UTF-8 byte; non-printable bytes rendered as \\xHH."""
    return [
        chr(b) if 0x20 <= b <= 0x7E else f"\\x{b:02x}"
        for b in text.encode("utf-8")
    ]


def tokenize_words(text: str) -> list[str]:
    """Whitespace-separated tokens with non-alphanumeric edges stripped."""
    out: list[str] = []
    for tok in text.split():
        start, end = 0, len(tok)
        while start < end and not tok[start].isalnum():
            start += 1
        while end > start and not tok[end - 1].isalnum():
            end -= 1
        if end > start:
            out.append(tok[start:end])
    return out


TOKENIZERS: dict[str, Callable[[str], list[str]]] = {
    "chars": tokenize_chars,
    "bytes": tokenize_bytes,
    "words": tokenize_words,
}

_PROBE = "Lietuva – graži šalis"
_PROBE_JOINER = {"words": " "}


def resolve_tokenizer(tokenizer) -> tuple[str, Callable[[str], list[str]]]:
    if callable(tokenizer):
        return getattr(tokenizer, "__name__", "custom"), tokenizer
    fn = TOKENIZERS.get(tokenizer)
    if fn is None:
        known = ", ".join(sorted(TOKENIZERS))
        raise ValueError(f"unknown tokenizer {tokenizer!r} (known: {known})")
    return tokenizer, fn


@dataclass(frozen=True)
class TokenStatsReport:
    tokenizer: str
    samples: int
    total_tokens: int
    mean_tokens: float
    std_tokens: float
    probe_tokens: int
    probe: str

    def to_dict(self) -> dict:
        return {
            "tokenizer": self.tokenizer,
            "samples": self.samples,
            "total_tokens": self.total_tokens,
            "mean_tokens": self.mean_tokens,
            "std_tokens": self.std_tokens,
            "probe_tokens": self.probe_tokens,
            "probe": self.probe,
        }


def compute_stats(corpus: Iterable[TextSample | str], tokenizer="chars") -> TokenStatsReport:
    """Single-pass mean and population standard deviation of tokens per sample."""
    name, fn = resolve_tokenizer(tokenizer)
    count = 0
    mean = 0.0
    m2 = 0.0
    total = 0
    for sample in corpus:
        text = sample.text if isinstance(sample, TextSample) else sample
        x = float(len(fn(text)))
        count += 1
        delta = x - mean
        mean += delta / count
        m2 += delta * (x - mean)
        total += int(x)
    if count == 0:
        raise EmptyCorpusError("token statistics need at least one sample")
    probe_tokens = fn(_PROBE)
    joiner = _PROBE_JOINER.get(name, "")
    return TokenStatsReport(
        tokenizer=name,
        samples=count,
        total_tokens=total,
        mean_tokens=mean,
        std_tokens=math.sqrt(m2 / count),
        probe_tokens=len(probe_tokens),
        probe=joiner.join(probe_tokens),
    )


def render_reports(reports: Iterable[TokenStatsReport]) -> str:
    header = (
        f"{'tokenizer':<10} {'samples':>9} {'tokens':>12} "
        f"{'mean':>10} {'std':>10} {'probe':>6}"
    )
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(
            f"{r.tokenizer:<10} {r.samples:>9} {r.total_tokens:>12} "
            f"{r.mean_tokens:>10.2f} {r.std_tokens:>10.2f} {r.probe_tokens:>6}"
        )
        lines.append(f"  probe: {r.probe}")
    return "\n".join(lines)


def reports_to_json(reports: Iterable[TokenStatsReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], ensure_ascii=False, indent=2)
