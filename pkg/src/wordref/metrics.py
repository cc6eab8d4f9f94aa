"""Closed-form compression quantities and the benchmark report.

Ratios are reported from full container sizes; a header-free figure is kept
alongside because the underlying arithmetic ignores headers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from wordref.codec import compress_parse1, compress_parse2, compress_parse4
from wordref.container import (
    FLAG_PARSE2,
    FLAG_PARSE4,
    HEADER_LEN,
    Container,
    write_container,
)
from wordref.dictionary import Dictionary
from wordref.search import build_plan, naive_scan, scan
from wordref.tokenizer import lex

__all__ = [
    "compression_ratio",
    "predicted_sbf",
    "local_compression_alnum",
    "local_compression_numeric",
    "QueryResult",
    "CompressionReport",
    "bench_report",
    "report_lines",
    "report_mapping",
]


def compression_ratio(original_bytes: int, compressed_bytes: int) -> float:
    """Fractional compression z = (A - B) / A."""
    if original_bytes <= 0:
        raise ValueError("original size must be positive")
    return (original_bytes - compressed_bytes) / original_bytes


def predicted_sbf(z: float) -> float:
    """Predicted percentage saving in search comparisons at compression z."""
    if not 0 <= z < 1:
        raise ValueError(f"fractional compression must lie in [0, 1), got {z}")
    return 50.0 * (1.0 + z)


def local_compression_alnum(n: int) -> Fraction:
    """Exact local compression of an escaped alphanumeric word of length n.

    Byte accounting: the word plus its following space take n+1 bytes;
    the escape chain takes two bytes per character pair.  Note the cited
    even-length figure "1/n" corresponds to ignoring the trailing space;
    exact accounting gives 1/(n+1).
    """
    if n < 1:
        raise ValueError("word length must be at least 1")
    if n % 2:
        return Fraction(0)
    return Fraction(1, n + 1)


def local_compression_numeric(n: int) -> Fraction:
    """Exact local compression of an escaped purely numeric word of length n."""
    if n < 1:
        raise ValueError("word length must be at least 1")
    r = n % 3
    if r == 0:
        return Fraction(n + 3, 3 * n + 3)
    if r == 2:
        return Fraction(1, 3)
    return Fraction(n - 1, 3 * n + 3)


@dataclass(frozen=True)
class QueryResult:
    word: str
    match_count: int
    token_comparisons: int
    char_comparisons: int
    comparison_saving_pct: float
    scan_seconds: float
    naive_seconds: float


@dataclass
class CompressionReport:
    original_bytes: int
    compressed_bytes: int
    ratio: float
    ratio_stream: float
    header_bytes: int
    alias_table_bytes: int
    stream_bytes: int
    token_count: int
    tokens_parse1: int
    tokens_parse2: int | None
    tokens_parse4: int | None
    alias_count: int
    predicted_sbf: float
    queries: list[QueryResult] = field(default_factory=list)
    measured_sbf: float | None = None
    walltime_saving_pct: float | None = None


def bench_report(
    text: bytes,
    dictionary: Dictionary,
    queries: list[bytes | str] | None = None,
    *,
    parse2: bool = True,
    parse4: bool = False,
) -> CompressionReport:
    """Compress `text`, measure per-parse sizes, and race `scan` against
    `naive_scan` over the query set.  Deterministic except wall times."""
    tokens = compress_parse1(lex(text, dictionary), dictionary)
    tokens_parse1 = len(tokens)
    tokens_parse2 = None
    tokens_parse4 = None
    flags = 0
    if parse2:
        flags |= FLAG_PARSE2
        tokens = compress_parse2(tokens, dictionary)
        tokens_parse2 = len(tokens)
    aliases = []
    if parse4:
        flags |= FLAG_PARSE4
        aliases, tokens = compress_parse4(tokens)
        tokens_parse4 = len(tokens)
    container = write_container(
        Container(flags, dictionary.hash, len(text), aliases, tokens)
    )

    stream_bytes = 2 * len(tokens)
    alias_bytes = len(container) - HEADER_LEN - stream_bytes
    z = compression_ratio(len(text), len(container))
    report = CompressionReport(
        original_bytes=len(text),
        compressed_bytes=len(container),
        ratio=z,
        ratio_stream=compression_ratio(len(text), stream_bytes),
        header_bytes=HEADER_LEN,
        alias_table_bytes=alias_bytes,
        stream_bytes=stream_bytes,
        token_count=len(tokens),
        tokens_parse1=tokens_parse1,
        tokens_parse2=tokens_parse2,
        tokens_parse4=tokens_parse4,
        alias_count=len(aliases),
        predicted_sbf=predicted_sbf(z) if 0 <= z < 1 else float("nan"),
    )

    total_scan = 0.0
    total_naive = 0.0
    savings = []
    for query in queries or []:
        plan = build_plan(query, dictionary)
        t0 = time.perf_counter()
        matches, token_cmp = scan(container, dictionary, plan)
        t1 = time.perf_counter()
        offsets, char_cmp = naive_scan(text, query, dictionary)
        t2 = time.perf_counter()
        saving = 100.0 * (char_cmp - token_cmp) / char_cmp if char_cmp else 0.0
        savings.append(saving)
        total_scan += t1 - t0
        total_naive += t2 - t1
        word = plan.word.decode("latin-1")
        report.queries.append(
            QueryResult(
                word=word,
                match_count=len(matches),
                token_comparisons=token_cmp,
                char_comparisons=char_cmp,
                comparison_saving_pct=saving,
                scan_seconds=t1 - t0,
                naive_seconds=t2 - t1,
            )
        )
    if savings:
        report.measured_sbf = sum(savings) / len(savings)
        if total_naive > 0:
            report.walltime_saving_pct = 100.0 * (total_naive - total_scan) / total_naive
    return report


def report_mapping(report: CompressionReport) -> dict:
    """Flatten a report into a JSON-serializable mapping."""
    out = {
        "original_bytes": report.original_bytes,
        "compressed_bytes": report.compressed_bytes,
        "ratio": report.ratio,
        "ratio_stream": report.ratio_stream,
        "header_bytes": report.header_bytes,
        "alias_table_bytes": report.alias_table_bytes,
        "stream_bytes": report.stream_bytes,
        "token_count": report.token_count,
        "tokens_parse1": report.tokens_parse1,
        "tokens_parse2": report.tokens_parse2,
        "tokens_parse4": report.tokens_parse4,
        "alias_count": report.alias_count,
        "predicted_sbf": report.predicted_sbf,
        "measured_sbf": report.measured_sbf,
        "walltime_saving_pct": report.walltime_saving_pct,
        "queries": [
            {
                "word": q.word,
                "match_count": q.match_count,
                "token_comparisons": q.token_comparisons,
                "char_comparisons": q.char_comparisons,
                "comparison_saving_pct": q.comparison_saving_pct,
                "scan_seconds": q.scan_seconds,
                "naive_seconds": q.naive_seconds,
            }
            for q in report.queries
        ],
    }
    return out


def report_lines(report: CompressionReport) -> list[str]:
    """Human-readable line-oriented form of a report."""
    lines = [
        f"original bytes        {report.original_bytes}",
        f"compressed bytes      {report.compressed_bytes}",
        f"compression ratio     {report.ratio:.4f} ({report.ratio * 100:.2f}%)",
        f"ratio without header  {report.ratio_stream:.4f}",
        f"tokens after parse 1  {report.tokens_parse1}",
    ]
    if report.tokens_parse2 is not None:
        lines.append(f"tokens after parse 2  {report.tokens_parse2}")
    if report.tokens_parse4 is not None:
        lines.append(
            f"tokens after parse 4  {report.tokens_parse4} ({report.alias_count} aliases)"
        )
    lines.append(f"predicted SBF         {report.predicted_sbf:.2f}%")
    for q in report.queries:
        lines.append(
            f"query {q.word!r}: {q.match_count} matches, "
            f"{q.token_comparisons} token vs {q.char_comparisons} char comparisons "
            f"({q.comparison_saving_pct:.2f}% saved, "
            f"{q.scan_seconds * 1e3:.2f} ms vs {q.naive_seconds * 1e3:.2f} ms)"
        )
    if report.measured_sbf is not None:
        lines.append(f"measured SBF          {report.measured_sbf:.2f}%")
    if report.walltime_saving_pct is not None:
        lines.append(f"wall-time saving      {report.walltime_saving_pct:.2f}%")
    return lines
