"""Lossless word-referencing text codec with whole-word search in the token stream."""

from wordref.blocks import BlockClass, classify
from wordref.codec import compress, decompress
from wordref.container import Container, ContainerError, DictionaryMismatchError
from wordref.dictionary import (
    Dictionary,
    ManifestError,
    build_from_corpus,
    fnv1a64,
    load_manifest,
)
from wordref.estimator import WordReferenceCompressor
from wordref.metrics import (
    CompressionReport,
    bench_report,
    compression_ratio,
    local_compression_alnum,
    local_compression_numeric,
    predicted_sbf,
)
from wordref.search import Match, SearchPlan, build_plan, naive_scan, scan
from wordref.tokenizer import Lexeme, lex, render

__version__ = "0.1.0"

__all__ = [
    "BlockClass",
    "classify",
    "compress",
    "decompress",
    "Container",
    "ContainerError",
    "DictionaryMismatchError",
    "Dictionary",
    "ManifestError",
    "build_from_corpus",
    "fnv1a64",
    "load_manifest",
    "WordReferenceCompressor",
    "CompressionReport",
    "bench_report",
    "compression_ratio",
    "local_compression_alnum",
    "local_compression_numeric",
    "predicted_sbf",
    "Match",
    "SearchPlan",
    "build_plan",
    "naive_scan",
    "scan",
    "Lexeme",
    "lex",
    "render",
    "__version__",
]
