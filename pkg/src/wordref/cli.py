"""Command-line surface: dictionary building, compression, search, reports."""

from __future__ import annotations

import argparse
import json
import sys

from wordref.codec import compress, decompress
from wordref.container import HEADER_LEN, read_container
from wordref.dictionary import build_from_corpus, load_manifest
from wordref.metrics import bench_report, predicted_sbf, report_lines, report_mapping
from wordref.search import build_plan, scan


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _load_dictionary(path: str):
    return load_manifest(_read_input(path))


def _add_io(parser, *, output=True):
    parser.add_argument("--input", required=True, help="input path, or - for stdin")
    if output:
        parser.add_argument("--output", required=True, help="output path, or - for stdout")


def _add_parse_flags(parser):
    parser.add_argument("--parse4", action="store_true", help="enable sequence aliasing")
    parser.add_argument(
        "--no-parse2", action="store_true", help="disable composite/repeat replacement"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordref",
        description="Word-referencing text codec with search inside the compressed stream.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-dict", help="derive a dictionary manifest from a corpus")
    p.add_argument(
        "--input",
        action="append",
        required=True,
        help="corpus file (repeatable), or - for stdin",
    )
    p.add_argument("--output", required=True, help="manifest path, or - for stdout")
    p.add_argument("--common-size", type=int, default=256)
    p.add_argument("--words-size", type=int, default=49000)
    p.add_argument("--composite-min-count", type=int, default=4)

    p = sub.add_parser("compress", help="compress text into a container")
    p.add_argument("--dict", required=True, help="dictionary manifest path")
    _add_io(p)
    _add_parse_flags(p)

    p = sub.add_parser("decompress", help="restore the original text from a container")
    p.add_argument("--dict", required=True)
    _add_io(p)

    p = sub.add_parser("search", help="find a word inside a container without decompressing")
    p.add_argument("--dict", required=True)
    p.add_argument("--input", required=True, help="container path, or - for stdin")
    p.add_argument("--word", required=True)

    p = sub.add_parser("stats", help="show container figures")
    p.add_argument("--input", required=True, help="container path, or - for stdin")

    p = sub.add_parser("bench", help="compression and search benchmark report")
    p.add_argument("--dict", required=True)
    p.add_argument("--input", required=True, help="text path, or - for stdin")
    p.add_argument("--queries", required=True, help="query words, one per line")
    p.add_argument("--output", help="also write the report as JSON to this path")
    _add_parse_flags(p)

    p = sub.add_parser("verify", help="assert that compression round-trips byte-exactly")
    p.add_argument("--dict", required=True)
    p.add_argument("--input", required=True, help="text path, or - for stdin")
    _add_parse_flags(p)
    return parser


def _cmd_build_dict(args) -> int:
    corpus = [_read_input(path) for path in args.input]
    manifest = build_from_corpus(
        corpus,
        common_size=args.common_size,
        words_size=args.words_size,
        composite_min_count=args.composite_min_count,
    )
    _write_output(args.output, manifest)
    return 0


def _cmd_compress(args) -> int:
    dictionary = _load_dictionary(args.dict)
    text = _read_input(args.input)
    container = compress(
        text, dictionary, parse2=not args.no_parse2, parse4=args.parse4
    )
    _write_output(args.output, container)
    return 0


def _cmd_decompress(args) -> int:
    dictionary = _load_dictionary(args.dict)
    _write_output(args.output, decompress(_read_input(args.input), dictionary))
    return 0


def _cmd_search(args) -> int:
    dictionary = _load_dictionary(args.dict)
    container = _read_input(args.input)
    plan = build_plan(args.word, dictionary)
    matches, comparisons = scan(container, dictionary, plan)
    print(f"{len(matches)} matches")
    for m in matches:
        print(f"char {m.char_offset}  token {m.token_offset}  via {m.via}")
    print(f"token comparisons: {comparisons}")
    return 0


def _cmd_stats(args) -> int:
    data = _read_input(args.input)
    c = read_container(data)
    stream_bytes = 2 * len(c.tokens)
    print(f"original bytes     {c.original_len}")
    print(f"compressed bytes   {len(data)}")
    if c.original_len:
        z = (c.original_len - len(data)) / c.original_len
        print(f"compression ratio  {z:.4f} ({z * 100:.2f}%)")
        if 0 <= z < 1:
            print(f"predicted SBF      {predicted_sbf(z):.2f}%")
    print(f"token count        {len(c.tokens)}")
    print(f"stream bytes       {stream_bytes}")
    print(f"header bytes       {HEADER_LEN}")
    print(f"alias count        {len(c.aliases)}")
    print(f"flags              parse2={bool(c.flags & 1)} parse4={bool(c.flags & 2)}")
    return 0


def _cmd_bench(args) -> int:
    dictionary = _load_dictionary(args.dict)
    text = _read_input(args.input)
    queries = [line for line in _read_input(args.queries).split(b"\n") if line]
    report = bench_report(
        text, dictionary, queries, parse2=not args.no_parse2, parse4=args.parse4
    )
    for line in report_lines(report):
        print(line)
    if args.output:
        payload = json.dumps(report_mapping(report), indent=2).encode() + b"\n"
        _write_output(args.output, payload)
    return 0


def _cmd_verify(args) -> int:
    dictionary = _load_dictionary(args.dict)
    text = _read_input(args.input)
    container = compress(
        text, dictionary, parse2=not args.no_parse2, parse4=args.parse4
    )
    restored = decompress(container, dictionary)
    if restored != text:
        print("round-trip FAILED", file=sys.stderr)
        return 1
    print("round-trip OK")
    return 0


_COMMANDS = {
    "build-dict": _cmd_build_dict,
    "compress": _cmd_compress,
    "decompress": _cmd_decompress,
    "search": _cmd_search,
    "stats": _cmd_stats,
    "bench": _cmd_bench,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
