"""Command-line front end: build, query, inspect and benchmark indexes.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from typing import List, Optional

from lyndex import kernels, oracle
from lyndex.access import lyndon_array_entry
from lyndex.grammar import build_lyndon_slp, matches_tree, reduce_r1, validate
from lyndex.index import LyndonIndex
from lyndex.lyndon import duval_factorize, significant_suffixes, to_ranks
from lyndex.serialize import IndexFormatError, load, save
from lyndex.tree import build_lyndon_tree

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def cmd_build(args) -> int:
    data = _read(args.input)
    if not data:
        raise UsageError("input file is empty")
    t0 = time.perf_counter()
    index = LyndonIndex.build(data, seed=args.seed)
    elapsed = time.perf_counter() - t0
    nbytes = save(index, args.output)
    st = index.stats()
    _out(f"n\t{st['n']}")
    _out(f"g\t{st['g']}")
    _out(f"slp_rhs_size\t{st['slp_rhs_size']}")
    _out(f"ag_size\t{st['ag_size']}")
    _out(f"height\t{st['height']}")
    _out(f"build_seconds\t{elapsed:.3f}")
    _out(f"image_bytes\t{nbytes}")
    return EXIT_OK


def _patterns(args) -> List[bytes]:
    if args.pattern_file:
        data = _read(args.pattern_file)
        return [data.strip() if args.trim else data]
    if args.pattern is None:
        raise UsageError("give a pattern or --pattern-file")
    return [os.fsencode(args.pattern)]


def cmd_locate(args) -> int:
    index = load(args.index)
    for pattern in _patterns(args):
        if not pattern:
            raise UsageError("pattern must be non-empty")
        hits = index.locate(pattern)
        if args.count_only:
            _out(str(len(hits)))
        else:
            sys.stdout.write("".join(f"{p}\n" for p in hits))
    return EXIT_OK


def cmd_extract(args) -> int:
    index = load(args.index)
    try:
        chunk = index.extract(args.i, args.j)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.buffer.write(chunk + b"\n")
    return EXIT_OK


def cmd_factorize(args) -> int:
    source = args.input
    data = _read(source) if os.path.isfile(source) else os.fsencode(source)
    if not data:
        raise UsageError("nothing to factorize")
    f = duval_factorize(data)
    for k, fac in enumerate(f.factors, 1):
        word = data[fac.start:fac.start + fac.length]
        _out(f"P{k}\t{word.decode('latin-1')}\t^{fac.exponent}\tstart={fac.start + 1}")
    _out(f"lambda\t{f.lam}")
    _out("significant\t" + " ".join(str(s) for s in significant_suffixes(f)))
    return EXIT_OK


def cmd_lyndon_array(args) -> int:
    index = load(args.index)
    if args.all:
        _out(" ".join(str(index.lyndon_array(i)) for i in range(1, index.n + 1)))
        return EXIT_OK
    if args.i is None:
        raise UsageError("give a position or --all")
    try:
        _out(str(index.lyndon_array(args.i)))
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_stats(args) -> int:
    index = load(args.index)
    for key, value in index.stats().items():
        _out(f"{key}\t{value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _read(args.input)
    if not data:
        raise UsageError("input file is empty")
    if len(data) > oracle.MAX_N:
        raise UsageError(f"verify supports inputs up to {oracle.MAX_N} bytes")
    rng = random.Random(args.seed)
    index = LyndonIndex.build(data, seed=args.seed)
    slp = index.slp
    failures: List[str] = []

    def check(name: str, ok: bool) -> None:
        _out(f"{'PASS' if ok else 'FAIL'}\t{name}")
        if not ok:
            failures.append(name)

    check("grammar validity", not validate(slp))
    text = [0] * slp.shift + to_ranks(data)
    check("lyndon tree matches derivation tree", matches_tree(slp, build_lyndon_tree(text)))
    if len(text) <= 64:
        check("lyndon tree matches recursive oracle",
              _tree_spans(build_lyndon_tree(text)) == _oracle_spans(oracle.naive_lyndon_tree(text)))
    got = [(data[f.start:f.start + f.length], f.exponent)
           for f in duval_factorize(data).factors]
    check("lyndon factorization", got == oracle.naive_lyndon_factorization(data))
    naive_la = oracle.naive_lyndon_array(text)
    check("lyndon array", all(lyndon_array_entry(slp, i + 1) == naive_la[i]
                              for i in range(len(text))))
    ok = True
    for _ in range(args.samples):
        m = rng.randint(1, min(64, len(data)))
        if rng.random() < 0.5:
            i = rng.randrange(len(data) - m + 1)
            pattern = data[i:i + m]
        else:
            pattern = bytes(rng.choice(data) for _ in range(m))
        if index.locate(pattern) != oracle.naive_locate(data, pattern):
            ok = False
            _out(f"mismatch for pattern {pattern!r}")
    check(f"locate on {args.samples} sampled patterns", ok)
    return EXIT_VERIFY if failures else EXIT_OK


def _tree_spans(tree):
    out = set()
    for node in tree.nodes:
        if node.left >= 0:
            l, r = tree.nodes[node.left], tree.nodes[node.right]
            out.add(((node.start, node.end), (l.start, l.end), (r.start, r.end)))
    return out


def _oracle_spans(t):
    out = set()
    stack = [t]
    while stack:
        s, e, l, r = stack.pop()
        if l is not None:
            out.add(((s, e), l[:2], r[:2]))
            stack.extend((l, r))
    return out


def cmd_bench(args) -> int:
    if not os.path.isdir(args.corpus):
        raise OSError(f"not a directory: {args.corpus}")
    rows = []
    for name in sorted(os.listdir(args.corpus)):
        path = os.path.join(args.corpus, name)
        if not os.path.isfile(path):
            continue
        data = _read(path)
        if not data:
            continue
        t0 = time.perf_counter()
        slp = build_lyndon_slp(to_ranks(data))
        ag, _ = reduce_r1(slp)
        elapsed = time.perf_counter() - t0
        rows.append((name, len(data), slp.g, slp.size, ag.size, f"{elapsed:.3f}"))
    head = ("file", "n", "g", "slp_rhs_size", "ag_size", "build_seconds")
    if args.format == "tsv":
        for row in (head, *rows):
            _out("\t".join(str(v) for v in row))
    else:
        _out("| " + " | ".join(head) + " |")
        _out("|" + "---|" * len(head))
        for row in rows:
            _out("| " + " | ".join(str(v) for v in row) + " |")
    sys.stderr.write(f"kernels: {kernels.BACKEND}\n")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lyndex", description="Lyndon SLP self-index")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("build", help="build and save an index")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("locate", help="print 1-based occurrence positions")
    s.add_argument("index")
    s.add_argument("pattern", nargs="?")
    s.add_argument("--pattern-file")
    s.add_argument("--trim", action="store_true", help="strip whitespace from --pattern-file")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_locate)

    s = sub.add_parser("extract", help="print T[i..j]")
    s.add_argument("index")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("factorize", help="composed Lyndon factorization")
    s.add_argument("input", help="file path or literal string")
    s.set_defaults(func=cmd_factorize)

    s = sub.add_parser("lyndon-array", help="longest Lyndon word starting at i")
    s.add_argument("index")
    s.add_argument("i", type=int, nargs="?")
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_lyndon_array)

    s = sub.add_parser("stats", help="grammar and index statistics")
    s.add_argument("index")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("verify", help="cross-check against brute-force oracles")
    s.add_argument("input")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="grammar sizes for every file in a directory")
    s.add_argument("corpus")
    s.add_argument("--format", choices=("tsv", "md"), default="tsv")
    s.set_defaults(func=cmd_bench)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"lyndex: {exc}\n")
        return EXIT_USAGE
    except (OSError, IndexFormatError) as exc:
        sys.stderr.write(f"lyndex: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
