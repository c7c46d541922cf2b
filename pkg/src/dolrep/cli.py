"""Command-line front end: system-file parsing, reports, JSON serialization.

System file format (line oriented, `#` starts a comment, tokens separated by
whitespace; multi-character symbols are fine):

    alphabet: 0 1 2
    axiom: 0
    0 -> 0 1 2
    1 -> 2
    2 -> 1

Every declared letter needs exactly one rule; an empty right-hand side
denotes the empty word.  Exit codes: 0 success, 1 parse error, 2 internal
invariant failure, 3 oracle disagreement under --verify.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .engine import AnalysisReport, EngineInvariantError, analyze
from .morphism import Alphabet, D0LSystem, Morphism
from .oracle import OracleParams, observed_classes
from .simplify import SimplificationError
from .words import Word


class ParseError(Exception):
    """System-file syntax or consistency error, with a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message)

    def __str__(self) -> str:
        base = super().__str__()
        return f"line {self.line}: {base}" if self.line is not None else base


def parse_system(text: str) -> D0LSystem:
    """Parse the file format above into a D0LSystem."""
    entries: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.partition("#")[0].split()
        if tokens:
            entries.append((lineno, tokens))
    if not entries:
        raise ParseError("empty input: expected an 'alphabet:' line")

    lineno, tokens = entries[0]
    if tokens[0] != "alphabet:":
        raise ParseError("expected 'alphabet:' as the first declaration", lineno)
    symbols = tokens[1:]
    if not symbols:
        raise ParseError("alphabet declaration lists no symbols", lineno)
    if "->" in symbols:
        raise ParseError("'->' cannot be used as a letter symbol", lineno)
    try:
        alphabet = Alphabet(tuple(symbols))
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None

    if len(entries) < 2:
        raise ParseError("missing 'axiom:' declaration", lineno)
    lineno, tokens = entries[1]
    if tokens[0] != "axiom:":
        raise ParseError("expected 'axiom:' after the alphabet", lineno)
    if len(tokens) == 1:
        raise ParseError("axiom must be non-empty", lineno)
    try:
        axiom = alphabet.word(tokens[1:])
    except ValueError:
        raise ParseError("axiom uses an undeclared letter", lineno) from None

    images: dict[int, Word] = {}
    for lineno, tokens in entries[2:]:
        if len(tokens) < 2 or tokens[1] != "->":
            raise ParseError("expected a rule of the form 'SYM -> SYM*'", lineno)
        try:
            lhs = alphabet.letter(tokens[0])
        except ValueError:
            raise ParseError(f"undeclared letter {tokens[0]!r} on the left side", lineno) from None
        if lhs in images:
            raise ParseError(f"duplicate rule for letter {tokens[0]!r}", lineno)
        try:
            images[lhs] = alphabet.word(tokens[2:])
        except ValueError:
            raise ParseError("rule image uses an undeclared letter", lineno) from None
    missing = [alphabet.symbols[a] for a in range(len(alphabet)) if a not in images]
    if missing:
        raise ParseError(f"missing rule for letter(s): {' '.join(missing)}")

    morphism = Morphism(alphabet, alphabet, tuple(images[a] for a in range(len(alphabet))))
    return D0LSystem(morphism, axiom)


def serialize_system(system: D0LSystem) -> str:
    """Render a system back into the file format (re-parses identically)."""
    alphabet = system.alphabet
    lines = [
        "alphabet: " + " ".join(alphabet.symbols),
        "axiom: " + " ".join(alphabet.symbols[a] for a in system.axiom),
    ]
    for a in range(len(alphabet)):
        image = " ".join(alphabet.symbols[b] for b in system.morphism.image(a))
        lines.append(f"{alphabet.symbols[a]} -> {image}".rstrip())
    return "\n".join(lines) + "\n"


def report_to_dict(report: AnalysisReport) -> dict:
    """JSON-ready form of a report; arrays are deterministically ordered."""
    alphabet = report.original.alphabet

    def syms(word: Word) -> list[str]:
        return [alphabet.symbols[a] for a in word]

    return {
        "system": {
            "alphabet": list(alphabet.symbols),
            "axiom": syms(report.original.axiom),
            "rules": {
                alphabet.symbols[a]: syms(report.original.morphism.image(a))
                for a in range(len(alphabet))
            },
        },
        "pushy": report.pushy,
        "repetitive": report.repetitive,
        "strongly_repetitive": report.strongly_repetitive,
        "bounded_letters": [alphabet.symbols[a] for a in sorted(report.classification.bounded)],
        "simplification_steps": [
            {
                "kind": step.kind,
                "from_alphabet": list(step.h.source.symbols),
                "to_alphabet": list(step.h.target.symbols),
            }
            for step in report.chain.steps
        ],
        "classes": [
            {
                "representative": syms(cls.representative),
                "conjugates": [syms(w) for w in sorted(cls.conjugates)],
                "source": cls.source.value,
            }
            for cls in report.classes
        ],
    }


def format_report(report: AnalysisReport) -> str:
    alphabet = report.original.alphabet
    lines = [
        f"system: alphabet {{{', '.join(alphabet.symbols)}}}; axiom {alphabet.text(report.original.axiom)}",
        f"pushy: {'yes' if report.pushy else 'no'}",
        f"repetitive: {'yes' if report.repetitive else 'no'}",
        f"strongly repetitive: {'yes' if report.strongly_repetitive else 'no'}",
        "bounded letters: "
        + (" ".join(alphabet.symbols[a] for a in sorted(report.classification.bounded)) or "(none)"),
    ]
    if report.chain.steps:
        summary = ", ".join(
            f"{step.kind} ({len(step.h.source)} -> {len(step.h.target)} letters)"
            for step in report.chain.steps
        )
        lines.append(f"simplification: {summary}")
    else:
        lines.append("simplification: none needed")
    lines.append(f"infinite periodic factor classes: {len(report.classes)}")
    for cls in report.classes:
        rep = alphabet.text(cls.representative)
        conj = ", ".join(alphabet.text(w) for w in sorted(cls.conjugates))
        lines.append(f"  representative {rep}; source {cls.source.value}; conjugates: {conj}")
    return "\n".join(lines) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run(argv: Sequence[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="dolrep", description="Repetition analysis of D0L-systems"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    cmd = sub.add_parser("analyze", help="analyze a system file ('-' reads stdin)")
    cmd.add_argument("file")
    cmd.add_argument("--json", action="store_true", help="emit a JSON report")
    cmd.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    cmd.add_argument("--depth", type=int, default=12, help="oracle iterate depth (default 12)")
    cmd.add_argument("--max-len", type=int, default=8, help="oracle factor length bound (default 8)")
    cmd.add_argument("--power", type=int, default=4, help="oracle power threshold (default 4)")
    args = parser.parse_args(argv)

    try:
        system = parse_system(_read_input(args.file))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        report = analyze(system)
    except (EngineInvariantError, SimplificationError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(format_report(report), end="")

    if args.verify:
        params = OracleParams(depth=args.depth, max_len=args.max_len, power_threshold=args.power)
        observed = observed_classes(system, params)
        engine_reps = {cls.representative for cls in report.classes}
        stream = sys.stderr if args.json else sys.stdout
        if observed == engine_reps:
            print("oracle: agreement", file=stream)
        else:
            alphabet = system.alphabet
            fmt = lambda classes: sorted(alphabet.text(w) for w in classes) or ["(none)"]
            print("oracle: disagreement", file=stream)
            print(f"  engine:   {' '.join(fmt(engine_reps))}", file=stream)
            print(f"  observed: {' '.join(fmt(observed))}", file=stream)
            return 3
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
